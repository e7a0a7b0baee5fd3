#include "cullis/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cullis {

namespace {

class LineReader {
public:
    LineReader(std::string_view text, std::string_view source) : text_(text), source_(source) {}

    bool done() const noexcept { return pos_ >= text_.size(); }
    int line_number() const noexcept { return line_; }

    std::vector<std::string_view> next_tokens(const char* what) {
        if (done()) fail_at(line_ + 1, std::string("unexpected end of input, expected ") + what);
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        std::string_view line = text_.substr(pos_, end - pos_);
        pos_ = end + 1;
        ++line_;
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j])) ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        return tokens;
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(line_, message); }

    [[noreturn]] void fail_at(int line, const std::string& message) const {
        std::string where = source_.empty() ? std::string() : std::string(source_) + ":";
        throw Error(Errc::Parse, where + "line " + std::to_string(line) + ": " + message);
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

    std::string_view text_;
    std::string_view source_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

int parse_dimension(LineReader& in, std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
        in.fail("bad dimension '" + std::string(token) + "'");
    }
    return value;
}

RectMatrix parse_body(LineReader& in) {
    auto header = in.next_tokens("field line");
    if (header.size() != 2 || header[0] != "field") in.fail("expected 'field GF(p)' or 'field Q'");
    Field f = Field::rationals();
    try {
        f = Field::parse(header[1]);
    } catch (const Error& e) {
        in.fail(e.what());
    }
    auto shape = in.next_tokens("shape line");
    if (shape.size() != 3 || shape[0] != "shape") in.fail("expected 'shape n k'");
    const int rows = parse_dimension(in, shape[1]);
    const int cols = parse_dimension(in, shape[2]);
    RectMatrix m(f, rows, cols);
    for (int i = 1; i <= rows; ++i) {
        auto tokens = in.next_tokens("matrix row");
        if (static_cast<int>(tokens.size()) != cols) {
            in.fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()));
        }
        for (int j = 1; j <= cols; ++j) {
            try {
                m(i, j) = f.parse_scalar(tokens[static_cast<std::size_t>(j - 1)]);
            } catch (const Error& e) {
                in.fail(e.what());
            }
        }
    }
    while (!in.done()) {
        if (!in.next_tokens("").empty()) in.fail("trailing content after the last row");
    }
    return m;
}

}  // namespace

RectMatrix parse_matrix(std::string_view text, std::string_view source) {
    LineReader in(text, source);
    return parse_body(in);
}

std::string format_matrix(const RectMatrix& m) {
    std::ostringstream out;
    out << "field " << m.field().name() << '\n';
    out << "shape " << m.rows() << ' ' << m.cols() << '\n';
    out << m.to_string();
    return out.str();
}

LinearOperator parse_operator(std::string_view text, std::string_view source) {
    LineReader in(text, source);
    auto header = in.next_tokens("operator line");
    if (header.size() != 3 || header[0] != "operator") in.fail("expected 'operator n k'");
    const int n = parse_dimension(in, header[1]);
    const int k = parse_dimension(in, header[2]);
    RectMatrix m = parse_body(in);
    if (m.rows() != n * k || m.cols() != n * k) {
        in.fail("operator on " + std::to_string(n) + "x" + std::to_string(k) +
                                     " matrices needs shape " + std::to_string(n * k) + " " + std::to_string(n * k));
    }
    return LinearOperator(n, k, std::move(m));
}

std::string format_operator(const LinearOperator& t) {
    return "operator " + std::to_string(t.n()) + " " + std::to_string(t.k()) + "\n" + format_matrix(t.matrix());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
    out << text;
}

RectMatrix read_matrix_file(const std::filesystem::path& path) {
    return parse_matrix(read_text_file(path), path.string());
}

LinearOperator read_operator_file(const std::filesystem::path& path) {
    return parse_operator(read_text_file(path), path.string());
}

}  // namespace cullis
