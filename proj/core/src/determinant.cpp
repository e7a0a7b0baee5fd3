#include "cullis/determinant.hpp"

#include "cullis/combinatorics.hpp"
#include "cullis/polynomial.hpp"

namespace cullis {

namespace {

void require_tall(const RectMatrix& x) {
    if (x.rows() < x.cols()) {
        throw Error(Errc::BadShape, "det_{n,k} needs n >= k, got " + std::to_string(x.rows()) + "x" +
                                        std::to_string(x.cols()));
    }
}

// In-place elimination on a k*k row-major buffer.
Scalar det_square_buffer(std::vector<Scalar>& m, std::size_t k, Field f) {
    Scalar result = f.one();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot * k + col].is_zero()) ++pivot;
        if (pivot == k) return f.zero();
        if (pivot != col) {
            for (std::size_t j = col; j < k; ++j) std::swap(m[pivot * k + j], m[col * k + j]);
            result = -result;
        }
        const Scalar& p = m[col * k + col];
        result *= p;
        const Scalar inv = p.inv();
        for (std::size_t i = col + 1; i < k; ++i) {
            if (m[i * k + col].is_zero()) continue;
            const Scalar factor = m[i * k + col] * inv;
            for (std::size_t j = col + 1; j < k; ++j) m[i * k + j] -= factor * m[col * k + j];
        }
    }
    return result;
}

struct DefinitionWalk {
    const RectMatrix& x;
    int n;
    int k;
    std::vector<int> rows;
    std::vector<bool> used;
    Scalar total;

    void descend(int column, const Scalar& partial) {
        if (column > k) {
            total += sgn_injection(rows) > 0 ? partial : -partial;
            return;
        }
        for (int r = 1; r <= n; ++r) {
            if (used[static_cast<std::size_t>(r)]) continue;
            const Scalar& entry = x(r, column);
            if (entry.is_zero()) continue;
            used[static_cast<std::size_t>(r)] = true;
            rows[static_cast<std::size_t>(column - 1)] = r;
            descend(column + 1, partial * entry);
            used[static_cast<std::size_t>(r)] = false;
        }
    }
};

// Laplace expansion on the submatrix with the given (1-based) rows and columns
// of x, expanding along position `pos` (1-based) of `cols`.
Scalar laplace(const RectMatrix& x, const std::vector<int>& rows, const std::vector<int>& cols, std::size_t pos) {
    const Field f = x.field();
    Scalar total = f.zero();
    const int j = cols[pos - 1];
    if (cols.size() == 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Scalar& e = x(rows[i], j);
            total += (i % 2 == 0) ? e : -e;
        }
        return total;
    }
    std::vector<int> minor_cols;
    minor_cols.reserve(cols.size() - 1);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c + 1 != pos) minor_cols.push_back(cols[c]);
    }
    std::vector<int> minor_rows(rows.size() - 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Scalar& e = x(rows[i], j);
        if (e.is_zero()) continue;
        for (std::size_t s = 0, t = 0; s < rows.size(); ++s) {
            if (s != i) minor_rows[t++] = rows[s];
        }
        const Scalar minor = laplace(x, minor_rows, minor_cols, 1);
        const bool negative = ((i + 1) + pos) % 2 == 1;
        total += negative ? -(e * minor) : e * minor;
    }
    return total;
}

}  // namespace

DetAlgorithm parse_det_algorithm(std::string_view name) {
    if (name == "def" || name == "definition") return DetAlgorithm::Definition;
    if (name == "subsets") return DetAlgorithm::Subsets;
    if (name == "laplace") return DetAlgorithm::Laplace;
    throw Error(Errc::Parse, "unknown determinant algorithm '" + std::string(name) + "'");
}

std::string_view to_string(DetAlgorithm algo) noexcept {
    switch (algo) {
        case DetAlgorithm::Definition: return "def";
        case DetAlgorithm::Subsets: return "subsets";
        case DetAlgorithm::Laplace: return "laplace";
    }
    return "?";
}

Scalar det_definition(const RectMatrix& x) {
    require_tall(x);
    DefinitionWalk walk{x, x.rows(), x.cols(), std::vector<int>(static_cast<std::size_t>(x.cols())),
                        std::vector<bool>(static_cast<std::size_t>(x.rows()) + 1, false), x.field().zero()};
    walk.descend(1, x.field().one());
    return walk.total;
}

Scalar det_subsets(const RectMatrix& x) {
    require_tall(x);
    const Field f = x.field();
    const auto k = static_cast<std::size_t>(x.cols());
    Scalar total = f.zero();
    std::vector<Scalar> buffer(k * k, f.zero());
    for_each_subset(x.rows(), x.cols(), [&](std::span<const int> c) {
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t j = 0; j < k; ++j) buffer[a * k + j] = x.raw(static_cast<std::size_t>(c[a] - 1) * k + j);
        }
        Scalar minor = det_square_buffer(buffer, k, f);
        if (minor.is_zero()) return;
        total += sgn_subset(c) > 0 ? minor : -minor;
    });
    return total;
}

Scalar det_laplace(const RectMatrix& x, int column) {
    require_tall(x);
    if (column < 1 || column > x.cols()) {
        throw Error(Errc::BadColumn, "column " + std::to_string(column) + " outside [1," + std::to_string(x.cols()) + "]");
    }
    std::vector<int> rows(static_cast<std::size_t>(x.rows())), cols(static_cast<std::size_t>(x.cols()));
    for (int i = 0; i < x.rows(); ++i) rows[static_cast<std::size_t>(i)] = i + 1;
    for (int j = 0; j < x.cols(); ++j) cols[static_cast<std::size_t>(j)] = j + 1;
    return laplace(x, rows, cols, static_cast<std::size_t>(column));
}

Scalar det_square(const RectMatrix& x) {
    if (x.rows() != x.cols()) {
        throw Error(Errc::BadShape, "square determinant of " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
    }
    const auto k = static_cast<std::size_t>(x.cols());
    std::vector<Scalar> buffer;
    buffer.reserve(k * k);
    for (std::size_t t = 0; t < k * k; ++t) buffer.push_back(x.raw(t));
    return det_square_buffer(buffer, k, x.field());
}

Scalar det(const RectMatrix& x, DetAlgorithm algo) {
    switch (algo) {
        case DetAlgorithm::Definition: return det_definition(x);
        case DetAlgorithm::Laplace: return det_laplace(x, 1);
        case DetAlgorithm::Subsets: break;
    }
    return det_subsets(x);
}

Scalar det_unit_columns(Field f, int n, std::span<const int> rows) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int r : rows) {
        if (r < 1 || r > n) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(r));
        if (seen[static_cast<std::size_t>(r)]) return f.zero();
        seen[static_cast<std::size_t>(r)] = true;
    }
    return signed_one(f, sgn_injection(rows));
}

LambdaPoly::LambdaPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(Errc::BadShape, "empty lambda polynomial");
}

Scalar LambdaPoly::operator()(const Scalar& lambda) const { return evaluate(coeffs_, lambda); }

RectMatrix mix_columns(const RectMatrix& a, const RectMatrix& b, std::span<const int> cols) {
    require_same_shape(a, b);
    RectMatrix out = a;
    for (int j : cols) {
        if (j < 1 || j > a.cols()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(j));
        for (int i = 1; i <= a.rows(); ++i) out(i, j) = b(i, j);
    }
    return out;
}

LambdaPoly lambda_expand(const RectMatrix& a, const RectMatrix& b) {
    require_same_shape(a, b);
    require_tall(a);
    const int k = a.cols();
    std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, a.field().zero());
    std::vector<int> chosen;
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
        chosen.clear();
        for (int j = 1; j <= k; ++j) {
            if (mask & (1U << (j - 1))) chosen.push_back(j);
        }
        coeffs[chosen.size()] += det_subsets(mix_columns(a, b, chosen));
    }
    return LambdaPoly(std::move(coeffs));
}

}  // namespace cullis
