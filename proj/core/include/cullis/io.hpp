#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "cullis/matrix.hpp"

namespace cullis {

// Matrix files:
//
//   field GF(p)          (or: field Q)
//   shape n k
//   n lines of k whitespace-separated scalars
//
// Operator files put `operator n k` on the first line, followed by the matrix
// of the operator on column-major vec(X), which has shape nk x nk.
//
// Writers emit canonical scalars (residues in [0, p), reduced fractions) with
// single spaces and a trailing newline, so a canonical file round-trips
// byte for byte. Parse errors throw Errc::Parse naming the line.

/// `source` (a file name, say) prefixes error messages when nonempty.
RectMatrix parse_matrix(std::string_view text, std::string_view source = {});
std::string format_matrix(const RectMatrix& m);

LinearOperator parse_operator(std::string_view text, std::string_view source = {});
std::string format_operator(const LinearOperator& t);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

RectMatrix read_matrix_file(const std::filesystem::path& path);
LinearOperator read_operator_file(const std::filesystem::path& path);

}  // namespace cullis
