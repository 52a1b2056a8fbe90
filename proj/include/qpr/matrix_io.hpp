#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "qpr/matrix.hpp"

namespace qpr {

/// Runtime-typed symmetric matrix, the unit of file I/O and CLI work.
using AnySymMatrix = std::variant<SymMat<Rational>, SymMat<Fp>>;

FieldSpec matrix_field(const AnySymMatrix& m);
int matrix_order(const AnySymMatrix& m);

/// Text format: a header line "Q n" or "F<p> n" followed by n rows of n
/// whitespace-separated scalar tokens. The parsed matrix must be symmetric.
/// All read failures (including asymmetry) raise ParseError; writing is
/// canonical so that write(read(write(M))) == write(M) byte for byte.
AnySymMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const AnySymMatrix& m);
std::string matrix_str(const AnySymMatrix& m);

/// Path "-" means stdin / stdout.
AnySymMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const AnySymMatrix& m);

} // namespace qpr
