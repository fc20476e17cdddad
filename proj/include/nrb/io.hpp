#pragma once

// Text formats used by the command-line tool.
//
// Matrix documents are JSON: {"n": k, "entries": [[[re, im], ...], ...]},
// row-major. Polynomials are comma-separated complex literals ("a", "bi",
// "a+bi", "a-bi") listed from the monic leading 1 down to the constant term.

#include <complex>
#include <string>
#include <string_view>

#include "nrb/linalg.hpp"
#include "nrb/polyzero.hpp"

namespace nrb::io {

using Matrix = ComplexMatrix<double>;

Matrix parse_matrix_document(std::string_view text);
Matrix read_matrix_file(const std::string& path);
std::string write_matrix_document(const Matrix& m);

std::complex<double> parse_complex_literal(std::string_view token);
MonicPolynomial<double> parse_coefficients(std::string_view text);

/// 17 significant digits, "C" locale, negative zero printed as 0.
std::string format_number(double x);

}  // namespace nrb::io
