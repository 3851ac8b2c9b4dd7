#pragma once

#include <string>
#include <string_view>

#include "quadcert/certificates.hpp"
#include "quadcert/matrix.hpp"

namespace quadcert {

// Quadratic-form expression grammar:
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := [coeff '*'?] (var ('^2' | '*' var | var)?) | coeff
//   var   := 'x' | 'y' | 'z' | 'x' digits
//   coeff := integer | integer '/' positive-integer | decimal
// Only degree-2 monomials are accepted. A cross coefficient k on x_i x_j
// contributes k/2 to both A_ij and A_ji (the written coefficient is the
// full cross coefficient, as in a*x^2 + 2b*xy + c*y^2). The x,y,z and
// x1,x2,... alphabets cannot be mixed.
SymMatrix parse_form(std::string_view text);

// Rows separated by newlines or ';', entries by whitespace or ','.
// Entries are integers, fractions "p/q", or decimals (converted exactly).
SymMatrix parse_matrix(std::string_view text);

// "x", "y", "z" for n <= 3; "x1".."xn" beyond. index is 1-based.
std::string variable_name(std::size_t index, std::size_t n);

// Inverse of parse_form under the same cross-term convention:
// parse_form(render_form(A)) == A for every symmetric rational A.
std::string render_form(const SymMatrix& A);

// "x + 1/2 y" style; coefficients as exact fractions.
std::string render_linear_form(const RVector& form);

// "2*(x + 1/2 y)^2 + 3/2*(y)^2" style.
std::string render_certificate(const SosCertificate& c);

// "(0, 1)" style.
std::string render_vector(const RVector& x);

}  // namespace quadcert
