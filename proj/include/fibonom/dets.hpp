#pragma once

#include <string_view>
#include <vector>

#include "fibonom/hessenberg.hpp"
#include "fibonom/numbers.hpp"
#include "fibonom/report.hpp"

namespace fibonom {

// Determinant routes to Fibonomial coefficients. "Column" matrices carry the
// triangle column [n+l, n]_F down the first column; "row" matrices carry the
// signed row delta_l [n+1, l]_F. Superdiagonals are constant.

// delta_k * det(column [n+l, n]_F, superdiagonal 1) = [n+1, k]_F.
Int fibonomial_det_column(unsigned n, unsigned k);

// Classical analogue with ordinary binomials and no sign: equals C(n+1, k).
Int binomial_det_column(unsigned n, unsigned k);

// det(column delta_l [n+1, l]_F, superdiagonal 1) = [n+k, k]_F.
Int fibonomial_det_row(unsigned n, unsigned k);

// Scaled variant: column delta_l [n+1, l]_F / a^{l-1}, superdiagonal a.
// The determinant is independent of a (a != 0).
ToeplitzHessenberg<Rat> fibonomial_row_scaled_matrix(unsigned n, unsigned k,
                                                     const Rat& a);
Int fibonomial_det_row_scaled(unsigned n, unsigned k, const Rat& a);

// Duals beta_m of a sequence alpha_0 = 1, alpha_1, ...: the m-by-m Toeplitz
// determinant over alpha_1..alpha_m with unit superdiagonal.
std::vector<Rat> inversion_duals(const std::vector<Rat>& alpha, unsigned depth);

// Round trip of the inversion formula: computes the duals beta_m, verifies
// the alternating convolution sum_{k=0}^{m} (-1)^{m-k} alpha_k beta_{m-k} = 0
// for 1 <= m <= depth, and verifies that the reverse determinants over the
// beta recover each alpha_m. Requires alpha_0 = 1.
std::vector<ReportEntry> inversion_check(const std::vector<Rat>& alpha,
                                         unsigned depth,
                                         std::string_view label);

}  // namespace fibonom
