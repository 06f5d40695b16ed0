#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fibonom/golden.hpp"
#include "fibonom/hessenberg.hpp"
#include "fibonom/numbers.hpp"
#include "fibonom/partitions.hpp"
#include "fibonom/report.hpp"

namespace fibonom {

// sum_{l=0}^{k} (-1)^l C(n+l, n) C(n+1, k-l); identically zero for k >= 1.
Int binomial_zero_sum(unsigned n, unsigned k);

// sum_{l=0}^{k} (-1)^l [n+l, n]_F delta_{k-l} [n+1, k-l]_F; identically zero
// for k >= 1.
Int fibonomial_zero_sum(unsigned n, unsigned k);

// sum_{j=0}^{m} (-1)^{j(m+j)/2} [m, j]_F. The exponent is integral for every
// j exactly when m is odd; even m is rejected. The value is zero.
Int row_alternating_sum(unsigned m);

// Fibonomial Chu-Vandermonde:
//   [m+n, k]_F = sum_j [m, k-j]_F [n, j]_F phi^{n(k-j)} psi^{mj} (-1)^{j(k-j)}
// Returns (golden right side, integer left side); throws if the right side
// keeps a phi component or the sides differ.
std::pair<Golden, Int> fibonomial_vandermonde(unsigned m, unsigned n,
                                              unsigned k);

// Complete exponential Bell polynomial Y_n(x_1..x_n), computed both by the
// explicit sum over weighted partitions and by the convolution recurrence
// Y_{m} = sum_i C(m-1, i) Y_{m-1-i} x_{i+1}; the two must agree.
Rat bell_complete(const std::vector<Rat>& args);

// delta_k [n,k]_F = (1/k!) Y_k(x_1..x_k) with x_m = (-1)^{m-1} (m-1)! s_{n,m};
// returns [n,k]_F after stripping delta_k. Requires k <= n.
Int fibonomial_via_bell(unsigned n, unsigned k);

// Multinomial expansion of the Toeplitz-banded determinant with first column
// a_1..a_n and superdiagonal a0:
//   sum over partitions of n of multinomial(t) (-a0)^{n - sum t} prod a_j^{t_j}
template <typename R>
R trudi_eval(const R& a0, std::span<const R> a, unsigned n) {
  if (a.size() < n)
    throw std::invalid_argument("trudi_eval: need coefficients a_1..a_n");
  R total = ring<R>::zero();
  for (const auto& part : weighted_partitions(n)) {
    R term{R(multinomial(part))};
    R neg_a0 = -a0;
    term = term * ring_pow(neg_a0, n - part.total());
    for (unsigned j = 1; j <= n; ++j) {
      if (part.mult[j - 1] > 0)
        term = term * ring_pow(a[j - 1], part.mult[j - 1]);
    }
    total = total + term;
  }
  return total;
}

// Sign-exponent convention for the two Trudi closures: the identity holds
// with the matrix order k in the exponent; the parameter-n variant is kept
// so that the mismatch can be evaluated and recorded.
enum class ExponentBase { order, parameter };

// Trudi closure of the column determinant: equals [n+1, k]_F.
Int fibonomial_trudi_column(unsigned n, unsigned k,
                            ExponentBase base = ExponentBase::order);

// Trudi closure of the row determinant: equals [n+k, k]_F.
Int fibonomial_trudi_row(unsigned n, unsigned k,
                         ExponentBase base = ExponentBase::order);

// exp-side sequence from a log-side sequence: m b_m = sum (-1)^{i-1} a_i b_{m-i}.
// Input a_1..a_n (index 0 of the result is b_0 = 1).
std::vector<Rat> exp_transform(const std::vector<Rat>& a);

// Inverse direction: a_n = sum_{j<n} (-1)^{j-1} b_j a_{n-j} + (-1)^{n+1} n b_n.
std::vector<Rat> log_transform(const std::vector<Rat>& b);

// Five-route consistency of the a <-> b correspondence: Bell values,
// factorial-scaled determinants, the recurrence, and both reverse routes.
std::vector<ReportEntry> bell_roundtrip(const std::vector<Rat>& a,
                                        std::string_view label);

// delta_k/k! times the determinant with first column s_{n,1}..s_{n,k} and
// superdiagonal 1, 2, ..., k-1: equals [n, k]_F.
Int fibonomial_via_powersum_det(unsigned n, unsigned k);

// Determinant with first column j * delta_j [n, j]_F, remaining diagonals
// delta_j [n, j]_F and unit superdiagonal: equals s_{n,k} = F_{kn}/F_k.
Int powersum_via_fibonomial_det(unsigned n, unsigned k);

}  // namespace fibonom
