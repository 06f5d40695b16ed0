#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "fibonom/numbers.hpp"
#include "fibonom/report.hpp"
#include "fibonom/series.hpp"

namespace fibonom {

// prod_{j=0}^{n-1} (1 + phi^{n-1-j} psi^j x) truncated at the given order.
// Every coefficient is a rational integer and coefficient k equals
// delta_k [n k]_F; both facts are checked before returning.
TruncSeries<Int> signed_row_series(unsigned n, std::size_t order);

// The mutually inverse pair over the factors phi^{n-j} psi^j (j = 0..n):
// first the inverse product (coefficient l = (-1)^l [n+l, n]_F), then the
// plain product (coefficient m = delta_m [n+1, m]_F). Their product is
// checked to be 1 mod x^{order+1}.
std::pair<TruncSeries<Int>, TruncSeries<Int>> inverse_pair_series(
    unsigned n, std::size_t order);

// The two q-binomial product identities, evaluated in Z[phi] at q = psi/phi
// with the indeterminate scaled by phi^{scale}:
//   inverse_ok: prod_{j<N} (1 - x q^j)^{-1} = sum_k [N+k-1, k]_q x^k
//   product_ok: prod_{j<N} (1 + x q^j)     = sum_m q^{m(m-1)/2} [N, m]_q x^m
struct QBinomialCheck {
  bool inverse_ok = false;
  bool product_ok = false;
  bool ok() const { return inverse_ok && product_ok; }
};
QBinomialCheck qbinomial_theorem_check(unsigned N, unsigned scale,
                                       std::size_t order);

// Finite continued fraction
//   head - n1*x / (1 + m1*x - n2*x / (1 + m2*x - ... - nL*x / (1 + mL*x)))
// normalized so every partial denominator has constant term 1 and every
// level is joined by subtraction.
struct CFLevel {
  Rat num_coeff;  // n_j
  Rat den_coeff;  // m_j
};

struct CFSpec {
  Rat head;
  std::vector<CFLevel> levels;
};

// Bottom-up evaluation carrying an exact (numerator, denominator) series
// pair; the denominator keeps unit constant term throughout.
TruncSeries<Rat> cf_eval(const CFSpec& spec, std::size_t order);

// n+1 levels with n_j = m_j = F_{n+j}/F_j. Mod x^{n+2} the value equals the
// signed row polynomial sum_k (-1)^{(k+1)k/2} [n+1, k]_F x^k.
CFSpec cf_row_spec(unsigned n);

// n+1 levels with n_j = m_j = (-1)^j F_{n+2-j}/F_j; the leading minus turns
// the head into 1 + (first fraction). Mod x^{n+2} the value equals
// sum_k [n+k, k]_F x^k with all-positive coefficients.
CFSpec cf_column_spec(unsigned n);

// Data for the determinant / series-inverse / continued-fraction /
// convolution / multinomial / composition equivalence: two sequences g, h of
// equal length with g_j != 0, and ratios r_j = (h_1..h_j)/(g_1..g_j).
struct FrameSpec {
  std::vector<Rat> g;
  std::vector<Rat> h;
};

// r_0 = 1, r_1, ..., r_N.
std::vector<Rat> frame_ratios(const FrameSpec& fs);

// Computes f (the coefficientwise inverse of sum r_j x^j) by every route and
// the reverse direction (r from f), reporting one entry per route.
std::vector<ReportEntry> frame_check(const FrameSpec& fs,
                                     std::string_view label);

// Deterministic pseudo-random frame specs for property suites.
std::vector<FrameSpec> seeded_frame_specs(unsigned count, unsigned max_depth,
                                          unsigned long seed);

}  // namespace fibonom
