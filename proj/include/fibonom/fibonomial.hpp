#pragma once

#include "fibonom/golden.hpp"
#include "fibonom/numbers.hpp"

namespace fibonom {

// delta_k = (-1)^{k(k-1)/2}: the period-4 sign pattern +,+,-,- from k = 0
// that accompanies signed Fibonomial row polynomials.
int sign_delta(unsigned long k);

// Product definition prod_{r=1}^{k} F_{n-r+1}/F_r, evaluated as an exact
// rational and checked integral at the end. This is the reference route all
// other methods are measured against. Throws on k > n.
Int fibonomial_product(unsigned n, unsigned k);

// Pascal-style recurrence
//   [n k]_F = F_{n-k-1} [n-1 k-1]_F + F_{k+1} [n-1 k]_F
// with boundary rows pinned to 1; memoized triangle, thread-safe.
Int fibonomial_recurrence(unsigned n, unsigned k);

// Memoized lookup, zero when k > n (for sums and matrix builders).
Int fibonomial_or_zero(unsigned n, unsigned k);

// Gaussian binomial [N K]_q evaluated at a concrete ring point via the
// division-free q-Pascal recurrence [N K] = [N-1 K-1] + q^K [N-1 K].
Golden gaussian_binomial_at(unsigned N, unsigned K, const Golden& q);

// phi^{k(n-k)} [n k]_q at q = psi/phi. The phi-coordinate of the result must
// vanish; the rational coordinate is the Fibonomial coefficient.
Int fibonomial_from_qbinomial(unsigned n, unsigned k);

// s_{n,r} = sum_{j=0}^{n-1} (phi^{n-1-j} psi^j)^r, computed directly in
// Z[phi] and cross-checked against the closed form F_{rn}/F_r. Requires
// r >= 1; the two routes disagreeing is an internal error.
Int power_sum(unsigned n, unsigned r);

}  // namespace fibonom
