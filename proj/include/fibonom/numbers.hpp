#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fibonom {

// Exact arbitrary-precision integers and rationals (GMP-backed).
// Rat values are kept canonical: lowest terms, positive denominator.
// Build them through make_rat rather than mpq_class(p, q) directly, so the
// canonical form is never skipped.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q))
    throw std::logic_error("expected an integer, got " + q.get_str());
  return q.get_num();
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Ordinary binomial coefficient; zero when k > n.
inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Exact division; throws when the quotient would not be integral.
inline Int div_exact(const Int& num, const Int& den) {
  if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("non-exact division: " + num.get_str() + "/" +
                           den.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// (-1)^e with the exponent reduced mod 2 in exact arithmetic.
inline int parity_sign(const Int& e) { return mpz_odd_p(e.get_mpz_t()) ? -1 : 1; }

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace fibonom
