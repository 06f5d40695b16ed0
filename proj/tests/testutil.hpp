#pragma once

// Test-side oracles, deliberately independent of the library's computation
// paths: plain loops and cofactor expansion only.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace testutil {

inline mpz_class oracle_fib(unsigned long n) {
  mpz_class a = 0, b = 1;
  for (unsigned long i = 0; i < n; ++i) {
    mpz_class next = a + b;
    a = b;
    b = next;
  }
  return a;
}

inline mpz_class oracle_fibonomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpq_class acc = 1;
  for (unsigned r = 1; r <= k; ++r) {
    mpq_class f(oracle_fib(n - r + 1), oracle_fib(r));
    f.canonicalize();
    acc *= f;
  }
  if (acc.get_den() != 1) throw std::logic_error("oracle: non-integral");
  return acc.get_num();
}

inline int oracle_delta(unsigned k) {
  return (static_cast<unsigned long>(k) * (k - 1) / 2) % 2 == 0 ? 1 : -1;
}

// Cofactor expansion along the first row; exponential, for small matrices.
template <typename T>
T oracle_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == T(0)) continue;
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    T term = m[0][j] * oracle_det(minor);
    if (j % 2 == 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

inline unsigned oracle_partition_count(unsigned n) {
  // p(n) by brute-force recursion with bounded largest part.
  struct Rec {
    unsigned count(unsigned rem, unsigned max_part) const {
      if (rem == 0) return 1;
      unsigned total = 0;
      for (unsigned p = std::min(rem, max_part); p >= 1; --p)
        total += count(rem - p, p);
      return total;
    }
  };
  return Rec{}.count(n, n);
}

}  // namespace testutil
