#pragma once

#include <stdexcept>
#include <string>

#include "fibonom/golden.hpp"
#include "fibonom/numbers.hpp"

namespace fibonom {

// Minimal ring interface shared by the generic series and determinant
// kernels. inverse() is only required where a series constant term must be
// inverted, and throws when the element is not a unit of the ring.
template <typename R>
struct ring;

template <>
struct ring<Int> {
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static bool is_zero(const Int& x) { return sgn(x) == 0; }
  static Int inverse(const Int& x) {
    if (x == 1 || x == -1) return x;
    throw std::domain_error("integer " + x.get_str() + " is not a unit");
  }
  static std::string str(const Int& x) { return x.get_str(); }
};

template <>
struct ring<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
  static Rat inverse(const Rat& x) {
    if (sgn(x) == 0) throw std::domain_error("division by zero rational");
    return Rat(1) / x;
  }
  static std::string str(const Rat& x) { return x.get_str(); }
};

template <>
struct ring<Golden> {
  static Golden zero() { return Golden(); }
  static Golden one() { return Golden(1); }
  static bool is_zero(const Golden& x) {
    return sgn(x.a) == 0 && sgn(x.b) == 0;
  }
  // Units of Z[phi] have norm +-1, and x * conj(x) = norm(x).
  static Golden inverse(const Golden& x) {
    Int n = norm(x);
    if (n == 1) return conj(x);
    if (n == -1) return -conj(x);
    throw std::domain_error("golden element " + to_string(x) +
                            " is not a unit");
  }
  static std::string str(const Golden& x) { return to_string(x); }
};

template <typename R>
R ring_pow(R base, unsigned long e) {
  R out = ring<R>::one();
  while (e != 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return out;
}

}  // namespace fibonom
