#pragma once

#include <string>
#include <utility>

#include "fibonom/numbers.hpp"

namespace fibonom {

// Element a + b*phi of the ring Z[phi], phi = (1+sqrt(5))/2, phi^2 = phi + 1.
// The conjugate root is psi = 1 - phi = (1-sqrt(5))/2, so phi*psi = -1 and
// phi + psi = 1. Coordinates live in the basis {1, phi}, which keeps phi,
// psi and q = psi/phi = phi - 2 at integer coordinates.
struct Golden {
  Int a;  // rational coordinate
  Int b;  // coefficient of phi

  Golden() : a(0), b(0) {}
  Golden(Int ra) : a(std::move(ra)), b(0) {}
  Golden(long ra) : a(ra), b(0) {}
  Golden(Int ra, Int rb) : a(std::move(ra)), b(std::move(rb)) {}

  bool is_rational() const { return sgn(b) == 0; }

  friend bool operator==(const Golden& x, const Golden& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Golden& x, const Golden& y) { return !(x == y); }

  friend Golden operator+(const Golden& x, const Golden& y) {
    return Golden(x.a + y.a, x.b + y.b);
  }
  friend Golden operator-(const Golden& x, const Golden& y) {
    return Golden(x.a - y.a, x.b - y.b);
  }
  friend Golden operator-(const Golden& x) { return Golden(-x.a, -x.b); }

  // (a+b*phi)(c+d*phi) = ac + bd + (ad + bc + bd) phi, using phi^2 = phi + 1.
  friend Golden operator*(const Golden& x, const Golden& y) {
    Int cross = x.b * y.b;
    return Golden(x.a * y.a + cross, x.a * y.b + x.b * y.a + cross);
  }

  Golden& operator+=(const Golden& y) {
    a += y.a;
    b += y.b;
    return *this;
  }
  Golden& operator-=(const Golden& y) {
    a -= y.a;
    b -= y.b;
    return *this;
  }
  Golden& operator*=(const Golden& y) {
    *this = *this * y;
    return *this;
  }
};

// Conjugation swaps phi and psi: a + b*phi -> (a+b) - b*phi. It is an
// involutive ring homomorphism fixing the rational integers.
inline Golden conj(const Golden& x) { return Golden(x.a + x.b, -x.b); }

// norm(x) = x * conj(x); always a rational integer.
inline Int norm(const Golden& x) { return x.a * x.a + x.a * x.b - x.b * x.b; }

inline Golden golden_pow(Golden base, unsigned long e) {
  Golden result(1);
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

inline Golden golden_phi() { return Golden(Int(0), Int(1)); }
inline Golden golden_psi() { return Golden(Int(1), Int(-1)); }
// q = psi/phi = phi - 2, the point at which Gaussian binomials are evaluated.
inline Golden golden_q() { return Golden(Int(-2), Int(1)); }

inline std::string to_string(const Golden& x) {
  if (x.is_rational()) return x.a.get_str();
  std::string s = x.a.get_str();
  s += (sgn(x.b) < 0) ? "-" : "+";
  Int mag(abs(x.b));
  s += mag.get_str();
  s += "*phi";
  return s;
}

}  // namespace fibonom
