#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibonom/ring.hpp"

namespace fibonom {

// Formal power series truncated at a fixed order: coefficients c_0..c_N with
// all arithmetic performed mod x^{N+1}. Operands must share the same order;
// mixing orders throws instead of silently re-truncating.
template <typename R>
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : c_(order + 1, ring<R>::zero()) {}

  static TruncSeries constant(const R& value, std::size_t order) {
    TruncSeries s(order);
    s.c_[0] = value;
    return s;
  }
  static TruncSeries one(std::size_t order) {
    return constant(ring<R>::one(), order);
  }

  std::size_t order() const { return c_.size() - 1; }

  const R& operator[](std::size_t i) const { return c_[i]; }
  R& operator[](std::size_t i) { return c_[i]; }

  friend bool operator==(const TruncSeries& f, const TruncSeries& g) {
    return f.c_ == g.c_;
  }
  friend bool operator!=(const TruncSeries& f, const TruncSeries& g) {
    return !(f == g);
  }

 private:
  std::vector<R> c_;
};

namespace detail {
inline void check_same_order(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("series truncation orders differ: " +
                                std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace detail

template <typename R>
TruncSeries<R> operator+(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::check_same_order(f.order(), g.order());
  TruncSeries<R> out(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) out[i] = f[i] + g[i];
  return out;
}

template <typename R>
TruncSeries<R> operator-(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::check_same_order(f.order(), g.order());
  TruncSeries<R> out(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) out[i] = f[i] - g[i];
  return out;
}

// Cauchy product mod x^{N+1}.
template <typename R>
TruncSeries<R> series_mul(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::check_same_order(f.order(), g.order());
  TruncSeries<R> out(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (ring<R>::is_zero(f[i])) continue;
    for (std::size_t j = 0; i + j <= f.order(); ++j) {
      out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

// Multiplicative inverse mod x^{N+1} via the convolution recurrence
//   g_0 = 1/f_0,   g_m = -g_0 * sum_{i=1}^{m} f_i g_{m-i}.
// Requires f_0 to be a unit of the coefficient ring.
template <typename R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f) {
  const R c0_inv = ring<R>::inverse(f[0]);
  TruncSeries<R> g(f.order());
  g[0] = c0_inv;
  for (std::size_t m = 1; m <= f.order(); ++m) {
    R acc = ring<R>::zero();
    for (std::size_t i = 1; i <= m; ++i) acc += f[i] * g[m - i];
    R v = c0_inv * acc;
    g[m] = -v;
  }
  return g;
}

// prod_j (1 + gamma_j x) for sign = +1, or prod_j (1 + gamma_j x)^{-1} for
// sign = -1 (each linear factor inverted geometrically, then multiplied in).
template <typename R>
TruncSeries<R> series_geom_product(const std::vector<R>& factors, int sign,
                                   std::size_t order) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("series_geom_product: sign must be +1 or -1");
  auto acc = TruncSeries<R>::one(order);
  for (const R& gamma : factors) {
    TruncSeries<R> lin(order);
    lin[0] = ring<R>::one();
    if (sign == 1) {
      if (order >= 1) lin[1] = gamma;
    } else {
      // (1 + gamma x)^{-1} = sum_k (-gamma)^k x^k
      R p = ring<R>::one();
      for (std::size_t k = 1; k <= order; ++k) {
        p = p * gamma;
        if (k % 2 == 1) {
          lin[k] = -p;
        } else {
          lin[k] = p;
        }
      }
    }
    acc = series_mul(acc, lin);
  }
  return acc;
}

inline TruncSeries<Rat> to_rat(const TruncSeries<Int>& f) {
  TruncSeries<Rat> out(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) out[i] = Rat(f[i]);
  return out;
}

inline TruncSeries<Int> to_int(const TruncSeries<Rat>& f) {
  TruncSeries<Int> out(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) out[i] = to_int(f[i]);
  return out;
}

// Demotes a golden-coefficient series whose coefficients are all rational
// integers; throws if any phi-coordinate survives.
inline TruncSeries<Int> to_int(const TruncSeries<Golden>& f) {
  TruncSeries<Int> out(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (!f[i].is_rational())
      throw std::logic_error("series coefficient " + std::to_string(i) +
                             " is not a rational integer: " + to_string(f[i]));
    out[i] = f[i].a;
  }
  return out;
}

template <typename R>
std::string to_string(const TruncSeries<R>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (i > 0) s += ", ";
    s += ring<R>::str(f[i]);
  }
  s += "]";
  return s;
}

}  // namespace fibonom
