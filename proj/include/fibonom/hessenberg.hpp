#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fibonom/ring.hpp"

namespace fibonom {

// Lower Hessenberg matrices: e(i,j) = 0 for j > i+1. Determinants follow the
// one-dimensional recurrence over leading principal minors
//
//   D_0 = 1
//   D_m = e(m,m) D_{m-1}
//         + sum_{r<m} (-1)^{m-r} e(m,r) (prod_{i=r}^{m-1} e(i,i+1)) D_{r-1}
//
// which costs O(k^2) ring operations, both for dense storage and for the
// Toeplitz-banded form (constant diagonals, constant superdiagonal).
// Indices are 1-based to keep the recurrence readable.
template <typename R>
class LowerHessenberg {
 public:
  explicit LowerHessenberg(std::size_t size)
      : size_(size), super_(size > 1 ? size - 1 : 0, ring<R>::zero()) {
    rows_.reserve(size);
    for (std::size_t i = 1; i <= size; ++i)
      rows_.emplace_back(i, ring<R>::zero());
  }

  std::size_t size() const { return size_; }

  // Entry e(i,j) for 1 <= j <= i <= size.
  const R& at(std::size_t i, std::size_t j) const { return rows_[i - 1][j - 1]; }
  R& at(std::size_t i, std::size_t j) { return rows_[i - 1][j - 1]; }

  // Superdiagonal entry e(i, i+1) for 1 <= i < size.
  const R& super(std::size_t i) const { return super_[i - 1]; }
  R& super(std::size_t i) { return super_[i - 1]; }

 private:
  std::size_t size_;
  std::vector<std::vector<R>> rows_;
  std::vector<R> super_;
};

// Toeplitz-banded form: entry (i,j) = column[i-j] for j <= i, superdiagonal
// constant. column holds a_1..a_k down the first column.
template <typename R>
struct ToeplitzHessenberg {
  std::vector<R> column;
  R super = ring<R>::zero();

  std::size_t size() const { return column.size(); }
};

template <typename R>
R hessenberg_det(const LowerHessenberg<R>& m) {
  const std::size_t k = m.size();
  std::vector<R> d;
  d.reserve(k + 1);
  d.push_back(ring<R>::one());
  for (std::size_t row = 1; row <= k; ++row) {
    R acc = m.at(row, row) * d[row - 1];
    R band = ring<R>::one();
    for (std::size_t col = row - 1; col > 0; --col) {
      band = band * m.super(col);
      R term = m.at(row, col) * band;
      term = term * d[col - 1];
      if ((row - col) % 2 == 1) {
        acc = acc - term;
      } else {
        acc = acc + term;
      }
    }
    d.push_back(acc);
  }
  return d[k];
}

template <typename R>
R hessenberg_det(const ToeplitzHessenberg<R>& m) {
  const std::size_t k = m.size();
  if (k == 0) return ring<R>::one();
  // Superdiagonal powers are shared across rows: this keeps the whole
  // evaluation at ~2k^2 ring multiplications.
  std::vector<R> spow;
  spow.reserve(k);
  spow.push_back(ring<R>::one());
  for (std::size_t t = 1; t < k; ++t) spow.push_back(spow[t - 1] * m.super);

  std::vector<R> d;
  d.reserve(k + 1);
  d.push_back(ring<R>::one());
  for (std::size_t row = 1; row <= k; ++row) {
    R acc = m.column[0] * d[row - 1];
    for (std::size_t col = row - 1; col > 0; --col) {
      const std::size_t t = row - col;
      R term = m.column[t] * spow[t];
      term = term * d[col - 1];
      if (t % 2 == 1) {
        acc = acc - term;
      } else {
        acc = acc + term;
      }
    }
    d.push_back(acc);
  }
  return d[k];
}

}  // namespace fibonom
