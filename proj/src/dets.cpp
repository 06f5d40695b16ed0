#include "fibonom/dets.hpp"

#include <stdexcept>
#include <string>

#include "fibonom/fibonomial.hpp"

namespace fibonom {

Int fibonomial_det_column(unsigned n, unsigned k) {
  if (k == 0) return Int(1);
  ToeplitzHessenberg<Int> m;
  m.super = Int(1);
  m.column.reserve(k);
  for (unsigned l = 1; l <= k; ++l)
    m.column.push_back(fibonomial_recurrence(n + l, n));
  Int det = hessenberg_det(m);
  if (sign_delta(k) < 0) det = -det;
  return det;
}

Int binomial_det_column(unsigned n, unsigned k) {
  if (k == 0) return Int(1);
  ToeplitzHessenberg<Int> m;
  m.super = Int(1);
  m.column.reserve(k);
  for (unsigned l = 1; l <= k; ++l) m.column.push_back(binomial(n + l, n));
  return hessenberg_det(m);
}

Int fibonomial_det_row(unsigned n, unsigned k) {
  if (k == 0) return Int(1);
  ToeplitzHessenberg<Int> m;
  m.super = Int(1);
  m.column.reserve(k);
  for (unsigned l = 1; l <= k; ++l) {
    Int v = fibonomial_or_zero(n + 1, l);
    if (sign_delta(l) < 0) v = -v;
    m.column.push_back(std::move(v));
  }
  return hessenberg_det(m);
}

ToeplitzHessenberg<Rat> fibonomial_row_scaled_matrix(unsigned n, unsigned k,
                                                     const Rat& a) {
  if (sgn(a) == 0)
    throw std::invalid_argument("superdiagonal scale must be nonzero");
  ToeplitzHessenberg<Rat> m;
  m.super = a;
  m.column.reserve(k);
  Rat apow(1);  // a^{l-1}
  for (unsigned l = 1; l <= k; ++l) {
    Int v = fibonomial_or_zero(n + 1, l);
    if (sign_delta(l) < 0) v = -v;
    m.column.push_back(Rat(v) / apow);
    apow *= a;
  }
  return m;
}

Int fibonomial_det_row_scaled(unsigned n, unsigned k, const Rat& a) {
  if (k == 0) return Int(1);
  Rat det = hessenberg_det(fibonomial_row_scaled_matrix(n, k, a));
  return to_int(det);
}

std::vector<Rat> inversion_duals(const std::vector<Rat>& alpha,
                                 unsigned depth) {
  if (alpha.empty() || alpha[0] != Rat(1))
    throw std::invalid_argument("inversion: sequence must start with 1");
  if (alpha.size() < depth + 1)
    throw std::invalid_argument("inversion: sequence shorter than depth");
  std::vector<Rat> beta(depth + 1);
  beta[0] = 1;
  for (unsigned m = 1; m <= depth; ++m) {
    ToeplitzHessenberg<Rat> mat;
    mat.super = Rat(1);
    mat.column.assign(alpha.begin() + 1, alpha.begin() + 1 + m);
    beta[m] = hessenberg_det(mat);
  }
  return beta;
}

std::vector<ReportEntry> inversion_check(const std::vector<Rat>& alpha,
                                         unsigned depth,
                                         std::string_view label) {
  std::vector<Rat> beta = inversion_duals(alpha, depth);
  std::vector<ReportEntry> out;
  for (unsigned m = 1; m <= depth; ++m) {
    Rat conv(0);
    for (unsigned k = 0; k <= m; ++k) {
      Rat term = alpha[k] * beta[m - k];
      if ((m - k) % 2 == 1) {
        conv -= term;
      } else {
        conv += term;
      }
    }
    out.push_back(check_entry(
        "inversion-convolution",
        {{"case", std::string(label)}, {"m", std::to_string(m)}},
        conv.get_str(), "0"));

    ToeplitzHessenberg<Rat> rev;
    rev.super = Rat(1);
    rev.column.assign(beta.begin() + 1, beta.begin() + 1 + m);
    out.push_back(check_entry(
        "inversion-reverse-det",
        {{"case", std::string(label)}, {"m", std::to_string(m)}},
        hessenberg_det(rev).get_str(), alpha[m].get_str()));
  }
  return out;
}

}  // namespace fibonom
