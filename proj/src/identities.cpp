#include "fibonom/identities.hpp"

#include <stdexcept>
#include <string>

#include "fibonom/fibonomial.hpp"

namespace fibonom {

Int binomial_zero_sum(unsigned n, unsigned k) {
  if (k == 0) throw std::invalid_argument("binomial_zero_sum: k must be >= 1");
  Int s(0);
  for (unsigned l = 0; l <= k; ++l) {
    Int term = binomial(n + l, n) * binomial(n + 1, k - l);
    if (l % 2 == 1) {
      s -= term;
    } else {
      s += term;
    }
  }
  return s;
}

Int fibonomial_zero_sum(unsigned n, unsigned k) {
  if (k == 0)
    throw std::invalid_argument("fibonomial_zero_sum: k must be >= 1");
  Int s(0);
  for (unsigned l = 0; l <= k; ++l) {
    Int term = fibonomial_recurrence(n + l, n) * fibonomial_or_zero(n + 1, k - l);
    int sign = (l % 2 == 1) ? -1 : 1;
    sign *= sign_delta(k - l);
    if (sign < 0) {
      s -= term;
    } else {
      s += term;
    }
  }
  return s;
}

Int row_alternating_sum(unsigned m) {
  if (m % 2 == 0)
    throw std::invalid_argument(
        "row_alternating_sum: the exponent j(m+j)/2 is only integral for odd "
        "m; got m=" +
        std::to_string(m));
  Int s(0);
  for (unsigned j = 0; j <= m; ++j) {
    Int e = Int(j) * (Int(m) + Int(j));
    e = div_exact(e, Int(2));
    Int term = fibonomial_recurrence(m, j);
    if (parity_sign(e) < 0) {
      s -= term;
    } else {
      s += term;
    }
  }
  return s;
}

std::pair<Golden, Int> fibonomial_vandermonde(unsigned m, unsigned n,
                                              unsigned k) {
  if (k > m + n)
    throw std::invalid_argument("fibonomial_vandermonde: k exceeds m+n");
  Golden rhs;
  for (unsigned j = 0; j <= k; ++j) {
    if (j > n || k - j > m) continue;
    Int coeff = fibonomial_recurrence(m, k - j) * fibonomial_recurrence(n, j);
    Golden term{Golden(coeff)};
    term *= golden_pow(golden_phi(), static_cast<unsigned long>(n) * (k - j));
    term *= golden_pow(golden_psi(), static_cast<unsigned long>(m) * j);
    if ((static_cast<unsigned long>(j) * (k - j)) % 2 == 1) term = -term;
    rhs += term;
  }
  Int lhs = fibonomial_recurrence(m + n, k);
  if (rhs != Golden(lhs))
    throw std::logic_error("vandermonde mismatch at m=" + std::to_string(m) +
                           ", n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ": " + to_string(rhs) +
                           " vs " + lhs.get_str());
  return {rhs, lhs};
}

Rat bell_complete(const std::vector<Rat>& args) {
  const unsigned n = static_cast<unsigned>(args.size());

  Rat by_partitions(0);
  for (const auto& part : weighted_partitions(n)) {
    Rat term{factorial(n)};
    for (unsigned j = 1; j <= n; ++j) {
      const unsigned t = part.mult[j - 1];
      if (t == 0) continue;
      term /= Rat(factorial(t));
      Rat base = args[j - 1] / Rat(factorial(j));
      term *= ring_pow(base, t);
    }
    by_partitions += term;
  }

  std::vector<Rat> y(n + 1);
  y[0] = 1;
  for (unsigned mm = 1; mm <= n; ++mm) {
    Rat acc(0);
    for (unsigned i = 0; i < mm; ++i)
      acc += Rat(binomial(mm - 1, i)) * y[mm - 1 - i] * args[i];
    y[mm] = acc;
  }

  if (y[n] != by_partitions)
    throw std::logic_error("Bell polynomial routes disagree: " +
                           y[n].get_str() + " vs " + by_partitions.get_str());
  return y[n];
}

Int fibonomial_via_bell(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("fibonomial_via_bell: k exceeds n");
  std::vector<Rat> args;
  args.reserve(k);
  for (unsigned m = 1; m <= k; ++m) {
    Int x = factorial(m - 1) * power_sum(n, m);
    if (m % 2 == 0) x = -x;  // (-1)^{m-1}
    args.push_back(Rat(x));
  }
  Rat v = bell_complete(args) / Rat(factorial(k));
  if (sign_delta(k) < 0) v = -v;  // strip delta_k
  if (!is_integer(v))
    throw std::logic_error("Bell route gave a non-integer for n=" +
                           std::to_string(n) + ", k=" + std::to_string(k) +
                           ": " + v.get_str());
  return v.get_num();
}

namespace {

int trudi_sign_column(unsigned base_value, unsigned k, unsigned tsum) {
  // (-1)^{C(k,2) + base - sum t}
  Int e = Int(k) * (Int(k) - 1) / 2 + Int(base_value) - Int(tsum);
  return parity_sign(e);
}

}  // namespace

Int fibonomial_trudi_column(unsigned n, unsigned k, ExponentBase base) {
  if (k == 0) return Int(1);
  const unsigned base_value = (base == ExponentBase::order) ? k : n;
  Int total(0);
  for (const auto& part : weighted_partitions(k)) {
    Int term = multinomial(part);
    for (unsigned l = 1; l <= k; ++l) {
      const unsigned t = part.mult[l - 1];
      if (t > 0) term *= int_pow(fibonomial_recurrence(n + l, n), t);
    }
    if (trudi_sign_column(base_value, k, part.total()) < 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

Int fibonomial_trudi_row(unsigned n, unsigned k, ExponentBase base) {
  if (k == 0) return Int(1);
  const unsigned base_value = (base == ExponentBase::order) ? k : n;
  Int total(0);
  for (const auto& part : weighted_partitions(k)) {
    Int term = multinomial(part);
    Int e(base_value);
    for (unsigned l = 1; l <= k; ++l) {
      const unsigned t = part.mult[l - 1];
      if (t == 0) continue;
      term *= int_pow(fibonomial_or_zero(n + 1, l), t);
      // (l+1)(l-2)/2 is an integer for every l
      Int w = (Int(l) + 1) * (Int(l) - 2);
      e += div_exact(w, Int(2)) * t;
    }
    if (parity_sign(e) < 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

std::vector<Rat> exp_transform(const std::vector<Rat>& a) {
  const std::size_t n = a.size();
  std::vector<Rat> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rat acc(0);
    for (std::size_t i = 1; i <= m; ++i) {
      Rat term = a[i - 1] * b[m - i];
      if (i % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    b[m] = acc / Rat(static_cast<unsigned long>(m));
  }
  return b;
}

std::vector<Rat> log_transform(const std::vector<Rat>& b) {
  const std::size_t n = b.size() - 1;  // b[0] = 1
  std::vector<Rat> a(n + 1);           // a[0] unused
  a[0] = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rat acc(0);
    for (std::size_t j = 1; j < m; ++j) {
      Rat term = b[j] * a[m - j];
      if (j % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    Rat last = Rat(static_cast<unsigned long>(m)) * b[m];
    if (m % 2 == 0) {
      acc -= last;
    } else {
      acc += last;
    }
    a[m] = acc;
  }
  return a;
}

std::vector<ReportEntry> bell_roundtrip(const std::vector<Rat>& a,
                                        std::string_view label) {
  const unsigned n = static_cast<unsigned>(a.size());
  std::vector<ReportEntry> out;
  const std::vector<Rat> b = exp_transform(a);

  auto add = [&](const char* route, const std::string& got,
                 const std::string& want) {
    out.push_back(check_entry("bell-roundtrip",
                              {{"case", std::string(label)}, {"route", route}},
                              got, want));
  };
  auto seq_str = [](const std::vector<Rat>& v, std::size_t from) {
    std::string s = "[";
    for (std::size_t i = from; i < v.size(); ++i) {
      if (i > from) s += ", ";
      s += v[i].get_str();
    }
    return s + "]";
  };

  // Bell route: b_m = Y_m((-1)^{i-1} (i-1)! a_i) / m!.
  std::vector<Rat> b_bell(n + 1);
  b_bell[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Rat> args;
    args.reserve(m);
    for (unsigned i = 1; i <= m; ++i) {
      Rat x = Rat(factorial(i - 1)) * a[i - 1];
      if (i % 2 == 0) x = -x;
      args.push_back(x);
    }
    b_bell[m] = bell_complete(args) / Rat(factorial(m));
  }
  add("bell", seq_str(b_bell, 0), seq_str(b, 0));

  // Determinant route: b_m = det(column a, superdiagonal 1..m-1) / m!.
  std::vector<Rat> b_det(n + 1);
  b_det[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    LowerHessenberg<Rat> mat(m);
    for (unsigned i = 1; i <= m; ++i) {
      for (unsigned j = 1; j <= i; ++j) mat.at(i, j) = a[i - j];
      if (i < m) mat.super(i) = Rat(static_cast<unsigned long>(i));
    }
    b_det[m] = hessenberg_det(mat) / Rat(factorial(m));
  }
  add("determinant", seq_str(b_det, 0), seq_str(b, 0));

  // Reverse determinant: a_m = det(first column j b_j, diagonals b,
  // superdiagonal 1).
  std::vector<Rat> a_det(n + 1);
  for (unsigned m = 1; m <= n; ++m) {
    LowerHessenberg<Rat> mat(m);
    for (unsigned i = 1; i <= m; ++i) {
      mat.at(i, 1) = Rat(static_cast<unsigned long>(i)) * b[i];
      for (unsigned j = 2; j <= i; ++j) mat.at(i, j) = b[i - j + 1];
      if (i < m) mat.super(i) = Rat(1);
    }
    a_det[m] = hessenberg_det(mat);
  }
  std::vector<Rat> a_full(1, Rat(0));
  for (const auto& v : a) a_full.push_back(v);
  add("reverse-determinant", seq_str(a_det, 1), seq_str(a_full, 1));

  // Reverse recurrence.
  add("reverse-recurrence", seq_str(log_transform(b), 1), seq_str(a_full, 1));

  return out;
}

Int fibonomial_via_powersum_det(unsigned n, unsigned k) {
  if (k == 0) return Int(1);
  if (k > n)
    throw std::invalid_argument("fibonomial_via_powersum_det: k exceeds n");
  std::vector<Int> s(k + 1);
  for (unsigned l = 1; l <= k; ++l) s[l] = power_sum(n, l);
  LowerHessenberg<Int> mat(k);
  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned j = 1; j <= i; ++j) mat.at(i, j) = s[i - j + 1];
    if (i < k) mat.super(i) = Int(i);
  }
  Int det = hessenberg_det(mat);
  if (sign_delta(k) < 0) det = -det;
  return div_exact(det, factorial(k));
}

Int powersum_via_fibonomial_det(unsigned n, unsigned k) {
  if (k == 0 || k > n)
    throw std::invalid_argument(
        "powersum_via_fibonomial_det: requires 1 <= k <= n");
  std::vector<Int> b(k + 1);
  for (unsigned l = 1; l <= k; ++l) {
    b[l] = fibonomial_recurrence(n, l);
    if (sign_delta(l) < 0) b[l] = -b[l];
  }
  LowerHessenberg<Int> mat(k);
  for (unsigned i = 1; i <= k; ++i) {
    mat.at(i, 1) = Int(i) * b[i];
    for (unsigned j = 2; j <= i; ++j) mat.at(i, j) = b[i - j + 1];
    if (i < k) mat.super(i) = Int(1);
  }
  return hessenberg_det(mat);
}

}  // namespace fibonom
