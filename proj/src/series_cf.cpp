#include "fibonom/series_cf.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "fibonom/fibonacci.hpp"
#include "fibonom/fibonomial.hpp"
#include "fibonom/hessenberg.hpp"
#include "fibonom/partitions.hpp"

namespace fibonom {

TruncSeries<Int> signed_row_series(unsigned n, std::size_t order) {
  std::vector<Golden> factors;
  factors.reserve(n);
  for (unsigned j = 0; j < n; ++j)
    factors.push_back(golden_pow(golden_phi(), n - 1 - j) *
                      golden_pow(golden_psi(), j));
  auto out = to_int(series_geom_product(factors, +1, order));
  for (std::size_t k = 0; k <= order; ++k) {
    Int expect(0);
    if (k <= n) {
      expect = fibonomial_or_zero(n, static_cast<unsigned>(k));
      if (sign_delta(k) < 0) expect = -expect;
    }
    if (out[k] != expect)
      throw std::logic_error("signed row series: coefficient " +
                             std::to_string(k) + " of row " +
                             std::to_string(n) + " is " + out[k].get_str() +
                             ", expected " + expect.get_str());
  }
  return out;
}

std::pair<TruncSeries<Int>, TruncSeries<Int>> inverse_pair_series(
    unsigned n, std::size_t order) {
  std::vector<Golden> factors;
  factors.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j)
    factors.push_back(golden_pow(golden_phi(), n - j) *
                      golden_pow(golden_psi(), j));
  auto a = to_int(series_geom_product(factors, -1, order));
  auto b = to_int(series_geom_product(factors, +1, order));
  if (series_mul(a, b) != TruncSeries<Int>::one(order))
    throw std::logic_error("inverse pair: product differs from 1 at n=" +
                           std::to_string(n));
  return {a, b};
}

QBinomialCheck qbinomial_theorem_check(unsigned N, unsigned scale,
                                       std::size_t order) {
  const Golden q = golden_q();
  const Golden x_scale = golden_pow(golden_phi(), scale);

  std::vector<Golden> plus, minus;
  Golden qp(1);
  for (unsigned j = 0; j < N; ++j) {
    Golden gamma = x_scale * qp;
    plus.push_back(gamma);
    minus.push_back(-gamma);
    qp *= q;
  }

  QBinomialCheck result;

  auto lhs_inv = series_geom_product(minus, -1, order);
  TruncSeries<Golden> rhs_inv(order);
  Golden spow(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (N == 0) {
      rhs_inv[k] = (k == 0) ? Golden(1) : Golden(0);
    } else {
      rhs_inv[k] = gaussian_binomial_at(N + static_cast<unsigned>(k) - 1,
                                        static_cast<unsigned>(k), q) *
                   spow;
    }
    spow *= x_scale;
  }
  result.inverse_ok = (lhs_inv == rhs_inv);

  auto lhs_prod = series_geom_product(plus, +1, order);
  TruncSeries<Golden> rhs_prod(order);
  spow = Golden(1);
  for (std::size_t m = 0; m <= order && m <= N; ++m) {
    rhs_prod[m] =
        golden_pow(q, static_cast<unsigned long>(m) * (m - 1) / 2) *
        gaussian_binomial_at(N, static_cast<unsigned>(m), q) * spow;
    spow *= x_scale;
  }
  result.product_ok = (lhs_prod == rhs_prod);
  return result;
}

namespace {

// n_j * x * f, staying at the same truncation order.
TruncSeries<Rat> shift_scale(const TruncSeries<Rat>& f, const Rat& c) {
  TruncSeries<Rat> out(f.order());
  for (std::size_t i = 0; i + 1 <= f.order(); ++i) out[i + 1] = c * f[i];
  return out;
}

}  // namespace

TruncSeries<Rat> cf_eval(const CFSpec& spec, std::size_t order) {
  TruncSeries<Rat> num(order);
  auto den = TruncSeries<Rat>::one(order);
  for (auto it = spec.levels.rbegin(); it != spec.levels.rend(); ++it) {
    // next_num = n_j x * den; next_den = (1 + m_j x) * den - num
    auto next_num = shift_scale(den, it->num_coeff);
    auto next_den = den + shift_scale(den, it->den_coeff) - num;
    num = std::move(next_num);
    den = std::move(next_den);
  }
  if (ring<Rat>::is_zero(den[0]))
    throw std::domain_error("cf_eval: denominator has zero constant term");
  auto value = TruncSeries<Rat>::constant(spec.head, order) -
               series_mul(num, series_inverse(den));
  return value;
}

CFSpec cf_row_spec(unsigned n) {
  CFSpec spec;
  spec.head = Rat(1);
  for (unsigned j = 1; j <= n + 1; ++j) {
    Rat r = make_rat(fib(n + j), fib(j));
    spec.levels.push_back(CFLevel{r, r});
  }
  return spec;
}

CFSpec cf_column_spec(unsigned n) {
  CFSpec spec;
  spec.head = Rat(1);
  for (unsigned j = 1; j <= n + 1; ++j) {
    Rat r = make_rat(fib(n + 2 - j), fib(j));
    if (j % 2 == 1) r = -r;
    spec.levels.push_back(CFLevel{r, r});
  }
  return spec;
}

std::vector<Rat> frame_ratios(const FrameSpec& fs) {
  if (fs.g.size() != fs.h.size())
    throw std::invalid_argument("frame: g and h lengths differ");
  std::vector<Rat> r(fs.g.size() + 1);
  r[0] = 1;
  Rat acc(1);
  for (std::size_t j = 1; j < r.size(); ++j) {
    if (sgn(fs.g[j - 1]) == 0)
      throw std::invalid_argument("frame: g_" + std::to_string(j) +
                                  " must be nonzero");
    acc *= fs.h[j - 1] / fs.g[j - 1];
    r[j] = acc;
  }
  return r;
}

namespace {

std::string seq_str(const std::vector<Rat>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].get_str();
  }
  s += "]";
  return s;
}

std::vector<Rat> series_coeffs(const TruncSeries<Rat>& f) {
  std::vector<Rat> v(f.order() + 1);
  for (std::size_t i = 0; i <= f.order(); ++i) v[i] = f[i];
  return v;
}

}  // namespace

std::vector<ReportEntry> frame_check(const FrameSpec& fs,
                                     std::string_view label) {
  const std::vector<Rat> r = frame_ratios(fs);
  const std::size_t depth = fs.g.size();

  TruncSeries<Rat> ratio_series(depth);
  for (std::size_t j = 0; j <= depth; ++j) ratio_series[j] = r[j];
  const auto f_ref = series_coeffs(series_inverse(ratio_series));
  const std::string ref_str = seq_str(f_ref);

  std::vector<ReportEntry> out;
  auto add_route = [&](const char* route, const std::vector<Rat>& got,
                       const std::string& want) {
    out.push_back(check_entry("frame-equivalence",
                              {{"case", std::string(label)},
                               {"route", route}},
                              seq_str(got), want));
  };

  // (-1)^n times the Toeplitz determinant over r_1..r_n.
  std::vector<Rat> f_det(depth + 1);
  f_det[0] = 1;
  for (std::size_t n = 1; n <= depth; ++n) {
    ToeplitzHessenberg<Rat> m;
    m.super = Rat(1);
    m.column.assign(r.begin() + 1, r.begin() + 1 + n);
    Rat d = hessenberg_det(m);
    f_det[n] = (n % 2 == 1) ? Rat(-d) : d;
  }
  add_route("determinant", f_det, ref_str);

  // Convolution recurrence sum_k f_k r_{n-k} = [n = 0].
  std::vector<Rat> f_conv(depth + 1);
  f_conv[0] = 1;
  for (std::size_t n = 1; n <= depth; ++n) {
    Rat acc(0);
    for (std::size_t k = 0; k < n; ++k) acc += f_conv[k] * r[n - k];
    f_conv[n] = -acc;
  }
  add_route("convolution", f_conv, ref_str);

  // Multinomial sum over weighted partitions.
  std::vector<Rat> f_part(depth + 1);
  f_part[0] = 1;
  for (std::size_t n = 1; n <= depth; ++n) {
    Rat acc(0);
    for (const auto& part : weighted_partitions(static_cast<unsigned>(n))) {
      Rat term{multinomial(part)};
      if (part.total() % 2 == 1) term = -term;
      for (std::size_t l = 1; l <= n; ++l) {
        for (unsigned rep = 0; rep < part.mult[l - 1]; ++rep) term *= r[l];
      }
      acc += term;
    }
    f_part[n] = acc;
  }
  add_route("multinomial", f_part, ref_str);

  // Composition sum: sum_k (-1)^k (convolution power r^{*k})_n.
  std::vector<Rat> f_comp(depth + 1, Rat(0));
  f_comp[0] = 1;
  {
    std::vector<Rat> tail(depth + 1, Rat(0));  // r_1..r_depth, index 0 unused
    for (std::size_t j = 1; j <= depth; ++j) tail[j] = r[j];
    std::vector<Rat> power = tail;
    for (std::size_t k = 1; k <= depth; ++k) {
      for (std::size_t n = k; n <= depth; ++n) {
        if (k % 2 == 1) {
          f_comp[n] -= power[n];
        } else {
          f_comp[n] += power[n];
        }
      }
      // power <- power * tail (indices below k+1 are zero anyway)
      std::vector<Rat> next(depth + 1, Rat(0));
      for (std::size_t i = 1; i <= depth; ++i) {
        if (sgn(power[i]) == 0) continue;
        for (std::size_t j = 1; i + j <= depth; ++j)
          next[i + j] += power[i] * tail[j];
      }
      power = std::move(next);
    }
  }
  add_route("composition", f_comp, ref_str);

  // Continued fraction with n_j = m_j = h_j/g_j.
  {
    CFSpec spec;
    spec.head = Rat(1);
    for (std::size_t j = 0; j < depth; ++j) {
      Rat v = fs.h[j] / fs.g[j];
      spec.levels.push_back(CFLevel{v, v});
    }
    add_route("continued-fraction", series_coeffs(cf_eval(spec, depth)),
              ref_str);
  }

  // Reverse direction: recover the ratios from f.
  const std::string r_str = seq_str(r);
  {
    std::vector<Rat> r_det(depth + 1);
    r_det[0] = 1;
    for (std::size_t n = 1; n <= depth; ++n) {
      ToeplitzHessenberg<Rat> m;
      m.super = Rat(1);
      m.column.assign(f_ref.begin() + 1, f_ref.begin() + 1 + n);
      Rat d = hessenberg_det(m);
      r_det[n] = (n % 2 == 1) ? Rat(-d) : d;
    }
    add_route("reverse-determinant", r_det, r_str);
  }
  {
    std::vector<Rat> r_part(depth + 1);
    r_part[0] = 1;
    for (std::size_t n = 1; n <= depth; ++n) {
      Rat acc(0);
      for (const auto& part : weighted_partitions(static_cast<unsigned>(n))) {
        Rat term{multinomial(part)};
        if (part.total() % 2 == 1) term = -term;
        for (std::size_t l = 1; l <= n; ++l) {
          for (unsigned rep = 0; rep < part.mult[l - 1]; ++rep)
            term *= f_ref[l];
        }
        acc += term;
      }
      r_part[n] = acc;
    }
    add_route("reverse-multinomial", r_part, r_str);
  }

  return out;
}

std::vector<FrameSpec> seeded_frame_specs(unsigned count, unsigned max_depth,
                                          unsigned long seed) {
  std::mt19937 eng(static_cast<std::mt19937::result_type>(seed));
  auto small = [&](bool nonzero) {
    long v = static_cast<long>(eng() % 11) - 5;  // -5..5
    while (nonzero && v == 0) v = static_cast<long>(eng() % 11) - 5;
    return Rat(v);
  };
  if (max_depth == 0) max_depth = 1;
  std::vector<FrameSpec> specs;
  specs.reserve(count);
  for (unsigned c = 0; c < count; ++c) {
    unsigned depth = 1 + eng() % max_depth;
    FrameSpec fs;
    for (unsigned j = 0; j < depth; ++j) {
      fs.g.push_back(small(true));
      fs.h.push_back(small(false));
    }
    specs.push_back(std::move(fs));
  }
  return specs;
}

}  // namespace fibonom
