#include "fibonom/fibonomial.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibonom/fibonacci.hpp"

namespace fibonom {

int sign_delta(unsigned long k) { return (k % 4 <= 1) ? 1 : -1; }

Int fibonomial_product(unsigned n, unsigned k) {
  if (k > n)
    throw std::invalid_argument("fibonomial_product: k=" + std::to_string(k) +
                                " exceeds n=" + std::to_string(n));
  Rat acc(1);
  for (unsigned r = 1; r <= k; ++r) acc *= make_rat(fib(n - r + 1), fib(r));
  if (!is_integer(acc))
    throw std::logic_error("fibonomial product is not integral: " +
                           acc.get_str());
  return acc.get_num();
}

namespace {

// Triangle rows grow on demand and stay cached for the process lifetime.
std::mutex triangle_mu;
std::vector<std::vector<Int>>& triangle() {
  static std::vector<std::vector<Int>> rows{{Int(1)}};
  return rows;
}

void extend_triangle(unsigned n) {
  auto& rows = triangle();
  while (rows.size() <= n) {
    const unsigned m = static_cast<unsigned>(rows.size());
    std::vector<Int> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    for (unsigned j = 1; j + 1 <= m; ++j) {
      row[j] = fib(m - j - 1) * rows[m - 1][j - 1] + fib(j + 1) * rows[m - 1][j];
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

Int fibonomial_recurrence(unsigned n, unsigned k) {
  if (k > n)
    throw std::invalid_argument("fibonomial_recurrence: k=" +
                                std::to_string(k) +
                                " exceeds n=" + std::to_string(n));
  std::scoped_lock lock(triangle_mu);
  extend_triangle(n);
  return triangle()[n][k];
}

Int fibonomial_or_zero(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  return fibonomial_recurrence(n, k);
}

Golden gaussian_binomial_at(unsigned N, unsigned K, const Golden& q) {
  if (K > N)
    throw std::invalid_argument("gaussian_binomial_at: K=" + std::to_string(K) +
                                " exceeds N=" + std::to_string(N));
  std::vector<Golden> q_pow(K + 1);
  q_pow[0] = Golden(1);
  for (unsigned j = 1; j <= K; ++j) q_pow[j] = q_pow[j - 1] * q;

  // row[j] holds [m j]_q; updated in place, highest j first so that row[j-1]
  // still belongs to the previous m.
  std::vector<Golden> row(K + 1);
  row[0] = Golden(1);
  for (unsigned m = 1; m <= N; ++m) {
    unsigned top = (m < K) ? m : K;
    for (unsigned j = top; j >= 1; --j) {
      row[j] = row[j - 1] + q_pow[j] * row[j];
    }
  }
  return row[K];
}

Int fibonomial_from_qbinomial(unsigned n, unsigned k) {
  if (k > n)
    throw std::invalid_argument("fibonomial_from_qbinomial: k exceeds n");
  Golden g = gaussian_binomial_at(n, k, golden_q());
  Golden value =
      golden_pow(golden_phi(), static_cast<unsigned long>(k) * (n - k)) * g;
  if (!value.is_rational())
    throw std::logic_error("q-binomial route left a phi component: " +
                           to_string(value));
  return value.a;
}

Int power_sum(unsigned n, unsigned r) {
  if (r == 0) throw std::invalid_argument("power_sum: r must be >= 1");
  Golden direct;
  for (unsigned j = 0; j < n; ++j) {
    direct += golden_pow(golden_phi(),
                         static_cast<unsigned long>(r) * (n - 1 - j)) *
              golden_pow(golden_psi(), static_cast<unsigned long>(r) * j);
  }
  Int closed = div_exact(fib(static_cast<unsigned long>(r) * n), fib(r));
  if (direct != Golden(closed))
    throw std::logic_error("power_sum routes disagree at n=" +
                           std::to_string(n) + ", r=" + std::to_string(r) +
                           ": " + to_string(direct) + " vs " +
                           closed.get_str());
  return closed;
}

}  // namespace fibonom
