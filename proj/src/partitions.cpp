#include "fibonom/partitions.hpp"

namespace fibonom {

namespace {

void emit(std::vector<unsigned>& t, unsigned part, unsigned remaining,
          std::vector<WeightedPartition>& out) {
  if (part == 1) {
    t[0] = remaining;
    out.push_back(WeightedPartition{t});
    t[0] = 0;
    return;
  }
  for (unsigned c = 0; c * part <= remaining; ++c) {
    t[part - 1] = c;
    emit(t, part - 1, remaining - c * part, out);
  }
  t[part - 1] = 0;
}

}  // namespace

std::vector<WeightedPartition> weighted_partitions(unsigned k) {
  std::vector<WeightedPartition> out;
  if (k == 0) {
    out.push_back(WeightedPartition{});
    return out;
  }
  std::vector<unsigned> t(k, 0);
  emit(t, k, k, out);
  return out;
}

Int multinomial(const WeightedPartition& p) {
  Int m = factorial(p.total());
  for (unsigned t : p.mult) {
    if (t > 1) m = div_exact(m, factorial(t));
  }
  return m;
}

}  // namespace fibonom
