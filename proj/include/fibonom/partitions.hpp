#pragma once

#include <vector>

#include "fibonom/numbers.hpp"

namespace fibonom {

// Multiplicity vector (t_1, ..., t_k) with sum_j j*t_j = k: one part of size
// j appears t_j times. mult[j-1] stores t_j.
struct WeightedPartition {
  std::vector<unsigned> mult;

  unsigned total() const {
    unsigned s = 0;
    for (unsigned t : mult) s += t;
    return s;
  }
};

// All weighted partitions of k, each exactly once, in ascending lexicographic
// order of the reversed tuple (t_k, ..., t_1). k = 0 yields the single empty
// partition.
std::vector<WeightedPartition> weighted_partitions(unsigned k);

// (t_1 + ... + t_k)! / (t_1! ... t_k!).
Int multinomial(const WeightedPartition& p);

}  // namespace fibonom
