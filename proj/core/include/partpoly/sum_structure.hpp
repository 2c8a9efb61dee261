#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "partpoly/partition.hpp"

namespace partpoly {

/// Two different, disjoint sub-multisets of a partition's parts with equal sum.
struct EqualSumWitness {
  std::uint64_t s = 0;
  PartMultiset left;
  PartMultiset right;
};

/// The parts of a partition of n distributed into r blocks, each summing to n / r.
struct SplitCertificate {
  std::uint32_t r = 0;
  std::vector<PartMultiset> blocks;
};

/// True iff all distinct sub-multisets of x's parts have distinct sums.
bool is_knapsack(const Partition& x);

/// A disjoint equal-sum witness with the smallest possible common sum, or
/// nullopt exactly when x is knapsack. Among the sub-multisets reaching that
/// sum, `left` is the lexicographically smallest by dense multiplicity vector
/// and `right` the next one.
std::optional<EqualSumWitness> equal_sum_witness(const Partition& x);

/// True iff some sub-multiset of x's parts sums to `target`.
bool has_subset_sum(const Partition& x, std::uint64_t target);

/// Splits x's parts into r blocks of equal sum, or nullopt when impossible.
/// Throws std::invalid_argument when r < 2 or r does not divide x.n().
std::optional<SplitCertificate> splits_into(const Partition& x, std::uint32_t r);

}  // namespace partpoly
