#pragma once

#include <random>
#include <vector>

#include "oracle.hpp"
#include "partpoly/partition.hpp"

namespace testing {

inline oracle::Dense to_dense(const partpoly::Partition& x) {
  const auto d = x.dense();
  return oracle::Dense(d.begin(), d.end());
}

inline partpoly::Partition from_dense(const oracle::Dense& x) {
  std::vector<std::uint32_t> d(x.begin(), x.end());
  return partpoly::Partition::from_dense(d);
}

inline partpoly::BigInt to_big(const oracle::Int& v) { return partpoly::BigInt(v.str()); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240917);
  return engine;
}

/// Uniform-ish random partition of n: random parts drawn until n is used up.
inline partpoly::Partition random_partition(std::uint32_t n) {
  std::vector<std::uint32_t> parts;
  std::uint32_t rest = n;
  while (rest > 0) {
    std::uniform_int_distribution<std::uint32_t> pick(1, rest);
    const auto a = pick(rng());
    parts.push_back(a);
    rest -= a;
  }
  return partpoly::Partition::from_parts(parts);
}

}  // namespace testing
