#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "partpoly/numeric.hpp"

namespace partpoly {

using IntPoint = std::vector<std::int64_t>;

/// Certificate that a point lies in conv(Q), optionally plus a ray from the
/// nonnegative orthant.
struct ConvexWitness {
  struct Generator {
    std::size_t index = 0;  ///< position in the queried generator list
    IntPoint point;
    BigRational coefficient;
  };
  std::vector<Generator> generators;  ///< ascending by index, coefficients > 0
  std::optional<std::vector<BigRational>> ray;

  /// Exact check: coefficients positive, summing to one, and
  /// sum(coefficient * point) + ray == x.
  bool reconstructs(std::span<const std::int64_t> x) const;
};

/// Exact membership x ∈ conv(Q) by phase-1 simplex with Bland's rule.
/// Returns a witness, or nullopt when infeasible. Throws std::invalid_argument
/// on dimension mismatch.
std::optional<ConvexWitness> in_convex_hull(std::span<const std::int64_t> x, std::span<const IntPoint> q);

/// Exact membership x ∈ conv(Q) + R^d_{>=0}.
std::optional<ConvexWitness> in_hull_plus_orthant(std::span<const std::int64_t> x, std::span<const IntPoint> q);

/// Number of affinely independent points among `points` (affine hull dimension + 1).
std::size_t affine_rank(std::span<const IntPoint> points);

}  // namespace partpoly
