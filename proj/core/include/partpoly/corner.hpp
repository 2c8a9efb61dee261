#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "partpoly/geometry.hpp"

namespace partpoly {

/// A nonnegative integer solution t of sum_{g=1}^{q-1} g * t(g) = g0 (mod q).
struct GroupPoint {
  std::uint32_t q = 0;
  std::uint32_t g0 = 0;
  std::vector<std::uint32_t> t;  ///< t[g - 1] for g = 1..q-1

  std::uint32_t at(std::uint32_t g) const { return t.at(g - 1); }
  bool satisfies() const noexcept;
  IntPoint coordinates() const;

  friend bool operator==(const GroupPoint&, const GroupPoint&) = default;
  friend auto operator<=>(const GroupPoint& a, const GroupPoint& b) { return a.t <=> b.t; }
};

/// All coordinatewise-minimal solutions for the cyclic group of order q.
///
/// A solution is minimal exactly when its multiset of group elements has no
/// nonempty zero-sum sub-multiset, so the search extends zero-sum-free
/// multisets and tracks their subset sums. Sorted lexicographically by t.
/// Requires 2 <= q <= 64 and 1 <= g0 <= q - 1.
std::vector<GroupPoint> minimal_solutions(std::uint32_t q, std::uint32_t g0);

/// True iff t is not in conv(M \ {t}) + nonnegative orthant. Throws
/// std::invalid_argument when t is not a member of M.
bool is_corner_vertex(const GroupPoint& t, const std::vector<GroupPoint>& minimal);

/// Number of vertices of the master corner polyhedron P(Z_q, g0).
std::uint64_t corner_vertex_count(std::uint32_t q, std::uint32_t g0, unsigned threads = 1);

}  // namespace partpoly
