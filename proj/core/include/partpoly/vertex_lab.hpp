#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "partpoly/geometry.hpp"
#include "partpoly/numeric.hpp"
#include "partpoly/partition.hpp"

namespace partpoly {

/// x written as a convex combination of other partitions of the same n.
struct ConvexRepresentation {
  std::vector<Partition> generators;
  std::vector<BigRational> coefficients;

  std::size_t size() const noexcept { return generators.size(); }
  /// Exact check that coefficients are positive, sum to one and reproduce x.
  bool reconstructs(const Partition& x) const;
};

/// Outcome of the ξ-index decision procedure.
struct XiClass {
  enum class Kind { Vertex, Xi, AtLeast };

  Kind kind = Kind::Vertex;
  /// ξ for Kind::Xi, the lower bound for Kind::AtLeast, 1 for a vertex.
  unsigned k = 1;
  std::optional<ConvexRepresentation> witness;

  bool is_vertex() const noexcept { return kind == Kind::Vertex; }
};

struct VertexTest {
  bool is_vertex = false;
  std::optional<ConvexRepresentation> witness;  ///< present when not a vertex
};

enum class CensusMode { Full, VertexOnly };

struct CensusRecord {
  std::uint32_t n = 0;
  BigInt p;
  BigInt v;
  BigInt k_knapsack;
  std::map<unsigned, BigInt> c_xi;      ///< exact ξ -> count (full mode)
  std::map<unsigned, BigInt> at_least;  ///< unresolved lower bound -> count (full mode)
  CensusMode mode = CensusMode::VertexOnly;
};

struct ClassifyOptions {
  bool exact_beyond_3 = false;
  unsigned threads = 1;  ///< 0 selects hardware concurrency
};

/// Vertex test against the partitions sharing x's support.
VertexTest is_vertex(const Partition& x);

/// Exact ξ classification: criterion filter, barycentric triple search,
/// hull LP, and (optionally) a subset search for ξ >= 4.
XiClass xi_index(const Partition& x, bool exact_beyond_3 = false);

/// Upper bound on ξ from the bound on distinct parts of knapsack partitions:
/// floor(log2(n + 1) + 1).
unsigned xi_upper_bound(std::uint32_t n);

/// Visits every knapsack partition of n in lexicographic order. Backtracking
/// prunes a prefix as soon as two of its sub-multisets share a sum.
void enumerate_knapsack(std::uint32_t n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> knapsack_partitions(std::uint32_t n);
BigInt knapsack_count(std::uint32_t n);

/// v(n), counting knapsack partitions that pass the vertex test.
BigInt vertex_count(std::uint32_t n, unsigned threads = 1);

/// Classifies every partition of n (full) or only the knapsack ones (vertex-only).
CensusRecord census(std::uint32_t n, CensusMode mode, const ClassifyOptions& options = {});

}  // namespace partpoly
