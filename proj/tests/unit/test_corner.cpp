#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "partpoly/corner.hpp"
#include "partpoly/geometry.hpp"

using namespace partpoly;

namespace {

GroupPoint point(std::uint32_t q, std::uint32_t g0, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> entries) {
  GroupPoint t{q, g0, std::vector<std::uint32_t>(q - 1, 0)};
  for (auto [g, c] : entries) t.t[g - 1] = c;
  return t;
}

std::vector<std::vector<long>> as_oracle(const std::vector<GroupPoint>& m) {
  std::vector<std::vector<long>> out;
  for (const auto& t : m) out.emplace_back(t.t.begin(), t.t.end());
  return out;
}

}  // namespace

TEST_CASE("minimal solutions of tiny groups") {
  const auto two = minimal_solutions(2, 1);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == point(2, 1, {{1, 1}}));

  const auto three = minimal_solutions(3, 2);
  REQUIRE(three.size() == 2);
  CHECK(std::find(three.begin(), three.end(), point(3, 2, {{1, 2}})) != three.end());
  CHECK(std::find(three.begin(), three.end(), point(3, 2, {{2, 1}})) != three.end());
}

TEST_CASE("the excluded point is minimal but not a vertex") {
  const auto m = minimal_solutions(11, 10);
  const auto t = point(11, 10, {{5, 1}, {9, 3}});
  CHECK(t.satisfies());
  REQUIRE(std::find(m.begin(), m.end(), t) != m.end());
  CHECK_FALSE(is_corner_vertex(t, m));
}

TEST_CASE("vertex tests on tiny groups") {
  const auto two = minimal_solutions(2, 1);
  CHECK(is_corner_vertex(two[0], two));
  const auto three = minimal_solutions(3, 2);
  for (const auto& t : three) CHECK(is_corner_vertex(t, three));
  CHECK(corner_vertex_count(2, 1) == 1);
  CHECK(corner_vertex_count(3, 2) == 2);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(minimal_solutions(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(minimal_solutions(65, 3), std::invalid_argument);
  CHECK_THROWS_AS(minimal_solutions(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(minimal_solutions(7, 7), std::invalid_argument);
  const auto m = minimal_solutions(5, 4);
  CHECK_THROWS_AS(is_corner_vertex(point(5, 4, {{4, 6}}), m), std::invalid_argument);
  CHECK_THROWS_AS(is_corner_vertex(point(5, 4, {{1, 1}}), m), std::invalid_argument);
}

TEST_CASE("minimal solutions match dominance filtering of all small solutions") {
  for (std::uint32_t q = 2; q <= 10; ++q)
    for (std::uint32_t g0 = 1; g0 < q; ++g0) {
      const auto m = minimal_solutions(q, g0);
      CAPTURE(q);
      CAPTURE(g0);
      REQUIRE(as_oracle(m) == oracle::corner_minimal(q, g0));
    }
}

TEST_CASE("minimal solutions form a box-bounded antichain") {
  for (std::uint32_t q : {7u, 12u, 13u}) {
    const auto m = minimal_solutions(q, q - 1);
    CHECK(std::is_sorted(m.begin(), m.end()));
    for (const auto& t : m) {
      CHECK(t.satisfies());
      for (auto c : t.t) CHECK(c <= q - 1);
    }
    for (const auto& a : m)
      for (const auto& b : m) {
        if (a == b) continue;
        bool le = true;
        for (std::size_t i = 0; i < a.t.size() && le; ++i) le = a.t[i] <= b.t[i];
        CHECK_FALSE(le);
      }
  }
}

TEST_CASE("vertex flags agree with a dense tableau") {
  for (std::uint32_t q = 2; q <= 9; ++q)
    for (std::uint32_t g0 = 1; g0 < q; ++g0) {
      const auto m = minimal_solutions(q, g0);
      const auto om = as_oracle(m);
      std::uint64_t count = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const bool v = is_corner_vertex(m[i], m);
        count += v;
        CAPTURE(q);
        CAPTURE(g0);
        REQUIRE(v == oracle::corner_vertex(om[i], om));
      }
      CHECK(corner_vertex_count(q, g0) == count);
    }
}

TEST_CASE("vertices leave the hull when removed") {
  const auto m = minimal_solutions(9, 8);
  std::vector<IntPoint> all;
  for (const auto& t : m) all.push_back(t.coordinates());
  for (const auto& t : m) {
    CHECK(in_hull_plus_orthant(t.coordinates(), all));
    if (!is_corner_vertex(t, m)) continue;
    std::vector<IntPoint> rest;
    for (const auto& s : m)
      if (s != t) rest.push_back(s.coordinates());
    CHECK_FALSE(in_hull_plus_orthant(t.coordinates(), rest));
  }
}

TEST_CASE("vertex counts are invariant under multiplication by units") {
  for (std::uint32_t q = 2; q <= 7; ++q)
    for (std::uint32_t u = 1; u < q; ++u) {
      if (std::gcd(u, q) != 1) continue;
      for (std::uint32_t g0 = 1; g0 < q; ++g0) {
        CAPTURE(q);
        CAPTURE(u);
        CAPTURE(g0);
        CHECK(corner_vertex_count(q, g0) == corner_vertex_count(q, (u * g0) % q));
      }
    }
}

TEST_CASE("threaded vertex count is deterministic") {
  CHECK(corner_vertex_count(12, 11, 1) == corner_vertex_count(12, 11, 3));
}
