#include "partpoly/corner.hpp"

#include <algorithm>
#include <stdexcept>

#include "partpoly/detail/parallel.hpp"

namespace partpoly {

bool GroupPoint::satisfies() const noexcept {
  if (q < 2 || t.size() != q - 1) return false;
  std::uint64_t s = 0;
  for (std::uint32_t g = 1; g < q; ++g) s = (s + std::uint64_t{g} * t[g - 1]) % q;
  return s == g0 % q;
}

IntPoint GroupPoint::coordinates() const { return IntPoint(t.begin(), t.end()); }

namespace {

using Mask = std::uint64_t;

// Subset sums are residues mod q held as bits; adding g rotates by g.
Mask rotate(Mask m, std::uint32_t by, std::uint32_t q) {
  const Mask full = q == 64 ? ~Mask{0} : ((Mask{1} << q) - 1);
  by %= q;
  if (by == 0) return m;
  return ((m << by) | (m >> (q - by))) & full;
}

struct MinimalSearch {
  std::uint32_t q;
  std::uint32_t g0;
  std::vector<std::uint32_t> t;
  std::vector<GroupPoint> out;

  // `sums` holds residues of nonempty sub-multisets chosen so far.
  void run(std::uint32_t g, std::uint32_t total, Mask sums) {
    if (total == g0 && sums != 0) {
      out.push_back({q, g0, t});
      return;  // any extension contains this solution plus a zero-sum remainder
    }
    for (std::uint32_t h = g; h < q; ++h) {
      Mask cur = sums;
      std::uint32_t s = total;
      for (std::uint32_t c = 1;; ++c) {
        if (cur & (Mask{1} << (q - h))) break;  // -h already reachable: zero sum
        cur = cur | (Mask{1} << h) | rotate(cur, h, q);
        s = (s + h) % q;
        t[h - 1] = c;
        run(h + 1, s, cur);
      }
      t[h - 1] = 0;
    }
  }
};

}  // namespace

std::vector<GroupPoint> minimal_solutions(std::uint32_t q, std::uint32_t g0) {
  if (q < 2 || q > 64) throw std::invalid_argument("minimal_solutions supports 2 <= q <= 64");
  if (g0 < 1 || g0 >= q) throw std::invalid_argument("g0 must lie in [1, q-1]");
  MinimalSearch search{q, g0, std::vector<std::uint32_t>(q - 1, 0), {}};
  search.run(1, 0, 0);
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

namespace {

bool vertex_among(std::size_t idx, const std::vector<IntPoint>& coords) {
  std::vector<IntPoint> others;
  others.reserve(coords.size() - 1);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (i != idx) others.push_back(coords[i]);
  return !in_hull_plus_orthant(coords[idx], others);
}

}  // namespace

bool is_corner_vertex(const GroupPoint& t, const std::vector<GroupPoint>& minimal) {
  auto it = std::find(minimal.begin(), minimal.end(), t);
  if (it == minimal.end()) throw std::invalid_argument("point is not a minimal solution");
  std::vector<IntPoint> coords;
  coords.reserve(minimal.size());
  for (const auto& m : minimal) coords.push_back(m.coordinates());
  return vertex_among(static_cast<std::size_t>(it - minimal.begin()), coords);
}

std::uint64_t corner_vertex_count(std::uint32_t q, std::uint32_t g0, unsigned threads) {
  const auto minimal = minimal_solutions(q, g0);
  std::vector<IntPoint> coords;
  coords.reserve(minimal.size());
  for (const auto& m : minimal) coords.push_back(m.coordinates());
  return detail::parallel_accumulate<std::uint64_t>(
      minimal.size(), threads,
      [&](std::size_t i, std::uint64_t& acc) { acc += vertex_among(i, coords) ? 1 : 0; },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
}

}  // namespace partpoly
