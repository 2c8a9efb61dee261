#include "partpoly/vertex_lab.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "partpoly/detail/parallel.hpp"
#include "partpoly/detail/sumset.hpp"
#include "partpoly/sum_structure.hpp"

namespace partpoly {

bool ConvexRepresentation::reconstructs(const Partition& x) const {
  if (generators.size() != coefficients.size() || generators.empty()) return false;
  std::vector<BigRational> acc(x.n(), 0);
  BigRational total = 0;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].n() != x.n() || sgn(coefficients[j]) <= 0) return false;
    total += coefficients[j];
    for (const auto& [part, mult] : generators[j].parts())
      acc[part - 1] += coefficients[j] * BigRational(static_cast<unsigned long>(mult));
  }
  if (total != 1) return false;
  const auto xd = x.dense();
  for (std::size_t i = 0; i < xd.size(); ++i)
    if (acc[i] != BigRational(static_cast<unsigned long>(xd[i]))) return false;
  return true;
}

unsigned xi_upper_bound(std::uint32_t n) {
  // floor(log2(n + 1)) + 1 == bit width of n + 1.
  return static_cast<unsigned>(std::bit_width(std::uint64_t{n} + 1));
}

namespace {

// Partitions sharing x's support, projected onto the support coordinates.
// Every partition in a convex representation of x has zeros outside that
// support, so these are the only candidates.
struct Candidates {
  SupportSet support;
  IntPoint target;
  std::vector<Partition> partitions;
  std::vector<IntPoint> points;
};

Candidates gather(const Partition& x, std::span<const std::uint32_t> caps = {}) {
  Candidates c;
  c.support = x.support();
  c.target = x.project(c.support);
  auto all = caps.empty() ? enumerate_with_support(x.n(), c.support) : enumerate_with_support(x.n(), c.support, caps);
  for (auto& y : all) {
    if (y == x) continue;
    c.points.push_back(y.project(c.support));
    c.partitions.push_back(std::move(y));
  }
  return c;
}

ConvexRepresentation represent(const ConvexWitness& w, std::span<const Partition> partitions) {
  ConvexRepresentation rep;
  for (const auto& g : w.generators) {
    rep.generators.push_back(partitions[g.index]);
    rep.coefficients.push_back(g.coefficient);
  }
  return rep;
}

// x with the parts of `out` removed and those of `in` added.
Partition exchange(const Partition& x, const PartMultiset& out, const PartMultiset& in) {
  std::map<std::uint32_t, std::int64_t> m;
  for (const auto& [p, c] : x.parts()) m[p] += c;
  for (const auto& [p, c] : out) m[p] -= c;
  for (const auto& [p, c] : in) m[p] += c;
  PartMultiset ms;
  for (auto [p, c] : m) {
    if (c < 0) throw std::logic_error("exchange removed a part x does not have");
    if (c > 0) ms.push_back({p, static_cast<std::uint32_t>(c)});
  }
  return Partition(x.n(), std::move(ms));
}

std::optional<ConvexRepresentation> certify(const Partition& x, std::vector<Partition> gens) {
  const auto s = x.support();
  std::vector<IntPoint> pts;
  for (const auto& g : gens) pts.push_back(g.project(s));
  auto w = in_convex_hull(x.project(s), pts);
  if (!w) return std::nullopt;
  return represent(*w, gens);
}

// Stage (a): two collections with equal sums give the pair obtained by
// swapping one collection for the other in each direction; x is their midpoint.
std::optional<XiClass> criterion_stage(const Partition& x) {
  auto w = equal_sum_witness(x);
  if (!w) return std::nullopt;
  Partition up = exchange(x, w->left, w->right);
  Partition down = exchange(x, w->right, w->left);
  auto rep = certify(x, {std::move(up), std::move(down)});
  if (!rep || rep->size() != 2) throw std::logic_error("equal-sum pair failed LP certification");
  return XiClass{XiClass::Kind::Xi, 2, std::move(rep)};
}

// Stage (b): an unordered triple of distinct candidates with y1 + y2 + y3 = 3x.
// Since candidates are nonnegative, each satisfies y <= 3x coordinatewise.
std::optional<XiClass> barycenter_stage(const Partition& x) {
  std::vector<std::uint32_t> caps;
  for (const auto& pc : x.parts()) caps.push_back(3 * pc.mult);
  auto c = gather(x, caps);
  std::map<IntPoint, std::size_t> index;
  for (std::size_t i = 0; i < c.points.size(); ++i) index.emplace(c.points[i], i);

  const auto d = c.target.size();
  IntPoint z(d);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    for (std::size_t j = i + 1; j < c.points.size(); ++j) {
      bool nonneg = true;
      for (std::size_t t = 0; t < d && nonneg; ++t) {
        z[t] = 3 * c.target[t] - c.points[i][t] - c.points[j][t];
        nonneg = z[t] >= 0;
      }
      if (!nonneg) continue;
      auto it = index.find(z);
      if (it == index.end() || it->second <= j) continue;
      auto rep = certify(x, {c.partitions[i], c.partitions[j], c.partitions[it->second]});
      const BigRational third(1, 3);
      if (!rep || rep->size() != 3 ||
          !std::all_of(rep->coefficients.begin(), rep->coefficients.end(), [&](const auto& v) { return v == third; }))
        throw std::logic_error("barycentric triple failed LP certification");
      return XiClass{XiClass::Kind::Xi, 3, std::move(rep)};
    }
  }
  return std::nullopt;
}

// Smallest k-subset of candidates whose hull contains x, for k in [lo, hi].
std::optional<XiClass> subset_stage(const Candidates& c, unsigned lo, unsigned hi) {
  const auto total = c.points.size();
  std::vector<IntPoint> pts;
  std::vector<Partition> parts;
  for (unsigned k = lo; k <= hi && k <= total; ++k) {
    std::vector<std::size_t> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      pts.clear();
      parts.clear();
      for (auto idx : pick) {
        pts.push_back(c.points[idx]);
        parts.push_back(c.partitions[idx]);
      }
      if (auto w = in_convex_hull(c.target, pts)) {
        if (w->generators.size() != k) throw std::logic_error("subset search found a smaller representation late");
        return XiClass{XiClass::Kind::Xi, k, represent(*w, parts)};
      }
      // next combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == total - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

VertexTest is_vertex(const Partition& x) {
  auto c = gather(x);
  auto w = in_convex_hull(c.target, c.points);
  if (!w) return {true, std::nullopt};
  return {false, represent(*w, c.partitions)};
}

XiClass xi_index(const Partition& x, bool exact_beyond_3) {
  if (auto r = criterion_stage(x)) return std::move(*r);
  if (auto r = barycenter_stage(x)) return std::move(*r);

  auto c = gather(x);
  auto w = in_convex_hull(c.target, c.points);
  if (!w) return XiClass{XiClass::Kind::Vertex, 1, std::nullopt};

  // A basic solution uses at most |support| + 1 generators, so ξ is at most
  // the size of this witness.
  const auto found = static_cast<unsigned>(w->generators.size());
  if (found < 4) throw std::logic_error("hull witness smaller than the criterion and triple stages allow");
  auto rep = represent(*w, c.partitions);
  if (!exact_beyond_3) return XiClass{XiClass::Kind::AtLeast, 4, std::move(rep)};
  if (found > 4)
    if (auto r = subset_stage(c, 4, std::min(found - 1, xi_upper_bound(x.n())))) return std::move(*r);
  return XiClass{XiClass::Kind::Xi, found, std::move(rep)};
}

// ---------------------------------------------------------------------------
// Knapsack enumeration

namespace {

struct KnapsackWalker {
  std::uint32_t n;
  const std::function<void(const Partition&)>& visit;
  std::vector<detail::SumSet> level;  // reachable sums after each depth
  PartMultiset current;

  void run(std::size_t depth, std::uint32_t min_part, std::uint32_t remaining) {
    if (remaining == 0) {
      visit(Partition(n, current));
      return;
    }
    if (depth + 1 >= level.size()) throw std::logic_error("knapsack walker exceeded its depth bound");
    const auto& reach = level[depth];
    auto& next = level[depth + 1];
    for (std::uint32_t a = min_part; a <= remaining; ++a) {
      // Largest multiplicity keeping all shifted copies of `reach` disjoint.
      std::uint32_t cmax = 0;
      while (std::uint64_t{cmax + 1} * a <= remaining && !reach.intersects_shifted(reach, std::size_t{cmax + 1} * a))
        ++cmax;
      for (std::uint32_t c = cmax; c >= 1; --c) {
        const auto rest = remaining - c * a;
        if (rest != 0 && rest <= a) continue;
        next.assign(reach);
        for (std::uint32_t j = 1; j <= c; ++j) next.or_shifted(reach, std::size_t{j} * a);
        current.push_back({a, c});
        run(depth + 1, a + 1, rest);
        current.pop_back();
      }
    }
  }
};

}  // namespace

void enumerate_knapsack(std::uint32_t n, const std::function<void(const Partition&)>& visit) {
  if (n == 0) throw std::invalid_argument("enumerate_knapsack requires n >= 1");
  KnapsackWalker walker{n, visit, {}, {}};
  // A knapsack partition with m distinct parts has 2^m distinct subset sums in
  // [0, n], so the depth stays below bit_width(n + 1).
  walker.level.assign(xi_upper_bound(n) + 2, detail::SumSet(n + 1));
  walker.level[0].set(0);
  walker.run(0, 1, n);
}

std::vector<Partition> knapsack_partitions(std::uint32_t n) {
  std::vector<Partition> out;
  enumerate_knapsack(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

BigInt knapsack_count(std::uint32_t n) {
  std::uint64_t count = 0;
  enumerate_knapsack(n, [&](const Partition&) { ++count; });
  return BigInt(static_cast<unsigned long>(count));
}

BigInt vertex_count(std::uint32_t n, unsigned threads) {
  const auto ks = knapsack_partitions(n);
  const auto total = detail::parallel_accumulate<std::uint64_t>(
      ks.size(), threads, [&](std::size_t i, std::uint64_t& acc) { acc += is_vertex(ks[i]).is_vertex ? 1 : 0; },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
  return BigInt(static_cast<unsigned long>(total));
}

namespace {

struct Tally {
  std::uint64_t vertices = 0;
  std::uint64_t knapsack = 0;
  std::map<unsigned, std::uint64_t> exact;
  std::map<unsigned, std::uint64_t> lower;

  void add(const XiClass& c) {
    if (c.kind == XiClass::Kind::Vertex)
      ++vertices;
    else if (c.kind == XiClass::Kind::Xi)
      ++exact[c.k];
    else
      ++lower[c.k];
    if (!(c.kind == XiClass::Kind::Xi && c.k == 2)) ++knapsack;
  }
  static void merge(Tally& into, const Tally& from) {
    into.vertices += from.vertices;
    into.knapsack += from.knapsack;
    for (auto [k, v] : from.exact) into.exact[k] += v;
    for (auto [k, v] : from.lower) into.lower[k] += v;
  }
};

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

CensusRecord census(std::uint32_t n, CensusMode mode, const ClassifyOptions& options) {
  if (n == 0) throw std::invalid_argument("census requires n >= 1");
  CensusRecord rec;
  rec.n = n;
  rec.mode = mode;
  rec.p = partition_count(n);

  if (mode == CensusMode::VertexOnly) {
    const auto ks = knapsack_partitions(n);
    rec.k_knapsack = big(ks.size());
    const auto v = detail::parallel_accumulate<std::uint64_t>(
        ks.size(), options.threads,
        [&](std::size_t i, std::uint64_t& acc) { acc += is_vertex(ks[i]).is_vertex ? 1 : 0; },
        [](std::uint64_t& into, std::uint64_t from) { into += from; });
    rec.v = big(v);
    return rec;
  }

  std::vector<Partition> all;
  for (const auto& x : enumerate_partitions(n)) all.push_back(x);
  const auto tally = detail::parallel_accumulate<Tally>(
      all.size(), options.threads,
      [&](std::size_t i, Tally& acc) { acc.add(xi_index(all[i], options.exact_beyond_3)); }, Tally::merge);
  rec.v = big(tally.vertices);
  rec.k_knapsack = big(tally.knapsack);
  for (auto [k, v] : tally.exact) rec.c_xi[k] = big(v);
  for (auto [k, v] : tally.lower) rec.at_least[k] = big(v);
  return rec;
}

}  // namespace partpoly
