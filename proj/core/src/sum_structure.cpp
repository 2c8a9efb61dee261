#include "partpoly/sum_structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "partpoly/detail/sumset.hpp"

namespace partpoly {

namespace {

// Number of sub-multisets reaching each sum, saturated at 2. Stops early
// (returning false) once a collision appears if `stop_on_collision`.
bool saturating_counts(const Partition& x, std::vector<std::uint8_t>& cnt, bool stop_on_collision) {
  const auto n = x.n();
  cnt.assign(n + 1, 0);
  cnt[0] = 1;
  std::vector<std::uint8_t> next(n + 1);
  bool collision = false;
  for (const auto& [a, c] : x.parts()) {
    for (std::uint32_t s = 0; s <= n; ++s) {
      unsigned acc = 0;
      for (std::uint32_t j = 0; j <= c && std::uint64_t{j} * a <= s; ++j) {
        acc += cnt[s - j * a];
        if (acc >= 2) break;
      }
      next[s] = static_cast<std::uint8_t>(std::min(acc, 2u));
      if (next[s] >= 2) collision = true;
    }
    cnt.swap(next);
    if (collision && stop_on_collision) return false;
  }
  return !collision;
}

}  // namespace

bool is_knapsack(const Partition& x) {
  std::vector<std::uint8_t> cnt;
  return saturating_counts(x, cnt, true);
}

std::optional<EqualSumWitness> equal_sum_witness(const Partition& x) {
  std::vector<std::uint8_t> cnt;
  if (saturating_counts(x, cnt, false)) return std::nullopt;

  std::uint32_t s = 1;
  while (cnt[s] < 2) ++s;

  // Suffix reachability over distinct parts, so the search below only walks
  // branches that complete to sum s.
  const auto parts = x.parts();
  const auto d = parts.size();
  std::vector<detail::SumSet> reach(d + 1, detail::SumSet(s + 1));
  reach[d].set(0);
  for (std::size_t i = d; i-- > 0;) {
    reach[i].assign(reach[i + 1]);
    for (std::uint32_t j = 1; j <= parts[i].mult && std::uint64_t{j} * parts[i].part <= s; ++j)
      reach[i].or_shifted(reach[i + 1], std::size_t{j} * parts[i].part);
  }

  std::vector<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> pick(d, 0);
  auto dfs = [&](auto&& self, std::size_t i, std::uint32_t t) -> void {
    if (i == d) {
      if (t == 0) found.push_back(pick);
      return;
    }
    for (std::uint32_t j = 0; j <= parts[i].mult && std::uint64_t{j} * parts[i].part <= t; ++j) {
      if (!reach[i + 1].test(t - j * parts[i].part)) continue;
      pick[i] = j;
      self(self, i + 1, t - j * parts[i].part);
    }
    pick[i] = 0;
  };
  dfs(dfs, 0, s);
  std::sort(found.begin(), found.end());
  if (found.size() < 2) throw std::logic_error("equal_sum_witness: count DP and search disagree");

  auto to_multiset = [&](const std::vector<std::uint32_t>& m) {
    PartMultiset ms;
    for (std::size_t i = 0; i < d; ++i)
      if (m[i] > 0) ms.push_back({parts[i].part, m[i]});
    return ms;
  };
  EqualSumWitness w{s, to_multiset(found[0]), to_multiset(found[1])};
  // At the minimal sum any two collections are disjoint: a shared part would
  // leave a smaller equal-sum pair after removal.
  for (std::size_t i = 0; i < d; ++i)
    if (found[0][i] > 0 && found[1][i] > 0) throw std::logic_error("equal_sum_witness: overlap at minimal sum");
  return w;
}

bool has_subset_sum(const Partition& x, std::uint64_t target) {
  if (target > x.n()) return false;
  detail::SumSet reach(target + 1);
  reach.set(0);
  for (const auto& [a, c] : x.parts()) {
    // Doubling the number of copies folded in keeps this O(log c) shifts.
    std::uint64_t done = 0;
    std::uint64_t step = 1;
    while (done < c) {
      const auto take = std::min<std::uint64_t>(step, c - done);
      if (take * a <= target) reach.or_shifted(reach, take * a);
      done += take;
      step *= 2;
    }
  }
  return reach.test(target);
}

std::optional<SplitCertificate> splits_into(const Partition& x, std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("splits_into requires r >= 2");
  if (x.n() % r != 0) throw std::invalid_argument("splits_into requires r to divide n");
  const std::uint32_t cap = x.n() / r;
  if (x.largest_part() > cap) return std::nullopt;
  if (!has_subset_sum(x, cap)) return std::nullopt;

  std::vector<std::uint32_t> items = x.ascending_parts();
  std::reverse(items.begin(), items.end());
  const std::uint32_t smallest = items.back();
  std::vector<std::uint32_t> remaining(r, cap);
  std::vector<std::uint32_t> bin_of(items.size(), 0);

  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == items.size()) return true;
    const auto item = items[i];
    for (std::uint32_t b = 0; b < r; ++b) {
      if (remaining[b] < item) continue;
      // Bins with equal spare capacity are interchangeable from here on.
      bool seen = false;
      for (std::uint32_t e = 0; e < b && !seen; ++e) seen = remaining[e] == remaining[b];
      if (seen) continue;
      const auto left = remaining[b] - item;
      if (left != 0 && left < smallest) continue;
      remaining[b] = left;
      bin_of[i] = b;
      if (self(self, i + 1)) return true;
      remaining[b] += item;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;

  std::vector<std::map<std::uint32_t, std::uint32_t>> blocks(r);
  for (std::size_t i = 0; i < items.size(); ++i) ++blocks[bin_of[i]][items[i]];
  SplitCertificate cert{r, {}};
  for (const auto& b : blocks) {
    PartMultiset ms;
    for (auto [p, c] : b) ms.push_back({p, c});
    cert.blocks.push_back(std::move(ms));
  }
  return cert;
}

}  // namespace partpoly
