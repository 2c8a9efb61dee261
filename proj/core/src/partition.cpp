#include "partpoly/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace partpoly {

std::uint64_t multiset_sum(std::span<const PartCount> parts) noexcept {
  std::uint64_t s = 0;
  for (const auto& pc : parts) s += std::uint64_t{pc.part} * pc.mult;
  return s;
}

// ---------------------------------------------------------------------------
// SupportSet

SupportSet::SupportSet(std::vector<std::uint32_t> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == 0) throw std::invalid_argument("support elements must be positive");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw std::invalid_argument("support elements must be strictly increasing");
  }
}

bool SupportSet::contains(std::uint32_t part) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), part);
}

std::size_t SupportSet::index_of(std::uint32_t part) const noexcept {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), part);
  if (it == elements_.end() || *it != part) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::uint32_t n, PartMultiset parts) : n_(n), parts_(std::move(parts)) {
  if (n_ == 0) throw std::invalid_argument("partition of 0 is not representable");
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].part == 0 || parts_[i].mult == 0)
      throw std::invalid_argument("parts and multiplicities must be positive");
    if (i > 0 && parts_[i].part <= parts_[i - 1].part)
      throw std::invalid_argument("parts must be strictly increasing");
  }
  if (multiset_sum(parts_) != n_) throw std::invalid_argument("parts do not sum to n");
}

Partition Partition::from_parts(std::span<const std::uint32_t> parts) {
  std::map<std::uint32_t, std::uint32_t> counts;
  std::uint64_t total = 0;
  for (auto p : parts) {
    if (p == 0) throw std::invalid_argument("parts must be positive");
    ++counts[p];
    total += p;
  }
  PartMultiset ms;
  ms.reserve(counts.size());
  for (auto [p, c] : counts) ms.push_back({p, c});
  return Partition(static_cast<std::uint32_t>(total), std::move(ms));
}

Partition Partition::from_dense(std::span<const std::uint32_t> x) {
  PartMultiset ms;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const auto part = static_cast<std::uint32_t>(i + 1);
    ms.push_back({part, x[i]});
    total += std::uint64_t{part} * x[i];
  }
  return Partition(static_cast<std::uint32_t>(total), std::move(ms));
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::uint32_t> parts;
  auto read_uint = [](std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("malformed partition token '" + std::string(tok) + "'");
    return v;
  };
  std::uint64_t total = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('+', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    auto caret = tok.find('^');
    std::uint32_t part = read_uint(tok.substr(0, caret));
    std::uint32_t reps = caret == std::string_view::npos ? 1 : read_uint(tok.substr(caret + 1));
    total += std::uint64_t{part} * reps;
    if (total > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("partition too large");
    parts.insert(parts.end(), reps, part);
    pos = next + 1;
  }
  return from_parts(parts);
}

std::uint32_t Partition::multiplicity(std::uint32_t part) const noexcept {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), part,
                             [](const PartCount& pc, std::uint32_t v) { return pc.part < v; });
  return (it != parts_.end() && it->part == part) ? it->mult : 0;
}

std::uint32_t Partition::part_count() const noexcept {
  std::uint32_t c = 0;
  for (const auto& pc : parts_) c += pc.mult;
  return c;
}

SupportSet Partition::support() const {
  std::vector<std::uint32_t> s;
  s.reserve(parts_.size());
  for (const auto& pc : parts_) s.push_back(pc.part);
  return SupportSet(std::move(s));
}

std::vector<std::uint32_t> Partition::dense() const {
  std::vector<std::uint32_t> x(n_, 0);
  for (const auto& pc : parts_) x[pc.part - 1] = pc.mult;
  return x;
}

std::vector<std::uint32_t> Partition::ascending_parts() const {
  std::vector<std::uint32_t> out;
  out.reserve(part_count());
  for (const auto& pc : parts_) out.insert(out.end(), pc.mult, pc.part);
  return out;
}

std::vector<std::int64_t> Partition::project(const SupportSet& s) const {
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (auto e : s.elements()) out.push_back(multiplicity(e));
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& pc : parts_) {
    if (!out.empty()) out += '+';
    out += std::to_string(pc.part);
    if (pc.mult > 1) {
      out += '^';
      out += std::to_string(pc.mult);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  std::size_t i = 0, j = 0;
  std::uint32_t left_a = a.parts_.empty() ? 0 : a.parts_[0].mult;
  std::uint32_t left_b = b.parts_.empty() ? 0 : b.parts_[0].mult;
  while (i < a.parts_.size() && j < b.parts_.size()) {
    const auto pa = a.parts_[i].part, pb = b.parts_[j].part;
    if (pa != pb) return pa <=> pb;
    const auto take = std::min(left_a, left_b);
    left_a -= take;
    left_b -= take;
    if (left_a == 0 && ++i < a.parts_.size()) left_a = a.parts_[i].mult;
    if (left_b == 0 && ++j < b.parts_.size()) left_b = b.parts_[j].mult;
  }
  const bool a_done = i >= a.parts_.size(), b_done = j >= b.parts_.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = p.n();
  for (const auto& pc : p.parts()) {
    h ^= (std::size_t{pc.part} * 0x9E3779B97F4A7C15ull) + pc.mult + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

std::mutex g_count_mutex;
std::vector<BigInt> g_count_memo{BigInt(1)};

}  // namespace

BigInt partition_count(std::uint32_t n) {
  std::lock_guard lock(g_count_mutex);
  auto& p = g_count_memo;
  for (std::size_t m = p.size(); m <= n; ++m) {
    BigInt total = 0;
    for (std::int64_t k = 1;; ++k) {
      const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
      if (g1 > m) break;
      const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1)
        total += term;
      else
        total -= term;
    }
    p.push_back(std::move(total));
  }
  return p[n];
}

BigInt partition_count_bounded(std::uint32_t n, std::uint32_t max_part) {
  if (max_part == 0) throw std::invalid_argument("max_part must be positive");
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  const auto top = std::min(n, max_part);
  for (std::uint32_t part = 1; part <= top; ++part)
    for (std::uint32_t s = part; s <= n; ++s) ways[s] += ways[s - part];
  return ways[n];
}

std::vector<std::vector<BigInt>> partition_count_table(std::uint32_t n) {
  std::vector<std::vector<BigInt>> t(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::uint32_t k = 0; k <= n; ++k) t[0][k] = 1;
  for (std::uint32_t m = 1; m <= n; ++m)
    for (std::uint32_t k = 1; k <= n; ++k) {
      t[m][k] = t[m][k - 1];
      if (m >= k) t[m][k] += t[m - k][k];
    }
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Lexicographic successor of a nondecreasing composition. The last two
// entries (x, y) are replaced by the smallest tail whose head exceeds x.
bool next_ascending(std::vector<std::uint32_t>& a) {
  const auto k = a.size();
  if (k <= 1) return false;
  const std::uint32_t x = a[k - 2], y = a[k - 1];
  a.resize(k - 2);
  const std::uint32_t v = x + 1;
  std::uint32_t m = x + y;
  while (m >= 2 * v) {
    a.push_back(v);
    m -= v;
  }
  a.push_back(m);
  return true;
}

PartMultiset compress(std::span<const std::uint32_t> ascending) {
  PartMultiset ms;
  for (auto p : ascending) {
    if (!ms.empty() && ms.back().part == p)
      ++ms.back().mult;
    else
      ms.push_back({p, 1});
  }
  return ms;
}

}  // namespace

PartitionRange::PartitionRange(std::uint32_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("enumerate_partitions requires n >= 1");
}

PartitionRange::iterator::iterator(std::uint32_t n) : n_(n), ascending_(n, 1), done_(false) {
  rebuild();
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  if (!done_) {
    if (next_ascending(ascending_))
      rebuild();
    else
      done_ = true;
  }
  return *this;
}

void PartitionRange::iterator::rebuild() { current_ = Partition(n_, compress(ascending_)); }

PartitionRange enumerate_partitions(std::uint32_t n) { return PartitionRange(n); }

void for_each_ascending_partition(std::uint32_t n,
                                  const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (n == 0) throw std::invalid_argument("enumeration requires n >= 1");
  std::vector<std::uint32_t> a(n, 1);
  do {
    visit(a);
  } while (next_ascending(a));
}

namespace {

void support_dfs(std::size_t idx, std::uint32_t remaining, std::span<const std::uint32_t> elems,
                 std::span<const std::uint32_t> caps, std::vector<std::uint32_t>& mult,
                 std::uint32_t n, std::vector<Partition>& out) {
  if (remaining == 0) {
    PartMultiset ms;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (mult[i] > 0) ms.push_back({elems[i], mult[i]});
    out.emplace_back(n, std::move(ms));
    return;
  }
  if (idx == elems.size()) return;
  const auto part = elems[idx];
  const auto max_c = std::min<std::uint32_t>(caps[idx], remaining / part);
  for (std::uint32_t c = 0; c <= max_c; ++c) {
    mult[idx] = c;
    support_dfs(idx + 1, remaining - c * part, elems, caps, mult, n, out);
  }
  mult[idx] = 0;
}

}  // namespace

std::vector<Partition> enumerate_with_support(std::uint32_t n, const SupportSet& support,
                                              std::span<const std::uint32_t> caps) {
  if (n == 0) throw std::invalid_argument("enumerate_with_support requires n >= 1");
  if (support.empty()) throw std::invalid_argument("support must be nonempty");
  if (caps.size() != support.size()) throw std::invalid_argument("caps must match support size");
  std::vector<Partition> out;
  std::vector<std::uint32_t> mult(support.size(), 0);
  support_dfs(0, n, support.elements(), caps, mult, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_with_support(std::uint32_t n, const SupportSet& support) {
  std::vector<std::uint32_t> caps(support.size(), n);
  return enumerate_with_support(n, support, caps);
}

bool multiset_contains(std::span<const PartCount> outer, std::span<const PartCount> inner) noexcept {
  std::size_t i = 0;
  for (const auto& need : inner) {
    while (i < outer.size() && outer[i].part < need.part) ++i;
    if (i == outer.size() || outer[i].part != need.part || outer[i].mult < need.mult) return false;
  }
  return true;
}

bool is_extension(const Partition& x, const Partition& y) {
  if (x.n() < y.n()) throw std::invalid_argument("is_extension requires x.n >= y.n");
  return multiset_contains(x.parts(), y.parts());
}

}  // namespace partpoly
