#include "partpoly/metropolis.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "partpoly/detail/sumset.hpp"
#include "partpoly/partition.hpp"
#include "partpoly/sum_structure.hpp"

namespace partpoly {

namespace {

void check_divisibility(std::uint32_t n, std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("Metropolis count requires r >= 2");
  if (n == 0 || n % r != 0) throw std::invalid_argument("Metropolis count requires r to divide n");
}

// Walks partitions by decreasing distinct part, carrying the subset sums of
// the prefix. Once n/2 is reachable every completion qualifies, and those are
// counted in one step from the bounded partition table.
class TwoSplitCounter {
 public:
  explicit TwoSplitCounter(std::uint32_t n)
      : half_(n / 2), bounded_(partition_count_table(n)), level_(n + 1, detail::SumSet(n / 2 + 1)) {}

  BigInt run(std::uint32_t n) {
    total_ = 0;
    level_[0].set(0);
    descend(0, n, n);
    return total_;
  }

 private:
  void descend(std::size_t depth, std::uint32_t remaining, std::uint32_t max_part) {
    if (remaining == 0) return;
    const auto& reach = level_[depth];
    auto& next = level_[depth + 1];
    for (std::uint32_t a = std::min(max_part, remaining); a >= 1; --a) {
      next.assign(reach);
      for (std::uint32_t c = 1; c * a <= remaining; ++c) {
        if (a <= half_) next.or_shifted(next, a);
        const auto rest = remaining - c * a;
        if (next.test(half_)) {
          total_ += bounded_[rest][a - 1];
        } else {
          descend(depth + 1, rest, a - 1);
        }
      }
    }
  }

  std::uint32_t half_;
  std::vector<std::vector<BigInt>> bounded_;
  std::vector<detail::SumSet> level_;
  BigInt total_;
};

std::mutex g_m2_mutex;
std::map<std::uint32_t, BigInt> g_m2_cache;

BigInt m2_exact(std::uint32_t n) {
  {
    std::lock_guard lock(g_m2_mutex);
    if (auto it = g_m2_cache.find(n); it != g_m2_cache.end()) return it->second;
  }
  BigInt value = TwoSplitCounter(n).run(n);
  std::lock_guard lock(g_m2_mutex);
  g_m2_cache.emplace(n, value);
  return value;
}

BigInt binom2(const BigInt& m) { return m * (m - 1) / 2; }

}  // namespace

BigInt metropolis_count_enumerative(std::uint32_t n, std::uint32_t r) {
  check_divisibility(n, r);
  std::uint64_t count = 0;
  for (const auto& x : enumerate_partitions(n))
    if (splits_into(x, r)) ++count;
  return BigInt(static_cast<unsigned long>(count));
}

BigInt metropolis_count(std::uint32_t n, std::uint32_t r) {
  check_divisibility(n, r);
  if (r == 2) return m2_exact(n);
  return metropolis_count_enumerative(n, r);
}

BigInt M2ClosedForm::evaluate(std::uint32_t n) const {
  const BigInt g2 = static_cast<unsigned long>(g_of(n)) + 2;
  return binom2(g2) + g2 * c1 + c2;
}

bool M2Calibration::any_consistent() const {
  for (const auto& c : contexts)
    if (c.consistent) return true;
  return false;
}

namespace {

void fit_context(M2CalibrationContext& ctx, const std::map<std::uint32_t, BigInt>& data) {
  // Two samples with distinct g determine (c1, c2); the rest are checks.
  std::optional<std::uint32_t> first, second;
  for (auto n : ctx.samples) {
    if (!first) {
      first = n;
    } else if (M2ClosedForm::g_of(n) != M2ClosedForm::g_of(*first)) {
      second = n;
      break;
    }
  }
  if (!second) {
    ctx.note = "underdetermined: fewer than two samples with distinct g";
    return;
  }
  ctx.fitted_on = {*first, *second};
  const auto g1 = M2ClosedForm::g_of(*first), g2 = M2ClosedForm::g_of(*second);
  const BigInt r1 = data.at(*first) - binom2(BigInt(static_cast<unsigned long>(g1)) + 2);
  const BigInt r2 = data.at(*second) - binom2(BigInt(static_cast<unsigned long>(g2)) + 2);
  const BigInt dg = BigInt(static_cast<long>(g1)) - static_cast<long>(g2);
  const BigInt dr = r1 - r2;
  if (dr % dg != 0) {
    ctx.note = "no integer (c1, c2) fits the two fitting samples";
    return;
  }
  M2ClosedForm form;
  form.c1 = dr / dg;
  form.c2 = r1 - (BigInt(static_cast<unsigned long>(g1)) + 2) * form.c1;
  for (auto n : ctx.samples)
    if (form.evaluate(n) != data.at(n)) ctx.violations.push_back(n);
  ctx.consistent = ctx.violations.empty();
  ctx.note = ctx.consistent ? "single (c1, c2) reproduces every sample" : "fitted (c1, c2) misses some samples";
  ctx.form = std::move(form);
}

}  // namespace

M2Calibration calibrate_m2_closed_form(std::span<const std::pair<std::uint32_t, BigInt>> samples) {
  if (samples.size() < 2) throw std::invalid_argument("calibration needs at least two samples");
  std::map<std::uint32_t, BigInt> data;
  for (const auto& [n, m] : samples) {
    if (n % 2 != 0) throw std::invalid_argument("calibration samples must have even n");
    if (n / 2 <= 5) throw std::invalid_argument("closed form applies only for n/2 > 5");
    if (auto [it, fresh] = data.emplace(n, m); !fresh && it->second != m)
      throw std::invalid_argument("conflicting values for the same n");
  }

  M2Calibration out;
  auto make = [&](std::string label, std::uint32_t modulus, std::uint32_t residue) {
    M2CalibrationContext ctx;
    ctx.label = std::move(label);
    ctx.modulus = modulus;
    ctx.residue = residue;
    for (const auto& [n, m] : data)
      if (n % modulus == residue) ctx.samples.push_back(n);
    fit_context(ctx, data);
    out.contexts.push_back(std::move(ctx));
  };
  make("all", 1, 0);
  make("n = 0 mod 4", 4, 0);
  make("n = 2 mod 4", 4, 2);
  return out;
}

BigInt vertex_upper_bound(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("vertex_upper_bound requires n >= 2");
  if (n % 2 == 0) return partition_count(n) - metropolis_count(n, 2);
  return partition_count(n) - metropolis_count(n - 1, 2);
}

}  // namespace partpoly
