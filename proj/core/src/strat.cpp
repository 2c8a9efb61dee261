#include "partpoly/strat.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace partpoly {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

NkClass classify_n(std::uint32_t n, bool relax) {
  if (n < 2) throw std::invalid_argument("classify_n requires n >= 2");
  std::uint32_t rest = n, largest = 1;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= rest; ++d)
    while (rest % d == 0) {
      largest = d;
      rest /= d;
    }
  if (rest > 1) largest = std::max(largest, rest);
  NkClass c{n, std::nullopt, std::nullopt};
  if (relax && n % 7 == 0 && is_prime(n / 7)) {
    c.k = 7;
    c.p = n / 7;
    return c;
  }
  const auto k = n / largest;
  if (k <= largest) {
    c.k = k;
    c.p = largest;
  }
  return c;
}

namespace {

double log_big(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

double LayerFit::evaluate(double n) const { return A * std::exp(B * std::sqrt(n)); }

namespace {

struct Sample {
  double s;    // sqrt(n)
  double lnv;
};

double log_residual(const std::vector<Sample>& xs, double log_a, double b) {
  double sum = 0;
  for (const auto& x : xs) {
    const double r = x.lnv - log_a - b * x.s;
    sum += r * r;
  }
  return sum;
}

// For fixed B the best A is closed form, leaving a one-dimensional problem in B.
// Values are scaled by max v and weights by e^{B max s}, so nothing overflows.
struct ProjectedValues {
  const std::vector<Sample>& xs;
  double lnv_max, s_max;

  // Returns (sum of squared scaled residuals, ln A).
  std::pair<double, double> at(double b) const {
    double yw = 0, ww = 0, yy = 0;
    for (const auto& x : xs) {
      const double y = std::exp(x.lnv - lnv_max), w = std::exp(b * (x.s - s_max));
      yw += y * w;
      ww += w * w;
      yy += y * y;
    }
    return {yy - yw * yw / ww, std::log(yw / ww) + lnv_max - b * s_max};
  }

  // Same sign as minus the derivative of the residual in b.
  double slope(double b) const {
    double yw = 0, ww = 0, yws = 0, wws = 0;
    for (const auto& x : xs) {
      const double y = std::exp(x.lnv - lnv_max), w = std::exp(b * (x.s - s_max));
      yw += y * w;
      ww += w * w;
      yws += y * w * x.s;
      wws += w * w * x.s;
    }
    return yws * ww - yw * wws;
  }
};

double minimize_values(const ProjectedValues& f, double b0) {
  // Coarse scan, then bisection on the slope inside the cells around the best point.
  constexpr int kSteps = 400;
  constexpr double kHalfWidth = 2.0;
  const double h = 2 * kHalfWidth / kSteps;
  double best_b = b0, best = f.at(b0).first;
  for (int i = 0; i <= kSteps; ++i) {
    const double b = b0 - kHalfWidth + i * h;
    const double e = f.at(b).first;
    if (e < best) best = e, best_b = b;
  }
  double lo = best_b - h, hi = best_b + h;
  if (!(f.slope(lo) > 0 && f.slope(hi) < 0)) return best_b;
  for (int i = 0; i < 200 && lo < hi; ++i) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (f.slope(mid) > 0 ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

LayerFit fit_layer(std::span<const LayerPoint> points, std::uint32_t k, FitMethod method) {
  if (points.size() < 2) throw std::invalid_argument("fit_layer needs at least two points");
  std::set<std::uint32_t> distinct;
  std::vector<Sample> xs;
  for (const auto& pt : points) {
    if (sgn(pt.v) <= 0) throw std::invalid_argument("fit_layer needs positive values");
    distinct.insert(pt.n);
    xs.push_back({std::sqrt(static_cast<double>(pt.n)), log_big(pt.v)});
  }
  if (distinct.size() < 2) throw std::invalid_argument("fit_layer needs two distinct n");

  const double m = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (const auto& x : xs) mx += x.s / m, my += x.lnv / m;
  double sxx = 0, sxy = 0;
  for (const auto& x : xs) {
    sxx += (x.s - mx) * (x.s - mx);
    sxy += (x.s - mx) * (x.lnv - my);
  }
  double b = sxy / sxx;
  double log_a = my - b * mx;

  if (method == FitMethod::Values) {
    double lnv_max = xs.front().lnv, s_max = xs.front().s;
    for (const auto& x : xs) lnv_max = std::max(lnv_max, x.lnv), s_max = std::max(s_max, x.s);
    const ProjectedValues f{xs, lnv_max, s_max};
    b = minimize_values(f, b);
    log_a = f.at(b).second;
  }

  LayerFit fit;
  fit.k = k;
  fit.method = method;
  fit.A = std::exp(log_a);
  fit.B = b;
  fit.residual = log_residual(xs, log_a, b);
  fit.support.assign(points.begin(), points.end());
  return fit;
}

std::string to_string(FitMethod method) { return method == FitMethod::Values ? "values" : "log-linear"; }

std::optional<FitMethod> parse_fit_method(std::string_view text) {
  if (text == "log-linear") return FitMethod::LogLinear;
  if (text == "values") return FitMethod::Values;
  return std::nullopt;
}

std::vector<LayerPoint> layer_points(const std::map<std::uint32_t, BigInt>& v, std::uint32_t k, bool relax) {
  std::vector<LayerPoint> out;
  for (const auto& [n, value] : v) {
    if (n < 2) continue;
    // The relaxation only widens layer 7.
    const auto c = classify_n(n, relax && k == 7);
    if (c.k && *c.k == k) out.push_back({n, value});
  }
  return out;
}

std::vector<SeriesRow> series_report(std::uint32_t lo, std::uint32_t hi, const SeriesData& data) {
  auto get = [](const std::map<std::uint32_t, BigInt>& m, std::int64_t n) -> std::optional<BigInt> {
    if (n < 0) return std::nullopt;
    auto it = m.find(static_cast<std::uint32_t>(n));
    if (it == m.end()) return std::nullopt;
    return it->second;
  };
  auto ratio_at = [&](std::int64_t n) -> std::optional<mpq_class> {
    auto v = get(data.v, n), k = get(data.k, n);
    if (!v || !k || sgn(*k) == 0) return std::nullopt;
    return mpq_class(*v, *k);
  };

  std::vector<SeriesRow> rows;
  for (std::uint32_t n = std::max<std::uint32_t>(lo, 1); n <= hi; ++n) {
    SeriesRow row;
    row.n = n;
    row.v = get(data.v, n);
    row.k = get(data.k, n);
    row.b = get(data.b, n);
    row.corner = get(data.corner, n);
    row.odd = n % 2 == 1;
    row.nk = n >= 2 ? classify_n(n) : NkClass{n, std::nullopt, std::nullopt};
    if (auto r = ratio_at(n)) {
      row.ratio = r->get_d();
      auto left = ratio_at(std::int64_t{n} - 1), right = ratio_at(std::int64_t{n} + 1);
      if (left && right) row.ratio_local_min = *r < *left && *r < *right;
    }
    if (row.v) {
      auto before = get(data.v, std::int64_t{n} - 2), after = get(data.v, std::int64_t{n} + 2);
      if (before && after) row.peak = 2 * *row.v > *before + *after;
      if (row.odd)
        if (auto next = get(data.v, std::int64_t{n} + 1)) row.odd_above_next_even = *row.v > *next;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace partpoly
