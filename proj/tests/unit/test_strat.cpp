#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "partpoly/strat.hpp"
#include "partpoly/vertex_lab.hpp"

using namespace partpoly;

TEST_CASE("classify_n examples") {
  auto c = classify_n(61);
  CHECK(c.k == 1u);
  CHECK(c.p == 61u);
  c = classify_n(38);
  CHECK(c.k == 2u);
  CHECK(c.p == 19u);
  c = classify_n(39);
  CHECK(c.k == 3u);
  CHECK(c.p == 13u);
  c = classify_n(12);
  CHECK_FALSE(c.k);
  CHECK_FALSE(c.p);
  CHECK(classify_n(2).k == 1u);
  CHECK(classify_n(4).k == 2u);
  CHECK_THROWS_AS(classify_n(1), std::invalid_argument);
}

TEST_CASE("the relaxed class admits k = 7") {
  CHECK(classify_n(35).k == 5u);
  auto c = classify_n(35, true);
  CHECK(c.k == 7u);
  CHECK(c.p == 5u);
  CHECK(classify_n(14, true).k == 7u);
  CHECK(classify_n(49, true).k == 7u);
  CHECK(classify_n(24, true).k == classify_n(24).k);
  CHECK_FALSE(classify_n(63, true).k);

  std::map<std::uint32_t, BigInt> v;
  for (std::uint32_t n = 2; n <= 100; ++n) v[n] = n;
  std::vector<std::uint32_t> seven, two;
  for (const auto& pt : layer_points(v, 7, true)) seven.push_back(pt.n);
  for (const auto& pt : layer_points(v, 2, true)) two.push_back(pt.n);
  CHECK(seven == std::vector<std::uint32_t>{14, 21, 35, 49, 77, 91});
  CHECK(std::find(two.begin(), two.end(), 14u) != two.end());
  std::vector<std::uint32_t> strict;
  for (const auto& pt : layer_points(v, 7)) strict.push_back(pt.n);
  CHECK(strict == std::vector<std::uint32_t>{49, 77, 91});
}

TEST_CASE("classify_n agrees with a divisor scan") {
  for (std::uint32_t n = 2; n <= 10000; ++n) {
    std::optional<std::uint32_t> k;
    for (std::uint32_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      const auto p = n / d;
      if (is_prime(p) && d <= p) {
        REQUIRE_FALSE(k);  // at most one decomposition
        k = d;
      }
    }
    const auto c = classify_n(n);
    CAPTURE(n);
    REQUIRE(c.k == k);
    if (c.k) {
      CHECK(is_prime(*c.p));
      CHECK(*c.k * *c.p == n);
      CHECK(*c.k <= *c.p);
    }
  }
}

TEST_CASE("fit_layer") {
  std::vector<LayerPoint> two{{10, BigInt(100)}, {40, BigInt(5000)}};
  auto fit = fit_layer(two, 1);
  CHECK(fit.residual == doctest::Approx(0).epsilon(1e-12));
  CHECK(fit.evaluate(10) == doctest::Approx(100).epsilon(1e-12));
  CHECK(fit.evaluate(40) == doctest::Approx(5000).epsilon(1e-12));
  CHECK(fit.support.size() == 2);

  std::vector<LayerPoint> synth;
  for (std::uint32_t n = 10; n <= 100; ++n) {
    const double v = 2.0 * std::exp(1.5 * std::sqrt(static_cast<double>(n)));
    synth.push_back({n, BigInt(std::to_string(std::llround(v * 1e12)))});
  }
  fit = fit_layer(synth, 3);
  CHECK(std::abs(fit.A / 2e12 - 1) < 1e-9);
  CHECK(std::abs(fit.B / 1.5 - 1) < 1e-9);
  CHECK(fit.k == 3);

  CHECK_THROWS_AS(fit_layer(std::vector<LayerPoint>{{10, BigInt(1)}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fit_layer(std::vector<LayerPoint>{{10, BigInt(1)}, {12, BigInt(0)}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fit_layer(std::vector<LayerPoint>{{10, BigInt(1)}, {10, BigInt(2)}}, 1), std::invalid_argument);
}

TEST_CASE("fit_layer is scale-consistent") {
  std::vector<LayerPoint> base{{11, BigInt(29)}, {13, BigInt(41)}, {17, BigInt(84)}, {19, BigInt(117)}};
  auto scaled = base;
  for (auto& p : scaled) p.v *= 7;
  const auto a = fit_layer(base, 1), b = fit_layer(scaled, 1);
  CHECK(b.A == doctest::Approx(7 * a.A).epsilon(1e-12));
  CHECK(b.B == doctest::Approx(a.B).epsilon(1e-12));
  CHECK(b.residual == doctest::Approx(a.residual).epsilon(1e-9));
}

namespace {

double value_sse(const std::vector<LayerPoint>& pts, double a, double b) {
  double sum = 0;
  for (const auto& pt : pts) {
    const double r = pt.v.get_d() - a * std::exp(b * std::sqrt(static_cast<double>(pt.n)));
    sum += r * r;
  }
  return sum;
}

}  // namespace

TEST_CASE("fit_layer values method recovers exact data") {
  std::vector<LayerPoint> synth;
  for (std::uint32_t n = 10; n <= 100; n += 3) {
    const double v = 2.0 * std::exp(1.5 * std::sqrt(static_cast<double>(n)));
    synth.push_back({n, BigInt(std::to_string(std::llround(v * 1e12)))});
  }
  const auto fit = fit_layer(synth, 3, FitMethod::Values);
  CHECK(fit.method == FitMethod::Values);
  CHECK(std::abs(fit.A / 2e12 - 1) < 1e-7);
  CHECK(std::abs(fit.B / 1.5 - 1) < 1e-8);
}

TEST_CASE("fit_layer values method is a local minimum of the value residual") {
  std::vector<LayerPoint> pts;
  for (std::uint32_t n = 2; n <= 30; ++n) pts.push_back({n, vertex_count(n)});
  const auto lin = fit_layer(pts, 0), val = fit_layer(pts, 0, FitMethod::Values);
  const double best = value_sse(pts, val.A, val.B);
  CHECK(best <= value_sse(pts, lin.A, lin.B));
  CHECK(val.residual >= lin.residual * (1 - 1e-12));
  for (double da : {-1e-4, 1e-4})
    for (double db : {-1e-5, 0.0, 1e-5}) CHECK(best <= value_sse(pts, val.A * (1 + da), val.B + db));
}

TEST_CASE("fit_layer values method is scale-consistent") {
  std::vector<LayerPoint> base{{11, BigInt(29)}, {13, BigInt(41)}, {17, BigInt(84)}, {19, BigInt(117)}};
  auto scaled = base;
  for (auto& p : scaled) p.v *= 1000003;
  const auto a = fit_layer(base, 1, FitMethod::Values), b = fit_layer(scaled, 1, FitMethod::Values);
  CHECK(b.A == doctest::Approx(1000003 * a.A).epsilon(1e-8));
  CHECK(b.B == doctest::Approx(a.B).epsilon(1e-8));
}

TEST_CASE("fit method names") {
  CHECK(parse_fit_method("values") == FitMethod::Values);
  CHECK(parse_fit_method("log-linear") == FitMethod::LogLinear);
  CHECK_FALSE(parse_fit_method("cubic"));
  CHECK(to_string(FitMethod::Values) == "values");
}

TEST_CASE("layer ordering at n = 65 from computed vertex counts") {
  std::map<std::uint32_t, BigInt> v;
  for (std::uint32_t n = 2; n <= 40; ++n) v[n] = vertex_count(n);
  const auto l1 = layer_points(v, 1), l2 = layer_points(v, 2);
  REQUIRE(l1.size() >= 3);
  REQUIRE(l2.size() >= 3);
  for (const auto& pt : l2) CHECK(classify_n(pt.n).k == 2u);
  CHECK(fit_layer(l1, 1).evaluate(65) > fit_layer(l2, 2).evaluate(65));
}

TEST_CASE("series_report ratios and gaps") {
  SeriesData data;
  data.v[60] = 5148;
  data.k[60] = 5341;
  data.v[77] = 21393;
  data.k[77] = 22128;
  const auto rows = series_report(59, 78, data);
  REQUIRE(rows.size() == 20);
  CHECK(rows[1].n == 60);
  REQUIRE(rows[1].ratio);
  CHECK(*rows[1].ratio == doctest::Approx(0.964).epsilon(0.0005));
  REQUIRE(rows[18].ratio);
  CHECK(*rows[18].ratio == doctest::Approx(0.967).epsilon(0.0005));
  // No neighbours, so no flags.
  CHECK_FALSE(rows[1].peak);
  CHECK_FALSE(rows[1].ratio_local_min);
  CHECK_FALSE(rows[0].v);
  CHECK_FALSE(rows[0].ratio);
  CHECK(rows[0].odd);
  CHECK_FALSE(rows[18].odd_above_next_even);
}

TEST_CASE("series_report flags follow their definitions") {
  SeriesData data;
  for (std::uint32_t n = 1; n <= 42; ++n) {
    data.v[n] = vertex_count(n);
    data.k[n] = knapsack_count(n);
  }
  const auto rows = series_report(3, 40, data);
  for (const auto& r : rows) {
    CAPTURE(r.n);
    REQUIRE(r.peak);
    CHECK(*r.peak == (2 * data.v[r.n] > data.v[r.n - 2] + data.v[r.n + 2]));
    REQUIRE(r.ratio_local_min);
    const mpq_class here(data.v[r.n], data.k[r.n]), left(data.v[r.n - 1], data.k[r.n - 1]),
        right(data.v[r.n + 1], data.k[r.n + 1]);
    CHECK(*r.ratio_local_min == (here < left && here < right));
    CHECK(r.odd_above_next_even.has_value() == r.odd);
    if (r.odd) CHECK(*r.odd_above_next_even == (data.v[r.n] > data.v[r.n + 1]));
  }
}
