#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <string>
#include <vector>

#include "partpoly/numeric.hpp"

namespace partpoly {

/// Membership of n in a class N_k = { k p : p prime, k <= p }.
struct NkClass {
  std::uint32_t n = 0;
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> p;
};

/// k = n / P with P the largest prime factor of n, kept when k <= P.
/// With `relax`, every n = 7p with p prime is assigned k = 7 instead.
/// Requires n >= 2.
NkClass classify_n(std::uint32_t n, bool relax = false);

bool is_prime(std::uint32_t n) noexcept;

struct LayerPoint {
  std::uint32_t n = 0;
  BigInt v;
};

enum class FitMethod {
  LogLinear,  ///< least squares on ln v = ln A + B sqrt(n), closed form
  Values,     ///< least squares on v itself
};

/// v ≈ A e^{B sqrt(n)}.
struct LayerFit {
  std::uint32_t k = 0;
  FitMethod method = FitMethod::LogLinear;
  double A = 0;
  double B = 0;
  double residual = 0;  ///< sum of squared residuals in log space, for either method
  std::vector<LayerPoint> support;

  double evaluate(double n) const;
};

/// Throws std::invalid_argument for fewer than two points, nonpositive v, or
/// fewer than two distinct n.
LayerFit fit_layer(std::span<const LayerPoint> points, std::uint32_t k, FitMethod method = FitMethod::LogLinear);

std::string to_string(FitMethod method);
std::optional<FitMethod> parse_fit_method(std::string_view text);

/// Points of `v` whose index lies in layer k. `relax` affects only k == 7.
std::vector<LayerPoint> layer_points(const std::map<std::uint32_t, BigInt>& v, std::uint32_t k, bool relax = false);

/// Stored exact values the report draws on. Missing entries become gaps.
struct SeriesData {
  std::map<std::uint32_t, BigInt> v;
  std::map<std::uint32_t, BigInt> k;
  std::map<std::uint32_t, BigInt> b;
  std::map<std::uint32_t, BigInt> corner;  ///< vertex count of P(Z_{n+1}, n)
};

struct SeriesRow {
  std::uint32_t n = 0;
  std::optional<BigInt> v;
  std::optional<BigInt> k;
  std::optional<double> ratio;  ///< v / k
  bool odd = false;
  NkClass nk;
  /// v(n) > (v(n-2) + v(n+2)) / 2
  std::optional<bool> peak;
  /// For odd n = 2r - 1: v(2r - 1) > v(2r).
  std::optional<bool> odd_above_next_even;
  /// v/k at n is below both neighbours' v/k.
  std::optional<bool> ratio_local_min;
  std::optional<BigInt> b;
  std::optional<BigInt> corner;
};

/// One row per n in [lo, hi]. Flags need their neighbours to be present;
/// otherwise they stay empty. Nothing is interpolated.
std::vector<SeriesRow> series_report(std::uint32_t lo, std::uint32_t hi, const SeriesData& data);

}  // namespace partpoly
