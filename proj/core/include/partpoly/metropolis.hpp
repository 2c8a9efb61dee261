#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partpoly/numeric.hpp"

namespace partpoly {

/// m_r(n): partitions of n whose parts split into r blocks of sum n / r.
/// r == 2 uses a prefix-sharing subset-sum search; other r test every
/// partition with splits_into. Throws std::invalid_argument when r < 2 or
/// r does not divide n.
BigInt metropolis_count(std::uint32_t n, std::uint32_t r);

/// The same count obtained by testing splits_into on every partition.
BigInt metropolis_count_enumerative(std::uint32_t n, std::uint32_t r);

/// m_2(n) = C(g + 2, 2) + (g + 2) c1 + c2 with g = floor((n/2 + 1) / 2), n/2 > 5.
struct M2ClosedForm {
  BigInt c1;
  BigInt c2;

  static std::uint32_t g_of(std::uint32_t n) { return (n / 2 + 1) / 2; }
  BigInt evaluate(std::uint32_t n) const;
};

/// Calibration of (c1, c2) on one family of sample indices.
struct M2CalibrationContext {
  std::string label;        ///< "all", "n = 0 mod 4", "n = 2 mod 4"
  std::uint32_t modulus = 1;
  std::uint32_t residue = 0;
  std::vector<std::uint32_t> samples;
  std::vector<std::uint32_t> fitted_on;    ///< the two n used to solve for (c1, c2)
  std::optional<M2ClosedForm> form;        ///< absent when underdetermined or non-integral
  std::vector<std::uint32_t> violations;   ///< samples the fitted form misses
  bool consistent = false;
  std::string note;
};

struct M2Calibration {
  std::vector<M2CalibrationContext> contexts;
  bool any_consistent() const;
};

/// Empirical calibration of the closed form. Throws std::invalid_argument for
/// fewer than two samples, odd n, or n / 2 <= 5.
M2Calibration calibrate_m2_closed_form(std::span<const std::pair<std::uint32_t, BigInt>> samples);

/// b(n) = p(n) - m_2(n) for even n and p(n) - m_2(n - 1) for odd n, with m_2
/// computed exactly. Requires n >= 2.
BigInt vertex_upper_bound(std::uint32_t n);

}  // namespace partpoly
