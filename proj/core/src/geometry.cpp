#include "partpoly/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace partpoly {

bool ConvexWitness::reconstructs(std::span<const std::int64_t> x) const {
  const auto d = x.size();
  std::vector<BigRational> acc(d, 0);
  BigRational total = 0;
  for (const auto& g : generators) {
    if (g.point.size() != d || sgn(g.coefficient) <= 0) return false;
    total += g.coefficient;
    for (std::size_t i = 0; i < d; ++i) acc[i] += g.coefficient * BigRational(static_cast<long>(g.point[i]));
  }
  if (total != 1) return false;
  if (ray) {
    if (ray->size() != d) return false;
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn((*ray)[i]) < 0) return false;
      acc[i] += (*ray)[i];
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    if (acc[i] != BigRational(static_cast<long>(x[i]))) return false;
  return true;
}

namespace {

// Phase-1 revised simplex over exact rationals.
//
// Rows are the d coordinates plus the convexity row (sum of weights = 1).
// Columns are ordered: generators, then optional unit columns e_i (orthant),
// then one artificial per row. Rows with negative right-hand side are negated
// so the artificial basis starts feasible. Entering and leaving variables are
// chosen by Bland's rule, which rules out cycling.
class PhaseOne {
 public:
  PhaseOne(std::span<const std::int64_t> x, std::span<const IntPoint> q, bool orthant)
      : d_(x.size()), m_(x.size() + 1), points_(q), orthant_(orthant), sign_(x.size(), 1) {
    for (const auto& p : q)
      if (p.size() != d_) throw std::invalid_argument("dimension mismatch between point and generators");
    structural_ = q.size();
    unit_ = orthant ? d_ : 0;
    artificial_begin_ = structural_ + unit_;
    for (std::size_t i = 0; i < d_; ++i)
      if (x[i] < 0) sign_[i] = -1;

    basis_.resize(m_);
    is_basic_.assign(artificial_begin_ + m_, false);
    binv_.assign(m_, std::vector<BigRational>(m_, 0));
    xb_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      basis_[r] = artificial_begin_ + r;
      is_basic_[basis_[r]] = true;
      binv_[r][r] = 1;
      xb_[r] = r < d_ ? BigRational(static_cast<long>(sign_[r] * x[r])) : BigRational(1);
    }
  }

  std::optional<ConvexWitness> solve() {
    std::vector<BigInt> dual(m_);
    std::vector<BigRational> col(m_);
    for (;;) {
      scaled_dual(dual);
      const auto entering = choose_entering(dual);
      if (!entering) break;
      const std::size_t j = *entering;

      for (std::size_t r = 0; r < m_; ++r) {
        col[r] = 0;
        for (std::size_t i = 0; i < m_; ++i) {
          const auto a = entry(i, j);
          if (a != 0 && sgn(binv_[r][i]) != 0) col[r] += binv_[r][i] * BigRational(static_cast<long>(a));
        }
      }

      std::optional<std::size_t> leave;
      BigRational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(col[r]) <= 0) continue;
        BigRational ratio = xb_[r] / col[r];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) throw std::logic_error("phase-1 simplex: unbounded direction");
      pivot(*leave, j, col);
    }

    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] >= artificial_begin_ && sgn(xb_[r]) != 0) return std::nullopt;

    ConvexWitness w;
    std::vector<BigRational> ray(d_, 0);
    bool any_ray = false;
    for (std::size_t r = 0; r < m_; ++r) {
      const auto v = basis_[r];
      if (sgn(xb_[r]) == 0) continue;
      if (v < structural_) {
        w.generators.push_back({v, points_[v], xb_[r]});
      } else if (v < artificial_begin_) {
        ray[v - structural_] = xb_[r];
        any_ray = true;
      }
    }
    std::sort(w.generators.begin(), w.generators.end(),
              [](const auto& a, const auto& b) { return a.index < b.index; });
    if (orthant_) w.ray = std::move(ray);
    (void)any_ray;
    return w;
  }

 private:
  std::int64_t entry(std::size_t row, std::size_t col) const {
    if (col < structural_) return row < d_ ? sign_[row] * points_[col][row] : 1;
    if (col < artificial_begin_) return row == col - structural_ ? sign_[row] : 0;
    return row == col - artificial_begin_ ? 1 : 0;
  }

  // Phase-1 duals y = c_B B^{-1}, scaled by a common positive denominator so
  // pricing runs on integers. Only the sign of the reduced costs matters.
  void scaled_dual(std::vector<BigInt>& dual) const {
    std::vector<BigRational> y(m_, 0);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] >= artificial_begin_)
        for (std::size_t i = 0; i < m_; ++i) y[i] += binv_[r][i];
    BigInt den = 1;
    for (const auto& v : y) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t i = 0; i < m_; ++i) dual[i] = y[i].get_num() * (den / y[i].get_den());
  }

  // First non-artificial column with negative reduced cost -y·A_j, i.e. y·A_j > 0.
  // Artificials that left the basis never re-enter.
  std::optional<std::size_t> choose_entering(const std::vector<BigInt>& dual) const {
    BigInt acc;
    for (std::size_t j = 0; j < artificial_begin_; ++j) {
      if (is_basic_[j]) continue;
      if (j < structural_) {
        acc = dual[d_];
        const auto& p = points_[j];
        for (std::size_t i = 0; i < d_; ++i) {
          const std::int64_t a = sign_[i] * p[i];
          if (a > 0)
            mpz_addmul_ui(acc.get_mpz_t(), dual[i].get_mpz_t(), static_cast<unsigned long>(a));
          else if (a < 0)
            mpz_submul_ui(acc.get_mpz_t(), dual[i].get_mpz_t(), static_cast<unsigned long>(-a));
        }
        if (sgn(acc) > 0) return j;
      } else {
        const auto i = j - structural_;
        if (sign_[i] * sgn(dual[i]) > 0) return j;
      }
    }
    return std::nullopt;
  }

  void pivot(std::size_t r, std::size_t j, const std::vector<BigRational>& col) {
    const BigRational piv = col[r];
    for (auto& v : binv_[r]) v /= piv;
    xb_[r] /= piv;
    for (std::size_t s = 0; s < m_; ++s) {
      if (s == r || sgn(col[s]) == 0) continue;
      const BigRational f = col[s];
      for (std::size_t i = 0; i < m_; ++i)
        if (sgn(binv_[r][i]) != 0) binv_[s][i] -= f * binv_[r][i];
      xb_[s] -= f * xb_[r];
    }
    is_basic_[basis_[r]] = false;
    basis_[r] = j;
    is_basic_[j] = true;
  }

  std::size_t d_;
  std::size_t m_;
  std::span<const IntPoint> points_;
  bool orthant_;
  std::vector<int> sign_;
  std::size_t structural_ = 0;
  std::size_t unit_ = 0;
  std::size_t artificial_begin_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<bool> is_basic_;
  std::vector<std::vector<BigRational>> binv_;
  std::vector<BigRational> xb_;
};

std::optional<ConvexWitness> solve_membership(std::span<const std::int64_t> x, std::span<const IntPoint> q,
                                              bool orthant) {
  for (const auto& p : q)
    if (p.size() != x.size()) throw std::invalid_argument("dimension mismatch between point and generators");
  if (q.empty()) return std::nullopt;
  auto w = PhaseOne(x, q, orthant).solve();
  if (w && !w->reconstructs(x)) throw std::logic_error("convex witness failed exact reconstruction");
  return w;
}

}  // namespace

std::optional<ConvexWitness> in_convex_hull(std::span<const std::int64_t> x, std::span<const IntPoint> q) {
  return solve_membership(x, q, false);
}

std::optional<ConvexWitness> in_hull_plus_orthant(std::span<const std::int64_t> x, std::span<const IntPoint> q) {
  return solve_membership(x, q, true);
}

std::size_t affine_rank(std::span<const IntPoint> points) {
  if (points.empty()) throw std::invalid_argument("affine_rank requires at least one point");
  const auto d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("dimension mismatch in affine_rank");

  // Fraction-free (Bareiss) elimination on the difference vectors.
  std::vector<std::vector<BigInt>> a;
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<BigInt> row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = static_cast<long>(points[k][i] - points[0][i]);
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < d && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < d; ++k) {
        a[r][k] = a[r][k] * a[rank][c] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank + 1;
}

}  // namespace partpoly
