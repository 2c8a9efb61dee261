#include "partpoly/cli/engine.hpp"

#include "partpoly/corner.hpp"
#include "partpoly/metropolis.hpp"
#include "partpoly/version.hpp"

namespace partpoly::cli {

Engine::Engine(ResultCache* cache, unsigned threads, Progress progress)
    : cache_(cache ? cache : &local_), threads_(threads), progress_(std::move(progress)) {}

void Engine::note(const std::string& message) const {
  if (progress_) progress_(message);
}

BigInt Engine::memo(const std::string& quantity, std::uint32_t n, Mode mode, const std::function<BigInt()>& compute) {
  if (cache_)
    if (auto hit = cache_->get(quantity, n, mode)) return *hit;
  BigInt value = compute();
  if (cache_) cache_->put({quantity, n, value, kVersion, mode});
  return value;
}

BigInt Engine::p(std::uint32_t n) {
  return memo(quantity::p(), n, Mode::Full, [&] { return partition_count(n); });
}

BigInt Engine::v(std::uint32_t n) {
  if (cache_)
    if (auto full = cache_->get(quantity::v(), n, Mode::Full)) return *full;
  return memo(quantity::v(), n, Mode::VertexOnly, [&] {
    note("computing v(" + std::to_string(n) + ")");
    return vertex_count(n, threads_);
  });
}

BigInt Engine::k(std::uint32_t n) {
  return memo(quantity::k(), n, Mode::Full, [&] {
    note("computing k(" + std::to_string(n) + ")");
    return knapsack_count(n);
  });
}

BigInt Engine::m(std::uint32_t n, std::uint32_t r) {
  return memo(quantity::m(r), n, Mode::Full, [&] {
    note("computing m_" + std::to_string(r) + "(" + std::to_string(n) + ")");
    return metropolis_count(n, r);
  });
}

BigInt Engine::b(std::uint32_t n) {
  return memo(quantity::b(), n, Mode::Full, [&] {
    if (n < 2) return vertex_upper_bound(n);
    return BigInt(p(n) - m(n % 2 == 0 ? n : n - 1, 2));
  });
}

BigInt Engine::corner(std::uint32_t q, std::uint32_t g0) {
  // Keyed by q with g0 folded into the quantity name.
  return memo(quantity::corner(q, g0), q, Mode::Full, [&] {
    note("computing corner vertices for q=" + std::to_string(q) + ", g0=" + std::to_string(g0));
    return BigInt(std::to_string(corner_vertex_count(q, g0, threads_)));
  });
}

CensusRecord Engine::census(std::uint32_t n, bool exact_xi) {
  const unsigned bound = xi_upper_bound(n);
  if (cache_) {
    CensusRecord cached;
    cached.n = n;
    cached.mode = CensusMode::Full;
    bool complete = true;
    for (unsigned xi = 2; xi <= bound && complete; ++xi) {
      auto c = cache_->get(quantity::c_xi(xi), n, Mode::Full);
      if (!c) complete = false;
      else if (sgn(*c) != 0) cached.c_xi[xi] = *c;
    }
    auto v = cache_->get(quantity::v(), n, Mode::Full);
    if (complete && v) {
      cached.v = *v;
      cached.p = p(n);
      cached.k_knapsack = k(n);
      return cached;
    }
  }
  note("classifying all partitions of " + std::to_string(n));
  ClassifyOptions options;
  options.exact_beyond_3 = exact_xi;
  options.threads = threads_;
  auto record = partpoly::census(n, CensusMode::Full, options);
  if (cache_) {
    cache_->put({quantity::p(), n, record.p, kVersion, Mode::Full});
    cache_->put({quantity::k(), n, record.k_knapsack, kVersion, Mode::Full});
    cache_->put({quantity::v(), n, record.v, kVersion, Mode::Full});
    const bool resolved = record.at_least.empty() && (record.c_xi.empty() || record.c_xi.rbegin()->first <= bound);
    if (resolved)
      for (unsigned xi = 2; xi <= bound; ++xi) {
        auto it = record.c_xi.find(xi);
        cache_->put({quantity::c_xi(xi), n, it == record.c_xi.end() ? BigInt(0) : it->second, kVersion, Mode::Full});
      }
  }
  return record;
}

}  // namespace partpoly::cli
