#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "partpoly/cli/cache.hpp"
#include "partpoly/vertex_lab.hpp"

namespace partpoly::cli {

/// Computes the tool's quantities, consulting and filling an optional cache.
class Engine {
 public:
  using Progress = std::function<void(const std::string&)>;

  /// Without a cache, results are still memoized for the engine's lifetime.
  explicit Engine(ResultCache* cache = nullptr, unsigned threads = 1, Progress progress = {});

  BigInt p(std::uint32_t n);
  BigInt v(std::uint32_t n);
  BigInt k(std::uint32_t n);
  BigInt m(std::uint32_t n, std::uint32_t r);
  BigInt b(std::uint32_t n);
  BigInt corner(std::uint32_t q, std::uint32_t g0);
  /// Full census. Cached only when every class is resolved.
  CensusRecord census(std::uint32_t n, bool exact_xi);

 private:
  BigInt memo(const std::string& quantity, std::uint32_t n, Mode mode, const std::function<BigInt()>& compute);
  void note(const std::string& message) const;

  ResultCache local_;
  ResultCache* cache_;
  unsigned threads_;
  Progress progress_;
};

}  // namespace partpoly::cli
