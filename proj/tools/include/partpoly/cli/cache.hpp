#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "partpoly/numeric.hpp"

namespace partpoly::cli {

enum class Mode { Full, VertexOnly };

std::string to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Quantity names used as cache keys.
namespace quantity {
inline std::string p() { return "p"; }
inline std::string v() { return "v"; }
inline std::string k() { return "k"; }
inline std::string b() { return "b"; }
inline std::string m(std::uint32_t r) { return "m_r(" + std::to_string(r) + ")"; }
inline std::string c_xi(unsigned xi) { return "c_xi(" + std::to_string(xi) + ")"; }
inline std::string corner(std::uint32_t q, std::uint32_t g0) {
  return "corner(" + std::to_string(q) + "," + std::to_string(g0) + ")";
}
}  // namespace quantity

struct CacheEntry {
  std::string quantity;
  std::uint32_t n = 0;
  BigInt value;
  std::string tool_version;
  Mode mode = Mode::Full;
};

class CacheConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Append-only JSON-lines store keyed by (quantity, n, mode).
///
/// Lines that fail to parse are skipped and reported through warnings().
/// Stored values are immutable: a put with a different value throws.
class ResultCache {
 public:
  /// In-memory cache; nothing is persisted.
  ResultCache() = default;
  /// Loads `path` if it exists; later puts are appended to it.
  explicit ResultCache(std::filesystem::path path);

  std::optional<BigInt> get(const std::string& quantity, std::uint32_t n, Mode mode) const;
  /// Returns true when the entry was new.
  bool put(const CacheEntry& entry);

  std::size_t size() const;
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }

  static std::string serialize(const CacheEntry& entry);
  /// Throws std::invalid_argument on a malformed line.
  static CacheEntry deserialize(const std::string& line);

 private:
  using Key = std::tuple<std::string, std::uint32_t, Mode>;

  void load(std::istream& in);

  std::optional<std::filesystem::path> path_;
  std::map<Key, CacheEntry> entries_;
  std::vector<std::string> warnings_;
  mutable std::mutex mutex_;
};

}  // namespace partpoly::cli
