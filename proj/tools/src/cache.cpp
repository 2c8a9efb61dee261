#include "partpoly/cli/cache.hpp"

#include <fstream>
#include <json.hpp>

namespace partpoly::cli {

std::string to_string(Mode mode) { return mode == Mode::Full ? "full" : "vertex-only"; }

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "full") return Mode::Full;
  if (text == "vertex-only") return Mode::VertexOnly;
  return std::nullopt;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  if (in) load(in);
}

void ResultCache::load(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto entry = deserialize(line);
      Key key{entry.quantity, entry.n, entry.mode};
      auto [it, inserted] = entries_.try_emplace(key, entry);
      if (!inserted && it->second.value != entry.value)
        warnings_.push_back("cache line " + std::to_string(number) + ": conflicting value for " + entry.quantity +
                            "(" + std::to_string(entry.n) + "), keeping the first");
    } catch (const std::exception& e) {
      warnings_.push_back("cache line " + std::to_string(number) + " skipped: " + e.what());
    }
  }
}

std::optional<BigInt> ResultCache::get(const std::string& quantity, std::uint32_t n, Mode mode) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(Key{quantity, n, mode});
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

bool ResultCache::put(const CacheEntry& entry) {
  std::lock_guard lock(mutex_);
  Key key{entry.quantity, entry.n, entry.mode};
  if (auto it = entries_.find(key); it != entries_.end()) {
    if (it->second.value != entry.value)
      throw CacheConflict("cache already holds " + entry.quantity + "(" + std::to_string(entry.n) +
                          ") = " + it->second.value.get_str() + ", refusing " + entry.value.get_str());
    return false;
  }
  entries_.emplace(key, entry);
  if (path_) {
    std::ofstream out(*path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to cache file " + path_->string());
    out << serialize(entry) << '\n';
  }
  return true;
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::string ResultCache::serialize(const CacheEntry& entry) {
  nlohmann::ordered_json j;
  j["quantity"] = entry.quantity;
  j["n"] = entry.n;
  j["value"] = entry.value.get_str();
  j["tool_version"] = entry.tool_version;
  j["mode"] = to_string(entry.mode);
  return j.dump();
}

CacheEntry ResultCache::deserialize(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("not a JSON object");
  try {
    CacheEntry entry;
    entry.quantity = j.at("quantity").get<std::string>();
    entry.n = j.at("n").get<std::uint32_t>();
    const auto value = j.at("value").get<std::string>();
    if (value.empty() || entry.value.set_str(value, 10) != 0) throw std::invalid_argument("bad value '" + value + "'");
    entry.tool_version = j.value("tool_version", "");
    const auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!mode) throw std::invalid_argument("bad mode");
    entry.mode = *mode;
    if (entry.quantity.empty()) throw std::invalid_argument("empty quantity");
    return entry;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace partpoly::cli
