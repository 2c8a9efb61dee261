#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace partpoly::detail {

// Fixed-width bitset over sums [0, nbits). Shifts truncate at the top.
class SumSet {
 public:
  SumSet() = default;
  explicit SumSet(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t bits() const noexcept { return nbits_; }

  void set(std::size_t i) noexcept {
    if (i < nbits_) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool test(std::size_t i) const noexcept {
    return i < nbits_ && ((words_[i / 64] >> (i % 64)) & 1u);
  }
  void assign(const SumSet& other) noexcept { std::copy(other.words_.begin(), other.words_.end(), words_.begin()); }

  // this ∩ (other << shift) is nonempty
  bool intersects_shifted(const SumSet& other, std::size_t shift) const noexcept {
    const std::size_t ws = shift / 64, bs = shift % 64;
    for (std::size_t i = ws; i < words_.size(); ++i) {
      std::uint64_t w = other.words_[i - ws] << bs;
      if (bs != 0 && i > ws) w |= other.words_[i - ws - 1] >> (64 - bs);
      if (words_[i] & w) return true;
    }
    return false;
  }

  // this |= other << shift. Safe when &other == this.
  void or_shifted(const SumSet& other, std::size_t shift) noexcept {
    const std::size_t ws = shift / 64, bs = shift % 64;
    for (std::size_t i = words_.size(); i-- > ws;) {
      std::uint64_t w = other.words_[i - ws] << bs;
      if (bs != 0 && i > ws) w |= other.words_[i - ws - 1] >> (64 - bs);
      words_[i] |= w;
    }
    trim();
  }

 private:
  void trim() noexcept {
    if (nbits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace partpoly::detail
