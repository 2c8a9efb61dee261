#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partpoly/numeric.hpp"

namespace partpoly {

/// A part value together with its multiplicity.
struct PartCount {
  std::uint32_t part = 0;
  std::uint32_t mult = 0;

  friend bool operator==(const PartCount&, const PartCount&) = default;
};

/// Sparse multiset of parts, strictly increasing by part, no zero multiplicities.
using PartMultiset = std::vector<PartCount>;

/// Sum of part * multiplicity.
std::uint64_t multiset_sum(std::span<const PartCount> parts) noexcept;

/// The distinct parts of a partition, strictly increasing.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::uint32_t> elements);

  std::span<const std::uint32_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::uint32_t part) const noexcept;
  /// Position of `part` in the element list, or size() when absent.
  std::size_t index_of(std::uint32_t part) const noexcept;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<std::uint32_t> elements_;
};

/// A partition of n, i.e. the integer point x with x_i = multiplicity of part i.
///
/// Stored sparsely as (part, multiplicity) pairs; the dense coordinate vector
/// is only materialized on request. Ordering is lexicographic on the
/// nondecreasing list of parts, which is also the enumeration order.
class Partition {
 public:
  /// Throws std::invalid_argument unless `parts` is canonical and sums to n.
  Partition(std::uint32_t n, PartMultiset parts);

  /// Builds from an unordered list of positive parts; n is their sum.
  static Partition from_parts(std::span<const std::uint32_t> parts);
  /// Builds from dense coordinates: x[i] is the multiplicity of part i + 1.
  static Partition from_dense(std::span<const std::uint32_t> x);
  /// Parses "3+3+4+5" or the compact "3^2+4+5".
  static Partition parse(std::string_view text);

  std::uint32_t n() const noexcept { return n_; }
  std::span<const PartCount> parts() const noexcept { return parts_; }
  const PartMultiset& multiset() const noexcept { return parts_; }

  std::uint32_t multiplicity(std::uint32_t part) const noexcept;
  /// Total number of parts counted with multiplicity.
  std::uint32_t part_count() const noexcept;
  std::size_t distinct_count() const noexcept { return parts_.size(); }
  std::uint32_t largest_part() const noexcept { return parts_.back().part; }

  SupportSet support() const;
  /// Dense coordinates of length n.
  std::vector<std::uint32_t> dense() const;
  std::vector<std::uint32_t> ascending_parts() const;
  /// Multiplicities of the elements of `s`, in order. Parts outside `s` are dropped.
  std::vector<std::int64_t> project(const SupportSet& s) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::uint32_t n_ = 0;
  PartMultiset parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// p(n) via Euler's pentagonal-number recurrence. Memoized and thread-safe.
BigInt partition_count(std::uint32_t n);

/// Number of partitions of n with every part at most max_part.
BigInt partition_count_bounded(std::uint32_t n, std::uint32_t max_part);

/// Table t[m][k] = number of partitions of m with all parts <= k, 0 <= m, k <= n.
std::vector<std::vector<BigInt>> partition_count_table(std::uint32_t n);

/// Lazily enumerates every partition of n, in lexicographic order of the
/// nondecreasing part lists: 1^n first, (n) last.
class PartitionRange {
 public:
  explicit PartitionRange(std::uint32_t n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(std::uint32_t n);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

   private:
    void rebuild();

    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> ascending_;
    Partition current_{1, {{1, 1}}};
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  std::uint32_t n_;
};

/// Requires n >= 1.
PartitionRange enumerate_partitions(std::uint32_t n);

/// Visits the nondecreasing part list of every partition of n in the same
/// order as enumerate_partitions, without building Partition objects.
void for_each_ascending_partition(std::uint32_t n,
                                  const std::function<void(std::span<const std::uint32_t>)>& visit);

/// All partitions of n whose distinct parts lie in `support`, sorted.
std::vector<Partition> enumerate_with_support(std::uint32_t n, const SupportSet& support);

/// As above, with multiplicity of support[i] capped at caps[i].
std::vector<Partition> enumerate_with_support(std::uint32_t n, const SupportSet& support,
                                              std::span<const std::uint32_t> caps);

/// True iff the part multiset of y is contained in that of x (multiplicities
/// respected). Requires x.n() >= y.n().
bool is_extension(const Partition& x, const Partition& y);

/// Multiset containment on sparse part lists.
bool multiset_contains(std::span<const PartCount> outer, std::span<const PartCount> inner) noexcept;

}  // namespace partpoly
