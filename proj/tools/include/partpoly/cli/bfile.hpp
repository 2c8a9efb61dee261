#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partpoly/numeric.hpp"

namespace partpoly::cli {

class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BFileRow {
  std::int64_t index = 0;
  BigInt value;
};

/// OEIS two-column "index value" listing. Indices strictly increase.
struct BFile {
  std::string sequence_id;
  std::vector<BFileRow> rows;

  std::optional<BigInt> at(std::int64_t index) const;
};

/// Accepts '#' comments, blank lines and any whitespace between columns.
BFile parse_bfile(std::istream& in, std::string sequence_id);
BFile parse_bfile(const std::string& text, std::string sequence_id);
/// The sequence id defaults to the one encoded in a name like b203898.txt.
BFile load_bfile(const std::filesystem::path& path, std::string sequence_id = {});

/// The quantities a b-file may be checked against, with their index maps.
enum class Sequence { A203898, A002219, A108917, A300795 };

std::optional<Sequence> parse_sequence(std::string_view id);
std::string to_string(Sequence s);
/// Quantity names accepted by `check --quantity`: v, m2, k, corner.
std::optional<Sequence> sequence_for_quantity(std::string_view quantity);

enum class RowStatus { Equal, Mismatch, Missing };

std::string to_string(RowStatus status);

struct DiffRow {
  std::int64_t index = 0;
  RowStatus status = RowStatus::Missing;
  std::optional<BigInt> expected;  ///< from the b-file
  std::optional<BigInt> computed;
};

struct DiffReport {
  std::string sequence_id;
  std::vector<DiffRow> rows;
  std::size_t equal = 0;
  std::size_t mismatched = 0;
  std::size_t missing = 0;

  bool overlap_empty() const noexcept { return equal + mismatched == 0; }
  bool ok() const noexcept { return mismatched == 0 && !overlap_empty(); }
};

/// Compares computed values, keyed by b-file index, against the file. Indices
/// computed but absent from the file are Missing.
DiffReport diff_against_bfile(const BFile& bfile, const std::vector<std::pair<std::int64_t, BigInt>>& computed);

}  // namespace partpoly::cli
