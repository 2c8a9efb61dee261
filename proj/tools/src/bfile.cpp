#include "partpoly/cli/bfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace partpoly::cli {

std::optional<BigInt> BFile::at(std::int64_t index) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), index,
                             [](const BFileRow& row, std::int64_t i) { return row.index < i; });
  if (it == rows.end() || it->index != index) return std::nullopt;
  return it->value;
}

namespace {

bool parse_integer(const std::string& token, BigInt& out) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' || token[0] == '+' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  return out.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
}

}  // namespace

BFile parse_bfile(std::istream& in, std::string sequence_id) {
  BFile file{std::move(sequence_id), {}};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    if (!(fields >> index_text)) continue;
    if (!(fields >> value_text) || (fields >> extra))
      throw BFileError("line " + std::to_string(number) + ": expected 'index value'");
    BigInt index, value;
    if (!parse_integer(index_text, index) || !index.fits_slong_p() || !parse_integer(value_text, value))
      throw BFileError("line " + std::to_string(number) + ": not an integer pair");
    const std::int64_t i = index.get_si();
    if (!file.rows.empty() && i <= file.rows.back().index)
      throw BFileError("line " + std::to_string(number) + ": index " + std::to_string(i) +
                       " does not increase");
    file.rows.push_back({i, std::move(value)});
  }
  return file;
}

BFile parse_bfile(const std::string& text, std::string sequence_id) {
  std::istringstream in(text);
  return parse_bfile(in, std::move(sequence_id));
}

BFile load_bfile(const std::filesystem::path& path, std::string sequence_id) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot read " + path.string());
  if (sequence_id.empty()) {
    static const std::regex pattern(R"(b(\d{6}).*)");
    std::smatch m;
    const auto stem = path.filename().string();
    if (std::regex_match(stem, m, pattern)) sequence_id = "A" + m[1].str();
  }
  return parse_bfile(in, std::move(sequence_id));
}

std::optional<Sequence> parse_sequence(std::string_view id) {
  if (id == "A203898") return Sequence::A203898;
  if (id == "A002219") return Sequence::A002219;
  if (id == "A108917") return Sequence::A108917;
  if (id == "A300795") return Sequence::A300795;
  return std::nullopt;
}

std::string to_string(Sequence s) {
  switch (s) {
    case Sequence::A203898: return "A203898";
    case Sequence::A002219: return "A002219";
    case Sequence::A108917: return "A108917";
    case Sequence::A300795: return "A300795";
  }
  return {};
}

std::optional<Sequence> sequence_for_quantity(std::string_view quantity) {
  if (quantity == "v") return Sequence::A203898;
  if (quantity == "m2") return Sequence::A002219;
  if (quantity == "k") return Sequence::A108917;
  if (quantity == "corner") return Sequence::A300795;
  return std::nullopt;
}

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Equal: return "equal";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::Missing: return "missing";
  }
  return {};
}

DiffReport diff_against_bfile(const BFile& bfile, const std::vector<std::pair<std::int64_t, BigInt>>& computed) {
  std::map<std::int64_t, BigInt> sorted(computed.begin(), computed.end());
  DiffReport report{bfile.sequence_id, {}, 0, 0, 0};
  for (const auto& [index, value] : sorted) {
    DiffRow row{index, RowStatus::Missing, bfile.at(index), value};
    if (!row.expected) {
      ++report.missing;
    } else if (*row.expected == value) {
      row.status = RowStatus::Equal;
      ++report.equal;
    } else {
      row.status = RowStatus::Mismatch;
      ++report.mismatched;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace partpoly::cli
