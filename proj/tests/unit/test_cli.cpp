#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "partpoly/cli/app.hpp"
#include "partpoly/cli/bfile.hpp"
#include "partpoly/cli/cache.hpp"
#include "partpoly/cli/engine.hpp"
#include "partpoly/cli/table.hpp"

using namespace partpoly;
using namespace partpoly::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "partpoly");
  std::ostringstream out, err;
  Outcome o;
  o.status = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("partpoly-test-" + std::to_string(testing::rng()()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("cache put and get") {
  ResultCache cache;
  CHECK_FALSE(cache.get("v", 30, Mode::VertexOnly));
  CHECK(cache.put({"v", 30, BigInt(342), "0.1.0", Mode::VertexOnly}));
  REQUIRE(cache.get("v", 30, Mode::VertexOnly));
  CHECK(*cache.get("v", 30, Mode::VertexOnly) == 342);
  CHECK_FALSE(cache.get("v", 30, Mode::Full));
  CHECK(cache.put({"v", 30, BigInt(342), "0.1.0", Mode::Full}));
  CHECK_FALSE(cache.put({"v", 30, BigInt(342), "0.1.0", Mode::Full}));
  CHECK_THROWS_AS(cache.put({"v", 30, BigInt(343), "0.1.0", Mode::Full}), CacheConflict);
  CHECK(cache.size() == 2);
}

TEST_CASE("cache file persistence and corrupt lines") {
  TempDir dir;
  const auto file = dir.path / "cache.jsonl";
  {
    ResultCache cache(file);
    cache.put({quantity::p(), 60, BigInt(966467), "0.1.0", Mode::Full});
    cache.put({quantity::m(2), 100, BigInt("188735609"), "0.1.0", Mode::Full});
  }
  {
    std::ofstream(file, std::ios::app) << "{not json\n"
                                       << "\n"
                                       << R"({"quantity":"k","n":5,"value":"x","tool_version":"","mode":"full"})" << "\n"
                                       << R"({"quantity":"k","n":5,"mode":"full"})" << "\n";
  }
  ResultCache reloaded(file);
  CHECK(reloaded.size() == 2);
  CHECK(reloaded.warnings().size() == 3);
  CHECK(*reloaded.get(quantity::p(), 60, Mode::Full) == 966467);
  CHECK(*reloaded.get(quantity::m(2), 100, Mode::Full) == 188735609);

  const CacheEntry e{quantity::corner(11, 10), 11, BigInt(55), "0.1.0", Mode::Full};
  const auto back = ResultCache::deserialize(ResultCache::serialize(e));
  CHECK(back.quantity == e.quantity);
  CHECK(back.n == e.n);
  CHECK(back.value == e.value);
  CHECK(back.mode == e.mode);
  CHECK(back.tool_version == e.tool_version);
}

TEST_CASE("b-file parsing") {
  const auto b = parse_bfile("# A test file\n\n1 1\n2\t\t2\n   3    3  # trailing\n10 123456789012345678901234567890\n", "A000001");
  REQUIRE(b.rows.size() == 4);
  CHECK(b.rows[3].value == BigInt("123456789012345678901234567890"));
  CHECK(*b.at(2) == 2);
  CHECK_FALSE(b.at(4));

  CHECK_THROWS_AS(parse_bfile("1 1\n1 2\n", "x"), BFileError);
  CHECK_THROWS_AS(parse_bfile("2 1\n1 2\n", "x"), BFileError);
  CHECK_THROWS_AS(parse_bfile("1\n", "x"), BFileError);
  CHECK_THROWS_AS(parse_bfile("1 2 3\n", "x"), BFileError);
  CHECK_THROWS_AS(parse_bfile("a 2\n", "x"), BFileError);
  CHECK(parse_bfile("0 -5\n", "x").rows[0].value == -5);

  TempDir dir;
  write(dir.path / "b203898.txt", "1 1\n");
  CHECK(load_bfile(dir.path / "b203898.txt").sequence_id == "A203898");
  CHECK_THROWS_AS(load_bfile(dir.path / "missing.txt"), BFileError);
}

TEST_CASE("diff against a b-file") {
  const auto b = parse_bfile("1 1\n2 2\n3 3\n", "A203898");
  auto report = diff_against_bfile(b, {{1, BigInt(1)}, {2, BigInt(2)}, {3, BigInt(4)}, {9, BigInt(9)}});
  CHECK(report.equal == 2);
  CHECK(report.mismatched == 1);
  CHECK(report.missing == 1);
  CHECK_FALSE(report.ok());
  CHECK(report.rows[2].status == RowStatus::Mismatch);
  CHECK(*report.rows[2].expected == 3);
  CHECK(*report.rows[2].computed == 4);

  report = diff_against_bfile(b, {{7, BigInt(1)}});
  CHECK(report.overlap_empty());
  CHECK_FALSE(report.ok());
}

TEST_CASE("emitted JSON and CSV re-parse to the same values") {
  auto& rng = testing::rng();
  for (int trial = 0; trial < 40; ++trial) {
    Document doc{"census", {}, Json::object()};
    doc.table.columns = {"n", "p", "v", "ratio", "odd", "label", "c_xi"};
    const int rows = 1 + static_cast<int>(rng() % 6);
    for (int r = 0; r < rows; ++r) {
      BigInt big(std::to_string(rng()));
      if (rng() % 3 == 0) big *= BigInt("100000000000000000000");
      Json counts = Json::object();
      for (unsigned xi = 2; xi < 2 + rng() % 3; ++xi) counts[std::to_string(xi)] = rng() % 1000;
      std::vector<Cell> row{BigInt(static_cast<long>(rng() % 200)),
                            big,
                            rng() % 4 == 0 ? Cell{} : Cell{BigInt(static_cast<long>(rng() % 100000))},
                            std::ldexp(static_cast<double>(rng() % 100000), -17),
                            rng() % 2 == 0,
                            std::string(rng() % 2 ? "a,\"b\"" : "plain"),
                            counts};
      doc.table.add(row);
    }

    const auto j = Json::parse(emit_json(doc));
    CHECK(j["command"] == "census");
    REQUIRE(j["rows"].size() == doc.table.rows.size());
    const auto csv = parse_csv(emit_csv(doc));
    REQUIRE(csv.size() == doc.table.rows.size() + 1);
    const auto& header = csv[0];
    auto column = [&](const std::string& name) {
      return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    };
    for (std::size_t r = 0; r < doc.table.rows.size(); ++r) {
      const auto& row = doc.table.rows[r];
      const auto& jr = j["rows"][r];
      const auto& cr = csv[r + 1];
      REQUIRE(cr.size() == header.size());
      for (std::size_t c = 0; c < 3; ++c) {
        const auto& name = doc.table.columns[c];
        if (const auto* v = std::get_if<BigInt>(&row[c])) {
          const auto& jv = jr[name];
          CHECK(BigInt(jv.is_string() ? jv.get<std::string>() : jv.dump()) == *v);
          CHECK(BigInt(cr[column(name)]) == *v);
        } else {
          CHECK(jr[name].is_null());
          CHECK(cr[column(name)].empty());
        }
      }
      const double ratio = std::get<double>(row[3]);
      CHECK(jr["ratio"].get<double>() == ratio);
      CHECK(std::stod(cr[column("ratio")]) == ratio);
      CHECK(jr["odd"].get<bool>() == std::get<bool>(row[4]));
      CHECK(cr[column("odd")] == (std::get<bool>(row[4]) ? "true" : "false"));
      CHECK(jr["label"] == std::get<std::string>(row[5]));
      CHECK(cr[column("label")] == std::get<std::string>(row[5]));
      for (const auto& [key, value] : std::get<Json>(row[6]).items()) {
        CHECK(jr["c_xi"][key] == value);
        CHECK(cr[column("c_xi." + key)] == value.dump());
      }
    }
  }
}

TEST_CASE("command line examples") {
  auto o = invoke({"bound", "77"});
  REQUIRE(o.status == kOk);
  CHECK(o.json()["rows"][0]["b"] == 1549719);

  o = invoke({"classify", "38"});
  REQUIRE(o.status == kOk);
  CHECK(o.json()["rows"][0]["k"] == 2);
  CHECK(o.json()["rows"][0]["p"] == 19);

  o = invoke({"vertices", "15", "--census", "-q"});
  REQUIRE(o.status == kOk);
  const auto census = o.json();
  const auto& row = census["rows"][0];
  CHECK(row["v"] == 57);
  CHECK(row["c_xi"]["2"].get<int>() > 0);
  CHECK(row["c_xi"]["3"].get<int>() >= 1);

  o = invoke({"--format", "csv", "count-partitions", "60"});
  REQUIRE(o.status == kOk);
  CHECK(o.out == "n,p\n60,966467\n");

  o = invoke({"metropolis", "60", "-r", "2", "--format", "csv"});
  CHECK(o.out == "n,r,m\n60,2,924522\n");

  o = invoke({"knapsack", "4", "--list", "--format", "csv"});
  CHECK(o.out == "n,partition\n4,1^4\n4,1+3\n4,2^2\n4,4\n");

  o = invoke({"corner", "11", "--format", "csv", "-q"});
  REQUIRE(o.status == kOk);
  CHECK(o.out.rfind("q,g0,minimal,vertices\n11,10,", 0) == 0);

  o = invoke({"xi", "7+8+9+12", "--exact"});
  REQUIRE(o.status == kOk);
  CHECK(o.json()["rows"][0]["class"] == "xi");
  CHECK(o.json()["rows"][0]["xi"] == 4);

  o = invoke({"series", "--from", "14", "--to", "16", "--quantities", "v,k,ratio", "-q"});
  REQUIRE(o.status == kOk);
  CHECK(o.json()["rows"].size() == 3);
  CHECK(o.json()["rows"][1]["v"] == 57);

  o = invoke({"fit", "--layers", "1,2,9", "--to", "40", "-q"});
  REQUIRE(o.status == kOk);
  const auto fits = o.json().at("rows");
  CHECK(fits[0]["fitted"].get<double>() > fits[1]["fitted"].get<double>());
  CHECK(fits[2]["status"] == "insufficient data");
  CHECK(o.json()["method"] == "log-linear");

  o = invoke({"fit", "--layers", "1", "--to", "40", "--method", "values", "-q"});
  REQUIRE(o.status == kOk);
  CHECK(o.json()["method"] == "values");
  CHECK(o.json()["rows"][0]["residual"].get<double>() >= fits[0]["residual"].get<double>());

  o = invoke({"fit", "--layers", "1", "--to", "20", "--method", "cubic", "-q"});
  CHECK(o.status == kUsage);
}

TEST_CASE("command line errors") {
  auto o = invoke({"vertices", "10", "--bogus"});
  CHECK(o.status == kUsage);
  CHECK(o.json()["error"]["code"] == kUsage);

  o = invoke({"metropolis", "15", "-r", "2"});
  CHECK(o.status == kUsage);
  CHECK(o.json()["error"].contains("message"));

  o = invoke({});
  CHECK(o.status == kUsage);

  o = invoke({"check", "--bfile", "/nonexistent/b203898.txt", "--quantity", "v"});
  CHECK(o.status == kUsage);

  o = invoke({"vertices", "10", "--exact-xi"});
  CHECK(o.status == kUsage);

  o = invoke({"--format", "xml", "classify", "10"});
  CHECK(o.status == kUsage);
}

TEST_CASE("check against b-files") {
  TempDir dir;
  // Reference values from the full-hull oracle.
  std::ostringstream good;
  good << "# vertex counts\n";
  for (int n = 1; n <= 12; ++n) {
    const auto all = oracle::partitions(n);
    int v = 0;
    for (const auto& d : all) v += oracle::is_vertex_full(d, all);
    good << n << " " << v << "\n";
  }
  write(dir.path / "b203898.txt", good.str());
  auto o = invoke({"check", "--bfile", (dir.path / "b203898.txt").string(), "--quantity", "v", "-q"});
  CHECK(o.status == kOk);
  CHECK(o.json()["summary"]["equal"] == 12);
  CHECK(o.json()["summary"]["mismatch"] == 0);

  auto corrupted = good.str();
  corrupted.replace(corrupted.find("\n5 6\n"), 5, "\n5 7\n");
  write(dir.path / "bad.txt", corrupted);
  o = invoke({"check", "--bfile", (dir.path / "bad.txt").string(), "--quantity", "v", "-q"});
  CHECK(o.status == kMismatch);
  bool seen = false;
  const auto doc = o.json();
  for (const auto& row : doc["rows"])
    if (row["index"] == 5) {
      seen = true;
      CHECK(row["status"] == "mismatch");
      CHECK(row["expected"] == 7);
      CHECK(row["computed"] == 6);
    }
  CHECK(seen);

  write(dir.path / "b108917.txt", "60 5341\n");
  o = invoke({"check", "--bfile", (dir.path / "b108917.txt").string(), "--quantity", "k", "-q"});
  CHECK(o.status == kOk);
  CHECK(o.json()["rows"][0]["status"] == "equal");

  write(dir.path / "far.txt", "500 1\n");
  o = invoke({"check", "--bfile", (dir.path / "far.txt").string(), "--quantity", "k", "-q"});
  CHECK(o.status == kEmptyOverlap);

  o = invoke({"check", "--bfile", (dir.path / "far.txt").string(), "--quantity", "q"});
  CHECK(o.status == kUsage);
}

TEST_CASE("cache coherence across recomputation") {
  TempDir dir;
  const auto file = dir.path / "cache.jsonl";
  auto collect = [&](Engine& e) {
    std::vector<std::string> values;
    for (std::uint32_t n = 1; n <= 25; ++n) {
      values.push_back(e.p(n).get_str());
      values.push_back(e.v(n).get_str());
      values.push_back(e.k(n).get_str());
      if (n % 2 == 0) values.push_back(e.m(n, 2).get_str());
      if (n % 3 == 0) values.push_back(e.m(n, 3).get_str());
      if (n >= 2) values.push_back(e.b(n).get_str());
      const auto c = e.census(n, false);
      values.push_back(c.v.get_str());
      for (const auto& [xi, count] : c.c_xi) values.push_back(std::to_string(xi) + ":" + count.get_str());
    }
    for (std::uint32_t q = 2; q <= 9; ++q) values.push_back(e.corner(q, q - 1).get_str());
    return values;
  };

  std::vector<std::string> cold, warm, fresh;
  {
    ResultCache cache(file);
    Engine e(&cache);
    cold = collect(e);
  }
  {
    ResultCache cache(file);
    CHECK(cache.size() > 100);
    CHECK(cache.warnings().empty());
    Engine e(&cache);
    warm = collect(e);
  }
  fs::remove(file);
  {
    Engine e;
    fresh = collect(e);
  }
  CHECK(cold == warm);
  CHECK(cold == fresh);

  // Both modes stored for v agree.
  ResultCache cache(file);
  Engine e(&cache);
  const auto vo = e.v(20);
  e.census(20, false);
  CHECK(*cache.get(quantity::v(), 20, Mode::Full) == vo);
}
