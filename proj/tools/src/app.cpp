#include "partpoly/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "partpoly/cli/bfile.hpp"
#include "partpoly/cli/cache.hpp"
#include "partpoly/cli/engine.hpp"
#include "partpoly/cli/table.hpp"
#include "partpoly/corner.hpp"
#include "partpoly/metropolis.hpp"
#include "partpoly/strat.hpp"
#include "partpoly/sum_structure.hpp"
#include "partpoly/version.hpp"

namespace partpoly::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string cache_path;
  bool no_cache = false;
  unsigned threads = 1;
  bool quiet = false;
};

struct Context {
  Options options;
  Engine* engine = nullptr;
  std::ostream* err = nullptr;
  int status = kOk;
};

Cell cell(const std::optional<BigInt>& v) { return v ? Cell{*v} : Cell{}; }
Cell cell(const std::optional<bool>& v) { return v ? Cell{*v} : Cell{}; }
Cell cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }
Cell cell(std::uint64_t v) { return BigInt(std::to_string(v)); }

Json json_counts(const std::map<unsigned, BigInt>& counts) {
  Json obj = Json::object();
  for (const auto& [xi, c] : counts) obj[std::to_string(xi)] = to_json(c);
  return obj;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string group_multiset(const GroupPoint& t) {
  std::string out;
  for (std::uint32_t g = 1; g < t.q; ++g) {
    const auto c = t.at(g);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(g);
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out.empty() ? "0" : out;
}

std::string describe(const XiClass& c) {
  switch (c.kind) {
    case XiClass::Kind::Vertex: return "vertex";
    case XiClass::Kind::Xi: return "xi";
    case XiClass::Kind::AtLeast: return "at_least";
  }
  return {};
}

// Subcommand bodies. Each fills a Document.

Document cmd_count(Context& ctx, std::uint32_t n, std::optional<std::uint32_t> max_part) {
  Document doc{"count-partitions", {}, Json::object()};
  if (max_part) {
    doc.table.columns = {"n", "max_part", "p"};
    doc.table.add({BigInt(n), BigInt(*max_part), partition_count_bounded(n, *max_part)});
  } else {
    doc.table.columns = {"n", "p"};
    doc.table.add({BigInt(n), ctx.engine->p(n)});
  }
  return doc;
}

Document cmd_vertices(Context& ctx, std::uint32_t n, bool full, bool exact) {
  Document doc{"vertices", {}, Json::object()};
  if (!full) {
    doc.table.columns = {"n", "mode", "p", "v", "k"};
    doc.table.add({BigInt(n), std::string("vertex-only"), ctx.engine->p(n), ctx.engine->v(n), ctx.engine->k(n)});
    return doc;
  }
  const auto record = ctx.engine->census(n, exact);
  doc.table.columns = {"n", "mode", "p", "v", "k", "c_xi", "at_least"};
  doc.table.add({BigInt(n), std::string("full"), record.p, record.v, record.k_knapsack, json_counts(record.c_xi),
                 json_counts(record.at_least)});
  return doc;
}

Document cmd_knapsack(Context& ctx, std::uint32_t n, bool list) {
  Document doc{"knapsack", {}, Json::object()};
  if (!list) {
    doc.table.columns = {"n", "k"};
    doc.table.add({BigInt(n), ctx.engine->k(n)});
    return doc;
  }
  doc.table.columns = {"n", "partition"};
  enumerate_knapsack(n, [&](const Partition& x) { doc.table.add({BigInt(n), x.to_string()}); });
  doc.extra["count"] = doc.table.rows.size();
  return doc;
}

Document cmd_metropolis(Context& ctx, std::uint32_t n, std::uint32_t r, bool enumerative) {
  if (r < 2 || n % r != 0)
    throw UsageError("metropolis needs r >= 2 dividing n (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  Document doc{"metropolis", {}, Json::object()};
  doc.table.columns = {"n", "r", "m"};
  doc.table.add({BigInt(n), BigInt(r), enumerative ? metropolis_count_enumerative(n, r) : ctx.engine->m(n, r)});
  return doc;
}

Document cmd_bound(Context& ctx, std::uint32_t n) {
  if (n < 2) throw UsageError("bound needs n >= 2");
  Document doc{"bound", {}, Json::object()};
  const std::uint32_t even = n % 2 == 0 ? n : n - 1;
  doc.table.columns = {"n", "p", "m2_of", "m2", "b"};
  doc.table.add({BigInt(n), ctx.engine->p(n), BigInt(even), ctx.engine->m(even, 2), ctx.engine->b(n)});
  return doc;
}

Document cmd_corner(Context& ctx, std::uint32_t q, std::optional<std::uint32_t> g0_opt, bool list) {
  if (q < 2 || q > 64) throw UsageError("corner needs 2 <= q <= 64");
  const std::uint32_t g0 = g0_opt.value_or(q - 1);
  if (g0 < 1 || g0 >= q) throw UsageError("corner needs 1 <= g0 <= q - 1");
  Document doc{"corner", {}, Json::object()};
  if (!list) {
    const auto minimal = minimal_solutions(q, g0);
    doc.table.columns = {"q", "g0", "minimal", "vertices"};
    doc.table.add({BigInt(q), BigInt(g0), cell(std::uint64_t{minimal.size()}), ctx.engine->corner(q, g0)});
    return doc;
  }
  doc.table.columns = {"q", "g0", "solution", "vertex"};
  const auto minimal = minimal_solutions(q, g0);
  for (const auto& t : minimal) doc.table.add({BigInt(q), BigInt(g0), group_multiset(t), is_corner_vertex(t, minimal)});
  return doc;
}

Document cmd_classify(std::uint32_t n, bool relax) {
  if (n < 2) throw UsageError("classify needs n >= 2");
  const auto c = classify_n(n, relax);
  Document doc{"classify", {}, Json::object()};
  doc.table.columns = {"n", "k", "p"};
  doc.table.add({BigInt(n), c.k ? Cell{BigInt(*c.k)} : Cell{}, c.p ? Cell{BigInt(*c.p)} : Cell{}});
  return doc;
}

Document cmd_xi(const std::string& text, bool exact) {
  const auto x = Partition::parse(text);
  const auto c = xi_index(x, exact);
  Document doc{"xi", {}, Json::object()};
  doc.table.columns = {"partition", "n", "class", "xi", "witness"};
  Json witness = nullptr;
  if (c.witness) {
    witness = Json::array();
    for (std::size_t i = 0; i < c.witness->size(); ++i)
      witness.push_back(Json{{"coefficient", c.witness->coefficients[i].get_str()},
                             {"partition", c.witness->generators[i].to_string()}});
  }
  doc.table.add({x.to_string(), BigInt(x.n()), describe(c), BigInt(c.k), witness});
  return doc;
}

Document cmd_series(Context& ctx, std::uint32_t from, std::uint32_t to, const std::string& quantities) {
  if (from < 1 || to < from) throw UsageError("series needs 1 <= from <= to");
  static const std::set<std::string> known{"v", "k", "ratio", "b", "parity", "peaks", "corner"};
  auto wanted = split_list(quantities);
  for (const auto& q : wanted)
    if (!known.count(q)) throw UsageError("unknown series quantity '" + q + "'");
  auto has = [&](const char* q) { return std::find(wanted.begin(), wanted.end(), q) != wanted.end(); };
  const bool need_v = has("v") || has("ratio") || has("parity") || has("peaks");
  const bool need_k = has("k") || has("ratio");

  SeriesData data;
  // Neighbours two steps out on each side feed the peak and ratio flags.
  const std::uint32_t lo = from > 2 ? from - 2 : 1, hi = to + 2;
  for (std::uint32_t n = lo; n <= hi; ++n) {
    if (need_v) data.v[n] = ctx.engine->v(n);
    if (need_k) data.k[n] = ctx.engine->k(n);
  }
  for (std::uint32_t n = std::max<std::uint32_t>(from, 2); n <= to; ++n) {
    if (has("b")) data.b[n] = ctx.engine->b(n);
    if (has("corner") && n + 1 <= 64) data.corner[n] = ctx.engine->corner(n + 1, n);
  }
  const auto rows = series_report(from, to, data);

  Document doc{"series", {}, Json::object()};
  auto& cols = doc.table.columns;
  cols.push_back("n");
  if (has("v")) cols.push_back("v");
  if (has("k")) cols.push_back("k");
  if (has("ratio")) cols.insert(cols.end(), {"ratio", "ratio_local_min"});
  if (has("b")) cols.push_back("b");
  if (has("parity")) cols.insert(cols.end(), {"parity", "odd_above_next_even"});
  if (has("peaks")) cols.insert(cols.end(), {"nk_k", "nk_p", "peak"});
  if (has("corner")) cols.push_back("corner");
  for (const auto& r : rows) {
    std::vector<Cell> out{BigInt(r.n)};
    if (has("v")) out.push_back(cell(r.v));
    if (has("k")) out.push_back(cell(r.k));
    if (has("ratio")) {
      out.push_back(cell(r.ratio));
      out.push_back(cell(r.ratio_local_min));
    }
    if (has("b")) out.push_back(cell(r.b));
    if (has("parity")) {
      out.push_back(std::string(r.odd ? "odd" : "even"));
      out.push_back(cell(r.odd_above_next_even));
    }
    if (has("peaks")) {
      out.push_back(r.nk.k ? Cell{BigInt(*r.nk.k)} : Cell{});
      out.push_back(r.nk.p ? Cell{BigInt(*r.nk.p)} : Cell{});
      out.push_back(cell(r.peak));
    }
    if (has("corner")) out.push_back(cell(r.corner));
    doc.table.add(std::move(out));
  }
  doc.extra["range"] = {from, to};
  return doc;
}

Document cmd_fit(Context& ctx, const std::string& layers, std::uint32_t from, std::uint32_t to, double at,
                 bool relax, const std::string& method_name) {
  if (from < 2 || to < from) throw UsageError("fit needs 2 <= from <= to");
  const auto method = parse_fit_method(method_name);
  if (!method) throw UsageError("unknown fit method '" + method_name + "' (expected log-linear or values)");
  std::vector<std::uint32_t> ks;
  for (const auto& item : split_list(layers)) {
    try {
      const auto k = std::stoul(item);
      if (k == 0) throw std::invalid_argument("zero");
      ks.push_back(static_cast<std::uint32_t>(k));
    } catch (const std::exception&) {
      throw UsageError("bad layer '" + item + "'");
    }
  }
  if (ks.empty()) throw UsageError("fit needs at least one layer");
  std::map<std::uint32_t, BigInt> v;
  for (std::uint32_t n = from; n <= to; ++n) v[n] = ctx.engine->v(n);

  Document doc{"fit", {}, Json::object()};
  doc.table.columns = {"k", "status", "points", "A", "B", "residual", "at", "fitted"};
  for (auto k : ks) {
    const auto points = layer_points(v, k, relax);
    if (points.size() < 2) {
      doc.table.add({BigInt(k), std::string("insufficient data"), cell(std::uint64_t{points.size()}), {}, {}, {}, at, {}});
      continue;
    }
    const auto fit = fit_layer(points, k, *method);
    doc.table.add({BigInt(k), std::string("ok"), cell(std::uint64_t{points.size()}), fit.A, fit.B, fit.residual, at,
                   fit.evaluate(at)});
  }
  doc.extra["range"] = {from, to};
  doc.extra["relax"] = relax;
  doc.extra["method"] = to_string(*method);
  return doc;
}

std::uint32_t default_check_limit(Sequence s) {
  switch (s) {
    case Sequence::A203898: return 40;
    case Sequence::A002219: return 60;
    case Sequence::A108917: return 60;
    case Sequence::A300795: return 12;
  }
  return 0;
}

Document cmd_check(Context& ctx, const std::string& path, const std::string& quantity, std::optional<std::uint32_t> from,
                   std::optional<std::uint32_t> to) {
  const auto seq = sequence_for_quantity(quantity);
  if (!seq) throw UsageError("unknown check quantity '" + quantity + "' (expected v, k, m2 or corner)");
  BFile bfile;
  try {
    bfile = load_bfile(path);
  } catch (const BFileError& e) {
    throw UsageError(e.what());
  }
  if (!bfile.sequence_id.empty() && parse_sequence(bfile.sequence_id) && *parse_sequence(bfile.sequence_id) != *seq)
    *ctx.err << "warning: " << path << " looks like " << bfile.sequence_id << ", checking as " << to_string(*seq) << "\n";
  if (bfile.sequence_id.empty()) bfile.sequence_id = to_string(*seq);

  const std::int64_t lo = from.value_or(1), hi = to.value_or(default_check_limit(*seq));
  std::vector<std::pair<std::int64_t, BigInt>> computed;
  for (const auto& row : bfile.rows) {
    if (row.index < lo || row.index > hi) continue;
    const auto i = static_cast<std::uint32_t>(row.index);
    switch (*seq) {
      case Sequence::A203898: computed.emplace_back(i, ctx.engine->v(i)); break;
      case Sequence::A108917: computed.emplace_back(i, ctx.engine->k(i)); break;
      case Sequence::A002219: computed.emplace_back(i, ctx.engine->m(2 * i, 2)); break;
      case Sequence::A300795:
        if (i + 1 > 64) continue;
        computed.emplace_back(i, ctx.engine->corner(i + 1, i));
        break;
    }
  }
  const auto report = diff_against_bfile(bfile, computed);

  Document doc{"check", {}, Json::object()};
  doc.table.columns = {"index", "status", "expected", "computed"};
  for (const auto& r : report.rows) doc.table.add({BigInt(r.index), to_string(r.status), cell(r.expected), cell(r.computed)});
  doc.extra["sequence"] = report.sequence_id;
  doc.extra["quantity"] = quantity;
  doc.extra["summary"] = {{"equal", report.equal}, {"mismatch", report.mismatched}, {"missing", report.missing}};
  if (report.overlap_empty()) ctx.status = kEmptyOverlap;
  else if (report.mismatched > 0) ctx.status = kMismatch;
  return doc;
}

void emit_error(std::ostream& out, int code, const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = {{"code", code}, {"kind", kind}, {"message", message}};
  out << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition polytope census tool", "partpoly"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  auto& o = ctx.options;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", o.cache_path, "JSON-lines result cache file");
  app.add_flag("--no-cache", o.no_cache, "Ignore the result cache");
  app.add_option("--threads", o.threads, "Worker threads, 0 for all cores");
  app.add_flag("-q,--quiet", o.quiet, "Suppress progress messages");

  std::uint32_t n = 0, r = 2, q = 0;
  std::optional<std::uint32_t> max_part, g0, from_opt, to_opt;
  std::string fit_method;
  bool flag_census = false, flag_exact = false, flag_list = false, flag_relax = false, flag_enum = false;
  std::string partition_text, quantities = "v,k,ratio,parity,peaks", layers = "1,2,3", bfile_path, check_quantity;
  std::uint32_t from = 1, to = 30;
  double at = 65;

  std::function<Document()> action;

  auto* count = app.add_subcommand("count-partitions", "p(n), optionally with bounded part size");
  count->add_option("n", n)->required()->check(CLI::Range(1u, 100000u));
  count->add_option("--max-part", max_part);
  count->callback([&] { action = [&] { return cmd_count(ctx, n, max_part); }; });

  auto* vertices = app.add_subcommand("vertices", "Vertex count v(n), or the full xi census");
  vertices->add_option("n", n)->required()->check(CLI::Range(1u, 200u));
  vertices->add_flag("--census", flag_census, "Classify every partition by xi");
  vertices->add_flag("--exact-xi", flag_exact, "Resolve xi >= 4 exactly");
  vertices->callback([&] {
    if (flag_exact && !flag_census) throw CLI::ValidationError("--exact-xi", "requires --census");
    action = [&] { return cmd_vertices(ctx, n, flag_census, flag_exact); };
  });

  auto* knap = app.add_subcommand("knapsack", "Knapsack partitions k(n)");
  knap->add_option("n", n)->required()->check(CLI::Range(1u, 200u));
  knap->add_flag("--list", flag_list, "List the partitions");
  knap->callback([&] { action = [&] { return cmd_knapsack(ctx, n, flag_list); }; });

  auto* metro = app.add_subcommand("metropolis", "Metropolis r-partition count m_r(n)");
  metro->add_option("n", n)->required()->check(CLI::Range(1u, 1000u));
  metro->add_option("-r", r, "Number of blocks")->required();
  metro->add_flag("--enumerative", flag_enum, "Test every partition instead of the prefix search (any r)");
  metro->callback([&] { action = [&] { return cmd_metropolis(ctx, n, r, flag_enum); }; });

  auto* bound = app.add_subcommand("bound", "Upper bound b(n) on v(n)");
  bound->add_option("n", n)->required()->check(CLI::Range(1u, 1000u));
  bound->callback([&] { action = [&] { return cmd_bound(ctx, n); }; });

  auto* corner = app.add_subcommand("corner", "Vertices of the corner polyhedron on Z_q");
  corner->add_option("q", q)->required();
  corner->add_option("--g0", g0, "Right-hand side, default q - 1");
  corner->add_flag("--list", flag_list, "List minimal solutions with their vertex flag");
  corner->callback([&] { action = [&] { return cmd_corner(ctx, q, g0, flag_list); }; });

  auto* classify = app.add_subcommand("classify", "N_k class of n");
  classify->add_option("n", n)->required();
  classify->add_flag("--relax", flag_relax, "Put every n = 7p, p prime, in layer 7");
  classify->callback([&] { action = [&] { return cmd_classify(n, flag_relax); }; });

  auto* xi = app.add_subcommand("xi", "Classify one partition, e.g. 3^2+4+5");
  xi->add_option("partition", partition_text)->required();
  xi->add_flag("--exact", flag_exact, "Resolve xi >= 4 exactly");
  xi->callback([&] { action = [&] { return cmd_xi(partition_text, flag_exact); }; });

  auto* series = app.add_subcommand("series", "Per-n data series");
  series->add_option("--from", from)->required();
  series->add_option("--to", to)->required();
  series->add_option("--quantities", quantities, "Comma list of v,k,ratio,b,parity,peaks,corner");
  series->callback([&] { action = [&] { return cmd_series(ctx, from, to, quantities); }; });

  auto* fit = app.add_subcommand("fit", "Fit A e^{B sqrt(n)} to the N_k layers of v");
  fit->add_option("--layers", layers, "Comma list of k");
  fit->add_option("--from", from, "First n")->default_val(2);
  fit->add_option("--to", to, "Last n")->default_val(30);
  fit->add_option("--at", at, "Evaluate the fits at this n")->default_val(65);
  fit->add_flag("--relax", flag_relax, "Put every n = 7p, p prime, in layer 7");
  fit->add_option("--method", fit_method, "log-linear (least squares on ln v) or values (least squares on v)")
      ->default_val("log-linear");
  fit->callback([&] { action = [&] { return cmd_fit(ctx, layers, from, to, at, flag_relax, fit_method); }; });

  auto* check = app.add_subcommand("check", "Compare computed values with an OEIS b-file");
  check->add_option("--bfile", bfile_path)->required();
  check->add_option("--quantity", check_quantity, "v, k, m2 or corner")->required();
  check->add_option("--from", from_opt, "First b-file index");
  check->add_option("--to", to_opt, "Last b-file index");
  check->callback([&] { action = [&] { return cmd_check(ctx, bfile_path, check_quantity, from_opt, to_opt); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, kUsage, "usage", e.what());
    return kUsage;
  }

  std::unique_ptr<ResultCache> cache;
  try {
    if (!o.no_cache) {
      if (o.cache_path.empty())
        if (const char* env = std::getenv("PARTPOLY_CACHE")) o.cache_path = env;
      cache = o.cache_path.empty() ? nullptr : std::make_unique<ResultCache>(o.cache_path);
      if (cache)
        for (const auto& w : cache->warnings()) err << "warning: " << w << "\n";
    }
  } catch (const std::exception& e) {
    emit_error(out, kUsage, "cache", e.what());
    return kUsage;
  }

  Engine engine(cache.get(), o.threads, o.quiet ? Engine::Progress{} : [&err](const std::string& m) {
    err << m << "\n";
  });
  ctx.engine = &engine;
  ctx.err = &err;

  try {
    const auto doc = action();
    out << (o.format == "csv" ? emit_csv(doc) : emit_json(doc));
    return ctx.status;
  } catch (const UsageError& e) {
    emit_error(out, kUsage, "usage", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    emit_error(out, kUsage, "invalid-argument", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    emit_error(out, kComputation, "computation", e.what());
    return kComputation;
  }
}

}  // namespace partpoly::cli
