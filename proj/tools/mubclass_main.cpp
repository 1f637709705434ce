// mubclass — command-line front end for the MUB subset classification library.
//
// Every command emits {meta, result}: meta carries the run record (command,
// parameters, seed, threads, wall time, digest of the canonical result
// serialization), result the science.  CSV-mode output prefixes the table
// with '#' meta comment lines.  Exit codes: 0 ok, 2 precondition error,
// 3 resource-guard refusal, 1 anything else.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mubclass/bounds.hpp"
#include "mubclass/digest.hpp"
#include "mubclass/dimension.hpp"
#include "mubclass/entropy.hpp"
#include "mubclass/errors.hpp"
#include "mubclass/orbits.hpp"
#include "mubclass/prime_power.hpp"
#include "mubclass/serialize.hpp"
#include "mubclass/transform_table.hpp"
#include "mubclass/version.hpp"

namespace {

using nlohmann::json;
using clk = std::chrono::steady_clock;

struct GlobalOpts {
  int threads = 0;
  std::string cache_dir;
  bool no_cache = false;
  std::string out;
  std::string format;  // "", "json", "csv"
};

int resolved_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::optional<std::filesystem::path> resolve_cache_dir(const GlobalOpts& g) {
  if (g.no_cache) return std::nullopt;
  if (!g.cache_dir.empty()) return std::filesystem::path(g.cache_dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "mubclass";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "mubclass";
  return std::nullopt;
}

json make_meta(const std::string& command, json parameters, const GlobalOpts& g,
               double wall_ms, const std::string& result_payload) {
  json meta;
  meta["tool"] = "mubclass";
  meta["version"] = mubclass::kVersion;
  meta["schema"] = mubclass::kSchemaVersion;
  meta["command"] = command;
  meta["parameters"] = std::move(parameters);
  meta["threads"] = resolved_threads(g.threads);
  meta["wall_ms"] = mubclass::format_fixed6(wall_ms);
  meta["digest"] = "fnv1a64:" + mubclass::fnv1a64_hex(result_payload);
  return meta;
}

void write_payload(const GlobalOpts& g, const std::string& payload) {
  if (!g.out.empty()) {
    std::ofstream out(g.out);
    if (!out) throw std::runtime_error("cannot open output file: " + g.out);
    out << payload;
    return;
  }
  std::cout << payload;
}

// JSON-mode envelope: digest covers the canonical result string alone, so
// runs differing only in wall time agree on the digest.
void emit_json(const GlobalOpts& g, const std::string& command, json parameters,
               double wall_ms, const std::string& result_canonical,
               json meta_extra = json::object()) {
  json envelope;
  envelope["meta"] = make_meta(command, std::move(parameters), g, wall_ms,
                               result_canonical);
  for (auto& [k, v] : meta_extra.items()) envelope["meta"][k] = v;
  envelope["result"] = json::parse(result_canonical);
  write_payload(g, envelope.dump(2) + "\n");
}

void emit_csv(const GlobalOpts& g, const std::string& command, json parameters,
              double wall_ms, const std::string& csv_body) {
  json meta = make_meta(command, std::move(parameters), g, wall_ms, csv_body);
  std::ostringstream out;
  out << "# tool=mubclass version=" << mubclass::kVersion
      << " schema=" << mubclass::kSchemaVersion << "\n";
  out << "# command=" << command << "\n";
  out << "# parameters=" << meta["parameters"].dump() << "\n";
  out << "# wall_ms=" << meta["wall_ms"].get<std::string>() << "\n";
  out << "# digest=" << meta["digest"].get<std::string>() << "\n";
  out << csv_body;
  write_payload(g, out.str());
}

mubclass::Dimension parse_dim(int d, int p, int n) {
  if (d > 0 && (p > 0 || n > 0))
    throw std::invalid_argument("give either --d or --p/--n, not both");
  if (d > 0) return mubclass::Dimension::parse(d);
  if (p > 0 && n > 0) return mubclass::Dimension::prime_power(p, n);
  throw std::invalid_argument("a dimension is required: --d or --p with --n");
}

mubclass::MubFamily family_for(const mubclass::Dimension& dim) {
  return dim.n == 1 ? mubclass::build_prime_mubs(dim.d)
                    : mubclass::build_prime_power_mubs(dim.p, dim.n);
}

// The finite transformation table for a dimension: closed-form for odd
// primes, numeric with discovered permutation generators for prime powers.
mubclass::TransformTable table_for(const mubclass::Dimension& dim,
                                   const GlobalOpts& g, bool* from_cache) {
  if (dim.n == 1) {
    if (from_cache) *from_cache = false;
    return mubclass::build_table_analytic(dim.d);
  }
  auto fam = family_for(dim);
  mubclass::PermDiscoveryConfig cfg;
  cfg.threads = g.threads;
  cfg.cache_dir = resolve_cache_dir(g);
  auto perms = mubclass::discover_permutations(fam, cfg);
  if (from_cache) *from_cache = perms.from_cache;
  return mubclass::build_extended_table(fam, perms);
}

std::vector<mubclass::SubsetCode> parse_subsets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open subsets file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("subsets file is not valid JSON: " +
                                std::string(e.what()));
  }
  const json* classes = nullptr;
  std::vector<std::vector<int>> lists;
  if (j.is_array()) {
    for (const auto& s : j) lists.push_back(s.get<std::vector<int>>());
  } else if (j.is_object()) {
    if (j.contains("result") && j["result"].is_object() &&
        j["result"].contains("classes"))
      classes = &j["result"]["classes"];
    else if (j.contains("classes"))
      classes = &j["classes"];
    if (!classes)
      throw std::invalid_argument(
          "subsets file must be an array of subsets or a classify result");
    for (const auto& c : *classes)
      lists.push_back(c.at("representative").get<std::vector<int>>());
  } else {
    throw std::invalid_argument(
        "subsets file must be an array of subsets or a classify result");
  }
  std::vector<mubclass::SubsetCode> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.push_back(mubclass::SubsetCode::from_indices(l));
  return out;
}

int cmd_table(const GlobalOpts& g, int d, int p, int n) {
  auto dim = parse_dim(d, p, n);
  auto t0 = clk::now();
  bool cached = false;
  auto table = table_for(dim, g, &cached);
  double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  json params{{"d", dim.d}, {"p", dim.p}, {"n", dim.n}};
  json extra;
  if (dim.n > 1) extra["from_cache"] = cached;
  if (g.format == "csv")
    emit_csv(g, "table", params, wall, mubclass::to_csv_string(table));
  else
    emit_json(g, "table", params, wall, mubclass::to_json_string(table), extra);
  return 0;
}

int cmd_classify(const GlobalOpts& g, int d, int p, int n, int k, bool members,
                 bool force_bfs) {
  if (g.format == "csv")
    throw std::invalid_argument("csv format is not available for classify");
  auto dim = parse_dim(d, p, n);
  auto t0 = clk::now();
  bool cached = false;
  auto table = table_for(dim, g, &cached);
  mubclass::ClassifyConfig cfg;
  cfg.store_members = members;
  cfg.force_bfs = force_bfs;
  auto part = mubclass::classify_all(dim.d, k, table, cfg);
  double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  json params{{"d", dim.d}, {"p", dim.p},       {"n", dim.n},
              {"k", k},     {"members", members}, {"force_bfs", force_bfs}};
  json extra;
  if (dim.n > 1) extra["from_cache"] = cached;
  emit_json(g, "classify", params, wall, mubclass::to_json_string(part), extra);
  return 0;
}

int cmd_bound(const GlobalOpts& g, int d, int k) {
  if (g.format == "csv")
    throw std::invalid_argument("csv format is not available for bound");
  auto t0 = clk::now();
  auto bound = mubclass::theorem1_bound(d, k);
  double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  json result{{"d", d}, {"k", k}, {"bound", bound}};
  emit_json(g, "bound", json{{"d", d}, {"k", k}}, wall, result.dump());
  return 0;
}

int cmd_complexity(const GlobalOpts& g, int d, int k, int dmin, int dmax,
                   const std::string& s_list) {
  std::vector<int> depths;
  {
    std::istringstream ss(s_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      depths.push_back(std::stoi(tok));
    }
  }
  if (depths.empty()) throw std::invalid_argument("at least one sampling depth is required");

  if (d > 0) {
    // single-point estimate
    if (k <= 0) throw std::invalid_argument("--k is required with --d");
    if (depths.size() != 1)
      throw std::invalid_argument("a single --s value is required with --d/--k");
    auto t0 = clk::now();
    auto est = mubclass::complexity_estimates(d, k, depths[0]);
    double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    json params{{"d", d}, {"k", k}, {"s", depths[0]}};
    emit_json(g, "complexity", params, wall, mubclass::to_json_string(est));
    return 0;
  }

  std::vector<int> dims;
  for (int q = dmin; q <= dmax; ++q)
    if (mubclass::is_prime(q) && q % 2 == 1) dims.push_back(q);
  if (dims.empty()) throw std::invalid_argument("no odd primes in the requested range");
  auto t0 = clk::now();
  auto rows = mubclass::emit_complexity_curves(dims, depths);
  double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  json params{{"dmin", dmin}, {"dmax", dmax}, {"s", depths}};
  if (g.format == "json") {
    json result;
    result["rows"] = json::array();
    for (const auto& r : rows)
      result["rows"].push_back(json{{"d", r.d},
                                    {"s", r.s},
                                    {"log10_t_u", mubclass::format_fixed6(r.log10_t_u)},
                                    {"log10_t_s", mubclass::format_fixed6(r.log10_t_s)},
                                    {"log10_t_r", mubclass::format_fixed6(r.log10_t_r)}});
    emit_json(g, "complexity", params, wall, result.dump());
  } else {
    emit_csv(g, "complexity", params, wall, mubclass::to_csv_string(rows));
  }
  return 0;
}

int cmd_entropy(const GlobalOpts& g, int d, int k, double gap, int starts,
                std::uint64_t seed, int max_iters, const std::string& subsets_file,
                bool phase_augmented) {
  if (g.format == "csv")
    throw std::invalid_argument("csv format is not available for entropy");
  auto dim = mubclass::Dimension::parse(d);
  auto fam = family_for(dim);
  mubclass::EntropyOptConfig cfg;
  cfg.random_starts = starts;
  cfg.seed = seed;
  cfg.max_iters = max_iters;
  cfg.threads = g.threads;
  std::vector<mubclass::SubsetCode> subsets;
  if (!subsets_file.empty()) subsets = parse_subsets_file(subsets_file);
  auto t0 = clk::now();
  auto report = mubclass::entropy_partition(dim.d, k, fam, gap, cfg, subsets);
  double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  json params{{"d", d},         {"k", k},
              {"gap", mubclass::format_fixed6(gap)},
              {"starts", starts}, {"seed", seed},
              {"max_iters", max_iters}};
  if (!subsets_file.empty()) params["subsets"] = subsets_file;
  json extra;
  extra["optimizer"] = json{{"algorithm", "nelder-mead"},
                            {"log_base", 2},
                            {"random_starts", starts},
                            {"informed_starts", cfg.informed_starts},
                            {"max_iters", max_iters},
                            {"step", mubclass::format_fixed6(cfg.step)},
                            {"seed", seed}};
  if (phase_augmented) {
    params["phase_augmented"] = true;
    extra["notes"] = json::array(
        {"phase-augmented families are not implemented; flag recorded only"});
  }
  if (!subsets_file.empty())
    extra["mode"] = "sampling";
  emit_json(g, "entropy", params, wall, mubclass::to_json_string(report), extra);
  return 0;
}

int cmd_perms(const GlobalOpts& g, int p, int n, const std::string& mode) {
  if (g.format == "csv")
    throw std::invalid_argument("csv format is not available for perms");
  auto dim = n == 1 ? mubclass::Dimension::odd_prime(p)
                    : mubclass::Dimension::prime_power(p, n);
  auto fam = family_for(dim);
  mubclass::PermDiscoveryConfig cfg;
  cfg.threads = g.threads;
  cfg.cache_dir = resolve_cache_dir(g);
  if (mode == "exhaustive")
    cfg.mode = mubclass::PermSearchMode::kExhaustive;
  else if (mode == "structured")
    cfg.mode = mubclass::PermSearchMode::kStructured;
  else if (mode != "auto")
    throw std::invalid_argument("unknown search mode: " + mode);
  auto t0 = clk::now();
  auto perms = mubclass::discover_permutations(fam, cfg);
  double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  std::string canonical = mubclass::to_json_string(perms, dim.d);
  if (dim.n == 1) {
    json r = json::parse(canonical);
    r["notice"] =
        "prime dimension: completeness-preserving permutations induce no new "
        "basis-index images, so the extended operation set reduces to the "
        "finite one and the classification is unchanged";
    canonical = r.dump();
  }
  json params{{"p", dim.p}, {"n", dim.n}, {"mode", mode}};
  json extra{{"from_cache", perms.from_cache}};
  emit_json(g, "perms", params, wall, canonical, extra);
  return 0;
}

int cmd_bench(const GlobalOpts& g) {
  struct Case {
    int d, k;
  };
  const Case cases[] = {{5, 3}, {7, 4}, {11, 5}, {13, 6}, {17, 8}, {19, 9}};
  std::ostringstream csv;
  csv << "d,k,rows,classes,table_ms,classify_ms\n";
  auto t0 = clk::now();
  for (const auto& c : cases) {
    auto a = clk::now();
    auto table = mubclass::build_table_analytic(c.d);
    auto b = clk::now();
    auto part = mubclass::classify_all(c.d, c.k, table);
    auto e = clk::now();
    csv << c.d << "," << c.k << "," << table.rows.size() << ","
        << part.classes.size() << ","
        << mubclass::format_fixed6(std::chrono::duration<double, std::milli>(b - a).count())
        << ","
        << mubclass::format_fixed6(std::chrono::duration<double, std::milli>(e - b).count())
        << "\n";
  }
  double wall = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  emit_csv(g, "bench", json::object(), wall, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mubclass — finite-operation classification of MUB subsets"};
  app.set_version_flag("--version", std::string(mubclass::kVersion));
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads (0 = all available)")
      ->envname("MUBCLASS_THREADS");
  app.add_option("--cache-dir", g.cache_dir,
                 "directory for permutation-discovery caches")
      ->envname("MUBCLASS_CACHE_DIR");
  app.add_flag("--no-cache", g.no_cache, "disable the discovery cache");
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int d = 0, p = 0, n = 0, k = 0;
  int dmin = 3, dmax = 37;
  bool members = false, force_bfs = false, phase_augmented = false;
  double gap = 0.05;
  int starts = 64, max_iters = 800;
  std::uint64_t seed = 1;
  std::string s_list = "2,5,10", subsets_file, mode = "auto";

  auto* t = app.add_subcommand("table", "transformation table for one dimension");
  t->add_option("--d", d, "dimension (prime or prime power)");
  t->add_option("--p", p, "characteristic");
  t->add_option("--n", n, "extension degree");

  auto* c = app.add_subcommand("classify", "orbit classification of k-subsets");
  c->add_option("--d", d, "dimension (prime or prime power)");
  c->add_option("--p", p, "characteristic");
  c->add_option("--n", n, "extension degree");
  c->add_option("--k", k, "subset size")->required();
  c->add_flag("--members", members, "list every subset of each class");
  c->add_flag("--force-bfs", force_bfs, "skip the group fast path");

  auto* b = app.add_subcommand("bound", "closed-form class-count bound");
  b->add_option("--d", d, "odd prime dimension")->required();
  b->add_option("--k", k, "subset size")->required();

  auto* x = app.add_subcommand("complexity", "operation-count estimates");
  x->add_option("--d", d, "single-point dimension");
  x->add_option("--k", k, "single-point subset size");
  x->add_option("--dmin", dmin, "curve-mode smallest dimension");
  x->add_option("--dmax", dmax, "curve-mode largest dimension");
  x->add_option("--s", s_list, "sampling depths, comma-separated");

  auto* e = app.add_subcommand("entropy", "min-entropy lower-bound clustering");
  e->add_option("--d", d, "dimension")->required();
  e->add_option("--k", k, "subset size")->required();
  e->add_option("--gap", gap, "cluster gap in bits");
  e->add_option("--starts", starts, "random starts per subset");
  e->add_option("--seed", seed, "base RNG seed");
  e->add_option("--max-iters", max_iters, "iteration cap per start");
  e->add_option("--subsets", subsets_file,
                "JSON file of subsets (array or classify output) — sampling mode");
  e->add_flag("--phase-augmented", phase_augmented,
              "record the phase-augmented-family flag (not implemented)");

  auto* pm = app.add_subcommand("perms", "completeness-preserving permutations");
  pm->add_option("--p", p, "characteristic")->required();
  pm->add_option("--n", n, "extension degree")->required();
  pm->add_option("--mode", mode, "search mode: auto, exhaustive, structured");

  auto* bn = app.add_subcommand("bench", "classification timing table (CSV)");
  (void)bn;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForVersion& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (t->parsed()) return cmd_table(g, d, p, n);
    if (c->parsed()) return cmd_classify(g, d, p, n, k, members, force_bfs);
    if (b->parsed()) return cmd_bound(g, d, k);
    if (x->parsed()) return cmd_complexity(g, d, k, dmin, dmax, s_list);
    if (e->parsed())
      return cmd_entropy(g, d, k, gap, starts, seed, max_iters, subsets_file,
                         phase_augmented);
    if (pm->parsed()) return cmd_perms(g, p, n, mode);
    if (bn->parsed()) return cmd_bench(g);
  } catch (const mubclass::resource_limit_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
