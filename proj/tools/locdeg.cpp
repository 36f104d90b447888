// Command line front end for the locdeg library: generate named graph
// families, inspect graph properties, run the named checks and the
// regression suite, grow Hamilton cycles by recorded extension moves, and
// hunt for counterexamples exhaustively or by seeded sampling.
//
// Exit codes: 0 success / all checks pass, 1 a check failed or a
// counterexample was found, 2 usage or input error, 3 a step budget ran out
// before a verdict was reached.

#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "locdeg/edgelist_io.hpp"
#include "locdeg/extension.hpp"
#include "locdeg/families.hpp"
#include "locdeg/graph.hpp"
#include "locdeg/invariants.hpp"
#include "locdeg/planarity.hpp"
#include "locdeg/predicates.hpp"
#include "locdeg/report.hpp"
#include "locdeg/search.hpp"
#include "locdeg/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using locdeg::Budget;
using locdeg::Graph;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Options shared by every subcommand.
struct CommonOptions {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t budget = 0;
  bool budget_given = false;
  std::string report_path;
  std::string format = "json";
  bool timings = false;

  std::optional<std::uint64_t> seed_opt() const {
    return seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt;
  }
  locdeg::ReportFormat report_format() const {
    return format == "text" ? locdeg::ReportFormat::kText
                            : locdeg::ReportFormat::kJson;
  }
};

// Graph selection shared by props/verify/extend: exactly one of a family
// spec or an edge-list file.
struct GraphSource {
  std::string family;
  std::string in_path;

  bool exactly_one() const { return family.empty() != in_path.empty(); }

  // Returns the graph and a stable instance label (the family spec in
  // canonical text form, or the input path).
  Graph load(std::string& label) const {
    if (!family.empty()) {
      locdeg::FamilySpec spec = locdeg::parse_family_spec(family);
      label = locdeg::to_string(spec);
      return locdeg::build_family(spec);
    }
    label = in_path;
    return locdeg::parse_graph_file(in_path);
  }
};

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return edges;
}

json graph_json(const Graph& g) {
  return json{{"order", g.order()}, {"edges", edges_json(g)}};
}

json cycle_json(const locdeg::Cycle& c) {
  json arr = json::array();
  for (int v : c.vertices()) arr.push_back(v);
  return arr;
}

json move_json(const locdeg::ExtensionMove& m) {
  json added = json::array();
  for (int v : m.added) added.push_back(v);
  return json{{"kind", std::string(locdeg::to_string(m.kind))},
              {"i", m.i},
              {"j", m.j},
              {"k", m.k},
              {"added", added},
              {"result", cycle_json(m.result)}};
}

json trace_json(const locdeg::ExtensionTrace& trace) {
  json moves = json::array();
  for (const locdeg::ExtensionMove& m : trace.moves) moves.push_back(move_json(m));
  return json{{"start", cycle_json(trace.start)}, {"moves", moves}};
}

// Renders a flat JSON object as "key<TAB>value" lines; nested values are
// printed as compact JSON.
void print_object(std::ostream& out, const json& obj) {
  for (const auto& [key, value] : obj.items()) {
    out << key << '\t'
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

void emit_object(const CommonOptions& common, const json& obj) {
  if (common.format == "text") {
    print_object(std::cout, obj);
  } else {
    std::cout << obj.dump() << '\n';
  }
  if (!common.report_path.empty()) {
    std::ofstream file(common.report_path);
    if (!file) {
      throw std::runtime_error("cannot write report file: " +
                               common.report_path);
    }
    if (common.format == "text") {
      print_object(file, obj);
    } else {
      file << obj.dump() << '\n';
    }
  }
}

// --- gen ---------------------------------------------------------------------

int run_gen(const std::string& family, const std::string& out_path,
            bool list_families) {
  if (list_families) {
    for (const std::string& id : locdeg::family_ids()) {
      std::cout << id << '\n';
    }
    return 0;
  }
  if (family.empty()) {
    std::cerr << "gen: provide --family or --list-families\n";
    return kExitUsage;
  }
  Graph g = locdeg::build_family(locdeg::parse_family_spec(family));
  if (out_path.empty()) {
    std::cout << locdeg::write_graph(g);
  } else {
    locdeg::write_graph_file(g, out_path);
  }
  return 0;
}

// --- props -------------------------------------------------------------------

json props_json(const std::string& label, const Graph& g) {
  json out;
  out["instance"] = label;
  out["order"] = g.order();
  out["size"] = g.edge_count();
  json degrees = json::array();
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  out["degrees"] = degrees;
  out["min_degree"] = g.order() > 0 ? json(g.min_degree()) : json(nullptr);
  out["max_degree"] = g.order() > 0 ? json(g.max_degree()) : json(nullptr);
  out["connected"] = locdeg::is_connected(g);
  std::optional<int> diam = locdeg::diameter(g);
  out["diameter"] = diam ? json(*diam) : json(nullptr);
  std::optional<int> gir = locdeg::girth(g);
  out["girth"] = gir ? json(*gir) : json(nullptr);
  out["vertex_connectivity"] = locdeg::vertex_connectivity(g).value;
  out["edge_connectivity"] = locdeg::edge_connectivity(g).value;
  out["planar"] = locdeg::is_planar(g).planar;
  out["dirac"] = locdeg::satisfies_dirac(g);
  out["ore"] = locdeg::satisfies_ore(g);
  out["locally_dirac"] = locdeg::is_locally_dirac(g).holds;
  out["locally_ore"] = locdeg::is_locally_ore(g).holds;
  out["closed_locally_dirac"] = locdeg::is_closed_locally_dirac(g).holds;
  out["closed_locally_ore"] = locdeg::is_closed_locally_ore(g).holds;
  out["locally_connected"] = locdeg::is_locally_connected(g);
  out["locally_isometric"] = locdeg::is_locally_isometric(g);
  out["claw_free"] = locdeg::is_claw_free(g).holds;
  std::optional<locdeg::Rational> cc = locdeg::min_clustering_coefficient(g);
  out["min_clustering"] = cc ? json(cc->to_string()) : json(nullptr);
  locdeg::LocallyDiracProfile profile = locdeg::locally_dirac_profile(g);
  out["locally_dirac_violations"] =
      json{{"literal", profile.violations_literal},
           {"neighbourhood_order_3_plus", profile.violations_order3}};
  locdeg::LocallyHamiltonianResult lh = locdeg::is_locally_hamiltonian(g);
  out["locally_hamiltonian"] =
      lh.budget_exceeded ? json(nullptr) : json(lh.holds);
  return out;
}

int run_props(const CommonOptions& common, const GraphSource& source) {
  if (!source.exactly_one()) {
    std::cerr << "props: provide exactly one of --family or --in\n";
    return kExitUsage;
  }
  std::string label;
  Graph g = source.load(label);
  emit_object(common, props_json(label, g));
  return 0;
}

// --- verify ------------------------------------------------------------------

void emit_reports(const CommonOptions& common,
                  const std::vector<locdeg::CheckReport>& reports) {
  locdeg::write_reports(std::cout, reports, common.report_format());
  if (!common.report_path.empty()) {
    std::ofstream file(common.report_path);
    if (!file) {
      throw std::runtime_error("cannot write report file: " +
                               common.report_path);
    }
    locdeg::write_reports(file, reports, common.report_format());
  }
}

int run_verify(const CommonOptions& common, const std::string& suite,
               const std::string& theorem, const GraphSource& source,
               const std::vector<std::string>& with_files, bool no_catalog) {
  if (suite.empty() == theorem.empty()) {
    std::cerr << "verify: provide exactly one of --suite or --theorem\n";
    return kExitUsage;
  }

  std::vector<locdeg::CheckReport> reports;
  if (!suite.empty()) {
    if (!source.family.empty() || !source.in_path.empty()) {
      std::cerr << "verify: --family/--in apply to --theorem, not --suite\n";
      return kExitUsage;
    }
    locdeg::SuiteOptions options;
    options.seed = common.seed_opt();
    options.timings = common.timings;
    options.include_default_catalog = !no_catalog;
    if (common.budget_given) {
      options.budget_limit = common.budget;
      options.enumeration_budget_limit = common.budget;
    }
    std::vector<locdeg::NamedGraph> extra;
    for (const std::string& path : with_files) {
      extra.push_back({path, locdeg::parse_graph_file(path)});
    }
    reports = locdeg::run_suite(options, extra);
  } else {
    if (!source.exactly_one()) {
      std::cerr << "verify: provide exactly one of --family or --in\n";
      return kExitUsage;
    }
    std::string label;
    Graph g = source.load(label);
    Budget budget{common.budget_given ? common.budget : 10'000'000};
    auto started = std::chrono::steady_clock::now();
    locdeg::CheckReport report = locdeg::verify_theorem(theorem, g, label, budget);
    if (common.timings) {
      report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    }
    report.seed = common.seed_opt();
    reports.push_back(std::move(report));
  }

  emit_reports(common, reports);
  return locdeg::exit_code_for(reports);
}

// --- extend ------------------------------------------------------------------

int run_extend(const CommonOptions& common, const GraphSource& source) {
  if (!source.exactly_one()) {
    std::cerr << "extend: provide exactly one of --family or --in\n";
    return kExitUsage;
  }
  std::string label;
  Graph g = source.load(label);
  Budget budget{common.budget_given ? common.budget : 10'000'000};
  locdeg::HamiltonByExtension r = locdeg::hamilton_by_extension(g, budget);

  json out;
  out["instance"] = label;
  out["order"] = g.order();
  out["success"] = r.success;
  out["seeds_tried"] = r.seeds_tried;
  out["budget_exhausted"] = r.budget_exceeded;
  out["hamilton_cycle"] =
      r.hamilton_cycle ? cycle_json(*r.hamilton_cycle) : json(nullptr);
  bool trace_ok = false;
  if (r.seeds_tried > 0) {
    locdeg::TraceCheck check = locdeg::verify_extension_trace(g, r.trace);
    trace_ok = check.ok;
    out["trace"] = trace_json(r.trace);
    out["trace_verified"] = check.ok;
    if (!check.ok) out["trace_error"] = check.error;
  } else {
    out["trace"] = json(nullptr);
    out["trace_verified"] = json(nullptr);
  }
  emit_object(common, out);

  if (r.budget_exceeded) return kExitBudget;
  return r.success && trace_ok ? 0 : kExitFail;
}

// --- search ------------------------------------------------------------------

int run_search(const CommonOptions& common, const std::string& mode,
               const std::vector<std::string>& filters,
               const std::string& property, int max_order, int min_order,
               std::uint64_t samples, bool list_ids) {
  if (list_ids) {
    for (const std::string& id : locdeg::predicate_ids()) {
      std::cout << "filter\t" << id << '\n';
    }
    for (const std::string& id : locdeg::property_ids()) {
      std::cout << "property\t" << id << '\n';
    }
    return 0;
  }

  json out;
  bool found = false;
  bool starved = false;
  if (mode == "exhaustive") {
    locdeg::ExhaustiveConfig config;
    config.max_order = max_order;
    config.filters = filters;
    config.property = property;
    if (common.budget_given) config.budget_limit = common.budget;
    locdeg::ExhaustiveResult r = locdeg::exhaustive_search(config);
    out["mode"] = "exhaustive";
    out["max_order"] = config.max_order;
    out["filters"] = filters;
    out["property"] = property;
    json classes = json::array();
    for (std::uint64_t c : r.classes_per_order) classes.push_back(c);
    out["classes_per_order"] = classes;
    out["tested"] = r.tested;
    out["counterexample"] =
        r.counterexample ? graph_json(*r.counterexample) : json(nullptr);
    out["budget_exhausted"] = r.budget_exceeded;
    found = r.counterexample.has_value();
    starved = r.budget_exceeded;
  } else {  // random
    locdeg::RandomConfig config;
    config.filters = filters;
    config.property = property;
    config.samples = samples;
    config.seed = common.seed;
    config.min_order = min_order;
    config.max_order = max_order > 0 ? max_order : config.max_order;
    if (common.budget_given) config.budget_limit = common.budget;
    locdeg::RandomResult r = locdeg::random_search(config);
    out["mode"] = "random";
    out["samples"] = config.samples;
    out["seed"] = config.seed;
    out["min_order"] = config.min_order;
    out["max_order"] = config.max_order;
    out["filters"] = filters;
    out["property"] = property;
    out["sampled"] = r.sampled;
    out["survivors"] = r.survivors;
    out["counterexample"] =
        r.counterexample ? graph_json(*r.counterexample) : json(nullptr);
    out["counterexample_origin"] = r.counterexample_origin;
    out["budget_exhausted"] = r.budget_exceeded;
    found = r.counterexample.has_value();
    starved = r.budget_exceeded;
  }

  emit_object(common, out);
  if (found) return kExitFail;
  if (starved) return kExitBudget;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graph toolkit for local degree conditions: family generators, "
      "structural invariants, named theorem checks, cycle extension, and "
      "counterexample search."};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--seed", common.seed,
                 "RNG seed; recorded in report lines and steering sampling");
  app.add_option("--budget", common.budget,
                 "Step budget per check (default 10^7; the suite allows "
                 "6*10^7 for whole-cycle-space checks)");
  app.add_option("--report", common.report_path,
                 "Also write the output to this file");
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timings", common.timings,
               "Record wall-clock millis per report line (off keeps reports "
               "byte-reproducible)");

  // gen
  std::string gen_family, gen_out;
  bool gen_list = false;
  CLI::App* gen = app.add_subcommand(
      "gen", "Generate a family instance as an edge list");
  gen->fallthrough();
  gen->add_option("--family", gen_family,
                  "Family spec, e.g. \"path-strong-k3 m=5\"");
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  gen->add_flag("--list-families", gen_list, "List family ids and exit");

  // props
  GraphSource props_source;
  CLI::App* props = app.add_subcommand(
      "props", "Compute structural properties of one graph");
  props->fallthrough();
  props->add_option("--family", props_source.family, "Family spec");
  props->add_option("--in", props_source.in_path, "Edge-list file");

  // verify
  std::string verify_suite, verify_theorem;
  GraphSource verify_source;
  std::vector<std::string> verify_with;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run named checks; JSON-lines report, exit 0/1/2/3");
  verify->fallthrough();
  verify->add_option("--suite", verify_suite, "Run the whole catalog suite")
      ->check(CLI::IsMember({"all"}));
  verify->add_option("--theorem", verify_theorem, "Run one check id")
      ->check(CLI::IsMember(locdeg::theorem_ids()));
  verify->add_option("--family", verify_source.family,
                     "Instance for --theorem");
  verify->add_option("--in", verify_source.in_path, "Instance for --theorem");
  verify->add_option("--with", verify_with,
                     "Extra edge-list files appended to the suite catalog");
  bool verify_no_catalog = false;
  verify->add_flag("--no-catalog", verify_no_catalog,
                   "Suite runs only the --with graphs (empty without them)");

  // extend
  GraphSource extend_source;
  CLI::App* extend = app.add_subcommand(
      "extend", "Grow a Hamilton cycle from a triangle by recorded moves");
  extend->fallthrough();
  extend->add_option("--family", extend_source.family, "Family spec");
  extend->add_option("--in", extend_source.in_path, "Edge-list file");

  // search
  std::string search_mode = "exhaustive", search_property = "always-true";
  std::vector<std::string> search_filters;
  int search_max_order = 6, search_min_order = 8;
  std::uint64_t search_samples = 10'000;
  bool search_list = false;
  CLI::App* search = app.add_subcommand(
      "search", "Hunt for counterexamples (exhaustive small orders or "
                "seeded random sampling)");
  search->fallthrough();
  search->add_option("--mode", search_mode, "Search mode")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  search->add_option("--filter", search_filters,
                     "Predicate ids kept as a conjunction (repeatable)");
  search->add_option("--property", search_property, "Property id to test")
      ->capture_default_str();
  search->add_option("--max-order", search_max_order,
                     "Exhaustive: largest order scanned (hard cap 7); "
                     "random: largest sampled order")
      ->capture_default_str();
  search->add_option("--min-order", search_min_order,
                     "Random: smallest sampled order")
      ->capture_default_str();
  search->add_option("--samples", search_samples, "Random: sample count")
      ->capture_default_str();
  search->add_flag("--list-ids", search_list,
                   "List filter and property ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  common.seed_given = app.count("--seed") > 0;
  common.budget_given = app.count("--budget") > 0;

  try {
    if (*gen) return run_gen(gen_family, gen_out, gen_list);
    if (*props) return run_props(common, props_source);
    if (*verify) {
      return run_verify(common, verify_suite, verify_theorem, verify_source,
                        verify_with, verify_no_catalog);
    }
    if (*extend) return run_extend(common, extend_source);
    if (*search) {
      return run_search(common, search_mode, search_filters, search_property,
                        search_max_order, search_min_order, search_samples,
                        search_list);
    }
  } catch (const locdeg::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
