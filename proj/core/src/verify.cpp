#include "locdeg/verify.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "locdeg/audit.hpp"
#include "locdeg/edgelist_io.hpp"
#include "locdeg/extension.hpp"
#include "locdeg/invariants.hpp"
#include "locdeg/planarity.hpp"
#include "locdeg/predicates.hpp"
#include "locdeg/search.hpp"

namespace locdeg {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kTheoremIds = {
    "T1.1", "T1.2", "T1.3", "T1.5", "C1.6", "C1.7",
    "P2.1", "T2.2", "T2.3", "T2.4", "T2.5", "R2.5",
    "T2.6", "P2.7", "T3.3", "L3.1-audit", "L3.2-audit", "CONJ-ryjacek"};

int min_degree_vertex(const Graph& g) {
  int arg = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(arg)) arg = v;
  return arg;
}

ordered_json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  ordered_json out = ordered_json::array();
  for (auto [u, v] : pairs) out.push_back(ordered_json::array({u, v}));
  return out;
}

ordered_json local_witness_json(const LocalWitness& w) {
  ordered_json out;
  out["centre"] = w.v;
  out["u"] = w.u;
  if (w.w >= 0) out["w"] = w.w;
  out["local_degree_u"] = w.local_degree_u;
  if (w.local_degree_w >= 0) out["local_degree_w"] = w.local_degree_w;
  out["bound"] = w.bound;
  return out;
}

CheckReport& finish(CheckReport& r, CheckStatus status, const ordered_json& w) {
  r.status = status;
  r.witness = w.is_null() ? std::string() : w.dump();
  return r;
}

CheckReport& skip_hypothesis(CheckReport& r, const std::string& failed) {
  ordered_json w;
  w["reason"] = "hypothesis not satisfied";
  w["failed"] = failed;
  return finish(r, CheckStatus::kSkipped, w);
}

CheckReport& skip_budget(CheckReport& r, const Budget& budget) {
  r.budget_exhausted = true;
  ordered_json w;
  w["reason"] = "budget exhausted";
  w["limit"] = budget.limit;
  return finish(r, CheckStatus::kSkipped, w);
}

// True exactly for the complete bipartite graph with equal sides: an
// n/2-regular graph with a proper 2-colouring has no room for a missing
// cross edge or a second component.
bool is_balanced_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n / 2) return false;
  std::vector<int> colour(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbours(v)) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

CheckReport& conclude_hamiltonian(const Graph& g, Budget& budget,
                                  CheckReport& r) {
  const HamiltonicityResult h = is_hamiltonian(g, budget);
  if (h.budget_exceeded) return skip_budget(r, budget);
  ordered_json w;
  if (h.hamiltonian) {
    w["cycle"] = h.cycle->vertices();
    return finish(r, CheckStatus::kPass, w);
  }
  w["reason"] = "no Hamilton cycle";
  w["order"] = g.order();
  return finish(r, CheckStatus::kFail, w);
}

CheckReport& conclude_hamiltonian_and_12_extendable(const Graph& g,
                                                    Budget& budget,
                                                    CheckReport& r) {
  const HamiltonicityResult h = is_hamiltonian(g, budget);
  if (h.budget_exceeded) return skip_budget(r, budget);
  if (!h.hamiltonian) {
    ordered_json w;
    w["reason"] = "no Hamilton cycle";
    w["order"] = g.order();
    return finish(r, CheckStatus::kFail, w);
  }
  const CycleExtendability e = is_12_extendable_graph(g, budget);
  if (e.budget_exceeded) return skip_budget(r, budget);
  ordered_json w;
  w["cycle"] = h.cycle->vertices();
  w["cycles_checked"] = e.cycles_checked;
  if (e.holds) return finish(r, CheckStatus::kPass, w);
  w["reason"] = "cycle admits no one- or two-vertex extension";
  w["stuck_cycle"] = e.counterexample->vertices();
  return finish(r, CheckStatus::kFail, w);
}

CheckReport& conclude_audit(const Graph& g, Budget& budget, CheckReport& r,
                            const std::string& rule_prefix) {
  const AuditReport a = audit_non_extendable_cycles(g, budget);
  if (a.budget_exceeded) return skip_budget(r, budget);
  const AuditViolation* first = nullptr;
  int matching = 0;
  for (const AuditViolation& v : a.violations) {
    if (v.rule.rfind(rule_prefix, 0) != 0) continue;
    if (first == nullptr) first = &v;
    ++matching;
  }
  ordered_json w;
  w["cycles_seen"] = a.cycles_seen;
  w["non_extendable"] = a.non_extendable;
  if (first == nullptr) return finish(r, CheckStatus::kPass, w);
  w["violations"] = matching;
  w["rule"] = first->rule;
  w["cycle"] = first->cycle.vertices();
  w["detail"] = first->detail;
  return finish(r, CheckStatus::kFail, w);
}

CheckReport check_one(const std::string& theorem, const Graph& g,
                      const std::string& instance, Budget& budget) {
  CheckReport r;
  r.theorem = theorem;
  r.instance = instance;
  const int n = g.order();

  if (theorem == "T1.1") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!satisfies_dirac(g)) return skip_hypothesis(r, "dirac-condition");
    return conclude_hamiltonian(g, budget, r);
  }

  if (theorem == "T1.2") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!satisfies_dirac(g)) return skip_hypothesis(r, "dirac-condition");
    const PancyclicityCheck p = is_pancyclic(g, budget);
    if (p.budget_exceeded) return skip_budget(r, budget);
    ordered_json w;
    w["pancyclic"] = p.holds;
    if (p.holds) return finish(r, CheckStatus::kPass, w);
    w["balanced_complete_bipartite"] = is_balanced_complete_bipartite(g);
    w["missing"] = p.missing;
    return finish(r,
                  w["balanced_complete_bipartite"].get<bool>()
                      ? CheckStatus::kPass
                      : CheckStatus::kFail,
                  w);
  }

  if (theorem == "T1.3") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!satisfies_ore(g)) return skip_hypothesis(r, "ore-condition");
    return conclude_hamiltonian(g, budget, r);
  }

  if (theorem == "T1.5") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_closed_locally_ore(g).holds)
      return skip_hypothesis(r, "closed-locally-ore");
    return conclude_hamiltonian(g, budget, r);
  }

  if (theorem == "C1.6") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_ore(g).holds) return skip_hypothesis(r, "locally-ore");
    return conclude_hamiltonian_and_12_extendable(g, budget, r);
  }

  if (theorem == "C1.7") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_dirac(g).holds) return skip_hypothesis(r, "locally-dirac");
    return conclude_hamiltonian_and_12_extendable(g, budget, r);
  }

  if (theorem == "P2.1") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    const Graph host = join_with_clique(g);
    const LocalCheck local = is_locally_dirac(host);
    ordered_json w;
    w["host_order"] = host.order();
    if (!local.holds) {
      w["host_local_violation"] = local_witness_json(*local.witness);
      return finish(r, CheckStatus::kFail, w);
    }
    std::vector<int> original(n);
    std::iota(original.begin(), original.end(), 0);
    if (!(induced_subgraph(host, original).graph == g)) {
      w["reason"] = "induced copy differs from the original";
      return finish(r, CheckStatus::kFail, w);
    }
    return finish(r, CheckStatus::kPass, w);
  }

  if (theorem == "T2.2") {
    if (n < 4) return skip_hypothesis(r, "order>=4");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_ore(g).holds) return skip_hypothesis(r, "locally-ore");
    const VertexConnectivity k = vertex_connectivity(g);
    ordered_json w;
    w["kappa"] = k.value;
    if (k.value >= 3) return finish(r, CheckStatus::kPass, w);
    w["cut"] = k.cut;
    return finish(r, CheckStatus::kFail, w);
  }

  if (theorem == "T2.3") {
    if (n < 8) return skip_hypothesis(r, "order>=8");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_dirac(g).holds) return skip_hypothesis(r, "locally-dirac");
    const int delta = g.min_degree();
    ordered_json w;
    w["min_degree"] = delta;
    if (delta >= 5) return finish(r, CheckStatus::kPass, w);
    w["vertex"] = min_degree_vertex(g);
    return finish(r, CheckStatus::kFail, w);
  }

  if (theorem == "T2.4") {
    if (n < 8) return skip_hypothesis(r, "order>=8");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_dirac(g).holds) return skip_hypothesis(r, "locally-dirac");
    const PlanarityResult p = is_planar(g);
    ordered_json w;
    if (!p.planar) {
      if (p.witness.has_value()) {
        w["kuratowski"] =
            p.witness->kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33";
        w["branch_vertices"] = p.witness->branch_vertices;
      }
      return finish(r, CheckStatus::kPass, w);
    }
    w["reason"] = "planar";
    w["embedding"] = p.embedding;
    return finish(r, CheckStatus::kFail, w);
  }

  if (theorem == "T2.5") {
    if (n < 9) return skip_hypothesis(r, "order>=9");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_dirac(g).holds) return skip_hypothesis(r, "locally-dirac");
    const int d = *diameter(g);
    const int bound = n / 3 - 1;
    ordered_json w;
    w["diameter"] = d;
    w["bound"] = bound;
    return finish(r, d <= bound ? CheckStatus::kPass : CheckStatus::kFail, w);
  }

  if (theorem == "R2.5") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_ore(g).holds) return skip_hypothesis(r, "locally-ore");
    const int d = *diameter(g);
    const int bound = (n + 1) / 3;
    ordered_json w;
    w["diameter"] = d;
    w["bound"] = bound;
    return finish(r, d <= bound ? CheckStatus::kPass : CheckStatus::kFail, w);
  }

  if (theorem == "T2.6") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_dirac(g).holds) return skip_hypothesis(r, "locally-dirac");
    const EdgeConnectivity lambda = edge_connectivity(g);
    const int delta = g.min_degree();
    ordered_json w;
    w["lambda"] = lambda.value;
    w["delta"] = delta;
    if (lambda.value == delta) return finish(r, CheckStatus::kPass, w);
    w["cut"] = pairs_json(lambda.cut);
    return finish(r, CheckStatus::kFail, w);
  }

  if (theorem == "P2.7") {
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_ore(g).holds) return skip_hypothesis(r, "locally-ore");
    const EdgeConnectivity lambda = edge_connectivity(g);
    const int delta = g.min_degree();
    ordered_json w;
    w["lambda"] = lambda.value;
    w["delta"] = delta;
    if (lambda.value < delta) {
      w["cut"] = pairs_json(lambda.cut);
      return finish(r, CheckStatus::kPass, w);
    }
    w["reason"] = "no gap between lambda and delta";
    return finish(r, CheckStatus::kFail, w);
  }

  if (theorem == "T3.3") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_dirac(g).holds) return skip_hypothesis(r, "locally-dirac");
    if (g.max_degree() > 11) return skip_hypothesis(r, "max-degree<=11");
    const CycleExtendability e = is_fully_cycle_extendable(g, budget);
    if (e.budget_exceeded) return skip_budget(r, budget);
    ordered_json w;
    w["cycles_checked"] = e.cycles_checked;
    if (e.holds) return finish(r, CheckStatus::kPass, w);
    if (e.vertex_off_triangles.has_value()) {
      w["reason"] = "vertex on no triangle";
      w["vertex"] = *e.vertex_off_triangles;
      return finish(r, CheckStatus::kFail, w);
    }
    w["reason"] = "cycle admits no single-vertex extension";
    w["stuck_cycle"] = e.counterexample->vertices();
    return finish(r, CheckStatus::kFail, w);
  }

  if (theorem == "L3.1-audit") {
    return conclude_audit(g, budget, r, "L31");
  }

  if (theorem == "L3.2-audit") {
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_dirac(g).holds) return skip_hypothesis(r, "locally-dirac");
    return conclude_audit(g, budget, r, "L32");
  }

  if (theorem == "CONJ-ryjacek") {
    if (n < 3) return skip_hypothesis(r, "order>=3");
    if (!is_connected(g)) return skip_hypothesis(r, "connected");
    if (!is_locally_connected(g)) return skip_hypothesis(r, "locally-connected");
    const PancyclicityCheck p = is_weakly_pancyclic(g, budget);
    if (p.budget_exceeded) return skip_budget(r, budget);
    if (p.holds) return finish(r, CheckStatus::kPass, ordered_json());
    ordered_json w;
    const std::optional<int> girth_value = girth(g);
    if (girth_value.has_value()) w["girth"] = *girth_value;
    w["missing"] = p.missing;
    return finish(r, CheckStatus::kFail, w);
  }

  throw std::invalid_argument("unknown theorem id: " + theorem);
}

enum class CheckClass { kLight, kSearch, kEnumeration };

CheckClass class_of(const std::string& id) {
  if (id == "T1.1" || id == "T1.2" || id == "T1.3" || id == "T1.5" ||
      id == "CONJ-ryjacek")
    return CheckClass::kSearch;
  if (id == "C1.6" || id == "C1.7" || id == "T3.3" || id == "L3.1-audit" ||
      id == "L3.2-audit")
    return CheckClass::kEnumeration;
  return CheckClass::kLight;
}

bool within_caps(const SuiteOptions& options, const std::string& id,
                 int order) {
  switch (class_of(id)) {
    case CheckClass::kLight:
      return true;
    case CheckClass::kSearch:
      return order <= options.search_cap;
    case CheckClass::kEnumeration:
      return order <= options.enumeration_cap;
  }
  return true;
}

bool suite_selects(const SuiteOptions& options, const std::string& id,
                   const CatalogEntry& entry) {
  // P2.7 asserts a strict lambda < delta gap, which only its designated
  // witness family exhibits.
  if (id == "P2.7" && entry.spec.family != "lambda-gap-family") return false;
  if (class_of(id) == CheckClass::kEnumeration &&
      entry.spec.family == "complete" && entry.graph.order() > 10)
    return false;
  return within_caps(options, id, entry.graph.order());
}

}  // namespace

const std::vector<std::string>& theorem_ids() { return kTheoremIds; }

bool is_theorem_id(const std::string& id) {
  for (const std::string& known : kTheoremIds)
    if (known == id) return true;
  return false;
}

std::string graph_instance_label(const Graph& g) {
  const std::string text = write_graph(g);
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "graph-n%d-%016llx", g.order(),
                static_cast<unsigned long long>(h));
  return buf;
}

CheckReport verify_theorem(const std::string& theorem, const Graph& g,
                           const std::string& instance, Budget& budget) {
  return check_one(theorem, g, instance, budget);
}

CheckReport verify_theorem(const std::string& theorem, const Graph& g,
                           const std::string& instance) {
  Budget budget;
  return check_one(theorem, g, instance, budget);
}

CheckReport verify_theorem(const std::string& theorem, const Graph& g) {
  Budget budget;
  return check_one(theorem, g, graph_instance_label(g), budget);
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> catalog;
  const auto add = [&catalog](std::string family,
                              std::map<std::string, int> params) {
    FamilySpec spec{std::move(family), std::move(params)};
    Graph graph = build_family(spec);
    catalog.push_back(CatalogEntry{std::move(spec), std::move(graph)});
  };
  for (int n = 3; n <= 10; ++n) add("complete", {{"n", n}});
  for (int n = 3; n <= 10; ++n) add("path", {{"n", n}});
  for (int n = 3; n <= 10; ++n) add("cycle", {{"n", n}});
  for (const auto& [a, b] :
       {std::pair(2, 3), std::pair(2, 4), std::pair(3, 4), std::pair(3, 5)})
    add("complete-bipartite", {{"a", a}, {"b", b}});
  for (int half = 2; half <= 5; ++half)
    add("balanced-complete-bipartite", {{"half", half}});
  for (const auto& [parts, size] :
       {std::pair(3, 1), std::pair(3, 2), std::pair(3, 3), std::pair(4, 2)})
    add("complete-multipartite", {{"parts", parts}, {"size", size}});
  add("petersen", {});
  for (int k = 1; k <= 4; ++k) add("cycle-power-3k", {{"k", k}});
  for (int m = 3; m <= 10; ++m) add("path-strong-k3", {{"m", m}});
  for (int m = 3; m <= 10; ++m) add("cycle-strong-k3", {{"m", m}});
  for (int m = 3; m <= 10; ++m) add("path-strong-k2", {{"m", m}});
  for (int m = 3; m <= 10; ++m) add("ore-min-degree3", {{"m", m}});
  for (int n = 9; n <= 24; ++n) add("ore-diameter-extremal", {{"n", n}});
  for (int k = 3; k <= 4; ++k) add("lambda-gap-family", {{"k", k}});
  return catalog;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options,
                                   const std::vector<NamedGraph>& extra) {
  const std::vector<CatalogEntry> catalog =
      options.include_default_catalog ? default_catalog()
                                      : std::vector<CatalogEntry>{};
  std::vector<CheckReport> reports;

  const auto run_one = [&](const std::string& id, const Graph& g,
                           const std::string& label) {
    Budget budget;
    budget.limit = class_of(id) == CheckClass::kEnumeration
                       ? options.enumeration_budget_limit
                       : options.budget_limit;
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = verify_theorem(id, g, label, budget);
    if (options.timings) {
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    }
    r.seed = options.seed;
    reports.push_back(std::move(r));
  };

  for (const std::string& id : kTheoremIds) {
    for (const CatalogEntry& entry : catalog)
      if (suite_selects(options, id, entry))
        run_one(id, entry.graph, to_string(entry.spec));
    for (const NamedGraph& named : extra)
      if (within_caps(options, id, named.graph.order()))
        run_one(id, named.graph, named.instance);
  }

  // Closing line: the isomorphism-class scan behind the weak-pancyclicity
  // conjecture check, over every connected locally connected graph of small
  // order.
  if (options.include_default_catalog) {
    ExhaustiveConfig config;
    config.max_order = options.exhaustive_scan_order;
    config.filters = {"connected", "locally-connected"};
    config.property = "weakly-pancyclic";
    const auto start = std::chrono::steady_clock::now();
    const ExhaustiveResult scan = exhaustive_search(config);
    CheckReport r;
    r.theorem = "CONJ-ryjacek";
    r.instance = "exhaustive-scan n<=" + std::to_string(config.max_order);
    r.seed = options.seed;
    ordered_json w;
    w["classes_per_order"] = scan.classes_per_order;
    w["tested"] = scan.tested;
    if (scan.budget_exceeded) {
      r.budget_exhausted = true;
      w["reason"] = "budget exhausted";
      finish(r, CheckStatus::kSkipped, w);
    } else if (scan.counterexample.has_value()) {
      w["counterexample_order"] = scan.counterexample->order();
      w["counterexample_edges"] = pairs_json(scan.counterexample->edges());
      finish(r, CheckStatus::kFail, w);
    } else {
      finish(r, CheckStatus::kPass, w);
    }
    if (options.timings) {
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    }
    reports.push_back(std::move(r));
  }

  return reports;
}

}  // namespace locdeg
