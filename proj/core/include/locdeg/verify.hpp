#pragma once
// Named global-property checks evaluated on concrete graphs, the default
// instance catalog, and the deterministic regression suite built from both.
//
// Each check id names an implication "hypotheses => conclusion".  Hypotheses
// are always re-checked on the given graph (never assumed from the instance
// label); when they fail the check reports skipped rather than pass/fail, so
// a generator bug cannot silently turn a theorem check into a vacuous pass.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locdeg/cycles.hpp"
#include "locdeg/families.hpp"
#include "locdeg/graph.hpp"
#include "locdeg/report.hpp"

namespace locdeg {

// All check ids in canonical (suite) order:
//
//   T1.1  n >= 3 and 2*deg(v) >= n for all v          => Hamiltonian
//   T1.2  n >= 3 and 2*deg(v) >= n for all v          => pancyclic, or the
//                                                        balanced complete
//                                                        bipartite graph
//   T1.3  n >= 3, deg(u)+deg(w) >= n for all
//         non-adjacent u,w                            => Hamiltonian
//   T1.5  connected, n >= 3, closed locally Ore       => Hamiltonian
//   C1.6  connected, n >= 3, locally Ore              => Hamiltonian and
//                                                        {1,2}-extendable
//   C1.7  connected, n >= 3, locally Dirac            => Hamiltonian and
//                                                        {1,2}-extendable
//   P2.1  connected, n >= 3                           => joining a same-order
//                                                        clique embeds G in a
//                                                        locally Dirac host
//   T2.2  connected, n >= 4, locally Ore              => kappa >= 3
//   T2.3  connected, n >= 8, locally Dirac            => min degree >= 5
//   T2.4  connected, n >= 8, locally Dirac            => non-planar
//   T2.5  connected, n >= 9, locally Dirac            => diam <= floor(n/3)-1
//   R2.5  connected, n >= 3, locally Ore              => diam <= floor((n+1)/3)
//   T2.6  connected, n >= 3, locally Dirac            => lambda = delta
//   P2.7  connected, locally Ore                      => lambda < delta
//                                                        (gap-witness check;
//                                                        the suite applies it
//                                                        to the gap family)
//   T3.3  connected, locally Dirac, max degree <= 11  => fully cycle
//                                                        extendable
//   L3.1-audit   any graph: non-extendable cycles violate no L31-* rule
//   L3.2-audit   connected, locally Dirac: no L32-* violation
//   CONJ-ryjacek connected, n >= 3, locally connected => weakly pancyclic
const std::vector<std::string>& theorem_ids();

bool is_theorem_id(const std::string& id);

// Stable label for a graph that does not come from a family:
// "graph-n<order>-<16 hex digits>" where the digest is FNV-1a over the
// canonical edge-list serialisation.
std::string graph_instance_label(const Graph& g);

// Evaluates one check on one graph.  Unknown ids throw std::invalid_argument.
// A hypothesis miss or an exhausted budget yields status skipped (the witness
// says which); otherwise the conclusion decides pass/fail, and fail witnesses
// carry data that re-verifies independently (a cut, a cycle, a missing
// length, an embedding, ...).
CheckReport verify_theorem(const std::string& theorem, const Graph& g,
                           const std::string& instance, Budget& budget);
CheckReport verify_theorem(const std::string& theorem, const Graph& g,
                           const std::string& instance);
CheckReport verify_theorem(const std::string& theorem, const Graph& g);

struct CatalogEntry {
  FamilySpec spec;
  Graph graph;
};

// The default instance grid, in deterministic order:
//   complete n=3..10, path n=3..10, cycle n=3..10,
//   complete-bipartite (a,b) in {(2,3),(2,4),(3,4),(3,5)},
//   balanced-complete-bipartite half=2..5,
//   complete-multipartite (parts,size) in {(3,1),(3,2),(3,3),(4,2)},
//   petersen, cycle-power-3k k=1..4,
//   path-strong-k3 m=3..10, cycle-strong-k3 m=3..10, path-strong-k2 m=3..10,
//   ore-min-degree3 m=3..10, ore-diameter-extremal n=9..24,
//   lambda-gap-family k=3..4.
std::vector<CatalogEntry> default_catalog();

struct NamedGraph {
  std::string instance;
  Graph graph;
};

struct SuiteOptions {
  // Recorded in every report line; the suite itself is fully deterministic.
  std::optional<std::uint64_t> seed;
  // Measure wall-clock millis per line (off by default so reports are
  // byte-reproducible).
  bool timings = false;
  // Step budget for searches (Hamiltonicity, fixed-length cycles).
  std::uint64_t budget_limit = 10'000'000;
  // Step budget for whole-cycle-space enumeration checks.
  std::uint64_t enumeration_budget_limit = 60'000'000;
  // Order cap for cycle-search checks (T1.1, T1.2, T1.3, T1.5, CONJ).
  int search_cap = 14;
  // Order cap for enumeration checks (C1.6, C1.7, T3.3, L3.1/2-audit).
  // Complete graphs are additionally capped at order 10: their cycle count
  // grows factorially and the smaller members already exercise every code
  // path.
  int enumeration_cap = 12;
  // Max order for the closing isomorphism-class scan of CONJ-ryjacek
  // (locally connected vs weakly pancyclic); <= 7.
  int exhaustive_scan_order = 6;
  // When false the suite runs only the extra graphs (no catalog slices and
  // no closing scan); with no extras either, the report is empty.
  bool include_default_catalog = true;
};

// Runs every check id over its slice of the default catalog plus the given
// extra graphs, in theorem-major then catalog order, one fresh budget per
// line.  P2.7 runs on the gap family (and extras) only, since it asserts a
// strict lambda < delta gap rather than a universal bound.  The final line
// is the CONJ-ryjacek isomorphism-class scan up to `exhaustive_scan_order`.
std::vector<CheckReport> run_suite(const SuiteOptions& options,
                                   const std::vector<NamedGraph>& extra = {});

}  // namespace locdeg
