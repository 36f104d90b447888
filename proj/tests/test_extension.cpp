#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "locdeg/cycles.hpp"
#include "locdeg/extension.hpp"
#include "locdeg/families.hpp"
#include "locdeg/graph.hpp"
#include "locdeg/search.hpp"

using namespace locdeg;

namespace {

Graph random_graph(SplitMix64& rng, int n, int percent) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng.next_below(100) < static_cast<std::uint64_t>(percent))
        g.add_edge(u, v);
  return g;
}

// All cycles of g (budget-checked) for cross-validation runs.
std::vector<Cycle> all_cycles(const Graph& g) {
  std::vector<Cycle> out;
  Budget budget{100'000'000};
  const CycleEnumeration e =
      enumerate_cycles(g, budget, [&](std::span<const int> seq) {
        out.push_back(Cycle::validate(g, seq));
        return true;
      });
  REQUIRE_FALSE(e.budget_exceeded);
  return out;
}

// Checks that `move` really extends `cycle` by one vertex inside g.
void check_is_extension(const Graph& g, const Cycle& cycle,
                        const ExtensionMove& move) {
  CHECK(move.result.length() == cycle.length() + 1);
  CHECK_NOTHROW(Cycle::validate(g, move.result.vertices()));
  for (int v : cycle.vertices()) CHECK(move.result.contains(v));
  REQUIRE(move.added.size() == 1);
  CHECK(move.result.contains(move.added[0]));
  CHECK_FALSE(cycle.contains(move.added[0]));
}

}  // namespace

TEST_CASE("move kind names round trip") {
  const std::vector<std::string> names = {
      "Insert",  "ChordSwapForward", "TriangleBypass", "NeighbourPairHop",
      "L32-4a",  "L32-4b",           "L32-5i",         "L32-5ii",
      "L32-6i",  "L32-6ii",          "L32-6iii",       "L32-6iv",
      "Exhaustive"};
  for (const std::string& name : names) {
    const std::optional<MoveKind> kind = move_kind_from_string(name);
    REQUIRE(kind.has_value());
    CHECK(to_string(*kind) == name);
  }
  CHECK_FALSE(move_kind_from_string("NoSuchMove").has_value());
}

TEST_CASE("insert move fires on a triangle of a complete graph") {
  const Graph g = complete(5);
  const Cycle triangle = Cycle::validate(g, std::vector<int>{0, 1, 2});
  const std::optional<ExtensionMove> move = find_extension_by_moves(g, triangle);
  REQUIRE(move.has_value());
  CHECK(move->kind == MoveKind::Insert);
  CHECK(move->added == std::vector<int>{3});  // smallest off-cycle vertex first
  check_is_extension(g, triangle, *move);
}

TEST_CASE("template scan is sound: every reported move is a real extension") {
  SplitMix64 rng(19);
  int fired = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(4));
    const Graph g = random_graph(rng, n, 40 + static_cast<int>(rng.next_below(45)));
    for (const Cycle& cycle : all_cycles(g)) {
      if (cycle.length() == g.order()) continue;
      const std::optional<ExtensionMove> move = find_extension_by_moves(g, cycle);
      if (!move.has_value()) continue;
      ++fired;
      check_is_extension(g, cycle, *move);
      CHECK(move->kind != MoveKind::Exhaustive);  // scan never brute-forces
    }
  }
  CHECK(fired > 100);
}

TEST_CASE("whenever a template fires, the exhaustive search concurs") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(4));
    const Graph g = random_graph(rng, n, 45 + static_cast<int>(rng.next_below(40)));
    for (const Cycle& cycle : all_cycles(g)) {
      if (cycle.length() == g.order()) continue;
      if (!find_extension_by_moves(g, cycle).has_value()) continue;
      Budget budget{10'000'000};
      const ExtensionSearch s = find_extension_exhaustive(g, cycle, budget);
      REQUIRE_FALSE(s.budget_exceeded);
      REQUIRE(s.move.has_value());
      check_is_extension(g, cycle, *s.move);
      CHECK(s.move->kind == MoveKind::Exhaustive);
    }
  }
}

TEST_CASE("exhaustive search reaches extensions beyond the template scan") {
  // In Petersen, cycles up to length six are chordless (girth five) and no
  // off-cycle vertex attaches at two cycle positions close together
  // (adjacent pairs share no neighbour, non-adjacent pairs exactly one), so
  // no template can fire on them.  Brute force still extends fifteen of the
  // 57 cycles overall.
  const Graph g = petersen();
  int extendable = 0;
  for (const Cycle& cycle : all_cycles(g)) {
    if (cycle.length() <= 6) {
      CHECK_FALSE(find_extension_by_moves(g, cycle).has_value());
    }
    Budget budget{10'000'000};
    const ExtensionSearch s = find_extension_exhaustive(g, cycle, budget);
    REQUIRE_FALSE(s.budget_exceeded);
    if (s.move.has_value()) {
      ++extendable;
      CHECK(s.move->kind == MoveKind::Exhaustive);
      check_is_extension(g, cycle, *s.move);
    }
  }
  CHECK(extendable == 15);
}

TEST_CASE("a genuinely stuck cycle defeats templates and brute force alike") {
  // C_6 plus a hub adjacent to the alternating vertices 0, 2, 4.  Extending
  // the 6-cycle would need a Hamilton cycle, but vertex 5 forces its two
  // incident edges and every completion dead-ends, so none exists.
  Graph g(7);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  g.add_edge(0, 6);
  g.add_edge(2, 6);
  g.add_edge(4, 6);
  const Cycle c6 = Cycle::validate(g, std::vector<int>{0, 1, 2, 3, 4, 5});

  CHECK_FALSE(find_extension_by_moves(g, c6).has_value());
  Budget budget{10'000'000};
  const ExtensionSearch s = find_extension_exhaustive(g, c6, budget);
  REQUIRE_FALSE(s.budget_exceeded);
  CHECK_FALSE(s.move.has_value());
}

TEST_CASE("one-or-two extension falls back to absorbing two vertices") {
  // In K_{3,3} a quadrilateral has no +1 extension (odd cycles are
  // impossible) but absorbs the remaining two vertices as a Hamilton cycle.
  const Graph g = complete_bipartite(3, 3);
  const Cycle quad = Cycle::validate(g, std::vector<int>{0, 3, 1, 4});

  Budget plus_one{10'000'000};
  CHECK_FALSE(find_extension_exhaustive(g, quad, plus_one).move.has_value());

  Budget budget{10'000'000};
  const ExtensionSearch s = find_12_extension(g, quad, budget);
  REQUIRE(s.move.has_value());
  CHECK(s.move->result.length() == 6);
  CHECK(s.move->added.size() == 2);
  for (int v : quad.vertices()) CHECK(s.move->result.contains(v));
  CHECK_NOTHROW(Cycle::validate(g, s.move->result.vertices()));
}

TEST_CASE("graph-level extendability verdicts") {
  // C_6's only cycle is its Hamilton cycle, so cycle-extendability holds
  // vacuously, but vertices lie on no triangle, failing the "fully" check.
  Budget b1{10'000'000};
  CHECK(is_cycle_extendable_graph(cycle(6), b1).holds);
  Budget b2{10'000'000};
  const CycleExtendability full = is_fully_cycle_extendable(cycle(6), b2);
  CHECK_FALSE(full.holds);
  CHECK(full.vertex_off_triangles == 0);

  Budget b3{10'000'000};
  CHECK(is_fully_cycle_extendable(complete(6), b3).holds);
  Budget b4{250'000'000};
  const CycleExtendability psk = is_fully_cycle_extendable(path_strong_k3(3), b4);
  CHECK(psk.holds);
  CHECK(psk.cycles_checked == 3390);

  // Petersen has non-extendable 5-cycles; the counterexample really is stuck.
  Budget b5{10'000'000};
  const CycleExtendability pet = is_cycle_extendable_graph(petersen(), b5);
  CHECK_FALSE(pet.holds);
  REQUIRE(pet.counterexample.has_value());
  CHECK(pet.counterexample->length() < 10);
  Budget b6{10'000'000};
  CHECK_FALSE(find_extension_exhaustive(petersen(), *pet.counterexample, b6)
                  .move.has_value());

  // K_{2,4}: a quadrilateral through both degree-4 vertices cannot reach a
  // six-cycle (that would need three vertices on the small side), so even
  // {1,2}-extendability fails.
  Budget b7{10'000'000};
  const CycleExtendability k24 =
      is_12_extendable_graph(complete_bipartite(2, 4), b7);
  CHECK_FALSE(k24.holds);
  REQUIRE(k24.counterexample.has_value());
  CHECK(k24.counterexample->length() == 4);

  // K_{3,3} is {1,2}-extendable: quadrilaterals jump by two straight to the
  // Hamilton cycle.
  Budget b8{10'000'000};
  CHECK(is_12_extendable_graph(complete_bipartite(3, 3), b8).holds);
}

TEST_CASE("Hamilton construction by extension records a verifiable trace") {
  for (const Graph& g : {complete(7), path_strong_k3(4), cycle_power_3k(3),
                         complete_multipartite(3, 3)}) {
    Budget budget{10'000'000};
    const HamiltonByExtension r = hamilton_by_extension(g, budget);
    REQUIRE_FALSE(r.budget_exceeded);
    REQUIRE(r.success);
    REQUIRE(r.hamilton_cycle.has_value());
    CHECK(r.hamilton_cycle->length() == g.order());
    CHECK(r.trace.start.length() == 3);
    std::size_t absorbed = 0;
    for (const ExtensionMove& move : r.trace.moves) absorbed += move.added.size();
    CHECK(absorbed == static_cast<std::size_t>(g.order()) - 3);
    const TraceCheck check = verify_extension_trace(g, r.trace);
    CHECK(check.ok);
    CHECK(check.error.empty());
  }

  // A pendant vertex blocks every spanning cycle: seeds get tried, every one
  // of them stalls, and the construction reports failure.
  const std::vector<std::pair<int, int>> pendant_edges = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}};
  const Graph pendant = Graph::from_edge_list(5, pendant_edges);
  Budget budget{10'000'000};
  const HamiltonByExtension stuck = hamilton_by_extension(pendant, budget);
  REQUIRE_FALSE(stuck.budget_exceeded);
  CHECK_FALSE(stuck.success);
  CHECK(stuck.seeds_tried == 4);

  // Triangle-free graphs have no seed to start from; the Petersen graph has
  // girth five, so it fails the same way as a plain even cycle.
  Budget budget2{10'000'000};
  const HamiltonByExtension c6 = hamilton_by_extension(cycle(6), budget2);
  CHECK_FALSE(c6.success);
  CHECK(c6.seeds_tried == 0);
  Budget budget3{10'000'000};
  const HamiltonByExtension pet = hamilton_by_extension(petersen(), budget3);
  REQUIRE_FALSE(pet.budget_exceeded);
  CHECK_FALSE(pet.success);
  CHECK(pet.seeds_tried == 0);
}

TEST_CASE("trace verification rejects tampered traces") {
  const Graph g = complete(6);
  Budget budget{10'000'000};
  const HamiltonByExtension r = hamilton_by_extension(g, budget);
  REQUIRE(r.success);
  REQUIRE(verify_extension_trace(g, r.trace).ok);

  // Claiming a different absorbed vertex than the result shows.
  ExtensionTrace lied = r.trace;
  REQUIRE_FALSE(lied.moves.empty());
  lied.moves[0].added = {99};
  CHECK_FALSE(verify_extension_trace(g, lied).ok);

  // Dropping an intermediate move breaks the one-vertex-per-step chain.
  ExtensionTrace gap = r.trace;
  gap.moves.erase(gap.moves.begin() + 1);
  CHECK_FALSE(verify_extension_trace(g, gap).ok);

  // Forging the template parameters must be caught by replay.
  ExtensionTrace forged = r.trace;
  bool perturbed = false;
  for (ExtensionMove& move : forged.moves) {
    if (move.kind != MoveKind::Exhaustive) {
      move.i = (move.i + 1) % forged.start.length();
      perturbed = true;
      break;
    }
  }
  if (perturbed) CHECK_FALSE(verify_extension_trace(g, forged).ok);

  // A start triangle that is not a triangle of g.
  ExtensionTrace alien = r.trace;
  const Graph sparse = cycle(6);
  CHECK_FALSE(verify_extension_trace(sparse, alien).ok);
}

TEST_CASE("move scan parameters stay inside the previous cycle") {
  // Every reported template move must reference positions of the previous
  // cycle, and its absorbed vertex must come from outside it.
  SplitMix64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 7 + static_cast<int>(rng.next_below(2)), 55);
    for (const Cycle& cycle : all_cycles(g)) {
      if (cycle.length() == g.order()) continue;
      const std::optional<ExtensionMove> move = find_extension_by_moves(g, cycle);
      if (!move.has_value()) continue;
      CHECK(move->i >= 0);
      CHECK(move->i < cycle.length());
      if (move->j >= 0) CHECK(move->j < cycle.length());
      if (move->k >= 0) CHECK(move->k < cycle.length());
    }
  }
}
