#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "locdeg/cycles.hpp"
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

std::uint64_t count_cycles(const Graph& g) {
  Budget budget{100'000'000};
  const CycleEnumeration e =
      enumerate_cycles(g, budget, [](std::span<const int>) { return true; });
  REQUIRE_FALSE(e.budget_exceeded);
  return e.count;
}

}  // namespace

TEST_CASE("cycle validation accepts rotations and reflections") {
  const Graph g = cycle(5);
  const Cycle base = Cycle::validate(g, std::vector<int>{0, 1, 2, 3, 4});
  CHECK(base.length() == 5);
  CHECK(base.vertices() == std::vector<int>{0, 1, 2, 3, 4});

  // Same cycle written from another starting point and in reverse.
  CHECK(Cycle::validate(g, std::vector<int>{3, 4, 0, 1, 2}) == base);
  CHECK(Cycle::validate(g, std::vector<int>{0, 4, 3, 2, 1}) == base);

  // Canonical rotation: smallest vertex first, then its smaller neighbour.
  // The input traverses 2-1, 1-3, 3-0, 0-2, so from 0 the neighbours on the
  // cycle are 2 and 3, and the rotation leaves along 2.
  const Graph k4 = complete(4);
  const Cycle c = Cycle::validate(k4, std::vector<int>{2, 1, 3, 0});
  CHECK(c.vertices() == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("cycle validation rejects malformed sequences") {
  const Graph g = cycle(6);
  CHECK_THROWS_AS(Cycle::validate(g, std::vector<int>{0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Cycle::validate(g, std::vector<int>{0, 1, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Cycle::validate(g, std::vector<int>{0, 1, 3}),
                  std::invalid_argument);  // 1-3 is not an edge
  CHECK_THROWS_AS(Cycle::validate(g, std::vector<int>{0, 1, 9}),
                  std::invalid_argument);
  // Closing edge missing: a path, not a cycle.
  CHECK_THROWS_AS(Cycle::validate(g, std::vector<int>{0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("cycle position lookups") {
  const Cycle c = Cycle::validate(cycle(5), std::vector<int>{0, 1, 2, 3, 4});
  CHECK(c.at(0) == 0);
  CHECK(c.at(7) == 2);
  CHECK(c.at(-1) == 4);
  CHECK(c.contains(3));
  CHECK_FALSE(c.contains(5));
  CHECK_FALSE(c.contains(-2));
  CHECK(c.position_of(4) == 4);
  CHECK(c.position_of(9) == -1);
}

TEST_CASE("enumeration counts on known graphs") {
  CHECK(count_cycles(cycle(6)) == 1);
  CHECK(count_cycles(path(6)) == 0);
  CHECK(count_cycles(complete(4)) == 7);    // 4 triangles + 3 quadrilaterals
  CHECK(count_cycles(complete(5)) == 37);
  CHECK(count_cycles(complete(7)) == 1172);
  CHECK(count_cycles(complete_bipartite(3, 3)) == 15);  // 9 C_4 + 6 C_6
  CHECK(count_cycles(petersen()) == 57);  // 12 C_5, 10 C_6, 15 C_8, 20 C_9
}

TEST_CASE("enumeration visits each cycle exactly once, in canonical form") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_graph(rng, 5 + static_cast<int>(rng.next_below(3)), 55);
    Budget budget{10'000'000};
    std::set<std::vector<int>> seen;
    const CycleEnumeration e =
        enumerate_cycles(g, budget, [&](std::span<const int> seq) {
          const Cycle c = Cycle::validate(g, seq);  // throws on a bad cycle
          const std::vector<int> key(seq.begin(), seq.end());
          CHECK(c.vertices() == key);  // emitted in canonical rotation
          CHECK(seen.insert(key).second);
          return true;
        });
    REQUIRE_FALSE(e.budget_exceeded);
    CHECK(e.count == seen.size());
  }
}

TEST_CASE("enumeration respects budget and early stop") {
  Budget tiny{50};
  const CycleEnumeration starved = enumerate_cycles(
      complete(8), tiny, [](std::span<const int>) { return true; });
  CHECK(starved.budget_exceeded);
  CHECK(tiny.exhausted);

  Budget budget{1'000'000};
  const CycleEnumeration stopped = enumerate_cycles(
      complete(8), budget, [](std::span<const int>) { return false; });
  CHECK(stopped.stopped);
  CHECK(stopped.count == 1);
  CHECK_FALSE(stopped.budget_exceeded);
}

TEST_CASE("Hamiltonicity on known graphs") {
  for (const Graph& g : {complete(7), cycle(9), balanced_complete_bipartite(4),
                         path_strong_k3(5), cycle_power_3k(3)}) {
    Budget budget{10'000'000};
    const HamiltonicityResult r = is_hamiltonian(g, budget);
    REQUIRE_FALSE(r.budget_exceeded);
    CHECK(r.hamiltonian);
    REQUIRE(r.cycle.has_value());
    CHECK(r.cycle->length() == g.order());
    // The witness cycle must validate against the graph.
    CHECK_NOTHROW(Cycle::validate(g, r.cycle->vertices()));
  }

  // Petersen is the classic hypohamiltonian graph: connected, 3-regular,
  // vertex-transitive, and still not Hamiltonian.
  for (const Graph& g :
       {petersen(), path(6), complete_bipartite(3, 4), Graph(3), complete(2)}) {
    Budget budget{10'000'000};
    const HamiltonicityResult r = is_hamiltonian(g, budget);
    REQUIRE_FALSE(r.budget_exceeded);
    CHECK_FALSE(r.hamiltonian);
  }
}

TEST_CASE("fixed-length cycle search agrees with full enumeration") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(5));
    const Graph g = random_graph(rng, n, 30 + static_cast<int>(rng.next_below(55)));

    std::set<int> lengths;
    Budget enumerate_budget{10'000'000};
    enumerate_cycles(g, enumerate_budget, [&](std::span<const int> seq) {
      lengths.insert(static_cast<int>(seq.size()));
      return true;
    });
    REQUIRE_FALSE(enumerate_budget.exhausted);

    for (int len = 3; len <= n; ++len) {
      Budget budget{10'000'000};
      const LengthSearch s = has_cycle_of_length(g, len, budget);
      REQUIRE_FALSE(s.budget_exceeded);
      CAPTURE(n);
      CAPTURE(len);
      CHECK(s.found == (lengths.count(len) > 0));
    }

    Budget spectrum_budget{10'000'000};
    const SpectrumResult spectrum = cycle_length_spectrum(g, spectrum_budget);
    CHECK(spectrum.lengths == std::vector<int>(lengths.begin(), lengths.end()));
  }
}

TEST_CASE("Petersen cycle spectrum has the famous gaps") {
  const SpectrumResult s = cycle_length_spectrum(petersen());
  CHECK(s.lengths == std::vector<int>{5, 6, 8, 9});
}

TEST_CASE("pancyclicity") {
  Budget b1{10'000'000};
  CHECK(is_pancyclic(complete(7), b1).holds);

  Budget b2{10'000'000};
  const PancyclicityCheck c6 = is_pancyclic(cycle(6), b2);
  CHECK_FALSE(c6.holds);
  CHECK(c6.missing == std::vector<int>{3, 4, 5});

  // Bipartite graphs miss every odd length.
  Budget b3{10'000'000};
  const PancyclicityCheck k44 = is_pancyclic(balanced_complete_bipartite(4), b3);
  CHECK_FALSE(k44.holds);
  CHECK(k44.missing == std::vector<int>{3, 5, 7});

  Budget b4{10'000'000};
  CHECK(is_pancyclic(cycle_power_3k(2), b4).holds);
}

TEST_CASE("weak pancyclicity spans girth to circumference") {
  Budget b1{10'000'000};
  CHECK(is_weakly_pancyclic(cycle(6), b1).holds);  // girth = circumference

  // K_44 has lengths {4, 6, 8}: missing 5 and 7 inside the range.
  Budget b2{10'000'000};
  const PancyclicityCheck k44 =
      is_weakly_pancyclic(balanced_complete_bipartite(4), b2);
  CHECK_FALSE(k44.holds);
  CHECK(k44.missing == std::vector<int>{5, 7});

  // Petersen: girth 5, circumference 9, no 7-cycle.
  Budget b3{10'000'000};
  const PancyclicityCheck pet = is_weakly_pancyclic(petersen(), b3);
  CHECK_FALSE(pet.holds);
  CHECK(pet.missing == std::vector<int>{7});

  // Forests hold vacuously.
  Budget b4{10'000'000};
  CHECK(is_weakly_pancyclic(path(7), b4).holds);
  Budget b5{10'000'000};
  CHECK(is_weakly_pancyclic(complete(6), b5).holds);
}

TEST_CASE("searches report budget exhaustion instead of guessing") {
  Budget tiny{5};
  const HamiltonicityResult h = is_hamiltonian(path_strong_k3(6), tiny);
  CHECK(h.budget_exceeded);
  CHECK_FALSE(h.hamiltonian);

  Budget tiny2{5};
  const LengthSearch l = has_cycle_of_length(path_strong_k3(6), 9, tiny2);
  CHECK(l.budget_exceeded);
  CHECK_FALSE(l.found);

  Budget tiny3{5};
  const PancyclicityCheck p = is_pancyclic(path_strong_k3(6), tiny3);
  CHECK(p.budget_exceeded);
}
