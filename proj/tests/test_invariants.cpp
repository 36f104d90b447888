#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "locdeg/families.hpp"
#include "locdeg/graph.hpp"
#include "locdeg/invariants.hpp"
#include "locdeg/planarity.hpp"
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

}  // namespace

TEST_CASE("vertex connectivity on known graphs") {
  CHECK(vertex_connectivity(complete(6)).value == 5);
  CHECK(vertex_connectivity(complete(6)).cut.empty());
  CHECK(vertex_connectivity(complete(1)).value == 0);
  CHECK(vertex_connectivity(Graph(3)).value == 0);  // disconnected
  CHECK(vertex_connectivity(path(5)).value == 1);
  CHECK(vertex_connectivity(cycle(7)).value == 2);
  CHECK(vertex_connectivity(petersen()).value == 3);
  CHECK(vertex_connectivity(complete_bipartite(3, 5)).value == 3);
  CHECK(vertex_connectivity(path_strong_k3(5)).value == 3);
}

TEST_CASE("edge connectivity on known graphs") {
  CHECK(edge_connectivity(complete(6)).value == 5);
  CHECK(edge_connectivity(path(5)).value == 1);
  CHECK(edge_connectivity(cycle(7)).value == 2);
  CHECK(edge_connectivity(petersen()).value == 3);
  CHECK(edge_connectivity(Graph(4)).value == 0);
  CHECK(edge_connectivity(path_strong_k3(4)).value == 5);

  // The bridged-cliques family keeps a lambda < delta gap.
  const Graph gap = lambda_gap_family(3);
  CHECK(gap.order() == 22);
  CHECK(gap.min_degree() == 10);
  CHECK(edge_connectivity(gap).value == 9);
}

TEST_CASE("returned cuts verify and match the reported value") {
  SplitMix64 rng(31);
  std::vector<Graph> pool = {path(6),   cycle(8),      petersen(),
                             complete_bipartite(2, 4), path_strong_k2(4),
                             lambda_gap_family(3)};
  for (int trial = 0; trial < 40; ++trial)
    pool.push_back(random_graph(rng, 2 + static_cast<int>(rng.next_below(8)),
                                25 + static_cast<int>(rng.next_below(60))));

  for (const Graph& g : pool) {
    const VertexConnectivity k = vertex_connectivity(g);
    if (!k.cut.empty()) {
      CHECK(static_cast<int>(k.cut.size()) == k.value);
      CHECK(verify_vertex_cut(g, k.cut));
    }
    const EdgeConnectivity l = edge_connectivity(g);
    if (!l.cut.empty()) {
      CHECK(static_cast<int>(l.cut.size()) == l.value);
      CHECK(verify_edge_cut(g, l.cut));
    }
  }
}

TEST_CASE("flow-based connectivity equals the deletion oracle") {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(6));
    const Graph g = random_graph(rng, n, 20 + static_cast<int>(rng.next_below(70)));
    CAPTURE(n);
    CHECK(vertex_connectivity(g).value == vertex_connectivity_by_deletion(g));
    CHECK(edge_connectivity(g).value == edge_connectivity_by_deletion(g));
  }
}

TEST_CASE("cut verifiers reject non-cuts") {
  const Graph g = cycle(6);
  CHECK_FALSE(verify_vertex_cut(g, {0}));       // cycle stays connected
  CHECK(verify_vertex_cut(g, {0, 3}));
  CHECK_FALSE(verify_edge_cut(g, {{0, 1}}));
  CHECK(verify_edge_cut(g, {{0, 1}, {3, 4}}));
  CHECK(verify_vertex_cut(complete(3), {0, 1}));  // one vertex left
}

TEST_CASE("diameter") {
  CHECK(*diameter(complete(5)) == 1);
  CHECK(*diameter(path(6)) == 5);
  CHECK(*diameter(cycle(9)) == 4);
  CHECK(*diameter(petersen()) == 2);
  CHECK(*diameter(Graph(1)) == 0);
  CHECK_FALSE(diameter(Graph(2)).has_value());
  CHECK_FALSE(diameter(Graph(0)).has_value());
  for (int m = 3; m <= 8; ++m) CHECK(*diameter(path_strong_k3(m)) == m - 1);
}

TEST_CASE("girth") {
  CHECK(*girth(complete(4)) == 3);
  CHECK(*girth(cycle(9)) == 9);
  CHECK(*girth(petersen()) == 5);
  CHECK(*girth(complete_bipartite(2, 3)) == 4);
  CHECK_FALSE(girth(path(7)).has_value());
  CHECK_FALSE(girth(Graph(4)).has_value());

  // Disconnected graph with cycles in one component only.
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(4, 5);
  CHECK(*girth(g) == 3);
}

TEST_CASE("planar graphs come with a certified embedding") {
  for (const Graph& g :
       {complete(4), path(6), cycle(8), complete_bipartite(2, 3),
        path_strong_k2(5), Graph(1)}) {
    const PlanarityResult p = is_planar(g);
    CHECK(p.planar);
    if (is_connected(g) && g.order() >= 1) {
      CHECK(verify_embedding(g, p.embedding));
    }
  }
}

TEST_CASE("non-planar graphs come with a certified subdivision") {
  for (const Graph& g :
       {complete(5), complete_bipartite(3, 3), petersen(), complete(6),
        path_strong_k3(4)}) {
    const PlanarityResult p = is_planar(g);
    CHECK_FALSE(p.planar);
    REQUIRE(p.witness.has_value());
    CHECK(verify_kuratowski_witness(g, *p.witness));
  }
  // Petersen has no K_5 subdivision (it is 3-regular), so the witness must
  // be a K_33 subdivision.
  const PlanarityResult pet = is_planar(petersen());
  CHECK(pet.witness->kind == KuratowskiWitness::Kind::K33);
}

TEST_CASE("embedding verifier rejects a corrupted rotation") {
  const Graph g = complete(4);
  PlanarityResult p = is_planar(g);
  REQUIRE(p.planar);
  REQUIRE(verify_embedding(g, p.embedding));
  // Swapping two neighbours in one rotation changes the face structure and
  // breaks the Euler relation.
  std::vector<std::vector<int>> broken = p.embedding;
  bool swapped = false;
  for (auto& rotation : broken) {
    if (rotation.size() >= 2 && !swapped) {
      std::swap(rotation[0], rotation[1]);
      swapped = true;
    }
  }
  CHECK(swapped);
  CHECK_FALSE(verify_embedding(g, broken));
}

TEST_CASE("kuratowski witness verifier rejects corrupted witnesses") {
  const PlanarityResult p = is_planar(complete(5));
  REQUIRE(p.witness.has_value());
  KuratowskiWitness w = *p.witness;
  REQUIRE(verify_kuratowski_witness(complete(5), w));

  // A witness transplanted to a graph missing the needed edges must fail.
  CHECK_FALSE(verify_kuratowski_witness(cycle(5), w));

  // Dropping one path breaks the branch connection pattern.
  KuratowskiWitness short_one = w;
  short_one.paths.pop_back();
  CHECK_FALSE(verify_kuratowski_witness(complete(5), short_one));
}

TEST_CASE("planarity verdicts match the exhaustive subdivision search") {
  SplitMix64 rng(61);
  int non_planar_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(4));
    const Graph g = random_graph(rng, n, 40 + static_cast<int>(rng.next_below(50)));
    Budget budget{50'000'000};
    const SubdivisionSearch s = kuratowski_by_exhaustive_search(g, budget);
    REQUIRE_FALSE(s.budget_exceeded);
    const PlanarityResult p = is_planar(g);
    CHECK(p.planar == !s.witness.has_value());
    if (s.witness.has_value()) {
      ++non_planar_seen;
      CHECK(verify_kuratowski_witness(g, *s.witness));
    }
  }
  CHECK(non_planar_seen > 5);  // the sample actually exercises both outcomes
}
