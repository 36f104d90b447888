// Tests for the graph family constructors and the textual family-spec
// round trip.  Structural identities (orders, sizes, degree multisets,
// equality with products/powers built directly) pin each generator down.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "locdeg/families.hpp"
#include "locdeg/graph.hpp"
#include "locdeg/invariants.hpp"
#include "locdeg/predicates.hpp"

using namespace locdeg;

namespace {

// Multiset of vertex degrees, sorted ascending.
std::vector<int> degree_multiset(const Graph& g) {
  std::vector<int> degrees;
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool is_regular(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

std::vector<int> identity_vertices(int n) {
  std::vector<int> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  return vs;
}

}  // namespace

TEST_CASE("complete, path and cycle graphs") {
  CHECK(complete(0).order() == 0);
  CHECK(complete(1).edge_count() ==0);
  CHECK(complete(5).edge_count() ==10);
  CHECK(is_regular(complete(5), 4));

  CHECK(path(1).edge_count() ==0);
  Graph p6 = path(6);
  CHECK(p6.edge_count() ==5);
  CHECK(p6.degree(0) == 1);
  CHECK(p6.degree(3) == 2);
  for (int v = 0; v + 1 < 6; ++v) CHECK(p6.adjacent(v, v + 1));

  Graph c8 = cycle(8);
  CHECK(c8.edge_count() ==8);
  CHECK(is_regular(c8, 2));
  CHECK(c8.adjacent(7, 0));

  CHECK_THROWS_AS(complete(-1), std::invalid_argument);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("complete bipartite and multipartite graphs") {
  Graph g = complete_bipartite(3, 5);
  CHECK(g.order() == 8);
  CHECK(g.edge_count() ==15);
  for (int u = 0; u < 3; ++u) CHECK(g.degree(u) == 5);
  for (int v = 3; v < 8; ++v) CHECK(g.degree(v) == 3);
  CHECK_FALSE(g.adjacent(0, 1));  // same side
  CHECK_FALSE(g.adjacent(3, 4));
  CHECK(g.adjacent(2, 7));

  // Three parts of size one joined pairwise is a triangle.
  CHECK(complete_multipartite(3, 1) == complete(3));

  // The octahedron: three parts of size two, 4-regular on 6 vertices.
  Graph octa = complete_multipartite(3, 2);
  CHECK(octa.order() == 6);
  CHECK(octa.edge_count() ==12);
  CHECK(is_regular(octa, 4));
  CHECK_FALSE(octa.adjacent(0, 1));  // parts are {0,1}, {2,3}, {4,5}
  CHECK(octa.adjacent(0, 2));

  Graph k2222 = complete_multipartite(4, 2);
  CHECK(k2222.order() == 8);
  CHECK(is_regular(k2222, 6));

  CHECK_THROWS_AS(complete_multipartite(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite(3, 0), std::invalid_argument);
}

TEST_CASE("Petersen graph layout: outer cycle, spokes, inner pentagram") {
  Graph g = petersen();
  CHECK(g.order() == 10);
  CHECK(g.edge_count() ==15);
  CHECK(is_regular(g, 3));
  for (int i = 0; i < 5; ++i) {
    CHECK(g.adjacent(i, (i + 1) % 5));          // outer cycle
    CHECK(g.adjacent(i, i + 5));                // spoke
    CHECK(g.adjacent(i + 5, (i + 2) % 5 + 5));  // pentagram step of two
    CHECK_FALSE(g.adjacent(i + 5, (i + 1) % 5 + 5));
  }
}

TEST_CASE("strong products of paths and cycles with small cliques") {
  // Two fully joined triangle layers form K_6.
  CHECK(path_strong_k3(2) == complete(6));

  for (int m = 3; m <= 6; ++m) {
    Graph g = path_strong_k3(m);
    CHECK(g.order() == 3 * m);
    CHECK(g.edge_count() ==12 * m - 9);
    std::vector<int> expected(6, 5);                   // two end layers
    expected.insert(expected.end(), 3 * m - 6, 8);     // interior layers
    CHECK(degree_multiset(g) == expected);
  }

  // A triangle blown up by K_3 is K_9.
  CHECK(cycle_strong_k3(3) == complete(9));
  for (int m = 4; m <= 6; ++m) {
    Graph g = cycle_strong_k3(m);
    CHECK(g.order() == 3 * m);
    CHECK(g.edge_count() ==12 * m);
    CHECK(is_regular(g, 8));
  }
  CHECK(cycle_strong_k3(5) != complete(15));

  for (int m = 3; m <= 6; ++m) {
    Graph g = path_strong_k2(m);
    CHECK(g.order() == 2 * m);
    CHECK(g.edge_count() ==5 * m - 4);
    std::vector<int> expected(4, 3);
    expected.insert(expected.end(), 2 * m - 4, 5);
    CHECK(degree_multiset(g) == expected);
  }

  CHECK_THROWS_AS(path_strong_k3(1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_strong_k3(2), std::invalid_argument);
  CHECK_THROWS_AS(path_strong_k2(2), std::invalid_argument);
}

TEST_CASE("join with a same-order clique") {
  Graph base = petersen();
  Graph host = join_with_clique(base);
  CHECK(host.order() == 20);
  // The first half induces the base graph again.
  CHECK(induced_subgraph(host, identity_vertices(10)).graph == base);
  // The second half is a clique and every cross edge is present.
  for (int u = 10; u < 20; ++u) {
    for (int v = u + 1; v < 20; ++v) CHECK(host.adjacent(u, v));
    CHECK(host.degree(u) == 19);
  }
  for (int u = 0; u < 10; ++u) CHECK(host.degree(u) == 13);

  CHECK(is_locally_dirac(host).holds);
  CHECK(is_locally_dirac(join_with_clique(path(5))).holds);

  CHECK_THROWS_AS(join_with_clique(complete(2)), std::invalid_argument);
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  CHECK_THROWS_AS(join_with_clique(disconnected), std::invalid_argument);
}

TEST_CASE("two bridged cliques with an edge-connectivity gap") {
  Graph g = lambda_gap_family(3);
  CHECK(g.order() == 22);
  // Each side induces K_11; the bridge joins {0,1,2} to {11,12,13}.
  CHECK(induced_subgraph(g, identity_vertices(11)).graph == complete(11));
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) CHECK(g.adjacent(u, 11 + v));
  }
  CHECK_FALSE(g.adjacent(10, 21));
  CHECK_FALSE(g.adjacent(3, 11));
  CHECK(g.min_degree() == 10);  // k^2 + 1
  CHECK(g.max_degree() == 13);

  Graph g4 = lambda_gap_family(4);
  CHECK(g4.order() == 36);
  CHECK(g4.min_degree() == 17);

  CHECK_THROWS_AS(lambda_gap_family(2), std::invalid_argument);
}

TEST_CASE("apex over the last layer keeps minimum degree three") {
  for (int m = 3; m <= 6; ++m) {
    Graph g = ore_min_degree3(m);
    CHECK(g.order() == 3 * m + 1);
    CHECK(induced_subgraph(g, identity_vertices(3 * m)).graph ==
          path_strong_k3(m));
    int apex = 3 * m;
    CHECK(g.degree(apex) == 3);
    CHECK(g.neighbours(apex) ==
          std::vector<int>{3 * m - 3, 3 * m - 2, 3 * m - 1});
    CHECK(g.min_degree() == 3);
  }
  CHECK_THROWS_AS(ore_min_degree3(2), std::invalid_argument);
}

TEST_CASE("diameter-extremal Ore graphs hit the bound exactly") {
  for (int n = 9; n <= 16; ++n) {
    Graph g = ore_diameter_extremal(n);
    CHECK(g.order() == n);
    CHECK(is_connected(g));
    CHECK(diameter(g) == (n + 1) / 3);
  }
  CHECK(is_locally_ore(ore_diameter_extremal(9)).holds);
  CHECK(is_locally_ore(ore_diameter_extremal(12)).holds);
  CHECK_THROWS_AS(ore_diameter_extremal(8), std::invalid_argument);
}

TEST_CASE("aliases built from other generators") {
  for (int half = 2; half <= 5; ++half) {
    CHECK(balanced_complete_bipartite(half) ==
          complete_bipartite(half, half));
  }
  CHECK_THROWS_AS(balanced_complete_bipartite(1), std::invalid_argument);

  CHECK(cycle_power_3k(1) == complete(3));
  for (int k = 2; k <= 4; ++k) {
    CHECK(cycle_power_3k(k) == graph_power(cycle(3 * k), k));
  }
  CHECK(is_regular(cycle_power_3k(2), 4));
  CHECK(is_regular(cycle_power_3k(4), 8));
  CHECK_THROWS_AS(cycle_power_3k(0), std::invalid_argument);
}

TEST_CASE("family specs parse, print and round trip") {
  FamilySpec bare = parse_family_spec("petersen");
  CHECK(bare.family == "petersen");
  CHECK(bare.params.empty());
  CHECK(to_string(bare) == "petersen");

  FamilySpec one = parse_family_spec("path-strong-k3 m=5");
  CHECK(one.params == std::map<std::string, int>{{"m", 5}});
  CHECK(to_string(one) == "path-strong-k3 m=5");

  FamilySpec two = parse_family_spec("complete-bipartite a=3 b=4");
  CHECK(two.params == std::map<std::string, int>{{"a", 3}, {"b", 4}});
  CHECK(parse_family_spec(to_string(two)) == two);

  CHECK_THROWS_AS(parse_family_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("   "), std::invalid_argument);
  CHECK_THROWS_WITH(parse_family_spec("cycle n"),
                    "family spec: expected key=value, got 'n'");
  CHECK_THROWS_AS(parse_family_spec("cycle =3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("cycle n="), std::invalid_argument);
  CHECK_THROWS_WITH(parse_family_spec("cycle n=x"),
                    "family spec: bad integer 'x' for key 'n'");
  CHECK_THROWS_WITH(parse_family_spec("cycle n=3 n=4"),
                    "family spec: duplicate key 'n'");
}

TEST_CASE("building from a spec matches the direct constructors") {
  CHECK(build_family({"complete", {{"n", 6}}}) == complete(6));
  CHECK(build_family({"path", {{"n", 4}}}) == path(4));
  CHECK(build_family({"cycle", {{"n", 7}}}) == cycle(7));
  CHECK(build_family({"complete-bipartite", {{"a", 2}, {"b", 5}}}) ==
        complete_bipartite(2, 5));
  CHECK(build_family({"complete-multipartite", {{"parts", 3}, {"size", 2}}}) ==
        complete_multipartite(3, 2));
  CHECK(build_family({"petersen", {}}) == petersen());
  CHECK(build_family({"path-strong-k3", {{"m", 4}}}) == path_strong_k3(4));
  CHECK(build_family({"cycle-strong-k3", {{"m", 5}}}) == cycle_strong_k3(5));
  CHECK(build_family({"path-strong-k2", {{"m", 4}}}) == path_strong_k2(4));
  CHECK(build_family({"lambda-gap-family", {{"k", 3}}}) ==
        lambda_gap_family(3));
  CHECK(build_family({"ore-min-degree3", {{"m", 3}}}) == ore_min_degree3(3));
  CHECK(build_family({"ore-diameter-extremal", {{"n", 11}}}) ==
        ore_diameter_extremal(11));
  CHECK(build_family({"balanced-complete-bipartite", {{"half", 3}}}) ==
        balanced_complete_bipartite(3));
  CHECK(build_family({"cycle-power-3k", {{"k", 2}}}) == cycle_power_3k(2));

  CHECK_THROWS_WITH(build_family({"grid", {{"n", 3}}}),
                    "unknown family 'grid'");
  CHECK_THROWS_WITH(build_family({"cycle", {}}),
                    "family 'cycle' needs parameter 'n'");
  CHECK_THROWS_WITH(build_family({"petersen", {{"n", 1}}}),
                    "family 'petersen' does not take parameter 'n'");
  // Constructor-level validation still applies after dispatch.
  CHECK_THROWS_AS(build_family({"cycle", {{"n", 2}}}), std::invalid_argument);
}

TEST_CASE("the family registry lists every id in order") {
  std::vector<std::string> expected = {
      "balanced-complete-bipartite",
      "complete",
      "complete-bipartite",
      "complete-multipartite",
      "cycle",
      "cycle-power-3k",
      "cycle-strong-k3",
      "lambda-gap-family",
      "ore-diameter-extremal",
      "ore-min-degree3",
      "path",
      "path-strong-k2",
      "path-strong-k3",
      "petersen",
  };
  CHECK(family_ids() == expected);
}
