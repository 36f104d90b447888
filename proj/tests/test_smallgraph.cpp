#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "locdeg/families.hpp"
#include "locdeg/graph.hpp"
#include "locdeg/search.hpp"
#include "locdeg/smallgraph.hpp"

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

// Applies a permutation to the vertex labels of g.
Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) {
    const int a = std::min(perm[u], perm[v]);
    const int b = std::max(perm[u], perm[v]);
    out.add_edge(a, b);
  }
  return out;
}

}  // namespace

TEST_CASE("pair_bit packs pairs contiguously") {
  CHECK(pair_bit(0, 1) == 0);
  CHECK(pair_bit(0, 2) == 1);
  CHECK(pair_bit(1, 2) == 2);
  CHECK(pair_bit(0, 3) == 3);
  // Bits for n vertices occupy exactly the first mask_bits(n) positions.
  int seen = 0;
  for (int v = 1; v < 7; ++v)
    for (int u = 0; u < v; ++u) CHECK(pair_bit(u, v) == seen++);
  CHECK(seen == mask_bits(7));
}

TEST_CASE("mask round trip preserves the graph") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(11));
    const Graph g = random_graph(rng, n, 50);
    const SmallGraph sg = small_from_graph(g);
    CHECK(sg.n == n);
    CHECK(small_to_graph(sg) == g);
    CHECK(small_to_graph(sg.n, sg.mask) == g);
  }
  CHECK_THROWS_AS(small_from_graph(Graph(12)), std::invalid_argument);
}

TEST_CASE("canonical mask is invariant under relabelling") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(6));
    const Graph g = random_graph(rng, n, 50);
    const std::uint64_t canon = canonical_mask(n, small_from_graph(g).mask);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_below(i + 1));
        std::swap(perm[i], perm[j]);
      }
      const Graph h = relabel(g, perm);
      CHECK(canonical_mask(n, small_from_graph(h).mask) == canon);
    }
  }
}

TEST_CASE("canonical mask separates non-isomorphic graphs") {
  // Same degree sequence (2,2,2,2,2,2), different graphs.
  const Graph two_triangles = [] {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    return g;
  }();
  const std::uint64_t a = canonical_mask(6, small_from_graph(cycle(6)).mask);
  const std::uint64_t b = canonical_mask(6, small_from_graph(two_triangles).mask);
  CHECK(a != b);
}

TEST_CASE("isomorphism class counts match the known sequence") {
  const std::array<std::uint64_t, 7> expected = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const std::vector<std::uint64_t> classes = isomorphism_classes(n);
    CHECK(classes.size() == expected[n - 1]);
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    // Every listed mask is its own canonical form.
    for (const std::uint64_t mask : classes)
      CHECK(canonical_mask(n, mask) == mask);
  }
}
