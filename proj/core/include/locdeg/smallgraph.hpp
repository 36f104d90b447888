#pragma once

// Graphs on at most 11 vertices packed into a 64-bit edge mask, with a
// canonical-form routine fast enough to sweep every labelled graph on
// 7 vertices (2^21 masks) in seconds.
//
// Pair (u, v) with u < v occupies bit v*(v-1)/2 + u, so graphs on fewer
// vertices embed as low-bit prefixes.

#include <cstdint>
#include <vector>

#include "locdeg/graph.hpp"

namespace locdeg {

inline constexpr int kSmallGraphMaxN = 11;

constexpr int pair_bit(int u, int v) {  // requires u < v
  return v * (v - 1) / 2 + u;
}

struct SmallGraph {
  int n = 0;
  std::uint64_t mask = 0;
};

SmallGraph small_from_graph(const Graph& g);  // throws if g.order() > 11
Graph small_to_graph(const SmallGraph& sg);
Graph small_to_graph(int n, std::uint64_t mask);

// Canonical representative of the isomorphism class of (n, mask): the same
// value for exactly the masks reachable from each other by relabelling.
std::uint64_t canonical_mask(int n, std::uint64_t mask);

// Number of vertex pairs, i.e. bits used by a mask on n vertices.
constexpr int mask_bits(int n) { return n * (n - 1) / 2; }

// All isomorphism classes on exactly n vertices as sorted canonical masks,
// obtained by sweeping every labelled graph.  Practical for n <= 7.
std::vector<std::uint64_t> isomorphism_classes(int n);

}  // namespace locdeg
