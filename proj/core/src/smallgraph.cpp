#include "locdeg/smallgraph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace locdeg {

namespace {

constexpr int kMaxN = kSmallGraphMaxN;

// Adjacency rows as n-bit masks.
using Rows = std::array<std::uint16_t, kMaxN>;

Rows rows_from_mask(int n, std::uint64_t mask) {
  Rows row{};
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if ((mask >> pair_bit(u, v)) & 1) {
        row[u] |= std::uint16_t(1u << v);
        row[v] |= std::uint16_t(1u << u);
      }
  return row;
}

// Equitable colour refinement: start from degrees, then repeatedly split by
// the multiset of neighbour colours until stable.  Colour values are ranks of
// sorted signatures, so they are independent of the labelling.
void refine_colours(int n, const Rows& row, std::array<int, kMaxN>& colour) {
  for (int v = 0; v < n; ++v) colour[v] = __builtin_popcount(row[v]);
  for (int round = 0; round < n; ++round) {
    // signature: own colour followed by sorted neighbour colours
    std::array<std::array<int, kMaxN + 1>, kMaxN> sig{};
    for (int v = 0; v < n; ++v) {
      sig[v].fill(-1);
      sig[v][0] = colour[v];
      int k = 1;
      std::uint16_t bits = row[v];
      while (bits) {
        int w = __builtin_ctz(bits);
        bits &= std::uint16_t(bits - 1);
        sig[v][k++] = colour[w];
      }
      std::sort(sig[v].begin() + 1, sig[v].begin() + k);
    }
    std::array<int, kMaxN> order{};
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return sig[a] < sig[b]; });
    std::array<int, kMaxN> next{};
    int rank = 0;
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    for (int v = 0; v < n; ++v)
      if (next[v] != colour[v]) changed = true;
    colour = next;
    if (!changed) break;
  }
}

// Branch-and-bound minimisation of the placement key.  Placing a vertex at
// position j contributes block B_j: bit i of B_j records adjacency to the
// vertex already placed at position i.  Keys are compared block by block in
// placement order; the minimum over all colour-respecting placements is the
// canonical form.
struct CanonSearch {
  int n = 0;
  Rows row{};
  std::array<int, kMaxN> colour{};
  std::array<int, kMaxN> placed{};
  std::array<std::uint16_t, kMaxN> cur{};
  std::array<std::uint16_t, kMaxN> best{};
  std::uint16_t placed_mask = 0;

  void run() {
    best.fill(0xFFFF);
    dfs(0);
  }

  void dfs(int pos) {
    // compare the current prefix against the best key
    int cmp = 0;
    for (int j = 1; j < pos; ++j) {
      if (cur[j] != best[j]) {
        cmp = cur[j] < best[j] ? -1 : 1;
        break;
      }
    }
    if (cmp > 0) return;
    if (pos == n) {
      for (int j = 1; j < n; ++j) best[j] = cur[j];
      return;
    }

    int cell_colour = -1;
    for (int v = 0; v < n; ++v)
      if (!((placed_mask >> v) & 1) &&
          (cell_colour < 0 || colour[v] < cell_colour))
        cell_colour = colour[v];

    // candidates from the lowest unplaced colour class, cheapest block first
    std::array<std::pair<std::uint16_t, int>, kMaxN> cand{};
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (((placed_mask >> v) & 1) || colour[v] != cell_colour) continue;
      std::uint16_t block = 0;
      for (int i = 0; i < pos; ++i)
        block |= std::uint16_t(((row[v] >> placed[i]) & 1u) << i);
      cand[nc++] = {block, v};
    }
    std::sort(cand.begin(), cand.begin() + nc);

    for (int c = 0; c < nc; ++c) {
      auto [block, v] = cand[c];
      // interchangeable twins (equal rows ignoring the mutual bit) give
      // identical subtrees; keep the first representative only
      bool twin = false;
      for (int p = 0; p < c && !twin; ++p) {
        int w = cand[p].second;
        std::uint16_t rv = row[v] & std::uint16_t(~(1u << w));
        std::uint16_t rw = row[w] & std::uint16_t(~(1u << v));
        twin = rv == rw;
      }
      if (twin) continue;
      if (cmp == 0 && pos > 0 && block > best[pos]) break;  // sorted: all worse
      placed[pos] = v;
      cur[pos] = block;
      placed_mask |= std::uint16_t(1u << v);
      dfs(pos + 1);
      placed_mask &= std::uint16_t(~(1u << v));
    }
  }
};

}  // namespace

SmallGraph small_from_graph(const Graph& g) {
  if (g.order() > kMaxN)
    throw std::invalid_argument("small_from_graph: order exceeds " +
                                std::to_string(kMaxN));
  SmallGraph sg;
  sg.n = g.order();
  for (auto [u, v] : g.edges()) sg.mask |= 1ull << pair_bit(u, v);
  return sg;
}

Graph small_to_graph(int n, std::uint64_t mask) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if ((mask >> pair_bit(u, v)) & 1) g.add_edge(u, v);
  return g;
}

Graph small_to_graph(const SmallGraph& sg) { return small_to_graph(sg.n, sg.mask); }

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  if (n > kMaxN) throw std::invalid_argument("canonical_mask: n too large");
  if (n <= 1) return 0;
  CanonSearch search;
  search.n = n;
  search.row = rows_from_mask(n, mask);
  refine_colours(n, search.row, search.colour);
  search.run();
  std::uint64_t out = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((search.best[j] >> i) & 1) out |= 1ull << pair_bit(i, j);
  return out;
}

std::vector<std::uint64_t> isomorphism_classes(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("isomorphism_classes: supported for 1 <= n <= 7");
  std::unordered_set<std::uint64_t> seen;
  const std::uint64_t total = 1ull << mask_bits(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    seen.insert(canonical_mask(n, mask));
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace locdeg
