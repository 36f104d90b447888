#include "locdeg/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace locdeg {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Reconstructs the subdivision structure (branch vertices and the paths of
// degree-2 vertices between them) from a bare Kuratowski edge set.
std::optional<KuratowskiWitness> decompose_kuratowski(
    const std::vector<std::pair<int, int>>& fedges) {
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : fedges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> branch;
  int deg3 = 0;
  int deg4 = 0;
  for (auto& [v, nb] : adj) {
    std::sort(nb.begin(), nb.end());
    if (nb.size() == 3) {
      ++deg3;
      branch.push_back(v);
    } else if (nb.size() == 4) {
      ++deg4;
      branch.push_back(v);
    } else if (nb.size() != 2) {
      return std::nullopt;
    }
  }
  KuratowskiWitness w;
  if (deg4 == 5 && deg3 == 0) {
    w.kind = KuratowskiWitness::Kind::K5;
  } else if (deg3 == 6 && deg4 == 0) {
    w.kind = KuratowskiWitness::Kind::K33;
  } else {
    return std::nullopt;
  }
  w.branch_vertices = branch;  // ascending: std::map iteration order

  std::set<std::pair<int, int>> used;
  auto mark = [&used](int a, int b) {
    used.insert(std::minmax(a, b));
  };
  auto seen = [&used](int a, int b) {
    return used.count(std::minmax(a, b)) > 0;
  };
  std::set<int> branch_set(branch.begin(), branch.end());
  for (int b : branch) {
    for (int first : adj[b]) {
      if (seen(b, first)) continue;
      std::vector<int> path{b, first};
      mark(b, first);
      int prev = b;
      int cur = first;
      while (!branch_set.count(cur)) {
        const std::vector<int>& nb = adj[cur];
        if (nb.size() != 2) return std::nullopt;
        int next = nb[0] == prev ? nb[1] : nb[0];
        mark(cur, next);
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      w.paths.push_back(std::move(path));
    }
  }
  std::size_t expect = w.kind == KuratowskiWitness::Kind::K5 ? 10 : 9;
  if (w.paths.size() != expect || used.size() != fedges.size()) {
    return std::nullopt;
  }
  return w;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
  PlanarityResult out;
  const int n = g.order();
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto eindex = boost::get(boost::edge_index, bg);
  int next_index = 0;
  for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) {
    boost::put(eindex, *ei, next_index++);
  }

  std::vector<std::vector<BoostEdge>> storage(n);
  auto embedding = boost::make_iterator_property_map(
      storage.begin(), boost::get(boost::vertex_index, bg));
  std::vector<BoostEdge> kuratowski;

  out.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));

  if (out.planar) {
    out.embedding.resize(n);
    for (int v = 0; v < n; ++v) {
      for (const BoostEdge& e : storage[v]) {
        int s = static_cast<int>(boost::source(e, bg));
        int t = static_cast<int>(boost::target(e, bg));
        out.embedding[v].push_back(s == v ? t : s);
      }
    }
  } else {
    std::vector<std::pair<int, int>> fedges;
    for (const BoostEdge& e : kuratowski) {
      fedges.push_back({static_cast<int>(boost::source(e, bg)),
                        static_cast<int>(boost::target(e, bg))});
    }
    out.witness = decompose_kuratowski(fedges);
    if (!out.witness.has_value()) {
      // The planarity test can hand back a Kuratowski subgraph with a few
      // surplus edges, which the direct decomposition rejects.  The edge set
      // still contains a subdivision, so search just that subgraph for it.
      Graph sub(n);
      for (auto [u, v] : fedges) {
        sub.add_edge(std::min(u, v), std::max(u, v));
      }
      Budget fallback;
      fallback.limit = 200'000'000;
      SubdivisionSearch refined = kuratowski_by_exhaustive_search(sub, fallback);
      out.witness = std::move(refined.witness);
    }
  }
  return out;
}

bool verify_kuratowski_witness(const Graph& g, const KuratowskiWitness& w) {
  const int n = g.order();
  std::set<int> branch;
  for (int v : w.branch_vertices) {
    if (v < 0 || v >= n || !branch.insert(v).second) return false;
  }
  std::size_t want_branch = w.kind == KuratowskiWitness::Kind::K5 ? 5 : 6;
  std::size_t want_paths = w.kind == KuratowskiWitness::Kind::K5 ? 10 : 9;
  if (branch.size() != want_branch || w.paths.size() != want_paths) {
    return false;
  }

  std::vector<char> internal_used(n, 0);
  std::map<std::pair<int, int>, int> pair_paths;
  for (const std::vector<int>& path : w.paths) {
    if (path.size() < 2) return false;
    int a = path.front();
    int b = path.back();
    if (a == b || !branch.count(a) || !branch.count(b)) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i] < 0 || path[i] >= n || path[i + 1] < 0 ||
          path[i + 1] >= n || !g.adjacent(path[i], path[i + 1])) {
        return false;
      }
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      int v = path[i];
      if (branch.count(v) || internal_used[v]) return false;
      internal_used[v] = 1;
    }
    ++pair_paths[std::minmax(a, b)];
  }

  if (w.kind == KuratowskiWitness::Kind::K5) {
    for (int a : branch) {
      for (int b : branch) {
        if (a < b && pair_paths[{a, b}] != 1) return false;
      }
    }
    return true;
  }

  // K33: recover the two classes from the path pattern.
  int b0 = *branch.begin();
  std::vector<int> same{b0};
  std::vector<int> other;
  for (int v : branch) {
    if (v == b0) continue;
    if (pair_paths.count(std::minmax(b0, v))) {
      other.push_back(v);
    } else {
      same.push_back(v);
    }
  }
  if (same.size() != 3 || other.size() != 3) return false;
  for (int a : same) {
    for (int b : same) {
      if (a < b && pair_paths.count({a, b})) return false;
    }
  }
  for (int a : other) {
    for (int b : other) {
      if (a < b && pair_paths.count(std::minmax(a, b))) return false;
    }
  }
  for (int a : same) {
    for (int b : other) {
      if (pair_paths[std::minmax(a, b)] != 1) return false;
    }
  }
  return true;
}

bool verify_embedding(const Graph& g,
                      const std::vector<std::vector<int>>& embedding) {
  const int n = g.order();
  if (static_cast<int>(embedding.size()) != n) return false;
  if (n == 0) return true;
  if (!is_connected(g)) return false;
  if (g.edge_count() == 0) return n == 1;

  // Each rotation must list exactly the neighbours.
  std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = embedding[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbours(v)) return false;
    for (std::size_t i = 0; i < embedding[v].size(); ++i) {
      pos[v][embedding[v][i]] = static_cast<int>(i);
    }
  }

  // Trace faces: after arriving at b from a, leave along the successor of a
  // in b's rotation.
  std::vector<std::vector<char>> visited(n);
  for (int v = 0; v < n; ++v) visited[v].assign(embedding[v].size(), 0);
  long faces = 0;
  for (int u = 0; u < n; ++u) {
    for (std::size_t s = 0; s < embedding[u].size(); ++s) {
      if (visited[u][s]) continue;
      ++faces;
      int a = u;
      int b = embedding[u][s];
      while (true) {
        visited[a][pos[a][b]] = 1;
        int deg_b = static_cast<int>(embedding[b].size());
        int next = embedding[b][(pos[b][a] + 1) % deg_b];
        a = b;
        b = next;
        if (a == u && b == embedding[u][s]) break;
      }
    }
  }
  return n - g.edge_count() + faces == 2;
}

// --- exhaustive subdivision search ------------------------------------------

namespace {

template <class F>
bool each_subset(int n, int k, F&& f) {
  if (k > n) return false;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (f(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

struct SubdivisionFinder {
  const Graph& g;
  Budget& budget;
  std::vector<char> is_branch;
  std::vector<char> used;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> found_paths;
  bool exceeded = false;

  explicit SubdivisionFinder(const Graph& graph, Budget& b)
      : g(graph), budget(b), is_branch(graph.order(), 0),
        used(graph.order(), 0) {}

  bool solve(std::size_t p) {
    if (p == pairs.size()) return true;
    std::vector<int> path{pairs[p].first};
    return grow(p, pairs[p].first, pairs[p].second, path);
  }

  bool grow(std::size_t p, int cur, int target, std::vector<int>& path) {
    if (!budget.spend()) {
      exceeded = true;
      return false;
    }
    const std::uint64_t* row = g.row(cur);
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int v = (w << 6) + b;
        if (v == target) {
          path.push_back(v);
          found_paths.push_back(path);
          path.pop_back();
          if (solve(p + 1)) return true;
          found_paths.pop_back();
          if (exceeded) return false;
          continue;
        }
        if (is_branch[v] || used[v]) continue;
        used[v] = 1;
        path.push_back(v);
        bool done = grow(p, v, target, path);
        path.pop_back();
        used[v] = 0;
        if (done || exceeded) return done;
      }
    }
    return false;
  }

  std::optional<KuratowskiWitness> try_branches(
      const std::vector<int>& branch, KuratowskiWitness::Kind kind,
      const std::vector<std::pair<int, int>>& endpoint_pairs) {
    std::fill(is_branch.begin(), is_branch.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    for (int v : branch) is_branch[v] = 1;
    pairs = endpoint_pairs;
    found_paths.clear();
    if (solve(0)) {
      KuratowskiWitness w;
      w.kind = kind;
      w.branch_vertices = branch;
      w.paths = found_paths;
      return w;
    }
    return std::nullopt;
  }
};

}  // namespace

SubdivisionSearch kuratowski_by_exhaustive_search(const Graph& g,
                                                  Budget& budget) {
  SubdivisionSearch out;
  const int n = g.order();
  SubdivisionFinder finder(g, budget);

  // K5 subdivisions: five branch vertices of degree >= 4, all ten pairs.
  std::vector<int> eligible4;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 4) eligible4.push_back(v);
  }
  bool done = each_subset(
      static_cast<int>(eligible4.size()), 5, [&](const std::vector<int>& idx) {
        std::vector<int> branch;
        for (int i : idx) branch.push_back(eligible4[i]);
        std::vector<std::pair<int, int>> ep;
        for (int a = 0; a < 5; ++a) {
          for (int b = a + 1; b < 5; ++b) ep.push_back({branch[a], branch[b]});
        }
        if (std::optional<KuratowskiWitness> w =
                finder.try_branches(branch, KuratowskiWitness::Kind::K5, ep)) {
          out.witness = std::move(w);
          return true;
        }
        return finder.exceeded;
      });
  if (finder.exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  if (done) return out;

  // K33 subdivisions: six branch vertices of degree >= 3, split into two
  // classes of three (the class containing the smallest vertex is chosen
  // first), all nine cross pairs.
  std::vector<int> eligible3;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) eligible3.push_back(v);
  }
  each_subset(
      static_cast<int>(eligible3.size()), 6, [&](const std::vector<int>& idx) {
        std::vector<int> six;
        for (int i : idx) six.push_back(eligible3[i]);
        // Choose two companions for six[0]; the rest form the other class.
        return each_subset(5, 2, [&](const std::vector<int>& comp) {
          std::vector<int> a{six[0]};
          std::vector<int> b;
          for (int i = 1; i < 6; ++i) {
            if (i - 1 == comp[0] || i - 1 == comp[1]) {
              a.push_back(six[i]);
            } else {
              b.push_back(six[i]);
            }
          }
          std::vector<std::pair<int, int>> ep;
          for (int u : a) {
            for (int v : b) ep.push_back({u, v});
          }
          if (std::optional<KuratowskiWitness> w = finder.try_branches(
                  six, KuratowskiWitness::Kind::K33, ep)) {
            out.witness = std::move(w);
            return true;
          }
          return finder.exceeded;
        });
      });
  if (finder.exceeded) out.budget_exceeded = true;
  return out;
}

}  // namespace locdeg
