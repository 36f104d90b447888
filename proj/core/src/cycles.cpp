#include "locdeg/cycles.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace locdeg {

namespace {

// --- word-mask helpers ------------------------------------------------------

bool mask_test(const std::vector<std::uint64_t>& m, int v) {
  return (m[v >> 6] >> (v & 63)) & 1u;
}
void mask_set(std::vector<std::uint64_t>& m, int v) {
  m[v >> 6] |= std::uint64_t{1} << (v & 63);
}
void mask_clear(std::vector<std::uint64_t>& m, int v) {
  m[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

}  // namespace

// --- Cycle ------------------------------------------------------------------

Cycle Cycle::validate(const Graph& g, std::span<const int> seq) {
  const int t = static_cast<int>(seq.size());
  if (t < 3) {
    throw std::invalid_argument("cycle has length " + std::to_string(t) +
                                ", need at least 3");
  }
  std::vector<int> seen(g.order(), 0);
  for (int v : seq) {
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument("cycle vertex " + std::to_string(v) +
                                  " out of range");
    }
    if (seen[v]++) {
      throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
    }
  }
  for (int i = 0; i < t; ++i) {
    int u = seq[i];
    int v = seq[(i + 1) % t];
    if (!g.adjacent(u, v)) {
      throw std::invalid_argument("cycle edge " + std::to_string(u) + "-" +
                                  std::to_string(v) + " is not in the graph");
    }
  }

  // Canonical rotation: start at the smallest vertex and walk towards its
  // smaller cycle neighbour.  This is the lexicographic minimum over all
  // rotations and both orientations.
  int start = 0;
  for (int i = 1; i < t; ++i) {
    if (seq[i] < seq[start]) start = i;
  }
  int next = seq[(start + 1) % t];
  int prev = seq[(start + t - 1) % t];
  int step = next < prev ? 1 : -1;

  Cycle c;
  c.seq_.resize(t);
  c.pos_.assign(g.order(), -1);
  for (int i = 0; i < t; ++i) {
    int v = seq[((start + i * step) % t + t) % t];
    c.seq_[i] = v;
    c.pos_[v] = i;
  }
  return c;
}

// --- exhaustive enumeration -------------------------------------------------

namespace {

struct Enumerator {
  const Graph& g;
  Budget& budget;
  const std::function<bool(std::span<const int>)>& visit;
  std::vector<int> path;
  std::vector<std::uint64_t> on_path;
  CycleEnumeration out;

  // Extends the path ending at `v` for root `root`; returns false to abort
  // the whole enumeration (budget exhausted or visitor asked to stop).
  bool extend(int root, int v) {
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int u = (w << 6) + b;
        if (u == root) {
          if (path.size() >= 3 && path[1] < path.back()) {
            ++out.count;
            if (!visit(path)) {
              out.stopped = true;
              return false;
            }
          }
          continue;
        }
        if (u < root || mask_test(on_path, u)) continue;
        if (!budget.spend()) {
          out.budget_exceeded = true;
          return false;
        }
        path.push_back(u);
        mask_set(on_path, u);
        bool keep_going = extend(root, u);
        mask_clear(on_path, u);
        path.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  }
};

}  // namespace

CycleEnumeration enumerate_cycles(
    const Graph& g, Budget& budget,
    const std::function<bool(std::span<const int>)>& visit) {
  Enumerator e{g, budget, visit, {}, {}, {}};
  e.on_path.assign(g.words_per_row(), 0);
  for (int root = 0; root + 2 < g.order(); ++root) {
    e.path.assign(1, root);
    mask_set(e.on_path, root);
    bool keep_going = e.extend(root, root);
    mask_clear(e.on_path, root);
    if (!keep_going) break;
  }
  return e.out;
}

// --- Hamilton cycle search --------------------------------------------------

namespace {

struct HamiltonSearch {
  const Graph& g;
  Budget& budget;
  int n;
  int words;
  std::vector<int> path;
  std::vector<std::uint64_t> unvisited;
  std::vector<std::uint64_t> reach;    // scratch for the connectivity prune
  std::vector<std::uint64_t> frontier;  // scratch
  bool exceeded = false;

  // True when every unvisited vertex is reachable from `current` through
  // unvisited vertices, and no unvisited vertex has too few usable
  // neighbours to sit inside the eventual cycle.
  bool feasible(int current) {
    // Degree prune: an unvisited vertex u needs two cycle neighbours, drawn
    // from unvisited vertices, the path end, and (for the vertex that closes
    // the cycle) the start vertex 0.
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = unvisited[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int u = (w << 6) + b;
        const std::uint64_t* r = g.row(u);
        int avail = g.adjacent(u, current) ? 1 : 0;
        if (g.adjacent(u, 0)) ++avail;
        for (int k = 0; k < words && avail < 2; ++k) {
          avail += __builtin_popcountll(r[k] & unvisited[k]);
        }
        if (avail < 2) return false;
      }
    }

    // Connectivity prune: flood from `current` through unvisited vertices.
    std::fill(reach.begin(), reach.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    mask_set(frontier, current);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = frontier[w];
        frontier[w] = 0;
        reach[w] |= bits;
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          int u = (w << 6) + b;
          const std::uint64_t* r = g.row(u);
          for (int k = 0; k < words; ++k) {
            std::uint64_t fresh = r[k] & unvisited[k] & ~reach[k] & ~frontier[k];
            if (fresh) {
              frontier[k] |= fresh;
              grew = true;
            }
          }
        }
      }
    }
    for (int w = 0; w < words; ++w) {
      if (unvisited[w] & ~reach[w]) return false;
    }
    return true;
  }

  bool dfs(int current) {
    if (!budget.spend()) {
      exceeded = true;
      return false;
    }
    if (static_cast<int>(path.size()) == n) {
      return g.adjacent(current, 0);
    }
    if (!feasible(current)) return false;
    const std::uint64_t* r = g.row(current);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = r[w] & unvisited[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int u = (w << 6) + b;
        path.push_back(u);
        mask_clear(unvisited, u);
        if (dfs(u)) return true;
        mask_set(unvisited, u);
        path.pop_back();
        if (exceeded) return false;
      }
    }
    return false;
  }
};

}  // namespace

HamiltonicityResult is_hamiltonian(const Graph& g, Budget& budget) {
  HamiltonicityResult out;
  int n = g.order();
  if (n < 3) return out;
  HamiltonSearch s{g, budget, n, g.words_per_row(), {}, {}, {}, {}};
  s.unvisited.assign(s.words, 0);
  for (int v = 1; v < n; ++v) mask_set(s.unvisited, v);
  s.reach.assign(s.words, 0);
  s.frontier.assign(s.words, 0);
  s.path.assign(1, 0);
  bool found = s.dfs(0);
  if (s.exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  if (found) {
    out.hamiltonian = true;
    out.cycle = Cycle::validate(g, s.path);
  }
  return out;
}

HamiltonicityResult is_hamiltonian(const Graph& g) {
  Budget budget;
  return is_hamiltonian(g, budget);
}

// --- fixed-length cycle search ----------------------------------------------

namespace {

struct LengthSearcher {
  const Graph& g;
  Budget& budget;
  int len;
  int words;
  std::vector<int> path;
  std::vector<std::uint64_t> on_path;
  std::vector<int> dist_to_root;  // within the current allowed set
  bool exceeded = false;

  // BFS from root over vertices >= root; distances lower-bound how many more
  // edges any return path to the root must use.
  void prepare_root(int root) {
    dist_to_root.assign(g.order(), kUnreachable);
    dist_to_root[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      g.for_each_neighbour(v, [&](int u) {
        if (u >= root && dist_to_root[u] == kUnreachable) {
          dist_to_root[u] = dist_to_root[v] + 1;
          queue.push_back(u);
        }
      });
    }
  }

  bool dfs(int root, int v) {
    if (!budget.spend()) {
      exceeded = true;
      return false;
    }
    int have = static_cast<int>(path.size());
    if (have == len) return g.adjacent(v, root);
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int u = (w << 6) + b;
        if (u <= root || mask_test(on_path, u)) continue;
        // After pushing u the path holds have+1 vertices, leaving len-have
        // edges to return to the root.
        if (dist_to_root[u] == kUnreachable || dist_to_root[u] > len - have) {
          continue;
        }
        path.push_back(u);
        mask_set(on_path, u);
        bool found = dfs(root, u);
        mask_clear(on_path, u);
        path.pop_back();
        if (found || exceeded) return found;
      }
    }
    return false;
  }
};

}  // namespace

LengthSearch has_cycle_of_length(const Graph& g, int len, Budget& budget) {
  LengthSearch out;
  if (len < 3 || len > g.order()) return out;
  LengthSearcher s{g, budget, len, g.words_per_row(), {}, {}, {}};
  s.on_path.assign(s.words, 0);
  // A cycle of this length rooted at its minimum vertex needs len vertices
  // with ids >= root.
  for (int root = 0; root + len <= g.order(); ++root) {
    s.prepare_root(root);
    s.path.assign(1, root);
    mask_set(s.on_path, root);
    bool found = s.dfs(root, root);
    mask_clear(s.on_path, root);
    if (found) {
      out.found = true;
      return out;
    }
    if (s.exceeded) {
      out.budget_exceeded = true;
      return out;
    }
  }
  return out;
}

// --- spectra and pancyclicity -----------------------------------------------

SpectrumResult cycle_length_spectrum(const Graph& g, Budget& budget) {
  SpectrumResult out;
  for (int len = 3; len <= g.order(); ++len) {
    LengthSearch s = has_cycle_of_length(g, len, budget);
    if (s.budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (s.found) out.lengths.push_back(len);
  }
  return out;
}

SpectrumResult cycle_length_spectrum(const Graph& g) {
  Budget budget;
  return cycle_length_spectrum(g, budget);
}

PancyclicityCheck is_pancyclic(const Graph& g, Budget& budget) {
  PancyclicityCheck out;
  for (int len = 3; len <= g.order(); ++len) {
    LengthSearch s = has_cycle_of_length(g, len, budget);
    if (s.budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (!s.found) out.missing.push_back(len);
  }
  out.holds = out.missing.empty();
  return out;
}

PancyclicityCheck is_weakly_pancyclic(const Graph& g, Budget& budget) {
  PancyclicityCheck out;
  int girth = 0;
  for (int len = 3; len <= g.order(); ++len) {
    LengthSearch s = has_cycle_of_length(g, len, budget);
    if (s.budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (s.found) {
      girth = len;
      break;
    }
  }
  if (girth == 0) {
    out.holds = true;  // no cycles at all: the required range is empty
    return out;
  }
  int circumference = girth;
  for (int len = g.order(); len > girth; --len) {
    LengthSearch s = has_cycle_of_length(g, len, budget);
    if (s.budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (s.found) {
      circumference = len;
      break;
    }
  }
  for (int len = girth + 1; len < circumference; ++len) {
    LengthSearch s = has_cycle_of_length(g, len, budget);
    if (s.budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (!s.found) out.missing.push_back(len);
  }
  out.holds = out.missing.empty();
  return out;
}

}  // namespace locdeg
