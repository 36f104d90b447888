#include "locdeg/extension.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace locdeg {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Insert: return "Insert";
    case MoveKind::ChordSwapForward: return "ChordSwapForward";
    case MoveKind::TriangleBypass: return "TriangleBypass";
    case MoveKind::NeighbourPairHop: return "NeighbourPairHop";
    case MoveKind::L32_4a: return "L32-4a";
    case MoveKind::L32_4b: return "L32-4b";
    case MoveKind::L32_5i: return "L32-5i";
    case MoveKind::L32_5ii: return "L32-5ii";
    case MoveKind::L32_6i: return "L32-6i";
    case MoveKind::L32_6ii: return "L32-6ii";
    case MoveKind::L32_6iii: return "L32-6iii";
    case MoveKind::L32_6iv: return "L32-6iv";
    case MoveKind::Exhaustive: return "Exhaustive";
  }
  return "Exhaustive";
}

std::optional<MoveKind> move_kind_from_string(std::string_view name) {
  static constexpr MoveKind kKinds[] = {
      MoveKind::Insert,    MoveKind::ChordSwapForward,
      MoveKind::TriangleBypass, MoveKind::NeighbourPairHop,
      MoveKind::L32_4a,    MoveKind::L32_4b,
      MoveKind::L32_5i,    MoveKind::L32_5ii,
      MoveKind::L32_6i,    MoveKind::L32_6ii,
      MoveKind::L32_6iii,  MoveKind::L32_6iv,
      MoveKind::Exhaustive};
  for (MoveKind k : kKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

// Assembles the replacement cycle as a closed walk over positions of the old
// cycle plus explicit off-cycle vertices.  Every template is written so the
// walk returns to its first vertex; close() drops that duplicate and the
// result is handed to Cycle::validate, which rejects any construction whose
// edges or vertex set are wrong.
struct WalkBuilder {
  const std::vector<int>& c;
  int t;
  std::vector<int> w;

  explicit WalkBuilder(const std::vector<int>& cycle)
      : c(cycle), t(static_cast<int>(cycle.size())) {
    w.reserve(cycle.size() + 2);
  }

  int idx(int p) const { return ((p % t) + t) % t; }
  void vertex(int v) { w.push_back(v); }
  void at(int p) { w.push_back(c[idx(p)]); }
  void fwd(int a, int b) {  // c[a], c[a+1], ..., c[b] cyclically
    int steps = idx(b - a);
    for (int s = 0; s <= steps; ++s) at(a + s);
  }
  void bwd(int a, int b) {  // c[a], c[a-1], ..., c[b] cyclically
    int steps = idx(a - b);
    for (int s = 0; s <= steps; ++s) at(a - s);
  }
  std::vector<int> close() {
    if (w.size() < 2 || w.front() != w.back()) {
      throw std::logic_error("extension walk does not return to its start");
    }
    w.pop_back();
    return std::move(w);
  }
};

// --- template builders ------------------------------------------------------
// Parameters are positions on the old cycle; x (or y) is an off-cycle vertex.
// Each builder realises one adjacency pattern as a (t+1)-cycle.

std::vector<int> build_insert(const std::vector<int>& c, int x, int i) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.fwd(i + 1, i);
  return b.close();
}

std::vector<int> build_chord_swap(const std::vector<int>& c, int x, int i,
                                  int j) {
  WalkBuilder b(c);
  b.at(i + 1);
  b.fwd(j + 1, i);
  b.vertex(x);
  b.bwd(j, i + 1);
  return b.close();
}

std::vector<int> build_triangle_bypass_a(const std::vector<int>& c, int x,
                                         int i, int j) {
  WalkBuilder b(c);
  b.at(j - 1);
  b.at(i);
  b.vertex(x);
  b.fwd(j, i - 1);
  b.fwd(i + 1, j - 1);
  return b.close();
}

std::vector<int> build_triangle_bypass_b(const std::vector<int>& c, int x,
                                         int i, int j) {
  WalkBuilder b(c);
  b.at(j + 1);
  b.at(i);
  b.vertex(x);
  b.bwd(j, i + 1);
  b.bwd(i - 1, j + 1);
  return b.close();
}

std::vector<int> build_pair_hop(const std::vector<int>& c, int x, int i,
                                int k) {
  WalkBuilder b(c);
  b.at(k);
  b.at(i + 1);
  b.fwd(k + 1, i);
  b.vertex(x);
  b.fwd(i + 2, k);
  return b.close();
}

std::vector<int> build_4a(const std::vector<int>& c, int x, int i, int j) {
  WalkBuilder b(c);
  b.at(j - 1);
  b.fwd(j + 1, i - 1);
  b.at(j);
  b.at(i + 1);
  b.at(i);
  b.vertex(x);
  b.fwd(i + 2, j - 1);
  return b.close();
}

std::vector<int> build_4b(const std::vector<int>& c, int x, int i, int j) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.at(i + 2);
  b.at(i + 1);
  b.at(j);
  b.fwd(i + 3, j - 1);
  b.fwd(j + 1, i);
  return b.close();
}

std::vector<int> build_5i_a(const std::vector<int>& c, int x, int i, int j,
                            int l) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.fwd(j, l - 1);
  b.bwd(j - 1, i + 1);
  b.fwd(l, i);
  return b.close();
}

std::vector<int> build_5i_b(const std::vector<int>& c, int x, int i, int j,
                            int l) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.fwd(j, l - 1);
  b.fwd(i + 1, j - 1);
  b.fwd(l, i);
  return b.close();
}

std::vector<int> build_5ii_a(const std::vector<int>& c, int x, int i, int j,
                             int l) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.bwd(j, l);
  b.fwd(j + 1, i - 1);
  b.bwd(l - 1, i);
  return b.close();
}

std::vector<int> build_5ii_b(const std::vector<int>& c, int x, int i, int j,
                             int l) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.bwd(j, l);
  b.bwd(i - 1, j + 1);
  b.bwd(l - 1, i);
  return b.close();
}

std::vector<int> build_6i(const std::vector<int>& c, int x, int i, int j,
                          int k) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.bwd(j, i + 1);
  b.bwd(k - 1, j + 1);
  b.bwd(i - 1, k);
  b.at(i);
  return b.close();
}

std::vector<int> build_6ii(const std::vector<int>& c, int x, int i, int j,
                           int k) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.fwd(k, i - 1);
  b.fwd(j + 1, k - 1);
  b.fwd(i + 1, j);
  b.at(i);
  return b.close();
}

std::vector<int> build_6iii(const std::vector<int>& c, int x, int i, int j,
                            int k) {
  WalkBuilder b(c);
  b.at(i);
  b.vertex(x);
  b.at(j);
  b.bwd(k, j + 1);
  b.bwd(i - 1, k + 1);
  b.bwd(j - 1, i + 1);
  b.at(i);
  return b.close();
}

std::vector<int> build_6iv(const std::vector<int>& c, int x, int i, int j,
                           int k) {
  WalkBuilder b(c);
  b.at(k);
  b.vertex(x);
  b.bwd(i, k + 1);
  b.bwd(j - 1, i + 1);
  b.bwd(k - 1, j);
  b.at(k);
  return b.close();
}

// --- template scan ----------------------------------------------------------

struct MoveScanner {
  const Graph& g;
  const Cycle& cycle;
  const std::vector<int>& c;
  int t;
  std::vector<int> off;  // off-cycle vertices, ascending

  MoveScanner(const Graph& graph, const Cycle& cyc)
      : g(graph), cycle(cyc), c(cyc.vertices()), t(cyc.length()) {
    for (int v = 0; v < g.order(); ++v) {
      if (!cycle.contains(v)) off.push_back(v);
    }
  }

  int idx(int p) const { return ((p % t) + t) % t; }
  bool adj(int p, int q) const { return g.adjacent(c[idx(p)], c[idx(q)]); }
  bool xadj(int x, int p) const { return g.adjacent(x, c[idx(p)]); }

  std::vector<int> attachments(int x) const {
    std::vector<int> att;
    for (int p = 0; p < t; ++p) {
      if (g.adjacent(x, c[p])) att.push_back(p);
    }
    return att;
  }

  // Positions i and j are neither equal nor cyclically consecutive.
  bool apart(int i, int j) const {
    int d = idx(j - i);
    return d >= 2 && d <= t - 2;
  }

  // Positions i, j, k follow the cycle's forward orientation with pairwise
  // cyclic gaps of at least two.  The gap sum condition pins the orientation:
  // forward gaps of a cyclically ordered triple sum to t, a reversed triple
  // sums to 2t.
  bool ordered_triple(int i, int j, int k) const {
    int a = idx(j - i), b = idx(k - j), d = idx(i - k);
    return a >= 2 && b >= 2 && d >= 2 && a + b + d == t;
  }

  ExtensionMove make(MoveKind kind, int x, int i, int j, int k,
                     std::vector<int> seq) const {
    ExtensionMove m;
    m.kind = kind;
    m.i = i;
    m.j = j;
    m.k = k;
    m.added = {x};
    m.result = Cycle::validate(g, seq);
    return m;
  }

  std::optional<ExtensionMove> scan() const {
    using K = MoveKind;

    // Insert: x adjacent to a consecutive pair.
    for (int x : off) {
      for (int i = 0; i < t; ++i) {
        if (xadj(x, i) && xadj(x, i + 1)) {
          return make(K::Insert, x, i, -1, -1, build_insert(c, x, i));
        }
      }
    }

    // ChordSwapForward: x on v_i, v_j with chord v_{i+1} v_{j+1}.
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        for (int j : att) {
          if (!apart(i, j)) continue;
          if (adj(i + 1, j + 1)) {
            return make(K::ChordSwapForward, x, i, j, -1,
                        build_chord_swap(c, x, i, j));
          }
        }
      }
    }

    // TriangleBypass: x on v_i, v_j; chord v_{i-1} v_{i+1}; v_i sees a
    // neighbour of v_j on the cycle.
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        if (!adj(i - 1, i + 1)) continue;
        for (int j : att) {
          if (!apart(i, j)) continue;
          if (adj(j - 1, i)) {
            return make(K::TriangleBypass, x, i, j, -1,
                        build_triangle_bypass_a(c, x, i, j));
          }
          if (adj(j + 1, i)) {
            return make(K::TriangleBypass, x, i, j, -1,
                        build_triangle_bypass_b(c, x, i, j));
          }
        }
      }
    }

    // NeighbourPairHop: x on v_i, v_{i+2}; v_{i+1} adjacent to both of a
    // consecutive pair v_k, v_{k+1} elsewhere on the cycle.
    for (int x : off) {
      for (int i = 0; i < t; ++i) {
        if (!xadj(x, i) || !xadj(x, i + 2)) continue;
        for (int k = 0; k < t; ++k) {
          if (k == i || k == idx(i + 1)) continue;
          if (adj(k, i + 1) && adj(k + 1, i + 1)) {
            return make(K::NeighbourPairHop, x, i, -1, k,
                        build_pair_hop(c, x, i, k));
          }
        }
      }
    }

    // L32-4a: x on v_i, v_{i+2}; v_j sees v_{i+1} and v_{i-1}; chord
    // v_{j-1} v_{j+1}.
    for (int x : off) {
      for (int i = 0; i < t; ++i) {
        if (!xadj(x, i) || !xadj(x, i + 2)) continue;
        for (int j = 0; j < t; ++j) {
          int gap = idx(j - i);
          if (gap < 3 || gap > t - 2) continue;
          if (adj(j, i + 1) && adj(j, i - 1) && adj(j - 1, j + 1)) {
            return make(K::L32_4a, x, i, j, -1, build_4a(c, x, i, j));
          }
        }
      }
    }

    // L32-4b: x on v_i, v_{i+2}; v_j sees v_{i+1} and v_{i+3}; chord
    // v_{j-1} v_{j+1}.
    for (int x : off) {
      for (int i = 0; i < t; ++i) {
        if (!xadj(x, i) || !xadj(x, i + 2)) continue;
        for (int j = 0; j < t; ++j) {
          int gap = idx(j - i);
          if (gap < 4 || gap > t - 1) continue;
          if (adj(j, i + 1) && adj(j, i + 3) && adj(j - 1, j + 1)) {
            return make(K::L32_4b, x, i, j, -1, build_4b(c, x, i, j));
          }
        }
      }
    }

    // L32-5i: x on v_i, v_j; consecutive v_{l-1}, v_l on the arc from v_j
    // forward to v_i, one adjacent to v_{i+1} and the other to v_{j-1}.
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        for (int j : att) {
          if (!apart(i, j)) continue;
          int span = idx(i - j);
          for (int s = 1; s <= span; ++s) {
            int l = j + s;
            if (adj(i + 1, l) && adj(j - 1, l - 1)) {
              return make(K::L32_5i, x, i, j, idx(l),
                          build_5i_a(c, x, i, j, l));
            }
            if (adj(i + 1, l - 1) && adj(j - 1, l)) {
              return make(K::L32_5i, x, i, j, idx(l),
                          build_5i_b(c, x, i, j, l));
            }
          }
        }
      }
    }

    // L32-5ii: mirror of L32-5i on the arc from v_i forward to v_j.
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        for (int j : att) {
          if (!apart(i, j)) continue;
          int span = idx(j - i);
          for (int s = 1; s <= span; ++s) {
            int l = i + s;
            if (adj(l - 1, i - 1) && adj(l, j + 1)) {
              return make(K::L32_5ii, x, i, j, idx(l),
                          build_5ii_a(c, x, i, j, l));
            }
            if (adj(l - 1, j + 1) && adj(l, i - 1)) {
              return make(K::L32_5ii, x, i, j, idx(l),
                          build_5ii_b(c, x, i, j, l));
            }
          }
        }
      }
    }

    // L32-6i .. L32-6iv: three cycle positions i, j, k in cyclic order with
    // pairwise gaps of at least two, one off-cycle vertex on two of them,
    // two chords and one closing chord.
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        for (int j : att) {
          if (!apart(i, j)) continue;
          for (int k = 0; k < t; ++k) {
            if (!ordered_triple(i, j, k)) continue;
            if (adj(k - 1, i + 1) && adj(j + 1, i - 1) && adj(i, k)) {
              return make(K::L32_6i, x, i, j, k, build_6i(c, x, i, j, k));
            }
          }
        }
      }
    }
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        for (int j = 0; j < t; ++j) {
          if (idx(j - i) < 2) continue;
          for (int k : att) {
            if (!ordered_triple(i, j, k)) continue;
            if (adj(k - 1, i + 1) && adj(j + 1, i - 1) && adj(i, j)) {
              return make(K::L32_6ii, x, i, j, k, build_6ii(c, x, i, j, k));
            }
          }
        }
      }
    }
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        for (int j : att) {
          if (idx(j - i) < 2) continue;
          for (int k = 0; k < t; ++k) {
            if (!ordered_triple(i, j, k)) continue;
            if (adj(k + 1, j - 1) && adj(j + 1, i - 1) && adj(j, k)) {
              return make(K::L32_6iii, x, i, j, k, build_6iii(c, x, i, j, k));
            }
          }
        }
      }
    }
    for (int x : off) {
      std::vector<int> att = attachments(x);
      for (int i : att) {
        for (int j = 0; j < t; ++j) {
          if (idx(j - i) < 2) continue;
          for (int k : att) {
            if (!ordered_triple(i, j, k)) continue;
            if (adj(i + 1, k - 1) && adj(j - 1, k + 1) && adj(j, k)) {
              return make(K::L32_6iv, x, i, j, k, build_6iv(c, x, i, j, k));
            }
          }
        }
      }
    }

    return std::nullopt;
  }
};

// Hamilton cycle of the subgraph induced by the cycle vertices plus `extra`,
// mapped back to the ids of g.
std::optional<Cycle> cycle_through(const Graph& g, const Cycle& cycle,
                                   const std::vector<int>& extra,
                                   Budget& budget, bool& exceeded) {
  VertexSet verts = cycle.vertices();
  verts.insert(verts.end(), extra.begin(), extra.end());
  std::sort(verts.begin(), verts.end());
  InducedSubgraph sub = induced_subgraph(g, verts);
  HamiltonicityResult r = is_hamiltonian(sub.graph, budget);
  if (r.budget_exceeded) {
    exceeded = true;
    return std::nullopt;
  }
  if (!r.hamiltonian) return std::nullopt;
  std::vector<int> seq;
  seq.reserve(r.cycle->length());
  for (int v : r.cycle->vertices()) seq.push_back(sub.vertices[v]);
  return Cycle::validate(g, seq);
}

ExtensionSearch find_extension_plus_two(const Graph& g, const Cycle& cycle,
                                        Budget& budget) {
  ExtensionSearch out;
  if (cycle.length() + 2 > g.order()) return out;
  std::vector<int> off;
  for (int v = 0; v < g.order(); ++v) {
    if (!cycle.contains(v)) off.push_back(v);
  }
  for (std::size_t a = 0; a < off.size(); ++a) {
    for (std::size_t b = a + 1; b < off.size(); ++b) {
      bool exceeded = false;
      std::optional<Cycle> found =
          cycle_through(g, cycle, {off[a], off[b]}, budget, exceeded);
      if (exceeded) {
        out.budget_exceeded = true;
        return out;
      }
      if (found) {
        ExtensionMove m;
        m.kind = MoveKind::Exhaustive;
        m.added = {off[a], off[b]};
        m.result = *found;
        out.move = std::move(m);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

std::optional<ExtensionMove> find_extension_by_moves(const Graph& g,
                                                     const Cycle& cycle) {
  if (cycle.length() >= g.order()) return std::nullopt;
  MoveScanner scanner(g, cycle);
  return scanner.scan();
}

ExtensionSearch find_extension_exhaustive(const Graph& g, const Cycle& cycle,
                                          Budget& budget) {
  ExtensionSearch out;
  if (cycle.length() >= g.order()) return out;
  for (int x = 0; x < g.order(); ++x) {
    if (cycle.contains(x)) continue;
    bool exceeded = false;
    std::optional<Cycle> found = cycle_through(g, cycle, {x}, budget, exceeded);
    if (exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (found) {
      ExtensionMove m;
      m.kind = MoveKind::Exhaustive;
      m.added = {x};
      m.result = *found;
      out.move = std::move(m);
      return out;
    }
  }
  return out;
}

ExtensionSearch find_12_extension(const Graph& g, const Cycle& cycle,
                                  Budget& budget) {
  if (std::optional<ExtensionMove> m = find_extension_by_moves(g, cycle)) {
    ExtensionSearch out;
    out.move = std::move(m);
    return out;
  }
  ExtensionSearch plus1 = find_extension_exhaustive(g, cycle, budget);
  if (plus1.budget_exceeded || plus1.move) return plus1;
  return find_extension_plus_two(g, cycle, budget);
}

namespace {

enum class ExtendMode { kPlusOne, kOneTwo };

CycleExtendability check_all_cycles(const Graph& g, Budget& budget,
                                    ExtendMode mode) {
  CycleExtendability out;
  out.holds = true;
  CycleEnumeration en =
      enumerate_cycles(g, budget, [&](std::span<const int> seq) {
        if (static_cast<int>(seq.size()) == g.order()) return true;
        ++out.cycles_checked;
        Cycle cyc = Cycle::validate(g, seq);
        ExtensionSearch found;
        if (std::optional<ExtensionMove> m = find_extension_by_moves(g, cyc)) {
          found.move = std::move(m);
        } else {
          found = find_extension_exhaustive(g, cyc, budget);
          if (mode == ExtendMode::kOneTwo && !found.budget_exceeded &&
              !found.move) {
            found = find_extension_plus_two(g, cyc, budget);
          }
        }
        if (found.budget_exceeded) {
          out.budget_exceeded = true;
          return false;
        }
        if (!found.move) {
          out.holds = false;
          out.counterexample = cyc;
          return false;
        }
        return true;
      });
  if (en.budget_exceeded) out.budget_exceeded = true;
  if (out.budget_exceeded) out.holds = false;
  return out;
}

}  // namespace

CycleExtendability is_cycle_extendable_graph(const Graph& g, Budget& budget) {
  return check_all_cycles(g, budget, ExtendMode::kPlusOne);
}

CycleExtendability is_fully_cycle_extendable(const Graph& g, Budget& budget) {
  for (int v = 0; v < g.order(); ++v) {
    bool on_triangle = false;
    for (int u : g.neighbours(v)) {
      if (g.common_neighbours(u, v) > 0) {
        on_triangle = true;
        break;
      }
    }
    if (!on_triangle) {
      CycleExtendability out;
      out.holds = false;
      out.vertex_off_triangles = v;
      return out;
    }
  }
  return check_all_cycles(g, budget, ExtendMode::kPlusOne);
}

CycleExtendability is_12_extendable_graph(const Graph& g, Budget& budget) {
  return check_all_cycles(g, budget, ExtendMode::kOneTwo);
}

HamiltonByExtension hamilton_by_extension(const Graph& g, Budget& budget) {
  HamiltonByExtension out;
  const int n = g.order();
  if (n < 3) return out;

  // Seed triangles in lexicographic order, at most ten.
  std::vector<std::array<int, 3>> seeds;
  for (int a = 0; a < n && seeds.size() < 10; ++a) {
    for (int b = a + 1; b < n && seeds.size() < 10; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n && seeds.size() < 10; ++c) {
        if (g.adjacent(a, c) && g.adjacent(b, c)) seeds.push_back({a, b, c});
      }
    }
  }
  if (seeds.empty()) return out;

  for (const std::array<int, 3>& seed : seeds) {
    ++out.seeds_tried;
    ExtensionTrace trace;
    trace.start = Cycle::validate(g, seed);
    Cycle current = trace.start;
    bool stalled = false;
    while (current.length() < n) {
      std::optional<ExtensionMove> move = find_extension_by_moves(g, current);
      if (!move) {
        ExtensionSearch s = find_extension_exhaustive(g, current, budget);
        if (s.budget_exceeded) {
          out.budget_exceeded = true;
          out.trace = std::move(trace);
          return out;
        }
        move = std::move(s.move);
      }
      if (!move) {
        ExtensionSearch s = find_extension_plus_two(g, current, budget);
        if (s.budget_exceeded) {
          out.budget_exceeded = true;
          out.trace = std::move(trace);
          return out;
        }
        move = std::move(s.move);
      }
      if (!move) {
        stalled = true;
        break;
      }
      current = move->result;
      trace.moves.push_back(std::move(*move));
    }
    out.trace = std::move(trace);
    if (!stalled) {
      out.success = true;
      out.hamilton_cycle = std::move(current);
      return out;
    }
  }
  return out;
}

// --- trace verification -----------------------------------------------------

namespace {

// All sequences the recorded parameters could legitimately produce; variants
// that violate an adjacency are discarded by validation later.
std::vector<std::vector<int>> rebuild_candidates(const ExtensionMove& mv,
                                                 const Cycle& prev) {
  const std::vector<int>& c = prev.vertices();
  const int t = prev.length();
  if (mv.added.size() != 1) return {};
  int x = mv.added[0];
  auto in_range = [t](int p) { return p >= 0 && p < t; };
  std::vector<std::vector<int>> cand;
  switch (mv.kind) {
    case MoveKind::Insert:
      if (in_range(mv.i)) cand.push_back(build_insert(c, x, mv.i));
      break;
    case MoveKind::ChordSwapForward:
      if (in_range(mv.i) && in_range(mv.j)) {
        cand.push_back(build_chord_swap(c, x, mv.i, mv.j));
      }
      break;
    case MoveKind::TriangleBypass:
      if (in_range(mv.i) && in_range(mv.j)) {
        cand.push_back(build_triangle_bypass_a(c, x, mv.i, mv.j));
        cand.push_back(build_triangle_bypass_b(c, x, mv.i, mv.j));
      }
      break;
    case MoveKind::NeighbourPairHop:
      if (in_range(mv.i) && in_range(mv.k)) {
        cand.push_back(build_pair_hop(c, x, mv.i, mv.k));
      }
      break;
    case MoveKind::L32_4a:
      if (in_range(mv.i) && in_range(mv.j)) {
        cand.push_back(build_4a(c, x, mv.i, mv.j));
      }
      break;
    case MoveKind::L32_4b:
      if (in_range(mv.i) && in_range(mv.j)) {
        cand.push_back(build_4b(c, x, mv.i, mv.j));
      }
      break;
    case MoveKind::L32_5i:
      if (in_range(mv.i) && in_range(mv.j) && in_range(mv.k)) {
        cand.push_back(build_5i_a(c, x, mv.i, mv.j, mv.k));
        cand.push_back(build_5i_b(c, x, mv.i, mv.j, mv.k));
      }
      break;
    case MoveKind::L32_5ii:
      if (in_range(mv.i) && in_range(mv.j) && in_range(mv.k)) {
        cand.push_back(build_5ii_a(c, x, mv.i, mv.j, mv.k));
        cand.push_back(build_5ii_b(c, x, mv.i, mv.j, mv.k));
      }
      break;
    case MoveKind::L32_6i:
      if (in_range(mv.i) && in_range(mv.j) && in_range(mv.k)) {
        cand.push_back(build_6i(c, x, mv.i, mv.j, mv.k));
      }
      break;
    case MoveKind::L32_6ii:
      if (in_range(mv.i) && in_range(mv.j) && in_range(mv.k)) {
        cand.push_back(build_6ii(c, x, mv.i, mv.j, mv.k));
      }
      break;
    case MoveKind::L32_6iii:
      if (in_range(mv.i) && in_range(mv.j) && in_range(mv.k)) {
        cand.push_back(build_6iii(c, x, mv.i, mv.j, mv.k));
      }
      break;
    case MoveKind::L32_6iv:
      if (in_range(mv.i) && in_range(mv.j) && in_range(mv.k)) {
        cand.push_back(build_6iv(c, x, mv.i, mv.j, mv.k));
      }
      break;
    case MoveKind::Exhaustive:
      break;
  }
  return cand;
}

}  // namespace

TraceCheck verify_extension_trace(const Graph& g, const ExtensionTrace& trace) {
  auto fail = [](std::string msg) { return TraceCheck{false, std::move(msg)}; };
  Cycle prev;
  try {
    prev = Cycle::validate(g, trace.start.vertices());
  } catch (const std::exception& e) {
    return fail(std::string("start cycle invalid: ") + e.what());
  }

  for (std::size_t m = 0; m < trace.moves.size(); ++m) {
    const ExtensionMove& mv = trace.moves[m];
    std::string step = "step " + std::to_string(m) + ": ";
    Cycle result;
    try {
      result = Cycle::validate(g, mv.result.vertices());
    } catch (const std::exception& e) {
      return fail(step + "result is not a cycle: " + e.what());
    }
    if (!(result == mv.result)) {
      return fail(step + "result is not in canonical rotation");
    }
    for (int v : prev.vertices()) {
      if (!result.contains(v)) {
        return fail(step + "result drops vertex " + std::to_string(v));
      }
    }
    std::vector<int> grown;
    for (int v : result.vertices()) {
      if (!prev.contains(v)) grown.push_back(v);
    }
    std::sort(grown.begin(), grown.end());
    std::vector<int> declared = mv.added;
    std::sort(declared.begin(), declared.end());
    if (grown != declared) {
      return fail(step + "absorbed vertices do not match the declaration");
    }
    if (grown.empty() || grown.size() > 2) {
      return fail(step + "a move must absorb one or two vertices");
    }
    if (mv.kind != MoveKind::Exhaustive) {
      if (grown.size() != 1) {
        return fail(step + "template moves absorb exactly one vertex");
      }
      bool reproduced = false;
      for (std::vector<int>& seq : rebuild_candidates(mv, prev)) {
        try {
          if (Cycle::validate(g, seq) == result) {
            reproduced = true;
            break;
          }
        } catch (const std::exception&) {
          // candidate violates an adjacency; try the next variant
        }
      }
      if (!reproduced) {
        return fail(step + "parameters do not reproduce the recorded result");
      }
    }
    prev = result;
  }
  return TraceCheck{true, ""};
}

}  // namespace locdeg
