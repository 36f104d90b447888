#pragma once

// Cycle extension machinery.
//
// A cycle C of length t in G is *extendable* when some cycle C' of length
// t+1 contains every vertex of C.  This module provides:
//
//   * a fixed catalogue of rewriting templates ("moves") that produce such an
//    extension from local adjacency patterns around an off-cycle vertex,
//   * exhaustive fallback searches for +1 and +2 extensions,
//   * graph-level checks (every non-Hamilton cycle extendable, ...),
//   * Hamilton cycle construction by repeated extension from a triangle,
//     emitting a move trace that can be replayed and verified independently.
//
// Move template names are stable identifiers used in reports and traces; the
// numbered L32-* ids name individual adjacency patterns and their variants.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locdeg/cycles.hpp"
#include "locdeg/graph.hpp"

namespace locdeg {

enum class MoveKind {
  Insert,            // off-cycle x adjacent to two consecutive cycle vertices
  ChordSwapForward,  // x on v_i, v_j plus chord v_{i+1}v_{j+1}
  TriangleBypass,    // x on v_i, v_j plus chord v_{i-1}v_{i+1} and v_{j+-1}v_i
  NeighbourPairHop,  // x on v_i, v_{i+2}; v_{i+1} sees consecutive v_k,v_{k+1}
  L32_4a,            // x on v_i, v_{i+2}; v_j sees v_{i+1},v_{i-1}; chord at j
  L32_4b,            // x on v_i, v_{i+2}; v_j sees v_{i+1},v_{i+3}; chord at j
  L32_5i,            // x on v_i, v_j; consecutive pair on v_j..v_i arc
  L32_5ii,           // x on v_i, v_j; consecutive pair on v_i..v_j arc
  L32_6i,            // three-point patterns mixing one off-cycle vertex and
  L32_6ii,           //   chords v_{k-1}v_{i+1}, v_{j+1}v_{i-1}, ... (see the
  L32_6iii,          //   builders in extension.cpp for the exact adjacency
  L32_6iv,           //   pattern of each variant)
  Exhaustive,        // found by brute-force search, no template
};

// Stable wire names: "Insert", "ChordSwapForward", "TriangleBypass",
// "NeighbourPairHop", "L32-4a", "L32-4b", "L32-5i", "L32-5ii", "L32-6i",
// "L32-6ii", "L32-6iii", "L32-6iv", "Exhaustive".
std::string_view to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(std::string_view name);

// One extension step.  For template moves, i/j/k are positions in the
// *previous* cycle's stored (canonical) orientation; unused parameters are
// -1 and `added` holds the single absorbed off-cycle vertex.  Exhaustive
// moves record only the absorbed vertices (one or two) and the result.
struct ExtensionMove {
  MoveKind kind = MoveKind::Exhaustive;
  int i = -1;
  int j = -1;
  int k = -1;
  std::vector<int> added;
  Cycle result;
};

// Scans the template catalogue in a fixed order -- Insert, ChordSwapForward,
// TriangleBypass, NeighbourPairHop, then the L32-* patterns -- with parameters
// enumerated lexicographically by (off-cycle vertex, i, j, k).  Returns the
// first extension found; the scan is deterministic and polynomial.
std::optional<ExtensionMove> find_extension_by_moves(const Graph& g,
                                                     const Cycle& cycle);

struct ExtensionSearch {
  bool budget_exceeded = false;
  std::optional<ExtensionMove> move;
};

// Brute-force +1 extension: for each off-cycle x in ascending order, searches
// for a cycle through V(C) + x.  Budgeted via the Hamilton search.
ExtensionSearch find_extension_exhaustive(const Graph& g, const Cycle& cycle,
                                          Budget& budget);

// {1,2}-extension: a cycle of length t+1 or t+2 through V(C).  Tries the
// template scan, then the exhaustive +1 search, then exhaustive +2 over
// ascending off-cycle pairs.
ExtensionSearch find_12_extension(const Graph& g, const Cycle& cycle,
                                  Budget& budget);

struct CycleExtendability {
  bool budget_exceeded = false;
  bool holds = false;
  std::uint64_t cycles_checked = 0;
  std::optional<Cycle> counterexample;      // offending non-Hamilton cycle
  std::optional<int> vertex_off_triangles;  // only set by the "fully" check
};

// Every non-Hamilton cycle has a +1 extension.
CycleExtendability is_cycle_extendable_graph(const Graph& g, Budget& budget);

// As above, plus every vertex lies on a triangle.
CycleExtendability is_fully_cycle_extendable(const Graph& g, Budget& budget);

// Every non-Hamilton cycle has a {1,2}-extension.
CycleExtendability is_12_extendable_graph(const Graph& g, Budget& budget);

struct ExtensionTrace {
  Cycle start;
  std::vector<ExtensionMove> moves;
};

struct HamiltonByExtension {
  bool budget_exceeded = false;
  bool success = false;
  std::optional<Cycle> hamilton_cycle;
  ExtensionTrace trace;  // successful seed's trace, or the last attempt's
  int seeds_tried = 0;
};

// Grows a Hamilton cycle from a triangle: repeatedly apply the first template
// move, falling back to the exhaustive +1 and then +2 searches when no
// template fires.  Stalls trigger a restart from the next seed triangle in
// lexicographic order (at most ten seeds).
HamiltonByExtension hamilton_by_extension(const Graph& g, Budget& budget);

struct TraceCheck {
  bool ok = false;
  std::string error;  // empty when ok
};

// Replays a trace: every step must be a valid cycle containing the previous
// one, growing by exactly the absorbed vertices, and template moves must
// reproduce their recorded result from (kind, i, j, k) and the absorbed
// vertex.
TraceCheck verify_extension_trace(const Graph& g, const ExtensionTrace& trace);

}  // namespace locdeg
