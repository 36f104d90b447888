#pragma once

// Simple cycles: validation, exhaustive enumeration, Hamilton cycle search,
// and cycle length spectra.
//
// Searches are budgeted by elementary step counts (never wall clock) so that
// results and reports are bit-reproducible.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "locdeg/graph.hpp"

namespace locdeg {

// Work limiter shared across nested searches.  spend() returns false once
// the limit is hit; the exhausted flag stays set.
struct Budget {
  std::uint64_t limit = 10'000'000;
  std::uint64_t used = 0;
  bool exhausted = false;

  bool spend(std::uint64_t k = 1) {
    used += k;
    if (used > limit) exhausted = true;
    return !exhausted;
  }
};

// A simple cycle of length >= 3 held in canonical rotation: the
// lexicographically smallest vertex sequence over all rotations and both
// orientations.
class Cycle {
 public:
  Cycle() = default;

  // Checks that seq lists distinct adjacent vertices closing into a cycle of
  // length >= 3 in g; throws std::invalid_argument with a description
  // otherwise.
  static Cycle validate(const Graph& g, std::span<const int> seq);

  int length() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& vertices() const { return seq_; }

  // Vertex at a cyclic position (any integer, reduced mod length).
  int at(int pos) const {
    int t = length();
    return seq_[((pos % t) + t) % t];
  }
  bool contains(int v) const {
    return v >= 0 && v < static_cast<int>(pos_.size()) && pos_[v] >= 0;
  }
  int position_of(int v) const {
    return contains(v) ? pos_[v] : -1;
  }

  bool operator==(const Cycle& other) const { return seq_ == other.seq_; }

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;  // vertex id -> position, -1 when absent
};

struct CycleEnumeration {
  std::uint64_t count = 0;
  bool budget_exceeded = false;
  bool stopped = false;  // visitor returned false
};

// Visits every simple cycle exactly once, as a vertex sequence rooted at its
// smallest vertex with the smaller neighbour second.  The budget is charged
// one unit per path-extension step.  Return false from visit to stop early.
CycleEnumeration enumerate_cycles(
    const Graph& g, Budget& budget,
    const std::function<bool(std::span<const int>)>& visit);

struct HamiltonicityResult {
  bool budget_exceeded = false;
  bool hamiltonian = false;
  std::optional<Cycle> cycle;
};

// Backtracking Hamilton cycle search with degree and connectivity pruning.
// The budget is charged per search node.
HamiltonicityResult is_hamiltonian(const Graph& g, Budget& budget);
HamiltonicityResult is_hamiltonian(const Graph& g);

struct LengthSearch {
  bool budget_exceeded = false;
  bool found = false;
};
LengthSearch has_cycle_of_length(const Graph& g, int len, Budget& budget);

struct SpectrumResult {
  std::vector<int> lengths;  // ascending
  bool budget_exceeded = false;
};

// Exact set of cycle lengths, via one fixed-length search per candidate.
SpectrumResult cycle_length_spectrum(const Graph& g, Budget& budget);
SpectrumResult cycle_length_spectrum(const Graph& g);

struct PancyclicityCheck {
  bool budget_exceeded = false;
  bool holds = false;
  std::vector<int> missing;  // lengths absent from the required range
};

// Cycles of every length from 3 to n.
PancyclicityCheck is_pancyclic(const Graph& g, Budget& budget);

// Cycles of every length from girth to circumference; acyclic graphs pass
// vacuously.
PancyclicityCheck is_weakly_pancyclic(const Graph& g, Budget& budget);

}  // namespace locdeg
