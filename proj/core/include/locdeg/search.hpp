#pragma once
// Counterexample hunting: exhaustive isomorphism-class scans for small
// orders, and seeded random sampling for larger ones.  Every run is a pure
// function of its configuration, so results are reproducible bit for bit.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locdeg/cycles.hpp"
#include "locdeg/graph.hpp"

namespace locdeg {

// Deterministic 64-bit stream (splitmix64).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Value in [0, bound), bound >= 1.  Uses a plain modulus: the tiny bias is
  // irrelevant here, only determinism matters.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

using GraphPredicate = std::function<bool(const Graph&)>;
// Properties take a step budget; after the call the budget's exhausted flag
// tells the caller whether the verdict is trustworthy.
using GraphProperty = std::function<bool(const Graph&, Budget&)>;

// Registry lookups; unknown ids throw std::invalid_argument.
//
// Predicates: always-true, connected, locally-connected, locally-dirac,
//             locally-ore, closed-locally-dirac, closed-locally-ore,
//             claw-free, locally-isometric, order-ge-4, order-ge-8.
// Properties: always-true, hamiltonian, pancyclic, weakly-pancyclic,
//             fully-cycle-extendable, 12-extendable, min-degree-5,
//             kappa-ge-3, lambda-equals-delta, non-planar.
GraphPredicate predicate_by_id(const std::string& id);
GraphProperty property_by_id(const std::string& id);
std::vector<std::string> predicate_ids();
std::vector<std::string> property_ids();

struct ExhaustiveConfig {
  int max_order = 6;                 // hard cap 7
  std::vector<std::string> filters;  // conjunction; empty keeps every graph
  std::string property = "always-true";
  std::uint64_t budget_limit = 10'000'000;  // per-graph property budget
};

struct ExhaustiveResult {
  bool budget_exceeded = false;
  // Isomorphism classes visited per order; index i holds order i+1.
  std::vector<std::uint64_t> classes_per_order;
  // Classes that passed the filter (and had the property evaluated).
  std::uint64_t tested = 0;
  // First filter-passing graph that violates the property.
  std::optional<Graph> counterexample;
};

// Visits one representative per isomorphism class for every order
// 1..max_order (ascending, masks ascending within an order), filters, and
// tests the property on the survivors.  Stops at the first counterexample.
// max_order outside [1, 7] throws std::invalid_argument.
ExhaustiveResult exhaustive_search(const ExhaustiveConfig& config);

struct RandomConfig {
  std::vector<std::string> filters;
  std::string property = "always-true";
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  int min_order = 8;   // density-sampled graphs draw their order from
  int max_order = 12;  // [min_order, max_order]
  std::uint64_t budget_limit = 10'000'000;  // per-sample property budget
};

struct RandomResult {
  bool budget_exceeded = false;
  std::uint64_t sampled = 0;
  std::uint64_t survivors = 0;  // samples that passed the filter
  std::optional<Graph> counterexample;
  std::string counterexample_origin;  // e.g. "gnp n=9 density=70"
};

// Seeded sampling, alternating two generators by sample index:
//   - even index: a catalog graph of order <= 24 with one to three random
//     extra edges, kept only if the filter still holds;
//   - odd index: G(n, p) with n drawn from [min_order, max_order] and the
//     edge density swept over 30..90 percent (integer thresholds).
// The property runs on filter survivors; the first violation stops the scan.
RandomResult random_search(const RandomConfig& config);

}  // namespace locdeg
