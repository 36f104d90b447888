#include "locdeg/search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "locdeg/extension.hpp"
#include "locdeg/invariants.hpp"
#include "locdeg/planarity.hpp"
#include "locdeg/predicates.hpp"
#include "locdeg/smallgraph.hpp"
#include "locdeg/verify.hpp"

namespace locdeg {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  return next() % bound;
}

namespace {

const std::map<std::string, GraphPredicate>& predicate_table() {
  static const std::map<std::string, GraphPredicate> table = {
      {"always-true", [](const Graph&) { return true; }},
      {"connected", [](const Graph& g) { return is_connected(g); }},
      {"locally-connected",
       [](const Graph& g) { return is_locally_connected(g); }},
      {"locally-dirac", [](const Graph& g) { return is_locally_dirac(g).holds; }},
      {"locally-ore", [](const Graph& g) { return is_locally_ore(g).holds; }},
      {"closed-locally-dirac",
       [](const Graph& g) { return is_closed_locally_dirac(g).holds; }},
      {"closed-locally-ore",
       [](const Graph& g) { return is_closed_locally_ore(g).holds; }},
      {"claw-free", [](const Graph& g) { return is_claw_free(g).holds; }},
      {"locally-isometric",
       [](const Graph& g) { return is_locally_isometric(g); }},
      {"order-ge-4", [](const Graph& g) { return g.order() >= 4; }},
      {"order-ge-8", [](const Graph& g) { return g.order() >= 8; }},
  };
  return table;
}

const std::map<std::string, GraphProperty>& property_table() {
  static const std::map<std::string, GraphProperty> table = {
      {"always-true", [](const Graph&, Budget&) { return true; }},
      {"hamiltonian",
       [](const Graph& g, Budget& b) { return is_hamiltonian(g, b).hamiltonian; }},
      {"pancyclic",
       [](const Graph& g, Budget& b) { return is_pancyclic(g, b).holds; }},
      {"weakly-pancyclic",
       [](const Graph& g, Budget& b) { return is_weakly_pancyclic(g, b).holds; }},
      {"fully-cycle-extendable",
       [](const Graph& g, Budget& b) {
         return is_fully_cycle_extendable(g, b).holds;
       }},
      {"12-extendable",
       [](const Graph& g, Budget& b) {
         return is_12_extendable_graph(g, b).holds;
       }},
      {"min-degree-5",
       [](const Graph& g, Budget&) {
         return g.order() > 0 && g.min_degree() >= 5;
       }},
      {"kappa-ge-3",
       [](const Graph& g, Budget&) { return vertex_connectivity(g).value >= 3; }},
      {"lambda-equals-delta",
       [](const Graph& g, Budget&) {
         return g.order() > 0 && edge_connectivity(g).value == g.min_degree();
       }},
      {"non-planar", [](const Graph& g, Budget&) { return !is_planar(g).planar; }},
  };
  return table;
}

std::vector<GraphPredicate> resolve_filters(
    const std::vector<std::string>& ids) {
  std::vector<GraphPredicate> filters;
  filters.reserve(ids.size());
  for (const std::string& id : ids) filters.push_back(predicate_by_id(id));
  return filters;
}

bool passes(const std::vector<GraphPredicate>& filters, const Graph& g) {
  for (const GraphPredicate& filter : filters)
    if (!filter(g)) return false;
  return true;
}

}  // namespace

GraphPredicate predicate_by_id(const std::string& id) {
  const auto it = predicate_table().find(id);
  if (it == predicate_table().end())
    throw std::invalid_argument("unknown predicate id: " + id);
  return it->second;
}

GraphProperty property_by_id(const std::string& id) {
  const auto it = property_table().find(id);
  if (it == property_table().end())
    throw std::invalid_argument("unknown property id: " + id);
  return it->second;
}

std::vector<std::string> predicate_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : predicate_table()) ids.push_back(id);
  return ids;
}

std::vector<std::string> property_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : property_table()) ids.push_back(id);
  return ids;
}

ExhaustiveResult exhaustive_search(const ExhaustiveConfig& config) {
  if (config.max_order < 1 || config.max_order > 7)
    throw std::invalid_argument("exhaustive scan order must be in [1, 7]");
  const std::vector<GraphPredicate> filters = resolve_filters(config.filters);
  const GraphProperty property = property_by_id(config.property);

  ExhaustiveResult result;
  for (int n = 1; n <= config.max_order; ++n) {
    std::vector<std::uint64_t> masks = isomorphism_classes(n);
    std::sort(masks.begin(), masks.end());
    result.classes_per_order.push_back(masks.size());
    for (const std::uint64_t mask : masks) {
      Graph g = small_to_graph(n, mask);
      if (!passes(filters, g)) continue;
      ++result.tested;
      Budget budget;
      budget.limit = config.budget_limit;
      const bool ok = property(g, budget);
      if (budget.exhausted) {
        result.budget_exceeded = true;  // verdict inconclusive; keep scanning
        continue;
      }
      if (!ok) {
        result.counterexample = std::move(g);
        return result;
      }
    }
  }
  return result;
}

RandomResult random_search(const RandomConfig& config) {
  if (config.min_order < 1 || config.max_order < config.min_order)
    throw std::invalid_argument("random search needs 1 <= min_order <= max_order");
  const std::vector<GraphPredicate> filters = resolve_filters(config.filters);
  const GraphProperty property = property_by_id(config.property);

  // Perturbation pool: the moderately sized catalog graphs.
  std::vector<Graph> pool;
  std::vector<std::string> pool_labels;
  for (CatalogEntry& entry : default_catalog()) {
    if (entry.graph.order() > 24) continue;
    pool_labels.push_back(to_string(entry.spec));
    pool.push_back(std::move(entry.graph));
  }

  SplitMix64 rng(config.seed);
  RandomResult result;
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    ++result.sampled;
    Graph sample;
    std::string origin;
    if (i % 2 == 0 && !pool.empty()) {
      const std::size_t pick = rng.next_below(pool.size());
      sample = pool[pick];
      const int additions = 1 + static_cast<int>(rng.next_below(3));
      for (int a = 0; a < additions; ++a) {
        const int u = static_cast<int>(rng.next_below(sample.order()));
        const int v = static_cast<int>(rng.next_below(sample.order()));
        if (u != v && !sample.adjacent(u, v))
          sample.add_edge(std::min(u, v), std::max(u, v));
      }
      origin = "perturbed " + pool_labels[pick];
    } else {
      const std::uint64_t span =
          static_cast<std::uint64_t>(config.max_order - config.min_order) + 1;
      const int n = config.min_order + static_cast<int>(rng.next_below(span));
      const int density = 30 + 10 * static_cast<int>(rng.next_below(7));
      const std::uint64_t threshold =
          (std::numeric_limits<std::uint64_t>::max() / 100) *
          static_cast<std::uint64_t>(density);
      sample = Graph(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng.next() < threshold) sample.add_edge(u, v);
      origin = "gnp n=" + std::to_string(n) +
               " density=" + std::to_string(density);
    }
    if (!passes(filters, sample)) continue;
    ++result.survivors;
    Budget budget;
    budget.limit = config.budget_limit;
    const bool ok = property(sample, budget);
    if (budget.exhausted) {
      result.budget_exceeded = true;
      continue;
    }
    if (!ok) {
      result.counterexample = std::move(sample);
      result.counterexample_origin = std::move(origin);
      return result;
    }
  }
  return result;
}

}  // namespace locdeg
