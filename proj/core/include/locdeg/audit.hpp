#pragma once

// Structural audit of non-extendable cycles.
//
// When a cycle admits no +1 extension, a family of local adjacency
// constraints must hold around it (otherwise one of the extension templates
// in extension.hpp would fire).  This module re-derives those constraints
// directly and reports any violation, giving an independent cross-check of
// the template catalogue: a violation means either the constraint derivation
// or the template scan is wrong.
//
// Rule identifiers (stable strings used in reports):
//   L31-1  off-cycle vertices never attach at consecutive positions
//   L31-2  no chord v_{i+1}v_{j+1} or v_{i-1}v_{j-1} across an attachment pair
//   L31-3  chord v_{i-1}v_{i+1} forbids v_{j-1}v_i and v_{j+1}v_i
//   L31-4  attachments at distance two forbid consecutive neighbours of the
//          middle vertex elsewhere on the cycle
//   L32-1  degree and off-cycle-neighbour bounds at a maximum-degree
//          attachment vertex (requires the ambient graph to satisfy the
//          1/2-neighbourhood-degree condition and be connected)

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locdeg/cycles.hpp"
#include "locdeg/graph.hpp"

namespace locdeg {

// Context at a maximum-degree attachment vertex of a cycle (smallest id on
// ties): degree d, off-cycle neighbour count s, and the d - s - 2 on-cycle
// neighbours other than the two cycle-adjacent ones.
struct ExtensionContext {
  int v0 = -1;
  int position = -1;  // position of v0 on the cycle
  int d = 0;
  int s = 0;
  std::vector<int> side;  // ascending vertex ids
};

// std::nullopt when the cycle has no attachment vertex (spanning or isolated
// from the rest of the graph).
std::optional<ExtensionContext> extension_context(const Graph& g,
                                                  const Cycle& cycle);

struct AuditViolation {
  std::string rule;
  Cycle cycle;
  std::string detail;
};

// Checks the L31-* rules (any graph) and, when the graph satisfies the
// 1/2-neighbourhood-degree condition and is connected, the L32-1 bounds.
// Precondition: `cycle` has no +1 extension; the driver below establishes
// this before calling.
std::vector<AuditViolation> audit_cycle(const Graph& g, const Cycle& cycle);

struct AuditReport {
  bool budget_exceeded = false;
  std::uint64_t cycles_seen = 0;
  std::uint64_t non_extendable = 0;
  std::vector<AuditViolation> violations;
};

// Enumerates all cycles, establishes non-extendability exhaustively for each
// non-Hamilton cycle that the template scan cannot extend, and audits every
// confirmed non-extendable cycle.
AuditReport audit_non_extendable_cycles(const Graph& g, Budget& budget);

}  // namespace locdeg
