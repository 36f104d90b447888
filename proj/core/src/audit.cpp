#include "locdeg/audit.hpp"

#include <algorithm>

#include "locdeg/extension.hpp"
#include "locdeg/predicates.hpp"

namespace locdeg {

namespace {

std::string pos_pair(int i, int j) {
  return "positions " + std::to_string(i) + "," + std::to_string(j);
}

struct CycleAuditor {
  const Graph& g;
  const Cycle& cycle;
  const std::vector<int>& c;
  int t;
  std::vector<AuditViolation> out;

  int idx(int p) const { return ((p % t) + t) % t; }
  bool adj(int p, int q) const { return g.adjacent(c[idx(p)], c[idx(q)]); }

  void violation(const char* rule, std::string detail) {
    out.push_back(AuditViolation{rule, cycle, std::move(detail)});
  }

  void check_attachment_pair_rules(int x, const std::vector<int>& att) {
    for (int i : att) {
      for (int j : att) {
        if (i == j) continue;
        // L31-1: never consecutive.
        if (idx(j - i) == 1) {
          violation("L31-1", "off-cycle " + std::to_string(x) +
                                 " attaches at consecutive " + pos_pair(i, j));
        }
        if (idx(j - i) < 2 || idx(i - j) < 2) continue;
        // L31-2: forbidden successor/predecessor chords.
        if (adj(i + 1, j + 1)) {
          violation("L31-2", "chord between successors of " + pos_pair(i, j) +
                                 " shared via off-cycle " + std::to_string(x));
        }
        if (adj(i - 1, j - 1)) {
          violation("L31-2", "chord between predecessors of " +
                                 pos_pair(i, j) + " shared via off-cycle " +
                                 std::to_string(x));
        }
        // L31-3: triangle chord at i forbids v_{j+-1} v_i.
        if (adj(i - 1, i + 1)) {
          if (adj(j - 1, i)) {
            violation("L31-3", "bypass chord at position " + std::to_string(i) +
                                   " with edge to predecessor of " +
                                   std::to_string(j) + " via off-cycle " +
                                   std::to_string(x));
          }
          if (adj(j + 1, i)) {
            violation("L31-3", "bypass chord at position " + std::to_string(i) +
                                   " with edge to successor of " +
                                   std::to_string(j) + " via off-cycle " +
                                   std::to_string(x));
          }
        }
        // L31-4: attachments at distance two.
        if (idx(j - i) == 2) {
          for (int k = 0; k < t; ++k) {
            if (k == i || k == idx(i + 1)) continue;
            if (adj(k, i + 1) && adj(k + 1, i + 1)) {
              violation("L31-4",
                        "middle vertex of " + pos_pair(i, j) +
                            " sees consecutive positions " + pos_pair(k, idx(k + 1)) +
                            " via off-cycle " + std::to_string(x));
            }
          }
        }
      }
    }
  }

  void check_max_attachment_bounds(const ExtensionContext& ctx) {
    if (ctx.d < 6) {
      violation("L32-1", "maximum-degree attachment vertex " +
                             std::to_string(ctx.v0) + " has degree " +
                             std::to_string(ctx.d) + " < 6");
    }
    bool ends_adjacent = adj(ctx.position - 1, ctx.position + 1);
    int bound = ends_adjacent ? ctx.d - 2 : ctx.d - 4;
    if (2 * ctx.s > bound) {
      violation("L32-1", "attachment vertex " + std::to_string(ctx.v0) +
                             " has " + std::to_string(ctx.s) +
                             " off-cycle neighbours, exceeding (" +
                             std::to_string(bound) + ")/2");
    }
    if (static_cast<int>(ctx.side.size()) != ctx.d - ctx.s - 2) {
      violation("L32-1", "side-neighbour count " +
                             std::to_string(ctx.side.size()) +
                             " differs from d-s-2 = " +
                             std::to_string(ctx.d - ctx.s - 2));
    }
  }
};

}  // namespace

std::optional<ExtensionContext> extension_context(const Graph& g,
                                                  const Cycle& cycle) {
  const std::vector<int>& c = cycle.vertices();
  const int t = cycle.length();
  ExtensionContext best;
  for (int p = 0; p < t; ++p) {
    int v = c[p];
    int off = 0;
    for (int u : g.neighbours(v)) {
      if (!cycle.contains(u)) ++off;
    }
    if (off == 0) continue;
    bool better = best.v0 == -1 || g.degree(v) > best.d ||
                  (g.degree(v) == best.d && v < best.v0);
    if (!better) continue;
    best.v0 = v;
    best.position = p;
    best.d = g.degree(v);
    best.s = off;
  }
  if (best.v0 == -1) return std::nullopt;
  int prev = c[((best.position - 1) % t + t) % t];
  int next = c[(best.position + 1) % t];
  for (int u : g.neighbours(best.v0)) {
    if (cycle.contains(u) && u != prev && u != next) best.side.push_back(u);
  }
  return best;
}

std::vector<AuditViolation> audit_cycle(const Graph& g, const Cycle& cycle) {
  CycleAuditor auditor{g, cycle, cycle.vertices(), cycle.length(), {}};
  for (int x = 0; x < g.order(); ++x) {
    if (cycle.contains(x)) continue;
    std::vector<int> att;
    for (int p = 0; p < auditor.t; ++p) {
      if (g.adjacent(x, auditor.c[p])) att.push_back(p);
    }
    if (att.size() >= 2) auditor.check_attachment_pair_rules(x, att);
  }
  if (is_locally_dirac(g).holds && is_connected(g)) {
    if (std::optional<ExtensionContext> ctx = extension_context(g, cycle)) {
      auditor.check_max_attachment_bounds(*ctx);
    }
  }
  return std::move(auditor.out);
}

AuditReport audit_non_extendable_cycles(const Graph& g, Budget& budget) {
  AuditReport report;
  CycleEnumeration en =
      enumerate_cycles(g, budget, [&](std::span<const int> seq) {
        ++report.cycles_seen;
        if (static_cast<int>(seq.size()) == g.order()) return true;
        Cycle cyc = Cycle::validate(g, seq);
        if (find_extension_by_moves(g, cyc)) return true;
        ExtensionSearch s = find_extension_exhaustive(g, cyc, budget);
        if (s.budget_exceeded) {
          report.budget_exceeded = true;
          return false;
        }
        if (s.move) return true;
        ++report.non_extendable;
        std::vector<AuditViolation> found = audit_cycle(g, cyc);
        report.violations.insert(report.violations.end(),
                                 std::make_move_iterator(found.begin()),
                                 std::make_move_iterator(found.end()));
        return true;
      });
  if (en.budget_exceeded) report.budget_exceeded = true;
  return report;
}

}  // namespace locdeg
