#include "locdeg/families.hpp"

#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace locdeg {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph complete(int n) {
  require(n >= 0, "complete: order must be non-negative");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path(int n) {
  require(n >= 1, "path: order must be at least 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle: order must be at least 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite: sides must be at least 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_multipartite(int parts, int part_size) {
  require(parts >= 3, "complete_multipartite: need at least 3 parts");
  require(part_size >= 1, "complete_multipartite: part size must be >= 1");
  int n = parts * part_size;
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / part_size != v / part_size) g.add_edge(u, v);
    }
  }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);              // outer cycle
    g.add_edge(i, i + 5);                    // spoke
    g.add_edge(i + 5, (i + 2) % 5 + 5);      // inner pentagram
  }
  return g;
}

Graph path_strong_k3(int m) {
  require(m >= 2, "path_strong_k3: need m >= 2");
  return strong_product(path(m), complete(3));
}

Graph cycle_strong_k3(int m) {
  require(m >= 3, "cycle_strong_k3: need m >= 3");
  return strong_product(cycle(m), complete(3));
}

Graph path_strong_k2(int m) {
  require(m >= 3, "path_strong_k2: need m >= 3");
  return strong_product(path(m), complete(2));
}

Graph join_with_clique(const Graph& g) {
  require(g.order() >= 3, "join_with_clique: base graph must have order >= 3");
  require(is_connected(g), "join_with_clique: base graph must be connected");
  return join(g, complete(g.order()));
}

Graph lambda_gap_family(int k) {
  require(k >= 3, "lambda_gap_family: need k >= 3");
  int clique = k * k + 2;
  Graph g(2 * clique);
  for (int u = 0; u < clique; ++u) {
    for (int v = u + 1; v < clique; ++v) {
      g.add_edge(u, v);
      g.add_edge(clique + u, clique + v);
    }
  }
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) g.add_edge(u, clique + v);
  }
  return g;
}

Graph ore_min_degree3(int m) {
  require(m >= 3, "ore_min_degree3: need m >= 3");
  Graph base = path_strong_k3(m);
  Graph g(3 * m + 1);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  for (int a = 0; a < 3; ++a) g.add_edge(3 * (m - 1) + a, 3 * m);
  return g;
}

namespace {

// Adds the vertices of `extra` (mutually joined when edge == true) and joins
// every one of them to the three vertices of the given layer.
void attach(Graph& g, int layer_start, const std::vector<int>& extra,
            bool edge) {
  for (int v : extra) {
    for (int a = 0; a < 3; ++a) g.add_edge(layer_start + a, v);
  }
  if (edge && extra.size() == 2) g.add_edge(extra[0], extra[1]);
}

}  // namespace

Graph ore_diameter_extremal(int n) {
  require(n >= 9, "ore_diameter_extremal: need n >= 9");
  int r = n % 3;
  int k = n / 3;  // n = 3k + r
  Graph base = r == 2 ? path_strong_k3(k) : path_strong_k3(k - 1);
  Graph g(n);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  int b = base.order();
  int last_layer = b - 3;
  if (r == 0) {
    attach(g, 0, {b}, false);
    attach(g, last_layer, {b + 1, b + 2}, true);
  } else if (r == 1) {
    attach(g, 0, {b, b + 1}, true);
    attach(g, last_layer, {b + 2, b + 3}, true);
  } else {
    attach(g, 0, {b}, false);
    attach(g, last_layer, {b + 1}, false);
  }
  return g;
}

Graph balanced_complete_bipartite(int half) {
  require(half >= 2, "balanced_complete_bipartite: need half >= 2");
  return complete_bipartite(half, half);
}

Graph cycle_power_3k(int k) {
  require(k >= 1, "cycle_power_3k: need k >= 1");
  return graph_power(cycle(3 * k), k);
}

// --- text form ---------------------------------------------------------------

FamilySpec parse_family_spec(const std::string& text) {
  std::istringstream in(text);
  FamilySpec spec;
  if (!(in >> spec.family)) {
    throw std::invalid_argument("family spec: empty input");
  }
  std::string token;
  while (in >> token) {
    std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
      throw std::invalid_argument("family spec: expected key=value, got '" +
                                  token + "'");
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    int parsed = 0;
    auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw std::invalid_argument("family spec: bad integer '" + value +
                                  "' for key '" + key + "'");
    }
    if (!spec.params.emplace(key, parsed).second) {
      throw std::invalid_argument("family spec: duplicate key '" + key + "'");
    }
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out = spec.family;
  for (const auto& [key, value] : spec.params) {
    out += ' ' + key + '=' + std::to_string(value);
  }
  return out;
}

namespace {

struct FamilyDef {
  std::vector<std::string> params;
  std::function<Graph(const std::map<std::string, int>&)> make;
};

const std::map<std::string, FamilyDef>& registry() {
  static const std::map<std::string, FamilyDef> defs = {
      {"complete", {{"n"}, [](const auto& p) { return complete(p.at("n")); }}},
      {"path", {{"n"}, [](const auto& p) { return path(p.at("n")); }}},
      {"cycle", {{"n"}, [](const auto& p) { return cycle(p.at("n")); }}},
      {"complete-bipartite",
       {{"a", "b"},
        [](const auto& p) { return complete_bipartite(p.at("a"), p.at("b")); }}},
      {"complete-multipartite",
       {{"parts", "size"},
        [](const auto& p) {
          return complete_multipartite(p.at("parts"), p.at("size"));
        }}},
      {"petersen", {{}, [](const auto&) { return petersen(); }}},
      {"path-strong-k3",
       {{"m"}, [](const auto& p) { return path_strong_k3(p.at("m")); }}},
      {"cycle-strong-k3",
       {{"m"}, [](const auto& p) { return cycle_strong_k3(p.at("m")); }}},
      {"path-strong-k2",
       {{"m"}, [](const auto& p) { return path_strong_k2(p.at("m")); }}},
      {"lambda-gap-family",
       {{"k"}, [](const auto& p) { return lambda_gap_family(p.at("k")); }}},
      {"ore-min-degree3",
       {{"m"}, [](const auto& p) { return ore_min_degree3(p.at("m")); }}},
      {"ore-diameter-extremal",
       {{"n"}, [](const auto& p) { return ore_diameter_extremal(p.at("n")); }}},
      {"balanced-complete-bipartite",
       {{"half"},
        [](const auto& p) { return balanced_complete_bipartite(p.at("half")); }}},
      {"cycle-power-3k",
       {{"k"}, [](const auto& p) { return cycle_power_3k(p.at("k")); }}},
  };
  return defs;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
  auto it = registry().find(spec.family);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown family '" + spec.family + "'");
  }
  const FamilyDef& def = it->second;
  for (const std::string& name : def.params) {
    if (!spec.params.count(name)) {
      throw std::invalid_argument("family '" + spec.family +
                                  "' needs parameter '" + name + "'");
    }
  }
  for (const auto& [key, value] : spec.params) {
    (void)value;
    bool known = false;
    for (const std::string& name : def.params) known |= name == key;
    if (!known) {
      throw std::invalid_argument("family '" + spec.family +
                                  "' does not take parameter '" + key + "'");
    }
  }
  return def.make(spec.params);
}

std::vector<std::string> family_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, def] : registry()) ids.push_back(id);
  return ids;
}

}  // namespace locdeg
