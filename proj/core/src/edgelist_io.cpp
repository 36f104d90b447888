#include "locdeg/edgelist_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace locdeg {

namespace {

// Splits text into lines on '\n'.  A trailing newline on the last line is
// required by the format; a missing one is tolerated on parse.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

// Parses "<a> <b>" with no leading/trailing junk.
std::pair<int, int> parse_int_pair(const std::string& line, int lineno) {
  int a = 0, b = 0;
  const char* begin = line.data();
  const char* end = begin + line.size();
  auto [p1, ec1] = std::from_chars(begin, end, a);
  if (ec1 != std::errc() || p1 == end || *p1 != ' ')
    throw ParseError(lineno, "expected two space-separated integers, got \"" +
                                 line + "\"");
  auto [p2, ec2] = std::from_chars(p1 + 1, end, b);
  if (ec2 != std::errc() || p2 != end)
    throw ParseError(lineno, "expected two space-separated integers, got \"" +
                                 line + "\"");
  return {a, b};
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  auto [n, m] = parse_int_pair(lines[0], 1);
  if (n < 0) throw ParseError(1, "negative vertex count");
  if (m < 0) throw ParseError(1, "negative edge count");
  if (static_cast<int>(lines.size()) != m + 1) {
    // Point at the first missing or first surplus edge line.
    const int at = static_cast<int>(lines.size()) < m + 1
                       ? static_cast<int>(lines.size()) + 1
                       : m + 2;
    throw ParseError(at, "expected " + std::to_string(m) +
                             " edge lines, found " +
                             std::to_string(lines.size() - 1));
  }
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int lineno = i + 2;
    auto [u, v] = parse_int_pair(lines[i + 1], lineno);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "edge endpoint out of range [0, " +
                                   std::to_string(n) + ")");
    if (u >= v)
      throw ParseError(lineno, "edges must satisfy u < v, got " +
                                   std::to_string(u) + " " + std::to_string(v));
    if (g.adjacent(u, v))
      throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " +
                                   std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string write_graph(const Graph& g) {
  std::string out;
  out += std::to_string(g.order());
  out += ' ';
  out += std::to_string(g.edge_count());
  out += '\n';
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_graph(g);
}

}  // namespace locdeg
