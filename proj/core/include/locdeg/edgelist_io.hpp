#pragma once

// Plain-text edge list format.
//
//   line 1:       "<n> <m>"
//   lines 2..m+1: "<u> <v>"   with 0 <= u < v < n
//
// ASCII decimal, fields separated by a single space, LF line endings, no
// trailing blank line.  The writer emits edges sorted by (u, v), so writing
// is canonical and parse/write round-trips are byte-exact.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "locdeg/graph.hpp"

namespace locdeg {

// Parse failure; `line` is 1-based, 0 when the position is not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Rejects u >= v, duplicate edges, out-of-range endpoints, malformed fields,
// and missing or surplus edge lines, with the offending line number.
Graph parse_graph(const std::string& text);
Graph parse_graph_file(const std::string& path);

std::string write_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace locdeg
