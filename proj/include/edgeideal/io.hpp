#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "edgeideal/complex.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

// Parse failure with the offending position (1-based line, 0-based column
// or byte offset within the record).
struct parse_error : std::runtime_error {
  int line;
  int column;
  parse_error(const std::string& msg, int line_, int column_)
      : std::runtime_error("parse error at line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

// --- graph6 ---------------------------------------------------------------
// Standard printable encoding: N(n) followed by the upper triangle read
// column by column ((0,1),(0,2),(1,2),(0,3),...), packed big-endian into
// 6-bit groups, each biased by 63.

inline std::string to_graph6(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(g.n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((g.n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(const std::string& s, int line = 1) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (s.size() < pos + k)
      throw parse_error("truncated graph6 record", line, static_cast<int>(s.size()));
  };
  auto sixbits = [&]() {
    need(1);
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
      throw parse_error("invalid graph6 character", line, static_cast<int>(pos));
    ++pos;
    return c - 63;
  };
  need(1);
  long long n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    ++pos;
    need(1);
    if (static_cast<unsigned char>(s[pos]) == 126)
      throw parse_error("graph order beyond supported range", line, 1);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sixbits();
  } else {
    n = sixbits();
  }
  if (n > kMaxVertices)
    throw parse_error("graph order " + std::to_string(n) + " exceeds 64", line, 0);
  Graph g(static_cast<int>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = sixbits();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  if (pos != s.size())
    throw parse_error("trailing characters after graph6 record", line,
                      static_cast<int>(pos));
  return g;
}

// --- edge list ----------------------------------------------------------------
// First non-blank line: vertex count n. Each following non-blank line: one
// edge "u v" with 1-based endpoints.

inline Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string linebuf;
  int lineno = 0;
  int n = -1;
  Graph g;
  while (std::getline(in, linebuf)) {
    ++lineno;
    size_t nonspace = linebuf.find_first_not_of(" \t\r");
    if (nonspace == std::string::npos) continue;
    std::istringstream ls(linebuf);
    if (n < 0) {
      if (!(ls >> n) || n < 0 || n > kMaxVertices)
        throw parse_error("expected vertex count 0..64", lineno,
                          static_cast<int>(nonspace));
      g = Graph(n);
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v))
      throw parse_error("expected edge 'u v'", lineno, static_cast<int>(nonspace));
    if (u < 1 || u > n || v < 1 || v > n)
      throw parse_error("endpoint out of range 1.." + std::to_string(n), lineno,
                        static_cast<int>(nonspace));
    if (u == v) throw parse_error("loops are not allowed", lineno,
                                  static_cast<int>(nonspace));
    g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (n < 0) throw parse_error("missing vertex count line", lineno + 1, 0);
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

// Sniffs the format: a record whose first token is an integer is an edge
// list, otherwise graph6.
inline Graph parse_graph(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw parse_error("empty input", 1, 0);
  if (std::isdigit(static_cast<unsigned char>(text[i])))
    return from_edge_list(text);
  std::string record = text.substr(i);
  size_t end = record.find_first_of(" \t\r\n");
  if (end != std::string::npos) record = record.substr(0, end);
  return from_graph6(record);
}

// --- facet lists ----------------------------------------------------------------
// One facet per line, space-separated labels; labels are collected in order
// of first appearance.

inline SimplicialComplex from_facet_list(const std::string& text) {
  std::istringstream in(text);
  std::string linebuf;
  int lineno = 0;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, linebuf)) {
    ++lineno;
    std::istringstream ls(linebuf);
    std::vector<std::string> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    if (row.empty()) continue;
    for (const std::string& t : row)
      if (index.emplace(t, static_cast<int>(labels.size())).second)
        labels.push_back(t);
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(labels.size()) > kMaxVertices)
    throw parse_error("more than 64 vertices", lineno, 0);
  SimplicialComplex d(static_cast<int>(labels.size()));
  d.labels = labels;
  std::vector<VertexSet> facets;
  for (const auto& row : rows) {
    VertexSet f = 0;
    for (const std::string& t : row) f |= bit(index[t]);
    facets.push_back(f);
  }
  if (facets.empty()) facets.push_back(0);  // no lines: the empty complex
  d.set_facets(std::move(facets));
  return d;
}

inline std::string format_vertex_set(const std::vector<std::string>& labels,
                                     VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(s, [&](int v) {
    if (!first) out += ",";
    out += labels[v];
    first = false;
  });
  return out + "}";
}

}  // namespace edgeideal
