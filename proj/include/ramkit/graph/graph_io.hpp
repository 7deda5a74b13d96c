#pragma once

#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/tree_io.hpp"
#include "ramkit/graph/graph.hpp"

namespace ramkit {

// Adjacency-list text: one line "v: w1 w2 ..." per vertex 0..n-1, with the
// neighbours in increasing order. Lines starting with '#' are comments.
inline std::string graph_to_adjacency(const Graph& g) {
  std::ostringstream out;
  out << "# ramkit graph, " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ":";
    for (Vertex w : g.neighbors(v)) out << " " << w;
    out << "\n";
  }
  return out.str();
}

inline Graph graph_from_adjacency(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  Vertex expected = 0;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("adjacency line without ':': " + line);
    std::size_t v = 0;
    try {
      v = std::stoul(line.substr(0, colon));
    } catch (const std::logic_error&) {
      throw InputError("bad vertex id in adjacency line: " + line);
    }
    if (v != expected) throw InputError("adjacency lines must list vertices 0, 1, 2, ... in order");
    ++expected;
    g.ensure_vertex(v);
    std::istringstream rest(line.substr(colon + 1));
    for (std::string tok; rest >> tok;) {
      std::size_t used = 0;
      std::size_t w = 0;
      try {
        w = std::stoul(tok, &used);
      } catch (const std::logic_error&) {
        throw InputError("bad neighbour '" + tok + "'");
      }
      if (used != tok.size()) throw InputError("bad neighbour '" + tok + "'");
      g.add_edge(v, w);
    }
  }
  if (g.vertex_count() > expected) throw InputError("adjacency list mentions a vertex without its own line");
  return g;
}

// DOT export; `label` supplies an optional role string per vertex.
inline std::string graph_to_dot(const Graph& g, const std::function<std::string(Vertex)>& label = nullptr) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (label) {
      std::string l = label(v);
      if (!l.empty()) out << " [role=" << Json(l).dump() << "]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// Reads the subset of DOT written by graph_to_dot: numeric node statements
// (attributes ignored) and "u -- v" edge statements.
inline Graph graph_from_dot(const std::string& text) {
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
  static const std::regex node_re(R"(^\s*(\d+)\s*(\[.*\])?\s*;?\s*$)");
  static const std::regex open_re(R"(^\s*(strict\s+)?graph\s*\w*\s*\{\s*$)");
  Graph g;
  std::istringstream in(text);
  bool opened = false, closed = false;
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line.compare(first, 2, "//") == 0) continue;
    if (!opened) {
      if (!std::regex_match(line, open_re)) throw InputError("DOT input must start with 'graph {'");
      opened = true;
    } else if (line.find('}') != std::string::npos && line.find_first_not_of(" \t\r}") == std::string::npos) {
      closed = true;
    } else if (closed) {
      throw InputError("DOT content after the closing brace");
    } else if (std::regex_match(line, m, edge_re)) {
      g.add_edge(std::stoul(m[1]), std::stoul(m[2]));
    } else if (std::regex_match(line, m, node_re)) {
      g.ensure_vertex(std::stoul(m[1]));
    } else {
      throw InputError("unsupported DOT line: " + line);
    }
  }
  if (!opened || !closed) throw InputError("DOT input is not a complete graph block");
  return g;
}

}  // namespace ramkit
