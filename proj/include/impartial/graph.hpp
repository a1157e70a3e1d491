#pragma once

// Core digraph / undirected graph types and the line-based text format.
//
// Vertices are dense integers 0..n-1. Edge lists are kept sorted and
// duplicate-free so that equality is structural and all outputs are
// reproducible.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace impartial {

using Edge = std::pair<int, int>;

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("parse error at line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

namespace detail {

inline void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n) + ")");
}

}  // namespace detail

// Directed graph: edge (u,v) means u -> v. No self-loops, and at most one of
// (u,v), (v,u) is present (orientations of simple graphs only).
class Digraph {
 public:
  Digraph() = default;

  Digraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("Digraph: negative vertex count");
    for (auto [u, v] : edges_) {
      detail::check_vertex(u, n_, "Digraph");
      detail::check_vertex(v, n_, "Digraph");
      if (u == v) throw std::invalid_argument("Digraph: self-loop at " + std::to_string(u));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i] == edges_[i - 1])
        throw std::invalid_argument("Digraph: duplicate edge");
    for (auto [u, v] : edges_)
      if (u > v && has_edge(v, u))
        throw std::invalid_argument("Digraph: anti-parallel pair (" + std::to_string(v) +
                                    "," + std::to_string(u) + ")");
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

  std::string to_text() const {
    std::ostringstream out;
    out << "digraph " << n_ << "\n";
    for (auto [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Undirected simple graph; edges stored as (min,max) pairs.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  UndirectedGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n_ < 0) throw std::invalid_argument("UndirectedGraph: negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      detail::check_vertex(u, n_, "UndirectedGraph");
      detail::check_vertex(v, n_, "UndirectedGraph");
      if (u == v)
        throw std::invalid_argument("UndirectedGraph: self-loop at " + std::to_string(u));
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i] == edges_[i - 1])
        throw std::invalid_argument("UndirectedGraph: duplicate edge");
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

  std::string to_text() const {
    std::ostringstream out;
    out << "graph " << n_ << "\n";
    for (auto [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

inline UndirectedGraph underlying(const Digraph& d) {
  return UndirectedGraph(d.order(), d.edges());
}

inline std::vector<std::vector<int>> adjacency(const UndirectedGraph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Connected components as sorted vertex lists, ordered by minimum vertex.
inline std::vector<std::vector<int>> components(const UndirectedGraph& g) {
  const auto adj = adjacency(g);
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, verts;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

// Weakly connected components of a digraph.
inline std::vector<std::vector<int>> components(const Digraph& d) {
  return components(underlying(d));
}

inline bool is_forest(const UndirectedGraph& g) {
  return g.size() + static_cast<int>(components(g).size()) == g.order();
}

inline bool is_tree(const UndirectedGraph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && components(g).size() == 1;
}

// Induced subgraph on `vertices` (sorted ascending), relabeled to 0..k-1.
inline UndirectedGraph induced(const UndirectedGraph& g, const std::vector<int>& vertices) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  return UndirectedGraph(static_cast<int>(vertices.size()), std::move(es));
}

inline Digraph induced(const Digraph& d, const std::vector<int>& vertices) {
  std::vector<int> pos(d.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [u, v] : d.edges())
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  return Digraph(static_cast<int>(vertices.size()), std::move(es));
}

inline UndirectedGraph remove_edges(const UndirectedGraph& g, const std::vector<Edge>& remove) {
  std::vector<Edge> keep;
  keep.reserve(g.edges().size());
  for (auto e : g.edges()) {
    bool drop = false;
    for (auto [a, b] : remove) {
      Edge norm{std::min(a, b), std::max(a, b)};
      if (e == norm) {
        drop = true;
        break;
      }
    }
    if (!drop) keep.push_back(e);
  }
  if (g.edges().size() - keep.size() != remove.size())
    throw std::invalid_argument("remove_edges: an edge to remove is not present");
  return UndirectedGraph(g.order(), std::move(keep));
}

inline Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<Edge> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
  return Digraph(a.order() + b.order(), std::move(es));
}

// --- text format -----------------------------------------------------------
//
//   # comment
//   digraph <n>      (or: graph <n>)
//   <u> <v>          one edge per line; for digraphs, u -> v
//
// Duplicate and anti-parallel edges are parse errors.

namespace detail {

struct ParsedEdgeList {
  bool directed = false;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;  // 1-based source line of each edge
};

inline ParsedEdgeList parse_edge_list(std::string_view text) {
  ParsedEdgeList out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only
    if (!have_header) {
      if (first != "digraph" && first != "graph")
        throw ParseError(lineno, 1, "expected 'digraph <n>' or 'graph <n>' header");
      out.directed = (first == "digraph");
      if (!(ls >> out.n) || out.n < 0)
        throw ParseError(lineno, static_cast<int>(first.size()) + 2,
                         "expected nonnegative vertex count after '" + first + "'");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, 1, "trailing tokens after header");
      have_header = true;
      continue;
    }
    std::istringstream es(line);
    int u, v;
    if (!(es >> u >> v)) throw ParseError(lineno, 1, "expected edge line '<u> <v>'");
    std::string extra;
    if (es >> extra) throw ParseError(lineno, 1, "trailing tokens after edge");
    if (u < 0 || u >= out.n) throw ParseError(lineno, 1, "vertex out of range: " + std::to_string(u));
    if (v < 0 || v >= out.n) throw ParseError(lineno, 1, "vertex out of range: " + std::to_string(v));
    if (u == v) throw ParseError(lineno, 1, "self-loop");
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
      auto [a, b] = out.edges[i];
      bool clash = out.directed ? ((a == u && b == v) || (a == v && b == u))
                                : ((std::min(a, b) == std::min(u, v)) &&
                                   (std::max(a, b) == std::max(u, v)));
      if (clash)
        throw ParseError(lineno, 1,
                         out.directed ? "duplicate or anti-parallel edge" : "duplicate edge");
    }
    out.edges.emplace_back(u, v);
    out.edge_lines.push_back(lineno);
  }
  if (!have_header) throw ParseError(lineno + 1, 1, "missing 'digraph'/'graph' header");
  return out;
}

}  // namespace detail

inline Digraph parse_digraph(std::string_view text) {
  auto p = detail::parse_edge_list(text);
  if (!p.directed) throw ParseError(1, 1, "expected a 'digraph', found 'graph'");
  return Digraph(p.n, std::move(p.edges));
}

inline UndirectedGraph parse_graph(std::string_view text) {
  auto p = detail::parse_edge_list(text);
  if (p.directed) throw ParseError(1, 1, "expected a 'graph', found 'digraph'");
  return UndirectedGraph(p.n, std::move(p.edges));
}

// Parses either format; undirected inputs come back as the second member.
inline std::pair<std::optional<Digraph>, std::optional<UndirectedGraph>> parse_any(
    std::string_view text) {
  auto p = detail::parse_edge_list(text);
  if (p.directed) return {Digraph(p.n, std::move(p.edges)), std::nullopt};
  return {std::nullopt, UndirectedGraph(p.n, std::move(p.edges))};
}

}  // namespace impartial
