#pragma once

// Subgraph statistics: Sub_F enumeration, homomorphism signs, and the
// odd/even classification of forests.

#include <cstdint>
#include <optional>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/tree_code.hpp"

namespace impartial {

// Spanning subgraph of g on the edge subset given by sorted indices.
inline UndirectedGraph spanning_subgraph(const UndirectedGraph& g,
                                         const std::vector<int>& edge_indices) {
  std::vector<Edge> es;
  es.reserve(edge_indices.size());
  for (int i : edge_indices) es.push_back(g.edges()[i]);
  return UndirectedGraph(g.order(), std::move(es));
}

// Spanning subgraph of h on edge indices of `host` (= underlying(h)), with
// orientations inherited from h. Indices refer to host's sorted edge list.
inline Digraph inherit_orientation(const Digraph& h, const UndirectedGraph& host,
                                   const std::vector<int>& edge_indices) {
  std::vector<Edge> es;
  es.reserve(edge_indices.size());
  for (int i : edge_indices) {
    auto [u, v] = host.edges()[i];
    es.emplace_back(h.has_edge(u, v) ? Edge{u, v} : Edge{v, u});
  }
  return Digraph(h.order(), std::move(es));
}

// A forest is odd iff some component has a mirror-bridge.
inline bool is_odd(const UndirectedGraph& g) {
  if (!is_forest(g)) throw std::invalid_argument("is_odd: input is not a forest");
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    if (mirror_bridge_of_tree(induced(g, comp))) return true;
  }
  return false;
}

inline bool is_even(const UndirectedGraph& g) { return !is_odd(g); }

// Sign of an undirected homomorphism sigma: F -> H between digraphs:
// (-1)^r with r the number of F-edges whose orientation sigma reverses.
inline int sgn_map(const std::vector<int>& sigma, const Digraph& f, const Digraph& h) {
  if (static_cast<int>(sigma.size()) != f.order())
    throw std::invalid_argument("sgn_map: map size does not match |V(F)|");
  for (int v : sigma) detail::check_vertex(v, h.order(), "sgn_map");
  int reversed = 0;
  for (auto [u, v] : f.edges()) {
    if (h.has_edge(sigma[u], sigma[v])) continue;
    if (h.has_edge(sigma[v], sigma[u]))
      ++reversed;
    else
      throw std::invalid_argument("sgn_map: map is not an undirected homomorphism");
  }
  return (reversed % 2 == 0) ? 1 : -1;
}

// sgn(F1, F2) for even digraphs with isomorphic underlying forests; the sign
// does not depend on the isomorphism used, so any one will do.
inline int sgn_even_pair(const Digraph& f1, const Digraph& f2) {
  const UndirectedGraph u1 = underlying(f1), u2 = underlying(f2);
  if (!is_even(u1) || !is_even(u2))
    throw std::invalid_argument("sgn_even_pair: arguments must be even digraphs");
  auto sigma = forest_isomorphism(u1, u2);
  if (!sigma)
    throw std::invalid_argument("sgn_even_pair: underlying forests are not isomorphic");
  return sgn_map(*sigma, f1, f2);
}

namespace detail {

// Enumerates k-subsets of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Edge-index subsets of `host` whose spanning subgraph is isomorphic to
// `pattern`; lexicographic subset order.
inline std::vector<std::vector<int>> sub_f_members(const UndirectedGraph& host,
                                                   const UndirectedGraph& pattern) {
  if (host.order() != pattern.order())
    throw std::invalid_argument("sub_f_members: vertex-count mismatch");
  if (!is_forest(host) || !is_forest(pattern))
    throw std::invalid_argument("sub_f_members: inputs must be forests");
  const ForestIsoKey target = forest_iso_key(pattern);
  std::vector<std::vector<int>> out;
  detail::for_each_subset(host.size(), pattern.size(), [&](const std::vector<int>& idx) {
    if (forest_iso_key(spanning_subgraph(host, idx)) == target) out.push_back(idx);
  });
  return out;
}

// Sub_F(h): spanning subgraphs of h isomorphic to f, orientations inherited.
inline std::vector<Digraph> enumerate_sub_F(const Digraph& h, const UndirectedGraph& f) {
  const UndirectedGraph host = underlying(h);
  std::vector<Digraph> out;
  for (const auto& idx : sub_f_members(host, f)) out.push_back(inherit_orientation(h, host, idx));
  return out;
}

}  // namespace impartial
