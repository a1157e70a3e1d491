#pragma once

// Linear-extension counting for DAGs by dynamic programming over vertex
// subsets: f(S) = number of valid orderings placing exactly S first.

#include <cstdint>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/numeric.hpp"

namespace impartial {

inline bool is_acyclic(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [u, v] : d.edges()) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t done = 0;
  while (done < queue.size()) {
    int v = queue[done++];
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return static_cast<int>(queue.size()) == n;
}

// Number of total orders of V compatible with every edge u -> v (u before v).
inline Integer count_linear_extensions(const Digraph& d) {
  if (!is_acyclic(d))
    throw std::invalid_argument("count_linear_extensions: digraph has a directed cycle");
  const int n = d.order();
  if (n > 24) throw std::invalid_argument("count_linear_extensions: vertex count too large");
  // succ_mask[v]: vertices that must come after v.
  std::vector<std::uint32_t> succ_mask(n, 0);
  for (auto [u, v] : d.edges()) succ_mask[u] |= std::uint32_t{1} << v;
  std::vector<Integer> f(std::size_t{1} << n);
  f[0] = 1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    Integer total = 0;
    for (int v = 0; v < n; ++v) {
      if (!(s & (std::uint32_t{1} << v))) continue;
      // v can be the last element of S iff none of its successors is in S.
      if (succ_mask[v] & s) continue;
      total += f[s & ~(std::uint32_t{1} << v)];
    }
    f[s] = std::move(total);
  }
  return f[(std::size_t{1} << n) - 1];
}

}  // namespace impartial
