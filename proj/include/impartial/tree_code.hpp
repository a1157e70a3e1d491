#pragma once

// Canonical forms for rooted and unrooted (di)trees, and the isomorphism
// machinery built on them: forest isomorphism keys, explicit tree
// isomorphisms, and mirror-bridge detection via the leaf-strip residue.
//
// Codes use the classic bottom-up sorted-children encoding; the
// direction-aware flavor prefixes each child subcode with '>' (edge points
// from parent to child) or '<' (child to parent).

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "impartial/graph.hpp"

namespace impartial {

enum class CodeFlavor { undirected, direction_aware };

struct RootedTreeCode {
  std::string code;
  CodeFlavor flavor = CodeFlavor::undirected;
  friend auto operator<=>(const RootedTreeCode&, const RootedTreeCode&) = default;
};

namespace detail {

// Subtree code of v with given parent (-1 for the root). `dir(v, w)` returns
// the marker for the edge between parent v and child w ('\0' = no marker).
template <typename DirFn>
std::string subtree_code(const std::vector<std::vector<int>>& adj, int v, int parent,
                         DirFn&& dir) {
  std::vector<std::string> child_codes;
  for (int w : adj[v]) {
    if (w == parent) continue;
    std::string sub = subtree_code(adj, w, v, dir);
    char marker = dir(v, w);
    if (marker != '\0') sub.insert(sub.begin(), marker);
    child_codes.push_back(std::move(sub));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto& c : child_codes) out += c;
  out += ")";
  return out;
}

inline void require_tree(const UndirectedGraph& g, const char* what) {
  if (!is_tree(g)) throw std::invalid_argument(std::string(what) + ": input is not a tree");
}

}  // namespace detail

inline RootedTreeCode rooted_code(const UndirectedGraph& t, int root) {
  detail::require_tree(t, "rooted_code");
  detail::check_vertex(root, t.order(), "rooted_code");
  auto adj = adjacency(t);
  return {detail::subtree_code(adj, root, -1, [](int, int) { return '\0'; }),
          CodeFlavor::undirected};
}

inline RootedTreeCode rooted_code(const Digraph& t, int root,
                                  CodeFlavor flavor = CodeFlavor::direction_aware) {
  const UndirectedGraph u = underlying(t);
  if (flavor == CodeFlavor::undirected) return rooted_code(u, root);
  detail::require_tree(u, "rooted_code");
  detail::check_vertex(root, t.order(), "rooted_code");
  auto adj = adjacency(u);
  return {detail::subtree_code(adj, root, -1,
                               [&t](int v, int w) { return t.has_edge(v, w) ? '>' : '<'; }),
          CodeFlavor::direction_aware};
}

// True iff a direction-preserving isomorphism maps (a, ra) to (b, rb).
inline bool rooted_digraph_iso(const Digraph& a, int ra, const Digraph& b, int rb) {
  return rooted_code(a, ra) == rooted_code(b, rb);
}

// Centroid(s) of a tree: one vertex, or two adjacent vertices splitting it
// evenly. Sorted ascending.
inline std::vector<int> centroids(const UndirectedGraph& t) {
  detail::require_tree(t, "centroids");
  const int n = t.order();
  auto adj = adjacency(t);
  std::vector<int> size(n, 1), order, parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : adj[order[i]])
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  std::vector<int> best;
  int best_weight = n + 1;
  for (int v = 0; v < n; ++v) {
    int weight = n - size[v];
    for (int w : adj[v])
      if (w != parent[v]) weight = std::max(weight, size[w]);
    if (weight < best_weight) {
      best_weight = weight;
      best = {v};
    } else if (weight == best_weight) {
      best.push_back(v);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Canonical (unrooted) code: rooted at the centroid, taking the
// lexicographically smaller code when there are two centroid choices.
inline std::string canonical_code(const UndirectedGraph& t) {
  std::string best;
  for (int c : centroids(t)) {
    std::string code = rooted_code(t, c).code;
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline std::string canonical_code(const Digraph& t) {
  std::string best;
  for (int c : centroids(underlying(t))) {
    std::string code = rooted_code(t, c).code;
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// The canonical root: the centroid realizing canonical_code, ties broken by
// vertex id.
inline int canonical_root(const UndirectedGraph& t) {
  int best_v = -1;
  std::string best;
  for (int c : centroids(t)) {
    std::string code = rooted_code(t, c).code;
    if (best_v < 0 || code < best) {
      best = std::move(code);
      best_v = c;
    }
  }
  return best_v;
}

// Multiset of (component order, component canonical code); equal keys on the
// same vertex count characterize forest isomorphism.
struct ForestIsoKey {
  std::vector<std::pair<int, std::string>> parts;
  friend auto operator<=>(const ForestIsoKey&, const ForestIsoKey&) = default;
};

inline ForestIsoKey forest_iso_key(const UndirectedGraph& g) {
  if (!is_forest(g)) throw std::invalid_argument("forest_iso_key: input is not a forest");
  ForestIsoKey key;
  for (const auto& comp : components(g)) {
    UndirectedGraph t = induced(g, comp);
    key.parts.emplace_back(t.order(), canonical_code(t));
  }
  std::sort(key.parts.begin(), key.parts.end());
  return key;
}

// Direction-aware analogue, for deduplicating digraph forests.
inline std::vector<std::pair<int, std::string>> digraph_forest_key(const Digraph& d) {
  if (!is_forest(underlying(d)))
    throw std::invalid_argument("digraph_forest_key: underlying graph is not a forest");
  std::vector<std::pair<int, std::string>> key;
  for (const auto& comp : components(d)) {
    Digraph t = induced(d, comp);
    key.emplace_back(t.order(), canonical_code(t));
  }
  std::sort(key.begin(), key.end());
  return key;
}

// --- explicit isomorphisms --------------------------------------------------

namespace detail {

// Builds map[v1] = v2 recursively; assumes equal subtree codes.
inline bool match_subtrees(const std::vector<std::vector<int>>& adj1, int v1, int p1,
                           const std::vector<std::vector<int>>& adj2, int v2, int p2,
                           std::vector<int>& map) {
  map[v1] = v2;
  std::vector<std::pair<std::string, int>> kids1, kids2;
  for (int w : adj1[v1])
    if (w != p1)
      kids1.emplace_back(subtree_code(adj1, w, v1, [](int, int) { return '\0'; }), w);
  for (int w : adj2[v2])
    if (w != p2)
      kids2.emplace_back(subtree_code(adj2, w, v2, [](int, int) { return '\0'; }), w);
  if (kids1.size() != kids2.size()) return false;
  std::sort(kids1.begin(), kids1.end());
  std::sort(kids2.begin(), kids2.end());
  for (std::size_t i = 0; i < kids1.size(); ++i) {
    if (kids1[i].first != kids2[i].first) return false;
    if (!match_subtrees(adj1, kids1[i].second, v1, adj2, kids2[i].second, v2, map))
      return false;
  }
  return true;
}

}  // namespace detail

// Rooted undirected tree isomorphism carrying r1 to r2, if one exists.
inline std::optional<std::vector<int>> rooted_tree_isomorphism(const UndirectedGraph& t1, int r1,
                                                               const UndirectedGraph& t2, int r2) {
  detail::require_tree(t1, "rooted_tree_isomorphism");
  detail::require_tree(t2, "rooted_tree_isomorphism");
  if (t1.order() != t2.order()) return std::nullopt;
  if (rooted_code(t1, r1) != rooted_code(t2, r2)) return std::nullopt;
  std::vector<int> map(t1.order(), -1);
  auto adj1 = adjacency(t1), adj2 = adjacency(t2);
  if (!detail::match_subtrees(adj1, r1, -1, adj2, r2, -1, map)) return std::nullopt;
  return map;
}

inline std::optional<std::vector<int>> tree_isomorphism(const UndirectedGraph& t1,
                                                        const UndirectedGraph& t2) {
  if (t1.order() != t2.order()) return std::nullopt;
  if (canonical_code(t1) != canonical_code(t2)) return std::nullopt;
  int r1 = canonical_root(t1);
  const std::string target = rooted_code(t1, r1).code;
  for (int c : centroids(t2))
    if (rooted_code(t2, c).code == target)
      return rooted_tree_isomorphism(t1, r1, t2, c);
  return std::nullopt;
}

// Undirected forest isomorphism; components are matched by canonical code.
inline std::optional<std::vector<int>> forest_isomorphism(const UndirectedGraph& g1,
                                                          const UndirectedGraph& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (!is_forest(g1) || !is_forest(g2)) return std::nullopt;
  auto comps1 = components(g1), comps2 = components(g2);
  if (comps1.size() != comps2.size()) return std::nullopt;

  struct Part {
    int size;
    std::string code;
    std::vector<int> verts;
  };
  auto describe = [](const UndirectedGraph& g, std::vector<std::vector<int>>& comps) {
    std::vector<Part> parts;
    for (auto& c : comps) {
      UndirectedGraph t = induced(g, c);
      parts.push_back({t.order(), canonical_code(t), std::move(c)});
    }
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
      return std::tie(a.size, a.code, a.verts) < std::tie(b.size, b.code, b.verts);
    });
    return parts;
  };
  auto parts1 = describe(g1, comps1), parts2 = describe(g2, comps2);

  std::vector<int> map(g1.order(), -1);
  for (std::size_t i = 0; i < parts1.size(); ++i) {
    if (parts1[i].size != parts2[i].size || parts1[i].code != parts2[i].code)
      return std::nullopt;
    UndirectedGraph t1 = induced(g1, parts1[i].verts);
    UndirectedGraph t2 = induced(g2, parts2[i].verts);
    int r1 = canonical_root(t1);
    std::optional<std::vector<int>> sub;
    const std::string target = rooted_code(t1, r1).code;
    for (int c : centroids(t2)) {
      if (rooted_code(t2, c).code != target) continue;
      sub = rooted_tree_isomorphism(t1, r1, t2, c);
      if (sub) break;
    }
    if (!sub) return std::nullopt;
    for (int v = 0; v < t1.order(); ++v)
      map[parts1[i].verts[v]] = parts2[i].verts[(*sub)[v]];
  }
  return map;
}

// --- leaf stripping and mirror-bridge detection ------------------------------

// The residue of iterated leaf removal: a single vertex or a single edge.
struct LeafStripResidue {
  std::vector<int> vertices;  // size 1 or 2
  bool is_edge() const { return vertices.size() == 2; }
};

inline LeafStripResidue leaf_strip_residue(const UndirectedGraph& t) {
  detail::require_tree(t, "leaf_strip_residue");
  const int n = t.order();
  auto adj = adjacency(t);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<bool> alive(n, true);
  int remaining = n;
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      alive[v] = false;
      --remaining;
      for (int w : adj[v])
        if (alive[w] && --degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  LeafStripResidue res;
  for (int v = 0; v < n; ++v)
    if (alive[v]) res.vertices.push_back(v);
  return res;
}

namespace detail {

// Vertex set of the component of t \ {u,v} containing v.
inline std::vector<int> branch_vertices(const UndirectedGraph& t, int u, int v) {
  auto adj = adjacency(t);
  std::vector<bool> seen(t.order(), false);
  seen[v] = true;
  std::vector<int> stack{v}, out;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int w : adj[x]) {
      if (x == v && w == u) continue;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Mirror-bridge of a tree: the unique candidate is the leaf-strip residue
// edge; it qualifies iff the two sides are isomorphic as rooted trees.
inline std::optional<Edge> mirror_bridge_of_tree(const UndirectedGraph& t) {
  auto residue = leaf_strip_residue(t);
  if (!residue.is_edge()) return std::nullopt;
  int u = residue.vertices[0], v = residue.vertices[1];
  auto side_u = detail::branch_vertices(t, v, u);
  auto side_v = detail::branch_vertices(t, u, v);
  if (side_u.size() != side_v.size()) return std::nullopt;
  UndirectedGraph tu = induced(t, side_u), tv = induced(t, side_v);
  int ru = static_cast<int>(std::lower_bound(side_u.begin(), side_u.end(), u) - side_u.begin());
  int rv = static_cast<int>(std::lower_bound(side_v.begin(), side_v.end(), v) - side_v.begin());
  if (rooted_code(tu, ru) != rooted_code(tv, rv)) return std::nullopt;
  return Edge{u, v};
}

}  // namespace impartial
