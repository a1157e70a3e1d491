#pragma once

// Tree-structure algorithms: mirror-bridges, branches, recursive cutting,
// S_F sets, min-multisets, and the recursively-bridge-mirrored recognizer
// and generators.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/subgraph.hpp"
#include "impartial/tree_code.hpp"

namespace impartial {

// Mirror-bridge of a tree, if any. The only candidate is the leaf-strip
// residue edge, so the answer is unique.
inline std::optional<Edge> mirror_bridge(const UndirectedGraph& t) {
  detail::require_tree(t, "mirror_bridge");
  return mirror_bridge_of_tree(t);
}

// The component of t \ uv containing v, rooted at v and relabeled 0..k-1.
struct Branch {
  UndirectedGraph tree;
  std::vector<int> vertices;  // new id -> original id, ascending
  int root;                   // new id of the original v
  Edge cut_edge;              // original (u, v)
};

inline Branch branch(const UndirectedGraph& t, int u, int v) {
  detail::require_tree(t, "branch");
  if (!t.has_edge(u, v)) throw std::invalid_argument("branch: uv is not an edge");
  Branch b;
  b.vertices = detail::branch_vertices(t, u, v);
  b.tree = induced(t, b.vertices);
  b.root = static_cast<int>(
      std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
  b.cut_edge = {u, v};
  return b;
}

// The two isomorphic components left by deleting the mirror-bridge, rooted at
// its endpoints (in endpoint order).
inline std::pair<Branch, Branch> half_branches(const UndirectedGraph& t) {
  auto bridge = mirror_bridge(t);
  if (!bridge) throw std::invalid_argument("half_branches: tree has no mirror-bridge");
  auto [u, v] = *bridge;
  return {branch(t, v, u), branch(t, u, v)};
}

// Recursive cutting trace: stages[0] = F, each next stage deletes the
// mirror-bridge of every odd component, and the last stage is even.
// removed[i] lists the bridges deleted from stages[i] (empty for the last).
struct CutTrace {
  std::vector<UndirectedGraph> stages;
  std::vector<std::vector<Edge>> removed;
  const UndirectedGraph& result() const { return stages.back(); }
};

inline CutTrace recursive_cutting(const UndirectedGraph& f) {
  if (!is_forest(f)) throw std::invalid_argument("recursive_cutting: input is not a forest");
  CutTrace trace;
  trace.stages.push_back(f);
  while (true) {
    const UndirectedGraph& cur = trace.stages.back();
    std::vector<Edge> bridges;
    for (const auto& comp : components(cur)) {
      if (comp.size() < 2) continue;
      UndirectedGraph sub = induced(cur, comp);
      if (auto b = mirror_bridge_of_tree(sub))
        bridges.emplace_back(comp[b->first], comp[b->second]);
    }
    std::sort(bridges.begin(), bridges.end());
    trace.removed.push_back(bridges);
    if (bridges.empty()) break;
    trace.stages.push_back(remove_edges(cur, bridges));
  }
  return trace;
}

// T_f := (T \ f)_rc.
inline UndirectedGraph cut_minus_edge(const UndirectedGraph& t, Edge f) {
  detail::require_tree(t, "cut_minus_edge");
  if (!t.has_edge(f.first, f.second))
    throw std::invalid_argument("cut_minus_edge: f is not an edge of t");
  return recursive_cutting(remove_edges(t, {f})).result();
}

// S_F = { e in E(t) : e lies in an odd number of subgraphs of t isomorphic
// to f_sub } for an even spanning pattern f_sub with at least one edge.
inline std::vector<Edge> s_set(const UndirectedGraph& t, const UndirectedGraph& f_sub) {
  detail::require_tree(t, "s_set");
  if (t.order() != f_sub.order()) throw std::invalid_argument("s_set: vertex-count mismatch");
  if (f_sub.size() == 0) throw std::invalid_argument("s_set: pattern has no edges");
  if (is_odd(f_sub)) throw std::invalid_argument("s_set: pattern must be even");
  std::vector<int> parity(t.size(), 0);
  for (const auto& member : sub_f_members(t, f_sub))
    for (int i : member) parity[i] ^= 1;
  std::vector<Edge> out;
  for (int i = 0; i < t.size(); ++i)
    if (parity[i]) out.push_back(t.edges()[i]);
  return out;
}

// Recursively bridge-mirrored digraph: a single vertex, or two identical
// copies of a rooted RBM digraph joined root-to-root by the bridge. The
// recognizer tests the leaf-strip residue edge, which is the only possible
// mirror-bridge, and compares the two sides as rooted digraphs.
inline bool is_rbm(const Digraph& d) {
  if (d.order() == 1) return true;
  const UndirectedGraph u = underlying(d);
  if (!is_tree(u)) return false;
  auto residue = leaf_strip_residue(u);
  if (!residue.is_edge()) return false;
  const int a = residue.vertices[0], b = residue.vertices[1];
  auto side_a = detail::branch_vertices(u, b, a);
  auto side_b = detail::branch_vertices(u, a, b);
  if (side_a.size() != side_b.size()) return false;
  Digraph ta = induced(d, side_a), tb = induced(d, side_b);
  const int ra = static_cast<int>(
      std::lower_bound(side_a.begin(), side_a.end(), a) - side_a.begin());
  const int rb = static_cast<int>(
      std::lower_bound(side_b.begin(), side_b.end(), b) - side_b.begin());
  if (rooted_code(ta, ra) != rooted_code(tb, rb)) return false;
  return is_rbm(ta);
}

// A tree is recursively bridge-mirrored iff its recursive cutting ends
// edgeless.
inline bool is_rbm_undirected(const UndirectedGraph& t) {
  if (!is_tree(t)) return false;
  return recursive_cutting(t).result().size() == 0;
}

// The unique non-identity automorphism of an RBM tree: the involution that
// swaps the two half-branches and reverses the mirror-bridge.
inline std::vector<int> odd_automorphism(const UndirectedGraph& t) {
  if (t.order() < 2 || !is_rbm_undirected(t))
    throw std::invalid_argument("odd_automorphism: input is not an RBM tree with >= 2 vertices");
  auto [bu, bv] = half_branches(t);
  auto sub = rooted_tree_isomorphism(bu.tree, bu.root, bv.tree, bv.root);
  if (!sub) throw std::logic_error("odd_automorphism: half-branches failed to match");
  std::vector<int> pi(t.order(), -1);
  for (int x = 0; x < bu.tree.order(); ++x) {
    int orig_u = bu.vertices[x];
    int orig_v = bv.vertices[(*sub)[x]];
    pi[orig_u] = orig_v;
    pi[orig_v] = orig_u;
  }
  return pi;
}

namespace detail {

inline Digraph double_rooted(const Digraph& d, int root) {
  const int m = d.order();
  std::vector<Edge> es = d.edges();
  for (auto [u, v] : d.edges()) es.emplace_back(u + m, v + m);
  es.emplace_back(root, root + m);
  return Digraph(2 * m, std::move(es));
}

inline UndirectedGraph double_rooted(const UndirectedGraph& d, int root) {
  const int m = d.order();
  std::vector<Edge> es = d.edges();
  for (auto [u, v] : d.edges()) es.emplace_back(u + m, v + m);
  es.emplace_back(root, root + m);
  return UndirectedGraph(2 * m, std::move(es));
}

// One generation step: double every (k-1)-generation object at one root per
// root orbit, then deduplicate by canonical code.
template <typename G>
std::vector<G> rbm_generation(const std::vector<G>& prev) {
  std::map<std::string, G> seen;
  for (const G& d : prev) {
    std::set<std::string> root_codes;
    for (int r = 0; r < d.order(); ++r) {
      if (!root_codes.insert(rooted_code(d, r).code).second) continue;
      G doubled = double_rooted(d, r);
      seen.emplace(canonical_code(doubled), doubled);
    }
  }
  std::vector<G> out;
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace detail

// All RBM digraphs on 2^k vertices up to direction-preserving isomorphism,
// ordered by canonical code.
inline std::vector<Digraph> generate_rbm(int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("generate_rbm: k must be in [0,4]");
  std::vector<Digraph> cur{Digraph(1, {})};
  for (int i = 0; i < k; ++i) cur = detail::rbm_generation(cur);
  return cur;
}

// Undirected variant (Def 1.2 forgetting orientations).
inline std::vector<UndirectedGraph> generate_rbm_undirected(int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("generate_rbm_undirected: k must be in [0,4]");
  std::vector<UndirectedGraph> cur{UndirectedGraph(1, {})};
  for (int i = 0; i < k; ++i) cur = detail::rbm_generation(cur);
  return cur;
}

// m(g, f_sub): for each edge e of f_sub, the order of the smallest component
// of g \ e. Sorted ascending.
using MinMultiset = std::vector<int>;

inline MinMultiset min_multiset(const UndirectedGraph& g, const UndirectedGraph& f_sub) {
  if (!is_forest(g)) throw std::invalid_argument("min_multiset: g is not a forest");
  if (g.order() != f_sub.order())
    throw std::invalid_argument("min_multiset: vertex-count mismatch");
  for (auto [u, v] : f_sub.edges())
    if (!g.has_edge(u, v)) throw std::invalid_argument("min_multiset: f_sub is not a subgraph of g");
  MinMultiset out;
  for (auto e : f_sub.edges()) {
    UndirectedGraph cut = remove_edges(g, {e});
    int smallest = g.order();
    for (const auto& comp : components(cut))
      smallest = std::min(smallest, static_cast<int>(comp.size()));
    out.push_back(smallest);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One block per stage in the graph text format, '---' separators, and a
// 'removed: <u> <v>, ...' footer per stage.
inline std::string format_cut_trace(const CutTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    if (i > 0) out += "---\n";
    out += trace.stages[i].to_text();
    out += "removed:";
    for (std::size_t j = 0; j < trace.removed[i].size(); ++j) {
      out += (j == 0) ? " " : ", ";
      out += std::to_string(trace.removed[i][j].first) + " " +
             std::to_string(trace.removed[i][j].second);
    }
    out += "\n";
  }
  return out;
}

}  // namespace impartial
