#pragma once

// Tournaments as bit-packed complete orientations, and labeled-embedding
// counting (injective, direction-preserving maps).

#include <cstdint>
#include <random>
#include <vector>

#include "impartial/graph.hpp"

namespace impartial {

// Complete orientation on n labeled vertices. Pair (i,j) with i<j has bit
// index j(j-1)/2 + i; bit set means i -> j.
class Tournament {
 public:
  explicit Tournament(int n) : n_(n), words_((pair_count(n) + 63) / 64, 0) {
    if (n < 0) throw std::invalid_argument("Tournament: negative vertex count");
  }

  static int pair_count(int n) { return n * (n - 1) / 2; }

  static int pair_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
  }

  // The transitive tournament: i -> j for all i < j.
  static Tournament transitive(int n) {
    Tournament t(n);
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    return t;
  }

  // Tournament with the low C(n,2) bits of `bits` as orientations (n <= 11).
  static Tournament from_bits(int n, std::uint64_t bits) {
    if (pair_count(n) > 64)
      throw std::invalid_argument("Tournament::from_bits: too many pairs for one word");
    Tournament t(n);
    if (!t.words_.empty()) t.words_[0] = bits;
    return t;
  }

  template <typename Rng>
  static Tournament random(int n, Rng& rng) {
    Tournament t(n);
    for (auto& w : t.words_) w = rng();
    return t;
  }

  int order() const { return n_; }

  bool beats(int u, int v) const {
    bool bit = u < v ? test(pair_index(u, v)) : !test(pair_index(v, u));
    return bit;
  }

  std::uint64_t bits() const { return words_.empty() ? 0 : words_[0]; }

 private:
  bool test(int idx) const { return (words_[idx / 64] >> (idx % 64)) & 1; }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail {

// Visit order for embedding search: within each component, every vertex after
// the first has an already-placed neighbor.
struct EmbeddingPlan {
  std::vector<int> order;
  // constraints[p]: (earlier position q, true if edge order[p] -> order[q])
  std::vector<std::vector<std::pair<int, bool>>> constraints;
};

inline EmbeddingPlan make_embedding_plan(const Digraph& h) {
  const int n = h.order();
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : h.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  EmbeddingPlan plan;
  std::vector<int> pos(n, -1);
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      pos[v] = static_cast<int>(plan.order.size());
      plan.order.push_back(v);
      plan.constraints.emplace_back();
      for (int w : adj[v])
        if (pos[w] >= 0 && w != v)
          plan.constraints.back().emplace_back(pos[w], h.has_edge(v, w));
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }
  return plan;
}

}  // namespace detail

// Number of injective maps V(h) -> V(k) carrying every edge of h to a
// same-direction edge of k.
inline std::uint64_t count_embeddings(const Digraph& h, const Tournament& k,
                                      const detail::EmbeddingPlan& plan) {
  const int n = h.order(), m = k.order();
  if (n > m) throw std::invalid_argument("count_embeddings: h larger than the tournament");
  std::vector<int> image(n, -1);
  std::vector<bool> used(m, false);
  std::uint64_t total = 0;
  int depth = 0;
  std::vector<int> cand(n, 0);
  while (depth >= 0) {
    if (depth == n) {
      ++total;
      --depth;
      if (depth >= 0) {
        used[image[depth]] = false;
        ++cand[depth];
      }
      continue;
    }
    bool advanced = false;
    for (int c = cand[depth]; c < m; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (auto [q, out] : plan.constraints[depth]) {
        // edge h: order[depth] -> order[q] iff out
        if (out ? !k.beats(c, image[q]) : !k.beats(image[q], c)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        image[depth] = c;
        used[c] = true;
        cand[depth] = c;
        ++depth;
        if (depth < n) cand[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      --depth;
      if (depth >= 0) {
        used[image[depth]] = false;
        ++cand[depth];
      }
    }
  }
  return total;
}

inline std::uint64_t count_embeddings(const Digraph& h, const Tournament& k) {
  auto plan = detail::make_embedding_plan(h);
  return count_embeddings(h, k, plan);
}

}  // namespace impartial
