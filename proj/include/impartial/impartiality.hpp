#pragma once

// The three verdict routes: structural (components + RBM recognizer),
// the sign-sum certificate over even spanning subgraphs, and the tournament
// census.

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "impartial/census.hpp"
#include "impartial/counting.hpp"
#include "impartial/graph.hpp"
#include "impartial/structure.hpp"
#include "impartial/subgraph.hpp"

namespace impartial {

enum class Route { structural, sign_sum, census };

struct ComponentWitness {
  Digraph component;          // relabeled 0..k-1
  std::vector<int> vertices;  // original vertex ids
};

struct CensusWitness {
  Tournament first, second;
  std::uint64_t count_first = 0, count_second = 0;
};

struct Verdict {
  bool impartial = false;
  Route route = Route::structural;
  // Present iff not impartial: a non-RBM component, a violating even F, or
  // two tournaments with different counts.
  std::variant<std::monostate, ComponentWitness, UndirectedGraph, CensusWitness> witness;
};

inline bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

// Structural route: every weakly connected component must be a tree on a
// power-of-2 vertex count and recursively bridge-mirrored.
inline Verdict is_impartial(const Digraph& h) {
  for (const auto& comp : components(h)) {
    Digraph sub = induced(h, comp);
    bool ok = is_power_of_two(sub.order()) && is_tree(underlying(sub)) && is_rbm(sub);
    if (!ok) return {false, Route::structural, ComponentWitness{std::move(sub), comp}};
  }
  return {true, Route::structural, {}};
}

// Sign-sum route: for every even spanning subgraph class F of underlying(h)
// with at least one edge, the signs over Sub_F(h) must cancel. One
// orientation per class suffices (flipping an edge of F negates every term).
inline Verdict sign_sum_check(const Digraph& h) {
  const UndirectedGraph base = underlying(h);
  if (!is_forest(base))
    throw std::invalid_argument("sign_sum_check: underlying graph is not a forest");

  std::map<ForestIsoKey, std::vector<std::vector<int>>> classes;
  const int m = base.size();
  for (int k = 1; k <= m; ++k)
    detail::for_each_subset(m, k, [&](const std::vector<int>& idx) {
      classes[forest_iso_key(spanning_subgraph(base, idx))].push_back(idx);
    });

  for (const auto& [key, members] : classes) {
    UndirectedGraph rep = spanning_subgraph(base, members.front());
    if (is_odd(rep)) continue;
    const Digraph f_ref = inherit_orientation(h, base, members.front());
    long long sum = 0;
    for (const auto& idx : members) sum += sgn_even_pair(f_ref, inherit_orientation(h, base, idx));
    if (sum != 0) return {false, Route::sign_sum, std::move(rep)};
  }
  return {true, Route::sign_sum, {}};
}

// Census route, exact mode: constancy of the copy count over all labeled
// tournaments on n vertices; a failing pair of tournaments is the witness.
inline Verdict census_verdict_exact(const Digraph& h, int n, int threads = 1) {
  CensusReport report = census_exact(h, n, threads);
  if (report.constant()) return {true, Route::census, {}};
  auto plan = detail::make_embedding_plan(h);
  const std::uint64_t total = std::uint64_t{1} << Tournament::pair_count(n);
  const std::uint64_t c0 = count_embeddings(h, Tournament::from_bits(n, 0), plan);
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const std::uint64_t c = count_embeddings(h, Tournament::from_bits(n, bits), plan);
    if (c != c0)
      return {false, Route::census,
              CensusWitness{Tournament::from_bits(n, 0), Tournament::from_bits(n, bits), c0, c}};
  }
  return {true, Route::census, {}};  // unreachable when the report is non-constant
}

// Census route, sampled mode. A constant sampled distribution is evidence,
// not proof; a non-constant one yields a genuine witness pair.
inline Verdict census_verdict_sampled(const Digraph& h, int n, std::uint64_t samples,
                                      std::uint64_t seed) {
  auto plan = detail::make_embedding_plan(h);
  Tournament first = Tournament::transitive(n);
  const std::uint64_t c0 = count_embeddings(h, first, plan);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Tournament k = Tournament::random(n, rng);
    const std::uint64_t c = count_embeddings(h, k, plan);
    if (c != c0)
      return {false, Route::census, CensusWitness{std::move(first), std::move(k), c0, c}};
  }
  return {true, Route::census, {}};
}

}  // namespace impartial
