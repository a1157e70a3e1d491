#pragma once

// Tournament census: the distribution of labeled-copy counts of a digraph
// over all (or sampled) tournaments of a given order.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "impartial/graph.hpp"
#include "impartial/tournament.hpp"

namespace impartial {

enum class CensusMode { exact, sampled };

struct CensusReport {
  int n = 0;
  CensusMode mode = CensusMode::exact;
  std::uint64_t seed = 0;     // sampled mode only
  std::uint64_t samples = 0;  // sampled mode: requested random draws
  std::map<std::uint64_t, std::uint64_t> distribution;

  bool constant() const { return distribution.size() == 1; }

  nlohmann::json to_json() const {
    nlohmann::json dist = nlohmann::json::object();
    for (auto [count, freq] : distribution) dist[std::to_string(count)] = freq;
    nlohmann::json j{{"n", n},
                     {"mode", mode == CensusMode::exact ? "exact" : "sampled"},
                     {"distribution", dist},
                     {"constant", constant()}};
    if (mode == CensusMode::sampled) {
      j["seed"] = seed;
      j["samples"] = samples;
    }
    return j;
  }
};

// Largest order for which the exact census is allowed: C(n,2) <= 28.
inline bool exact_census_feasible(int n) { return Tournament::pair_count(n) <= 28; }

// Exact census over all 2^C(n,2) labeled tournaments. The index space is
// split into contiguous chunks whose histograms are merged; the merged
// report is identical for any chunking.
inline CensusReport census_exact(const Digraph& h, int n, int threads = 1) {
  if (n < h.order()) throw std::invalid_argument("census: n < |V(h)|");
  if (!exact_census_feasible(n))
    throw std::invalid_argument("census: n too large for exact mode (C(n,2) > 28)");
  if (threads < 1) threads = 1;
  const std::uint64_t total = std::uint64_t{1} << Tournament::pair_count(n);
  if (static_cast<std::uint64_t>(threads) > total) threads = 1;

  std::vector<std::map<std::uint64_t, std::uint64_t>> local(threads);
  auto work = [&](int t) {
    const std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
    const std::uint64_t hi =
        total / threads * (t + 1) + std::min<std::uint64_t>(t + 1, total % threads);
    auto plan = detail::make_embedding_plan(h);
    for (std::uint64_t bits = lo; bits < hi; ++bits)
      ++local[t][count_embeddings(h, Tournament::from_bits(n, bits), plan)];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  CensusReport report;
  report.n = n;
  report.mode = CensusMode::exact;
  for (const auto& m : local)
    for (auto [count, freq] : m) report.distribution[count] += freq;
  return report;
}

// Sampled census: `samples` uniform tournaments drawn from `seed`, plus the
// transitive tournament (so the distribution holds samples + 1 entries).
inline CensusReport census_sampled(const Digraph& h, int n, std::uint64_t samples,
                                   std::uint64_t seed) {
  if (n < h.order()) throw std::invalid_argument("census: n < |V(h)|");
  CensusReport report;
  report.n = n;
  report.mode = CensusMode::sampled;
  report.seed = seed;
  report.samples = samples;
  auto plan = detail::make_embedding_plan(h);
  ++report.distribution[count_embeddings(h, Tournament::transitive(n), plan)];
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s)
    ++report.distribution[count_embeddings(h, Tournament::random(n, rng), plan)];
  return report;
}

inline CensusReport census(const Digraph& h, int n, int threads = 1) {
  return census_exact(h, n, threads);
}

}  // namespace impartial
