#pragma once

// Multi-start projected-gradient probe for extremizing t(h, W) over step
// tourneyons. The gradient is computed analytically from the polynomial;
// after each step the block weights are projected back onto the simplex and
// the bias entries clipped to [-1, 1].
//
// The probe reports evidence, not certificates: a minimum above the constant
// density is consistent with positivity, never a proof of it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <json.hpp>

#include "impartial/graph.hpp"
#include "impartial/tourneyon.hpp"

namespace impartial {

enum class ProbeDirection { minimize, maximize };

struct ProbeOptions {
  int blocks = 3;
  int restarts = 32;
  int iters = 2000;
  double step = 0.05;
  double decay = 0.999;
  std::uint64_t seed = 0;
  ProbeDirection direction = ProbeDirection::minimize;
};

struct ProbeReport {
  ProbeDirection direction = ProbeDirection::minimize;
  double best_value = 0;
  StepTourneyon best_point;
  int restarts = 0;
  int iters = 0;
  std::uint64_t seed = 0;
  double gradient_norm_at_best = 0;

  nlohmann::json to_json() const {
    return {{"direction", direction == ProbeDirection::minimize ? "min" : "max"},
            {"best_value", best_value},
            {"best_point", best_point.to_json()},
            {"restarts", restarts},
            {"iterations", iters},
            {"seed", seed},
            {"gradient_norm_at_best", gradient_norm_at_best}};
  }
};

namespace detail {

struct DensityGradient {
  double value = 0;
  std::vector<double> da;
  Matrix<double> db;  // only entries i<j are meaningful
};

// Value and gradient of P for one component, by direct map enumeration with
// prefix/suffix exclusion products.
inline void component_gradient(const Digraph& sub, int n, const std::vector<double>& a,
                               const Matrix<double>& b, double& value, std::vector<double>& da,
                               Matrix<double>& db) {
  const int k = sub.order();
  const auto& es = sub.edges();
  const int m = static_cast<int>(es.size());
  std::vector<int> pi(k, 0);
  std::vector<double> av(k), pa(k + 1), sa(k + 1), ef(m), pe(m + 1), se(m + 1);
  value = 0;
  while (true) {
    for (int v = 0; v < k; ++v) av[v] = a[pi[v]];
    for (int e = 0; e < m; ++e) ef[e] = 1.0 + b[pi[es[e].first]][pi[es[e].second]];
    pa[0] = 1;
    for (int v = 0; v < k; ++v) pa[v + 1] = pa[v] * av[v];
    sa[k] = 1;
    for (int v = k - 1; v >= 0; --v) sa[v] = sa[v + 1] * av[v];
    pe[0] = 1;
    for (int e = 0; e < m; ++e) pe[e + 1] = pe[e] * ef[e];
    se[m] = 1;
    for (int e = m - 1; e >= 0; --e) se[e] = se[e + 1] * ef[e];
    const double aprod = pa[k], eprod = pe[m];
    value += aprod * eprod;
    for (int v = 0; v < k; ++v) da[pi[v]] += pa[v] * sa[v + 1] * eprod;
    for (int e = 0; e < m; ++e) {
      const int p = pi[es[e].first], q = pi[es[e].second];
      if (p == q) continue;  // b_ii is identically zero
      const double excl = aprod * pe[e] * se[e + 1];
      if (p < q)
        db[p][q] += excl;
      else
        db[q][p] -= excl;
    }
    int pos = k - 1;
    while (pos >= 0 && pi[pos] == n - 1) pi[pos--] = 0;
    if (pos < 0) break;
    ++pi[pos];
  }
}

inline DensityGradient density_gradient(const Digraph& h, const std::vector<double>& a,
                                        const Matrix<double>& b) {
  const int n = static_cast<int>(a.size());
  DensityGradient g;
  g.da.assign(n, 0.0);
  g.db.assign(n, std::vector<double>(n, 0.0));
  const auto comps = components(h);
  std::vector<double> values(comps.size());
  std::vector<std::vector<double>> das(comps.size());
  std::vector<Matrix<double>> dbs(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    das[c].assign(n, 0.0);
    dbs[c].assign(n, std::vector<double>(n, 0.0));
    component_gradient(induced(h, comps[c]), n, a, b, values[c], das[c], dbs[c]);
  }
  double prod = 1;
  for (double v : values) prod *= v;
  const double scale = std::ldexp(1.0, -h.size());
  g.value = scale * prod;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    double rest = 1;
    for (std::size_t c2 = 0; c2 < comps.size(); ++c2)
      if (c2 != c) rest *= values[c2];
    for (int i = 0; i < n; ++i) g.da[i] += scale * rest * das[c][i];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.db[i][j] += scale * rest * dbs[c][i][j];
  }
  return g;
}

// Euclidean projection onto the probability simplex.
inline void project_simplex(std::vector<double>& v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0, lambda = 0;
  int rho = -1;
  for (std::size_t j = 0; j < u.size(); ++j) {
    css += u[j];
    const double t = (1.0 - css) / static_cast<double>(j + 1);
    if (u[j] + t > 0) {
      rho = static_cast<int>(j);
      lambda = t;
    }
  }
  (void)rho;
  for (double& x : v) x = std::max(0.0, x + lambda);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

inline ProbeReport probe_extrema(const Digraph& h, const ProbeOptions& opts) {
  if (opts.blocks < 2) throw std::invalid_argument("probe_extrema: blocks must be >= 2");
  if (opts.restarts < 1 || opts.iters < 1)
    throw std::invalid_argument("probe_extrema: restarts and iters must be >= 1");
  const bool maximize = opts.direction == ProbeDirection::maximize;
  const int n = opts.blocks;

  ProbeReport report;
  report.direction = opts.direction;
  report.restarts = opts.restarts;
  report.iters = opts.iters;
  report.seed = opts.seed;
  bool have_best = false;

  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(detail::mix_seed(opts.seed, static_cast<std::uint64_t>(r)));
    StepTourneyon w = random_step_tourneyon(n, rng);
    double step = opts.step;
    for (int it = 0; it < opts.iters; ++it) {
      auto g = detail::density_gradient(h, w.a, w.b);
      const bool better = !have_best || (maximize ? g.value > report.best_value
                                                  : g.value < report.best_value);
      if (better) {
        report.best_value = g.value;
        report.best_point = w;
        have_best = true;
      }
      const double dir = maximize ? 1.0 : -1.0;
      for (int i = 0; i < n; ++i) w.a[i] += dir * step * g.da[i];
      detail::project_simplex(w.a);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          w.b[i][j] = std::clamp(w.b[i][j] + dir * step * g.db[i][j], -1.0, 1.0);
          w.b[j][i] = -w.b[i][j];
        }
      step *= opts.decay;
    }
    auto g = detail::density_gradient(h, w.a, w.b);
    if (!have_best || (maximize ? g.value > report.best_value : g.value < report.best_value)) {
      report.best_value = g.value;
      report.best_point = w;
      have_best = true;
    }
  }

  auto g = detail::density_gradient(h, report.best_point.a, report.best_point.b);
  double norm2 = 0;
  for (double x : g.da) norm2 += x * x;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) norm2 += g.db[i][j] * g.db[i][j];
  report.gradient_norm_at_best = std::sqrt(norm2);
  report.best_value = std::clamp(report.best_value, 0.0, 1.0);
  return report;
}

}  // namespace impartial
