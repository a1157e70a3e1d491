#pragma once

// Step tourneyons and the associated polynomial: P_{h,n}(a;b) summed over
// all maps V(h) -> [n], the density t(h,W) = 2^(-|E|) P, and randomized
// polynomial-identity testing in exact rational or float mode.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "impartial/graph.hpp"
#include "impartial/numeric.hpp"

namespace impartial {

template <class S>
using Matrix = std::vector<std::vector<S>>;

namespace detail {

template <class S>
void validate_antisymmetric(const std::vector<S>& a, const Matrix<S>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("p_eval: a/b dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].size() != n) throw std::invalid_argument("p_eval: b is not square");
    if (!(b[i][i] == S(0))) throw std::invalid_argument("p_eval: b has a nonzero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (!(b[i][j] == -b[j][i])) throw std::invalid_argument("p_eval: b is not antisymmetric");
  }
}

// Contribution of one component. Tree components factorize along the tree;
// anything else is summed over all maps of the component.
template <class S>
S p_eval_component(const Digraph& h, const std::vector<int>& comp, const std::vector<S>& a,
                   const Matrix<S>& b) {
  const int n = static_cast<int>(a.size());
  const UndirectedGraph u = underlying(induced(h, comp));
  const Digraph sub = induced(h, comp);
  if (is_tree(u)) {
    auto adj = adjacency(u);
    // g[v][i]: sum over maps of the subtree at v with v in block i.
    auto dp = [&](auto&& self, int v, int parent) -> std::vector<S> {
      std::vector<S> g(n, S(1));
      for (int w : adj[v]) {
        if (w == parent) continue;
        std::vector<S> child = self(self, w, v);
        const bool out = sub.has_edge(v, w);
        for (int i = 0; i < n; ++i) {
          S s(0);
          for (int j = 0; j < n; ++j) s += child[j] * (S(1) + (out ? b[i][j] : b[j][i]));
          g[i] *= s;
        }
      }
      for (int i = 0; i < n; ++i) g[i] *= a[i];
      return g;
    };
    std::vector<S> root = dp(dp, 0, -1);
    S total(0);
    for (int i = 0; i < n; ++i) total += root[i];
    return total;
  }
  const int k = static_cast<int>(comp.size());
  std::vector<int> pi(k, 0);
  S total(0);
  while (true) {
    S term(1);
    for (int v = 0; v < k; ++v) term *= a[pi[v]];
    for (auto [x, y] : sub.edges()) term *= S(1) + b[pi[x]][pi[y]];
    total += term;
    int pos = k - 1;
    while (pos >= 0 && pi[pos] == n - 1) pi[pos--] = 0;
    if (pos < 0) break;
    ++pi[pos];
  }
  return total;
}

}  // namespace detail

// P_{h,n}(a;b) = sum over maps pi: V(h) -> [n] of
//   prod_v a_{pi(v)} * prod_{(u,v) in E} (1 + b_{pi(u) pi(v)}).
template <class S>
S p_eval(const Digraph& h, const std::vector<S>& a, const Matrix<S>& b) {
  detail::validate_antisymmetric(a, b);
  if (h.order() == 0) return S(1);
  S total(1);
  for (const auto& comp : components(h)) total *= detail::p_eval_component(h, comp, a, b);
  return total;
}

// Block weights on the simplex plus an antisymmetric bias matrix; the induced
// kernel takes value (1 + b_ij)/2 on block (i,j).
struct StepTourneyon {
  std::vector<double> a;
  Matrix<double> b;

  int blocks() const { return static_cast<int>(a.size()); }

  void validate() const {
    if (a.empty()) throw std::invalid_argument("StepTourneyon: no blocks");
    double sum = 0;
    for (double x : a) {
      if (!(x >= 0)) throw std::invalid_argument("StepTourneyon: negative block weight");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("StepTourneyon: block weights do not sum to 1");
    detail::validate_antisymmetric(a, b);
    for (const auto& row : b)
      for (double x : row)
        if (!(std::abs(x) <= 1.0))
          throw std::invalid_argument("StepTourneyon: |b_ij| > 1");
  }

  static StepTourneyon constant(int blocks = 1) {
    StepTourneyon w;
    w.a.assign(blocks, 1.0 / blocks);
    w.b.assign(blocks, std::vector<double>(blocks, 0.0));
    return w;
  }

  nlohmann::json to_json() const { return {{"a", a}, {"b", b}}; }

  static StepTourneyon from_json(const nlohmann::json& j) {
    StepTourneyon w;
    w.a = j.at("a").get<std::vector<double>>();
    w.b = j.at("b").get<Matrix<double>>();
    w.validate();
    return w;
  }
};

// t(h, W) = 2^(-|E(h)|) * P_{h,n}(a; b).
inline double t_density(const Digraph& h, const StepTourneyon& w) {
  w.validate();
  return std::ldexp(p_eval<double>(h, w.a, w.b), -h.size());
}

inline Rational t_density_exact(const Digraph& h, const std::vector<Rational>& a,
                                const Matrix<Rational>& b) {
  return p_eval<Rational>(h, a, b) / Rational(pow2(h.size()));
}

// --- deterministic sampling (raw generator output only) ----------------------

inline double rand_unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline StepTourneyon random_step_tourneyon(int blocks, std::mt19937_64& rng) {
  StepTourneyon w;
  w.a.resize(blocks);
  double sum = 0;
  for (double& x : w.a) {
    x = -std::log(1.0 - rand_unit(rng));
    sum += x;
  }
  for (double& x : w.a) x /= sum;
  w.b.assign(blocks, std::vector<double>(blocks, 0.0));
  for (int i = 0; i < blocks; ++i)
    for (int j = i + 1; j < blocks; ++j) {
      w.b[i][j] = 2.0 * rand_unit(rng) - 1.0;
      w.b[j][i] = -w.b[i][j];
    }
  return w;
}

struct RationalPoint {
  std::vector<Rational> a;
  Matrix<Rational> b;
};

// Random positive rational a (unnormalized; the identity is homogeneous) and
// admissible rational b with entries k/d, |k| <= d <= 8.
inline RationalPoint random_rational_point(int blocks, std::mt19937_64& rng) {
  RationalPoint p;
  p.a.resize(blocks);
  for (auto& x : p.a)
    x = Rational(1 + rand_below(rng, 16), 1 + rand_below(rng, 8));
  p.b.assign(blocks, std::vector<Rational>(blocks, Rational(0)));
  for (int i = 0; i < blocks; ++i)
    for (int j = i + 1; j < blocks; ++j) {
      const std::int64_t den = static_cast<std::int64_t>(1 + rand_below(rng, 8));
      const std::int64_t num = static_cast<std::int64_t>(rand_below(rng, 2 * den + 1)) - den;
      p.b[i][j] = Rational(num, den);
      p.b[j][i] = -p.b[i][j];
    }
  return p;
}

// Schwartz-Zippel style test of P_{h,n} = (a_1 + ... + a_n)^{|h|} with
// n = |V(h)|, exact rational arithmetic.
inline bool identity_test(const Digraph& h, int trials, std::uint64_t seed = 0) {
  if (trials < 1) throw std::invalid_argument("identity_test: trials must be >= 1");
  const int n = std::max(1, h.order());
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    RationalPoint p = random_rational_point(n, rng);
    Rational total(0);
    for (const auto& x : p.a) total += x;
    Rational expect(1);
    for (int i = 0; i < h.order(); ++i) expect *= total;
    if (p_eval<Rational>(h, p.a, p.b) != expect) return false;
  }
  return true;
}

// Float-mode variant of the same test.
inline bool identity_test_float(const Digraph& h, int trials, double tol,
                                std::uint64_t seed = 0) {
  if (trials < 1) throw std::invalid_argument("identity_test_float: trials must be >= 1");
  const int n = std::max(1, h.order());
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    StepTourneyon w = random_step_tourneyon(n, rng);
    if (std::abs(p_eval<double>(h, w.a, w.b) - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace impartial
