#pragma once

// Closed-form copy counts: labeled copies in the transitive tournament and
// the expected count in a uniform random tournament, both exact.

#include <vector>

#include "impartial/graph.hpp"
#include "impartial/linear_extension.hpp"
#include "impartial/numeric.hpp"

namespace impartial {

// n! / (parts_1! ... parts_k! (n - sum parts)!)
inline Integer multinomial(int n, const std::vector<int>& parts) {
  int used = 0;
  for (int p : parts) used += p;
  if (used > n) throw std::invalid_argument("multinomial: parts exceed n");
  Integer r = factorial(n);
  for (int p : parts) r /= factorial(p);
  r /= factorial(n - used);
  return r;
}

// Labeled copies of h in the transitive tournament on n vertices:
// multinomial(n; n_1,...,n_k, rest) * l_1 ... l_k over components, and 0
// when h has a directed cycle.
inline Integer transitive_count(const Digraph& h, int n) {
  if (n < h.order()) throw std::invalid_argument("transitive_count: n < |V(h)|");
  if (!is_acyclic(h)) return 0;
  std::vector<int> sizes;
  Integer ext_product = 1;
  for (const auto& comp : components(h)) {
    sizes.push_back(static_cast<int>(comp.size()));
    ext_product *= count_linear_extensions(induced(h, comp));
  }
  return multinomial(n, sizes) * ext_product;
}

// Expected labeled copies of h in a uniform random tournament on n vertices:
// multinomial(n; n_1,...,n_k, rest) * 2^(-sum m_i) * n_1! ... n_k!.
inline Rational random_expected_count(const Digraph& h, int n) {
  if (n < h.order()) throw std::invalid_argument("random_expected_count: n < |V(h)|");
  std::vector<int> sizes;
  Integer fact_product = 1;
  for (const auto& comp : components(h)) {
    sizes.push_back(static_cast<int>(comp.size()));
    fact_product *= factorial(static_cast<int>(comp.size()));
  }
  return Rational(multinomial(n, sizes) * fact_product, pow2(h.size()));
}

}  // namespace impartial
