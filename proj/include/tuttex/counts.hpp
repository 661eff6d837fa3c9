#pragma once

// Edge-subset census of a multigraph: how many subsets have a given number
// of connected components and edges. Everything about the Tutte polynomial
// of a fixed graph is a linear functional of this table.

#include <map>
#include <utility>

#include "tuttex/graph.hpp"
#include "tuttex/polynomial.hpp"
#include "tuttex/rational.hpp"

namespace tuttex {

// (components including isolated vertices, edges) -> number of subsets
using Counts = std::map<std::pair<int, int>, Integer>;

// T(G;x,y) = sum over subsets of (x-1)^{k(A)-k(E)} (y-1)^{k(A)+|A|-|V|}
inline Rational tutte_from_counts(const Counts& counts, const Multigraph& g, const Rational& x,
                                  const Rational& y) {
  int ke = g.component_count(), n = g.vertex_count();
  Rational total = 0;
  for (const auto& [key, c] : counts) {
    auto [i, j] = key;
    total += Rational(c) * rational_pow(x - 1, i - ke) * rational_pow(y - 1, i + j - n);
  }
  return total;
}

}  // namespace tuttex
