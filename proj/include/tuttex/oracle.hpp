#pragma once

// Ground truth by exhaustive edge-subset enumeration. Deliberately simple
// and slow; every dynamic program in the library is validated against these.

#include <utility>
#include <vector>

#include "tuttex/counts.hpp"
#include "tuttex/errors.hpp"
#include "tuttex/graph.hpp"
#include "tuttex/rational.hpp"
#include "tuttex/union_find.hpp"

namespace tuttex {

namespace detail {
inline void check_subset_guard(const Multigraph& g) {
  if (g.edge_count() > 24)
    throw resource_error("exhaustive enumeration limited to 24 edges, graph has " +
                         std::to_string(g.edge_count()));
}
}  // namespace detail

// components of the spanning subgraph (V, A)
inline int subset_components(const Multigraph& g, unsigned mask, UnionFind& uf) {
  uf.reset();
  int merges = 0;
  for (int i = 0; i < g.edge_count(); ++i)
    if (mask & (1u << i))
      if (uf.unite(g.edge(i).u, g.edge(i).v)) ++merges;
  return g.vertex_count() - merges;
}

inline Counts brute_counts(const Multigraph& g) {
  detail::check_subset_guard(g);
  Counts counts;
  UnionFind uf(g.vertex_count());
  for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
    int i = subset_components(g, mask, uf);
    int j = __builtin_popcount(mask);
    counts[{i, j}] += 1;
  }
  return counts;
}

inline Rational brute_tutte(const Multigraph& g, const Rational& x, const Rational& y) {
  detail::check_subset_guard(g);
  int n = g.vertex_count(), m = g.edge_count(), ke = g.component_count();
  // power tables; exponents are always within [0, n] and [0, m]
  std::vector<Rational> xp(n + 1), yp(m + n + 1);
  for (int i = 0; i <= n; ++i) xp[i] = rational_pow(x - 1, i);
  for (int j = 0; j <= m + n; ++j) yp[j] = rational_pow(y - 1, j);
  Rational total = 0;
  UnionFind uf(n);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int i = subset_components(g, mask, uf);
    total += xp[i - ke] * yp[i + __builtin_popcount(mask) - n];
  }
  return total;
}

// forests = acyclic edge subsets; counted overall and by size
inline std::vector<Integer> brute_forest_size_counts(const Multigraph& g) {
  detail::check_subset_guard(g);
  std::vector<Integer> by_size(g.edge_count() + 1, 0);
  UnionFind uf(g.vertex_count());
  for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
    uf.reset();
    bool acyclic = true;
    for (int i = 0; i < g.edge_count() && acyclic; ++i)
      if (mask & (1u << i))
        if (!uf.unite(g.edge(i).u, g.edge(i).v)) acyclic = false;
    if (acyclic) by_size[__builtin_popcount(mask)] += 1;
  }
  return by_size;
}

inline Integer brute_forest_count(const Multigraph& g) {
  Integer total = 0;
  for (const Integer& c : brute_forest_size_counts(g)) total += c;
  return total;
}

// coefficient j = number of edge subsets with every vertex degree even
// (a loop contributes two to its endpoint) and exactly j edges
inline std::vector<Integer> brute_even_subgraph_counts(const Multigraph& g) {
  detail::check_subset_guard(g);
  std::vector<Integer> by_size(g.edge_count() + 1, 0);
  for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
    unsigned long long parity = 0;  // vertex degree parities as a bitset
    for (int i = 0; i < g.edge_count(); ++i)
      if (mask & (1u << i)) {
        parity ^= 1ull << g.edge(i).u;
        parity ^= 1ull << g.edge(i).v;  // a loop flips its endpoint twice: no-op
      }
    if (parity == 0) by_size[__builtin_popcount(mask)] += 1;
  }
  return by_size;
}

inline Integer brute_colorings(const Multigraph& g, int q) {
  if (q < 0) throw std::invalid_argument("color count must be nonnegative");
  int n = g.vertex_count();
  double states = 1;
  for (int i = 0; i < n; ++i) {
    states *= q;
    if (states > double(1 << 24))
      throw resource_error("coloring enumeration limited to 2^24 assignments");
  }
  if (n == 0) return 1;
  if (q == 0) return 0;
  std::vector<int> color(n, 0);
  Integer proper = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < g.edge_count() && ok; ++i)
      if (color[g.edge(i).u] == color[g.edge(i).v]) ok = false;
    if (ok) proper += 1;
    int pos = 0;
    while (pos < n && ++color[pos] == q) color[pos++] = 0;
    if (pos == n) break;
  }
  return proper;
}

}  // namespace tuttex
