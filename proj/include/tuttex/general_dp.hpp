#pragma once

// Width-parameterized census of all edge subsets by (components, edges),
// computed over a nice decomposition. The table at a node maps
// (bag partition, components so far, edges chosen so far) -> count, where
// the partition records which bag vertices the chosen edges already
// connect. Everything else about the subset is summarized by the two ints.

#include <map>
#include <tuple>
#include <vector>

#include "tuttex/counts.hpp"
#include "tuttex/decomposition.hpp"
#include "tuttex/graph.hpp"
#include "tuttex/partition.hpp"
#include "tuttex/polynomial.hpp"
#include "tuttex/rational.hpp"

namespace tuttex {

using GeneralKey = std::tuple<Partition, int, int>;
using GeneralTable = std::map<GeneralKey, Integer>;

inline Counts general_dp(const Multigraph& g, const NiceDecomposition& nd) {
  auto valid = validate_nice(nd, g);
  if (!valid.ok) throw std::invalid_argument("general_dp: " + valid.witness);

  std::vector<GeneralTable> tables(nd.nodes.size());
  for (std::size_t x = 0; x < nd.nodes.size(); ++x) {
    const NiceNode& node = nd.nodes[x];
    GeneralTable& out = tables[x];
    switch (node.kind) {
      case NodeKind::kLeaf:
        out[{Partition{}, 0, 0}] = 1;
        break;
      case NodeKind::kIntroduceVertex:
        for (const auto& [key, c] : tables[node.child]) {
          const auto& [pi, i, j] = key;
          out[{pi.with_singleton(node.vertex), i + 1, j}] += c;
        }
        break;
      case NodeKind::kForgetVertex:
        // the vertex's component persists in i even when no bag vertex
        // remains in it
        for (const auto& [key, c] : tables[node.child]) {
          const auto& [pi, i, j] = key;
          out[{pi.without(node.vertex), i, j}] += c;
        }
        break;
      case NodeKind::kIntroduceEdge: {
        const Edge& e = g.edge(node.edge);
        for (const auto& [key, c] : tables[node.child]) {
          const auto& [pi, i, j] = key;
          out[key] += c;  // subsets that skip the edge
          if (g.is_loop(node.edge)) {
            out[{pi, i, j + 1}] += c;
          } else if (pi.same_block(e.u, e.v)) {
            out[{pi, i, j + 1}] += c;
          } else {
            out[{pi.merged(e.u, e.v), i - 1, j + 1}] += c;
          }
        }
        break;
      }
      case NodeKind::kJoin:
        for (const auto& [key1, c1] : tables[node.child]) {
          const auto& [pi1, i1, j1] = key1;
          for (const auto& [key2, c2] : tables[node.child2]) {
            const auto& [pi2, i2, j2] = key2;
            Partition glued = join(pi1, pi2);
            // component count: bag-spanning components fuse, fully
            // forgotten ones from both branches stay distinct
            int i = i1 + i2 - pi1.block_count() - pi2.block_count() + glued.block_count();
            out[{std::move(glued), i, j1 + j2}] += c1 * c2;
          }
        }
        break;
    }
    if (node.child >= 0) tables[node.child].clear();
    if (node.child2 >= 0) tables[node.child2].clear();
  }

  Counts counts;
  for (const auto& [key, c] : tables.back()) {
    const auto& [pi, i, j] = key;
    counts[{i, j}] += c;  // root bag is empty: pi has no blocks
  }
  return counts;
}

// The full coefficient table of the polynomial, recovered by expanding the
// census sum symbolically in (x-1) and (y-1) and rebasing to monomials.
struct TutteCoefficients {
  std::vector<std::vector<Rational>> coeff;  // coeff[x-degree][y-degree]

  Rational at(int p, int q) const {
    if (p < 0 || q < 0 || p >= static_cast<int>(coeff.size()) ||
        q >= static_cast<int>(coeff[p].size()))
      return 0;
    return coeff[p][q];
  }

  Rational evaluate(const Rational& x, const Rational& y) const {
    Rational total = 0;
    for (std::size_t p = 0; p < coeff.size(); ++p)
      for (std::size_t q = 0; q < coeff[p].size(); ++q)
        if (coeff[p][q] != 0) total += coeff[p][q] * rational_pow(x, p) * rational_pow(y, q);
    return total;
  }

  // monomials ordered by total degree, then x-degree, descending
  std::string to_string() const {
    std::vector<std::tuple<int, int, Rational>> terms;
    for (std::size_t p = 0; p < coeff.size(); ++p)
      for (std::size_t q = 0; q < coeff[p].size(); ++q)
        if (coeff[p][q] != 0) terms.emplace_back(static_cast<int>(p), static_cast<int>(q),
                                                 coeff[p][q]);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      int ta = std::get<0>(a) + std::get<1>(a), tb = std::get<0>(b) + std::get<1>(b);
      if (ta != tb) return ta > tb;
      return std::get<0>(a) > std::get<0>(b);
    });
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      auto [p, q, c] = terms[k];
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      s += (k == 0) ? (negative ? "-" : "") : (negative ? " - " : " + ");
      std::string vars;
      if (p > 0) vars += (p == 1) ? "x" : "x^" + std::to_string(p);
      if (q > 0) {
        if (!vars.empty()) vars += "*";
        vars += (q == 1) ? "y" : "y^" + std::to_string(q);
      }
      if (vars.empty())
        s += tuttex::to_string(mag);
      else if (mag == 1)
        s += vars;
      else
        s += tuttex::to_string(mag) + "*" + vars;
    }
    return s;
  }
};

inline TutteCoefficients tutte_coefficients(const Counts& counts, const Multigraph& g) {
  int ke = g.component_count(), n = g.vertex_count();
  auto binom = [](int a, int b) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  };
  TutteCoefficients t;
  for (const auto& [key, c] : counts) {
    auto [i, j] = key;
    int a = i - ke, b = i + j - n;  // (x-1)^a (y-1)^b, both nonnegative
    if (static_cast<int>(t.coeff.size()) <= a) t.coeff.resize(a + 1);
    for (int p = 0; p <= a; ++p) {
      if (static_cast<int>(t.coeff[p].size()) <= b) t.coeff[p].resize(b + 1, Rational(0));
      for (int q = 0; q <= b; ++q) {
        Integer term = c * binom(a, p) * binom(b, q);
        bool negative = ((a - p) + (b - q)) % 2 != 0;
        t.coeff[p][q] += negative ? Rational(-term) : Rational(term);
      }
    }
  }
  // trim trailing zero columns/rows for a tight table
  for (auto& row : t.coeff)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!t.coeff.empty() && t.coeff.back().empty()) t.coeff.pop_back();
  return t;
}

}  // namespace tuttex
