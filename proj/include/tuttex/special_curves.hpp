#pragma once

// Special-curve dynamic programs: the parity-vector DP for even subgraphs
// (Ising / alpha = 2 hyperbola) and the bag-coloring DP for chromatic
// points (alpha = q hyperbola at y = 0).

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "tuttex/decomposition.hpp"
#include "tuttex/errors.hpp"
#include "tuttex/graph.hpp"
#include "tuttex/polynomial.hpp"
#include "tuttex/rational.hpp"

namespace tuttex {

// s[mask][k] = number of edge sets of size k among the edges introduced so
// far whose degree parity at bag[i] is bit i of mask (forgotten vertices
// all have even degree)
struct ParityTable {
  std::vector<int> bag;
  std::vector<std::vector<Integer>> s;
};

enum class JoinKind { kTransform, kNaive };

namespace detail {

using ZPoly = std::vector<Integer>;  // coefficients indexed by edge count

inline void add_into(ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
}

inline void sub_into(ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
}

inline ZPoly convolve(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// in-place Walsh-Hadamard transform; applying it twice scales by s.size()
inline void hadamard(std::vector<ZPoly>& s) {
  for (std::size_t bit = 1; bit < s.size(); bit <<= 1)
    for (std::size_t m = 0; m < s.size(); ++m)
      if (!(m & bit)) {
        ZPoly sum = s[m];
        add_into(sum, s[m | bit]);
        sub_into(s[m], s[m | bit]);  // s[m] - s[m|bit] ... into s[m|bit]
        std::swap(s[m], s[m | bit]);
        s[m] = std::move(sum);
      }
}

// parity masks combine by xor, edge counts add: the join is an
// xor-convolution carrying a polynomial in each cell, diagonalized by the
// Walsh-Hadamard transform
inline std::vector<ZPoly> join_parities_transform(std::vector<ZPoly> a, std::vector<ZPoly> b) {
  hadamard(a);
  hadamard(b);
  std::vector<ZPoly> out(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) out[m] = convolve(a[m], b[m]);
  hadamard(out);
  Integer size(static_cast<long>(out.size()));
  for (ZPoly& cell : out)
    for (Integer& c : cell) {
      if (c % size != 0) throw std::logic_error("inexact inverse parity transform");
      c /= size;
    }
  return out;
}

inline std::vector<ZPoly> join_parities_naive(const std::vector<ZPoly>& a,
                                              const std::vector<ZPoly>& b) {
  std::vector<ZPoly> out(a.size());
  for (std::size_t m1 = 0; m1 < a.size(); ++m1) {
    if (a[m1].empty()) continue;
    for (std::size_t m2 = 0; m2 < b.size(); ++m2) {
      if (b[m2].empty()) continue;
      ZPoly prod = convolve(a[m1], b[m2]);
      add_into(out[m1 ^ m2], prod);
    }
  }
  return out;
}

inline std::size_t bag_position(const std::vector<int>& bag, int v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) throw std::logic_error("vertex missing from bag");
  return static_cast<std::size_t>(it - bag.begin());
}

// new mask with a 0 bit spliced in at position i
inline std::size_t insert_zero_bit(std::size_t mask, std::size_t i) {
  std::size_t low = (std::size_t{1} << i) - 1;
  return (mask & low) | ((mask & ~low) << 1);
}

}  // namespace detail

// generating polynomial of even subgraphs: coefficient of z^k counts the
// k-edge subsets in which every vertex has even degree (loops count toward
// no parity and are always allowed)
inline Polynomial even_subgraph_poly(const Multigraph& g, const NiceDecomposition& nd,
                                     JoinKind join_kind = JoinKind::kTransform) {
  auto valid = validate_nice(nd, g);
  if (!valid.ok) throw std::invalid_argument("even_subgraph_poly: " + valid.witness);

  using detail::ZPoly;
  std::vector<ParityTable> tables(nd.nodes.size());
  for (std::size_t x = 0; x < nd.nodes.size(); ++x) {
    const NiceNode& node = nd.nodes[x];
    ParityTable& table = tables[x];
    table.bag = node.bag;
    switch (node.kind) {
      case NodeKind::kLeaf:
        table.s = {{Integer(1)}};
        break;
      case NodeKind::kIntroduceVertex: {
        ParityTable& child = tables[node.child];
        std::size_t i = detail::bag_position(table.bag, node.vertex);
        table.s.assign(child.s.size() * 2, {});
        for (std::size_t m = 0; m < child.s.size(); ++m)
          table.s[detail::insert_zero_bit(m, i)] = std::move(child.s[m]);
        break;
      }
      case NodeKind::kForgetVertex: {
        ParityTable& child = tables[node.child];
        std::size_t i = detail::bag_position(child.bag, node.vertex);
        std::size_t bit = std::size_t{1} << i;
        table.s.assign(child.s.size() / 2, {});
        for (std::size_t m = 0; m < child.s.size(); ++m)
          if (!(m & bit))  // only even parity survives a forget
            table.s[(m & (bit - 1)) | ((m & ~(2 * bit - 1)) >> 1)] = std::move(child.s[m]);
        break;
      }
      case NodeKind::kIntroduceEdge: {
        ParityTable& child = tables[node.child];
        const Edge& e = g.edge(node.edge);
        std::size_t flip = 0;
        if (!g.is_loop(node.edge))
          flip = (std::size_t{1} << detail::bag_position(table.bag, e.u)) ^
                 (std::size_t{1} << detail::bag_position(table.bag, e.v));
        table.s.assign(child.s.size(), {});
        for (std::size_t m = 0; m < child.s.size(); ++m) {
          ZPoly cell = child.s[m];
          const ZPoly& src = child.s[m ^ flip];  // taking the edge flips both ends
          if (!src.empty()) {
            if (cell.size() < src.size() + 1) cell.resize(src.size() + 1, 0);
            for (std::size_t k = 0; k < src.size(); ++k) cell[k + 1] += src[k];
          }
          table.s[m] = std::move(cell);
        }
        break;
      }
      case NodeKind::kJoin: {
        ParityTable& left = tables[node.child];
        ParityTable& right = tables[node.child2];
        table.s = (join_kind == JoinKind::kTransform)
                      ? detail::join_parities_transform(std::move(left.s), std::move(right.s))
                      : detail::join_parities_naive(left.s, right.s);
        break;
      }
    }
    if (node.child >= 0) tables[node.child] = ParityTable{};
    if (node.child2 >= 0) tables[node.child2] = ParityTable{};
  }

  Polynomial out;
  const ZPoly& root = tables.back().s.at(0);
  for (std::size_t k = 0; k < root.size(); ++k)
    out += Polynomial::monomial(Rational(root[k]), static_cast<long>(k));
  return out;
}

// T(G; x, y) on the hyperbola (x-1)(y-1) = 2, through the even-subgraph
// polynomial. With v = y-1 the two-state Potts sum obeys
//   sum_A 2^{k(A)} v^{|A|} = ((v+2)/2)^{|E|} 2^{|V|} C_G(v/(v+2))
// (split each edge factor 1 + v*[equal spins] as (1+v/2)(1 + z*s_u*s_v)
// with z = v/(v+2); spin sums kill odd-degree terms), while by definition
//   sum_A 2^{k(A)} v^{|A|} = (x-1)^{k(E)} (y-1)^{|V|} T(G; x, y).
inline Rational tutte_on_h2(const Multigraph& g, const NiceDecomposition& nd, const Rational& x,
                            const Rational& y) {
  if ((x - 1) * (y - 1) != 2)
    throw inapplicable_error("point is not on the hyperbola (x-1)(y-1) = 2");
  if (y == 1 || y == -1)
    throw inapplicable_error("even-subgraph route degenerates at y in {1, -1}");
  Rational v = y - 1;
  Polynomial c = even_subgraph_poly(g, nd);
  Rational lhs = rational_pow((v + 2) / 2, g.edge_count()) *
                 rational_pow(2, g.vertex_count()) * c.evaluate(v / (v + 2));
  return lhs / (rational_pow(x - 1, g.component_count()) * rational_pow(y - 1, g.vertex_count()));
}

// proper q-colorings by dynamic programming over bag colorings
inline Integer count_colorings(const Multigraph& g, const NiceDecomposition& nd, int q) {
  if (q < 1) throw std::invalid_argument("count_colorings needs q >= 1");
  auto valid = validate_nice(nd, g);
  if (!valid.ok) throw std::invalid_argument("count_colorings: " + valid.witness);
  double widest = 1;
  for (const auto& node : nd.nodes)
    widest = std::max(widest, std::pow(static_cast<double>(q), static_cast<double>(node.bag.size())));
  if (widest > static_cast<double>(1 << 24))
    throw resource_error("coloring table would exceed 2^24 entries");

  using Row = std::map<std::vector<int>, Integer>;
  std::vector<Row> rows(nd.nodes.size());
  for (std::size_t x = 0; x < nd.nodes.size(); ++x) {
    const NiceNode& node = nd.nodes[x];
    Row& row = rows[x];
    switch (node.kind) {
      case NodeKind::kLeaf:
        row[{}] = 1;
        break;
      case NodeKind::kIntroduceVertex: {
        std::size_t i = detail::bag_position(node.bag, node.vertex);
        for (const auto& [c, n] : rows[node.child])
          for (int a = 0; a < q; ++a) {
            std::vector<int> ext = c;
            ext.insert(ext.begin() + static_cast<long>(i), a);
            row[ext] = n;
          }
        break;
      }
      case NodeKind::kForgetVertex: {
        std::size_t i = detail::bag_position(nd.nodes[node.child].bag, node.vertex);
        for (const auto& [c, n] : rows[node.child]) {
          std::vector<int> shrunk = c;
          shrunk.erase(shrunk.begin() + static_cast<long>(i));
          row[shrunk] += n;
        }
        break;
      }
      case NodeKind::kIntroduceEdge: {
        const Edge& e = g.edge(node.edge);
        if (g.is_loop(node.edge)) break;  // a loop forbids every coloring
        std::size_t pu = detail::bag_position(node.bag, e.u);
        std::size_t pv = detail::bag_position(node.bag, e.v);
        for (const auto& [c, n] : rows[node.child])
          if (c[pu] != c[pv]) row[c] = n;
        break;
      }
      case NodeKind::kJoin: {
        const Row& right = rows[node.child2];
        for (const auto& [c, n] : rows[node.child]) {
          auto it = right.find(c);
          if (it != right.end()) row[c] = n * it->second;
        }
        break;
      }
    }
    if (node.child >= 0) rows[node.child] = Row{};
    if (node.child2 >= 0) rows[node.child2] = Row{};
  }
  auto it = rows.back().find({});
  return it == rows.back().end() ? Integer(0) : it->second;
}

// number of proper q-colorings equals (-1)^{|V|-k(E)} q^{k(E)} T(G; 1-q, 0)
inline Rational tutte_chromatic_point(const Multigraph& g, const NiceDecomposition& nd, int q) {
  Rational colorings(count_colorings(g, nd, q));
  Rational scale = rational_pow(q, g.component_count());
  if ((g.vertex_count() - g.component_count()) % 2 != 0) scale = -scale;
  return colorings / scale;
}

}  // namespace tuttex
