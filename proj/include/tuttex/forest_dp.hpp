#pragma once

// Rank-based forest counting: a width-parameterized DP whose tables are
// kept supported on partitions that are noncrossing with respect to a bag
// order, so the support never exceeds the Catalan number of the bag size
// (instead of the Bell number). Crossing entries produced by edge and join
// steps are rewritten through the compatibility-matrix expansions; the
// rewritten table is F-equivalent to the true one, which is all later
// steps can observe.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tuttex/compat_matrix.hpp"
#include "tuttex/decomposition.hpp"
#include "tuttex/errors.hpp"
#include "tuttex/graph.hpp"
#include "tuttex/partition.hpp"
#include "tuttex/polynomial.hpp"

namespace tuttex {

struct ReducedRow {
  std::vector<int> order;                 // current bag order; drifts with swaps
  std::map<Partition, Rational> entries;  // nonzero only on noncrossing partitions
};

using ForestObserver = std::function<void(int node, const ReducedRow&)>;

namespace detail {

inline void drop_zeros(std::map<Partition, Rational>& entries) {
  for (auto it = entries.begin(); it != entries.end();)
    it = (it->second == 0) ? entries.erase(it) : std::next(it);
}

// swap order[pos] and order[pos+1], rewriting every entry so the row stays
// supported on partitions noncrossing with respect to the new order
inline void apply_swap(ReducedRow& row, int pos) {
  std::map<Partition, Rational> next;
  for (const auto& [pi, c] : row.entries)
    for (const auto& [rho, a] : uncross_after_swap(pi, row.order, pos)) next[rho] += c * a;
  std::swap(row.order[pos], row.order[pos + 1]);
  drop_zeros(next);
  row.entries = std::move(next);
}

// bubble the row's order into the exact target sequence
inline void normalize_order(ReducedRow& row, const std::vector<int>& target) {
  if (row.order.size() != target.size())
    throw std::logic_error("order normalization with mismatched bags");
  std::map<int, int> rank;
  for (std::size_t i = 0; i < target.size(); ++i) rank[target[i]] = static_cast<int>(i);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int pos = 0; pos + 1 < static_cast<int>(row.order.size()); ++pos)
      if (rank.at(row.order[pos]) > rank.at(row.order[pos + 1])) {
        apply_swap(row, pos);
        moved = true;
      }
  }
}

// rewrite one (possibly crossing) partition over the sorted bag as a
// combination of partitions noncrossing on it: start from an order where
// the blocks sit as intervals and bubble back to sorted
inline void reduce_entry_onto(const Partition& pi, const Rational& c,
                              const std::vector<int>& sorted_bag,
                              std::map<Partition, Rational>& out) {
  if (pi.is_noncrossing(sorted_bag)) {
    out[pi] += c;
    return;
  }
  ReducedRow scratch;
  for (const auto& block : pi.blocks())
    scratch.order.insert(scratch.order.end(), block.begin(), block.end());
  scratch.entries[pi] = c;
  normalize_order(scratch, sorted_bag);
  for (const auto& [rho, a] : scratch.entries) out[rho] += a;
}

inline void check_row(const ReducedRow& row, int node) {
  Integer limit = catalan_number(static_cast<int>(row.order.size()));
  if (Integer(static_cast<long>(row.entries.size())) > limit)
    throw std::logic_error("reduced row at node " + std::to_string(node) + " has support " +
                           std::to_string(row.entries.size()) + " beyond the Catalan bound " +
                           limit.get_str());
  for (const auto& [pi, c] : row.entries)
    if (!pi.is_noncrossing(row.order))
      throw std::logic_error("reduced row at node " + std::to_string(node) +
                             " holds a crossing partition " + pi.to_string());
}

}  // namespace detail

// Weighted forest count: sum over acyclic edge subsets A of weight^|A|.
// Weight 1 counts forests. The observer, when set, sees every finished
// node row (used by tests to check F-equivalence against an unreduced DP).
inline Rational count_forests(const Multigraph& g, const NiceDecomposition& nd,
                              const Rational& edge_weight = 1,
                              const ForestObserver& observer = {}) {
  auto valid = validate_nice(nd, g);
  if (!valid.ok) throw std::invalid_argument("count_forests: " + valid.witness);

  std::vector<ReducedRow> rows(nd.nodes.size());
  for (std::size_t x = 0; x < nd.nodes.size(); ++x) {
    const NiceNode& node = nd.nodes[x];
    ReducedRow& row = rows[x];
    switch (node.kind) {
      case NodeKind::kLeaf:
        row.entries[Partition{}] = 1;
        break;
      case NodeKind::kIntroduceVertex: {
        ReducedRow& child = rows[node.child];
        row.order = child.order;
        row.order.push_back(node.vertex);  // a singleton block never crosses
        for (const auto& [pi, c] : child.entries)
          row.entries[pi.with_singleton(node.vertex)] = c;
        break;
      }
      case NodeKind::kForgetVertex: {
        ReducedRow& child = rows[node.child];
        for (int u : child.order)
          if (u != node.vertex) row.order.push_back(u);
        for (const auto& [pi, c] : child.entries) row.entries[pi.without(node.vertex)] += c;
        break;
      }
      case NodeKind::kIntroduceEdge: {
        row = std::move(rows[node.child]);
        if (g.is_loop(node.edge)) break;  // a loop is a cycle: never selected
        const Edge& e = g.edge(node.edge);
        // bring the endpoints next to each other, one swap at a time
        auto position = [&](int v) {
          return static_cast<int>(std::find(row.order.begin(), row.order.end(), v) -
                                  row.order.begin());
        };
        int pu = position(e.u), pv = position(e.v);
        int lo = std::min(pu, pv), hi = std::max(pu, pv);
        for (int pos = lo; pos + 1 < hi; ++pos) detail::apply_swap(row, pos);
        std::map<Partition, Rational> next;
        for (const auto& [pi, c] : row.entries) {
          next[pi] += c;  // forests skipping the edge
          if (!pi.same_block(e.u, e.v))  // a co-blocked pair would close a cycle
            next[pi.merged(e.u, e.v)] += edge_weight * c;
        }
        detail::drop_zeros(next);
        row.entries = std::move(next);
        break;
      }
      case NodeKind::kJoin: {
        ReducedRow& left = rows[node.child];
        ReducedRow& right = rows[node.child2];
        detail::normalize_order(left, node.bag);
        detail::normalize_order(right, node.bag);
        row.order = node.bag;
        std::map<Partition, Rational> glued;
        for (const auto& [p1, c1] : left.entries)
          for (const auto& [p2, c2] : right.entries)
            if (!induces_cycle(p1, p2)) glued[join(p1, p2)] += c1 * c2;
        for (const auto& [pi, c] : glued)
          detail::reduce_entry_onto(pi, c, node.bag, row.entries);
        detail::drop_zeros(row.entries);
        break;
      }
    }
    detail::check_row(row, static_cast<int>(x));
    if (observer) observer(static_cast<int>(x), row);
    if (node.child >= 0) rows[node.child] = ReducedRow{};
    if (node.child2 >= 0) rows[node.child2] = ReducedRow{};
  }

  const ReducedRow& root = rows.back();
  auto it = root.entries.find(Partition{});
  return it == root.entries.end() ? Rational(0) : it->second;
}

// F(t) = sum over forests A of t^|A|, recovered from edge_count()+1
// weighted runs by exact interpolation
inline Polynomial forest_generating_poly(const Multigraph& g, const NiceDecomposition& nd) {
  std::vector<std::pair<Rational, Rational>> samples;
  for (int s = 0; s <= g.edge_count(); ++s)
    samples.emplace_back(Rational(s), count_forests(g, nd, Rational(s)));
  Polynomial f = interpolate(samples);
  if (f.low_degree() < 0) throw std::logic_error("forest polynomial with negative degree");
  return f;
}

// T(G; x, 1) as a polynomial in x: forests weighted by component count.
// With u = x-1 and |A| = |V| - components(A) on forests,
// T(x,1) = u^{|V|-k(E)} F(1/u), which the size bound |A| <= |V|-k(E)
// turns back into a genuine polynomial.
inline Polynomial curve_y1_restriction(const Multigraph& g, const NiceDecomposition& nd) {
  Polynomial f = forest_generating_poly(g, nd);
  long top = g.vertex_count() - g.component_count();
  if (f.degree() > top) throw std::logic_error("a forest exceeds the size bound");
  Polynomial in_u;  // coefficient of u^(top - s) is the forest count of size s
  for (long s = 0; s <= f.degree(); ++s)
    in_u += Polynomial::monomial(f.coeff(s), top - s);
  // rebase from powers of u = x-1 to powers of x
  Polynomial shift = Polynomial::monomial(1, 1) + Polynomial(Rational(-1));
  Polynomial result;
  for (long d = in_u.degree(); d >= 0; --d) {
    result = result * shift;
    result += Polynomial(in_u.coeff(d));
  }
  return result;
}

}  // namespace tuttex
