#pragma once

// Edge-replacement transforms (stretch, thicken, insulated thicken) that
// carry tree decompositions, path decompositions and cut orders along with
// the graph, keeping the respective widths controlled; plus the pointed
// tensor factorization that undoes a transform at the Tutte level.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tuttex/decomposition.hpp"
#include "tuttex/errors.hpp"
#include "tuttex/graph.hpp"
#include "tuttex/oracle.hpp"
#include "tuttex/rational.hpp"

namespace tuttex {

struct DecompositionSet {
  TreeDecomposition tree;
  std::optional<TreeDecomposition> path;  // tree shaped as a path
  std::optional<CutOrder> cut;
};

struct TransformResult {
  Multigraph graph{0};
  TreeDecomposition tree;
  std::optional<TreeDecomposition> path;
  std::optional<CutOrder> cut;
  std::string provenance;
};

namespace detail {

inline void check_transform_inputs(const Multigraph& g, const DecompositionSet& ds, int k,
                                   const char* op) {
  if (k < 1) throw std::invalid_argument(std::string(op) + " needs k >= 1");
  auto tree_ok = validate(ds.tree, g);
  if (!tree_ok.ok)
    throw std::invalid_argument(std::string(op) + ": tree decomposition: " + tree_ok.witness);
  if (ds.path) {
    auto path_ok = validate(*ds.path, g);
    if (!path_ok.ok)
      throw std::invalid_argument(std::string(op) + ": path decomposition: " + path_ok.witness);
    if (!ds.path->is_path())
      throw std::invalid_argument(std::string(op) + ": path decomposition tree is not a path");
  }
  if (ds.cut) {
    auto cut_ok = validate_cut(*ds.cut, g);
    if (!cut_ok.ok) throw std::invalid_argument(std::string(op) + ": cut order: " + cut_ok.witness);
  }
}

inline std::size_t covering_bag(const TreeDecomposition& td, const Edge& e) {
  for (std::size_t b = 0; b < td.bags.size(); ++b)
    if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), e.u) &&
        std::binary_search(td.bags[b].begin(), td.bags[b].end(), e.v))
      return b;
  throw std::invalid_argument("no bag covers an edge");
}

inline std::vector<int> sorted_unique(std::vector<int> bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  return bag;
}

// covering bag per edge in a path decomposition, as a position in the
// left-to-right bag sequence
inline std::vector<std::size_t> path_cover_positions(const TreeDecomposition& pd,
                                                     const Multigraph& g) {
  std::vector<int> seq = path_order(pd);
  std::vector<std::size_t> of_bag(pd.bags.size());
  for (std::size_t i = 0; i < seq.size(); ++i) of_bag[static_cast<std::size_t>(seq[i])] = i;
  std::vector<std::size_t> cover(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i)
    cover[static_cast<std::size_t>(i)] = of_bag[covering_bag(pd, g.edge(i))];
  return cover;
}

inline TreeDecomposition path_from_sequence(int n, std::vector<std::vector<int>> bags) {
  TreeDecomposition pd;
  pd.graph_vertex_count = n;
  pd.bags = std::move(bags);
  for (std::size_t i = 0; i + 1 < pd.bags.size(); ++i)
    pd.tree_edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return pd;
}

// emit the input cut order with each edge's fresh vertices placed as one
// consecutive block right after the edge's earliest endpoint
inline CutOrder cut_with_blocks(const CutOrder& base, const Multigraph& g,
                                const std::vector<std::vector<int>>& block_of_edge) {
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < base.size(); ++i) pos[static_cast<std::size_t>(base[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> anchored(base.size());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    int anchor = pos[static_cast<std::size_t>(e.u)] <= pos[static_cast<std::size_t>(e.v)] ? e.u : e.v;
    auto& list = anchored[static_cast<std::size_t>(pos[static_cast<std::size_t>(anchor)])];
    list.insert(list.end(), block_of_edge[static_cast<std::size_t>(i)].begin(),
                block_of_edge[static_cast<std::size_t>(i)].end());
  }
  CutOrder out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.push_back(base[i]);
    out.insert(out.end(), anchored[i].begin(), anchored[i].end());
  }
  return out;
}

}  // namespace detail

// replace every edge by a path of k edges (a loop becomes a k-cycle);
// tree width grows to at most max(width, 2), path width by at most 2, and
// cut width is preserved on loop-free graphs
inline TransformResult k_stretch(const Multigraph& g, const DecompositionSet& ds, int k) {
  detail::check_transform_inputs(g, ds, k, "k_stretch");
  int n = g.vertex_count(), m = g.edge_count();
  auto w_id = [&](int edge, int j) { return n + edge * (k - 1) + (j - 1); };  // j in 1..k-1

  TransformResult out;
  out.provenance = "stretch k=" + std::to_string(k);
  out.graph = Multigraph(n + m * (k - 1));
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    int prev = e.u;
    for (int j = 1; j < k; ++j) {
      out.graph.add_edge(prev, w_id(i, j));
      prev = w_id(i, j);
      blocks[static_cast<std::size_t>(i)].push_back(prev);
    }
    out.graph.add_edge(prev, e.v);
  }

  out.tree = ds.tree;
  out.tree.graph_vertex_count = out.graph.vertex_count();
  for (int i = 0; i < m && k >= 2; ++i) {
    const Edge& e = g.edge(i);
    int attach = static_cast<int>(detail::covering_bag(ds.tree, e));
    // chain of 3-bags {u,v,w1}, {v,w1,w2}, ..., {v,w_{k-2},w_{k-1}}
    for (int j = 0; j <= k - 2; ++j) {
      std::vector<int> bag = j == 0 ? std::vector<int>{e.u, e.v, w_id(i, 1)}
                                    : std::vector<int>{e.v, w_id(i, j), w_id(i, j + 1)};
      out.tree.bags.push_back(detail::sorted_unique(bag));
      int fresh = static_cast<int>(out.tree.bags.size()) - 1;
      out.tree.tree_edges.emplace_back(attach, fresh);
      attach = fresh;
    }
  }

  if (ds.path) {
    std::vector<int> seq = path_order(*ds.path);
    std::vector<std::size_t> cover = detail::path_cover_positions(*ds.path, g);
    std::vector<std::vector<int>> bags;
    for (std::size_t p = 0; p < seq.size(); ++p) {
      const std::vector<int>& base = ds.path->bags[static_cast<std::size_t>(seq[p])];
      bags.push_back(base);
      for (int i = 0; i < m && k >= 2; ++i) {
        if (cover[static_cast<std::size_t>(i)] != p) continue;
        if (k == 2) {
          bags.push_back(detail::sorted_unique([&] {
            std::vector<int> b = base;
            b.push_back(w_id(i, 1));
            return b;
          }()));
        } else {
          for (int j = 1; j <= k - 2; ++j) {
            std::vector<int> b = base;
            b.push_back(w_id(i, j));
            b.push_back(w_id(i, j + 1));
            bags.push_back(detail::sorted_unique(std::move(b)));
          }
        }
      }
    }
    out.path = detail::path_from_sequence(out.graph.vertex_count(), std::move(bags));
  }

  if (ds.cut) out.cut = detail::cut_with_blocks(*ds.cut, g, blocks);
  return out;
}

// replace every edge by k parallel copies; all decompositions carry over
// unchanged (tree and path widths are preserved, cut width at most k-fold)
inline TransformResult k_thicken(const Multigraph& g, const DecompositionSet& ds, int k) {
  detail::check_transform_inputs(g, ds, k, "k_thicken");
  TransformResult out;
  out.provenance = "thicken k=" + std::to_string(k);
  out.graph = Multigraph(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i)
    for (int c = 0; c < k; ++c) out.graph.add_edge(g.edge(i).u, g.edge(i).v);
  out.tree = ds.tree;
  out.path = ds.path;
  out.cut = ds.cut;
  return out;
}

// replace every edge u-v by u-w1, k parallel copies of w1-w2, and w2-v;
// tree width grows to at most max(width, 2), path width by at most 2, cut
// width by at most k-1 on loop-free graphs (the bundle endpoints are
// placed adjacently in the order)
inline TransformResult insulated_k_thicken(const Multigraph& g, const DecompositionSet& ds,
                                           int k) {
  detail::check_transform_inputs(g, ds, k, "insulated_k_thicken");
  int n = g.vertex_count(), m = g.edge_count();
  auto w1 = [&](int edge) { return n + 2 * edge; };
  auto w2 = [&](int edge) { return n + 2 * edge + 1; };

  TransformResult out;
  out.provenance = "insulated k=" + std::to_string(k);
  out.graph = Multigraph(n + 2 * m);
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    out.graph.add_edge(e.u, w1(i));
    for (int c = 0; c < k; ++c) out.graph.add_edge(w1(i), w2(i));
    out.graph.add_edge(w2(i), e.v);
    blocks[static_cast<std::size_t>(i)] = {w1(i), w2(i)};
  }

  out.tree = ds.tree;
  out.tree.graph_vertex_count = out.graph.vertex_count();
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    int attach = static_cast<int>(detail::covering_bag(ds.tree, e));
    for (std::vector<int> bag : {std::vector<int>{e.u, e.v, w1(i)},
                                 std::vector<int>{e.v, w1(i), w2(i)}}) {
      out.tree.bags.push_back(detail::sorted_unique(std::move(bag)));
      int fresh = static_cast<int>(out.tree.bags.size()) - 1;
      out.tree.tree_edges.emplace_back(attach, fresh);
      attach = fresh;
    }
  }

  if (ds.path) {
    std::vector<int> seq = path_order(*ds.path);
    std::vector<std::size_t> cover = detail::path_cover_positions(*ds.path, g);
    std::vector<std::vector<int>> bags;
    for (std::size_t p = 0; p < seq.size(); ++p) {
      const std::vector<int>& base = ds.path->bags[static_cast<std::size_t>(seq[p])];
      bags.push_back(base);
      for (int i = 0; i < m; ++i) {
        if (cover[static_cast<std::size_t>(i)] != p) continue;
        std::vector<int> b = base;
        b.push_back(w1(i));
        b.push_back(w2(i));
        bags.push_back(detail::sorted_unique(std::move(b)));
      }
    }
    out.path = detail::path_from_sequence(out.graph.vertex_count(), std::move(bags));
  }

  if (ds.cut) out.cut = detail::cut_with_blocks(*ds.cut, g, blocks);
  return out;
}

// ---- pointed gadgets and the tensor factorization ----

struct PointedGraph {
  Multigraph graph{0};
  int special_edge = -1;
};

// cycle on k+1 edges: deleting the special edge leaves a k-edge path, so
// tensoring stretches every edge k-fold
inline PointedGraph stretch_gadget(int k) {
  if (k < 1) throw std::invalid_argument("stretch_gadget needs k >= 1");
  Multigraph h(k + 1);
  for (int v = 0; v + 1 <= k; ++v) h.add_edge(v, v + 1);
  h.add_edge(k, 0);
  return {h, k};
}

// k+1 parallel edges: deleting the special one leaves k parallels
inline PointedGraph thicken_gadget(int k) {
  if (k < 1) throw std::invalid_argument("thicken_gadget needs k >= 1");
  Multigraph h(2);
  for (int c = 0; c <= k; ++c) h.add_edge(0, 1);
  return {h, 0};
}

// path u-w1, k parallels w1-w2, w2-v, closed by the special edge u-v
inline PointedGraph insulated_gadget(int k) {
  if (k < 1) throw std::invalid_argument("insulated_gadget needs k >= 1");
  Multigraph h(4);
  h.add_edge(0, 2);
  for (int c = 0; c < k; ++c) h.add_edge(2, 3);
  h.add_edge(3, 1);
  h.add_edge(0, 1);
  return {h, k + 2};
}

// Tensoring G with a pointed gadget H multiplies the Tutte polynomial by
// per-edge factors and moves the evaluation point:
//   T(G tensor H; x, y) = T_C^{nullity(G)} T_L^{rank(G)} T(G; x', y')
// where (T_C, T_L) solve
//   (x-1) T_C + T_L = T(H \ e)
//   T_C + (y-1) T_L = T(H / e)
// and x' = T(H\e)/T_L, y' = T(H/e)/T_C.
struct PointedFactors {
  Rational t_c, t_l, x_image, y_image;

  Rational prefactor(const Multigraph& g) const {
    return rational_pow(t_c, g.nullity()) * rational_pow(t_l, g.rank());
  }
};

inline PointedFactors brylawski_factors(const Multigraph& h, int special_edge, const Rational& x,
                                        const Rational& y) {
  if (h.is_loop(special_edge))
    throw std::invalid_argument("the special edge of a pointed gadget must not be a loop");
  Rational alpha = (x - 1) * (y - 1);
  if (alpha == 1)
    throw inapplicable_error("degenerate gadget at point: the hyperbola (x-1)(y-1) = 1");
  Rational del = brute_tutte(h.deleted(special_edge), x, y);
  Rational con = brute_tutte(h.contracted(special_edge), x, y);
  PointedFactors f;
  f.t_c = (con - (y - 1) * del) / (1 - alpha);
  f.t_l = (del - (x - 1) * con) / (1 - alpha);
  if (f.t_c == 0 || f.t_l == 0)
    throw inapplicable_error("degenerate gadget at point: a tensor factor vanishes");
  f.x_image = del / f.t_l;
  f.y_image = con / f.t_c;
  return f;
}

}  // namespace tuttex
