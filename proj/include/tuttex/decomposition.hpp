#pragma once

// Tree decompositions, path decompositions (tree decompositions whose tree
// is a path), cutwidth vertex orders, and the "nice" normal form consumed
// by the dynamic programs.
//
// Nice decompositions here introduce edges explicitly: every graph edge is
// attached to exactly one IntroduceEdge node whose bag contains both
// endpoints. That keeps all DP recurrences local to one edge at a time.

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tuttex/errors.hpp"
#include "tuttex/graph.hpp"
#include "tuttex/union_find.hpp"

namespace tuttex {

struct TreeDecomposition {
  int graph_vertex_count = 0;
  std::vector<std::vector<int>> bags;           // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;  // indices into bags

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(bags.size(), 0);
    for (auto [a, b] : tree_edges) {
      ++deg[a];
      ++deg[b];
    }
    return deg;
  }

  bool is_path() const {
    for (int d : degrees())
      if (d > 2) return false;
    return true;
  }
};

struct ValidationResult {
  bool ok = true;
  std::string witness;  // which axiom failed, and where
};

inline ValidationResult fail(const std::string& w) { return {false, w}; }

// The three tree decomposition axioms plus representation checks.
inline ValidationResult validate(const TreeDecomposition& td, const Multigraph& g) {
  int nb = static_cast<int>(td.bags.size());
  if (td.graph_vertex_count != g.vertex_count())
    return fail("decomposition built for a different vertex count");
  if (nb == 0) {
    if (g.vertex_count() > 0) return fail("no bags but the graph has vertices");
    return {};
  }
  for (int i = 0; i < nb; ++i) {
    const auto& bag = td.bags[i];
    for (std::size_t j = 0; j < bag.size(); ++j) {
      if (bag[j] < 0 || bag[j] >= g.vertex_count())
        return fail("bag " + std::to_string(i) + " contains an out-of-range vertex");
      if (j > 0 && bag[j - 1] >= bag[j])
        return fail("bag " + std::to_string(i) + " is not sorted strictly ascending");
    }
  }
  if (static_cast<int>(td.tree_edges.size()) != nb - 1)
    return fail("tree must have exactly (bag count - 1) edges");
  UnionFind uf(nb);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || a >= nb || b < 0 || b >= nb)
      return fail("tree edge references a missing bag");
    if (a == b || !uf.unite(a, b)) return fail("tree edges contain a cycle");
  }
  // vertex coverage
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& bag : td.bags)
    for (int v : bag) seen[v] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) return fail("vertex " + std::to_string(v + 1) + " appears in no bag");
  // edge coverage
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    bool covered = false;
    for (const auto& bag : td.bags) {
      if (std::binary_search(bag.begin(), bag.end(), e.u) &&
          std::binary_search(bag.begin(), bag.end(), e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return fail("edge " + std::to_string(i) + " is covered by no bag");
  }
  // connectivity of each vertex's bag set
  for (int v = 0; v < g.vertex_count(); ++v) {
    UnionFind vu(nb);
    int parts = 0;
    std::vector<char> holds(nb, 0);
    for (int i = 0; i < nb; ++i)
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
        holds[i] = 1;
        ++parts;
      }
    for (auto [a, b] : td.tree_edges)
      if (holds[a] && holds[b] && vu.unite(a, b)) --parts;
    if (parts > 1)
      return fail("bags containing vertex " + std::to_string(v + 1) +
                  " do not form a connected subtree");
  }
  return {};
}

inline TreeDecomposition trivial_decomposition(const Multigraph& g) {
  TreeDecomposition td;
  td.graph_vertex_count = g.vertex_count();
  if (g.vertex_count() > 0) {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    td.bags.push_back(all);
  }
  return td;
}

// ---- cut orders / cutwidth ----

using CutOrder = std::vector<int>;  // permutation of 0..n-1

inline ValidationResult validate_cut(const CutOrder& order, const Multigraph& g) {
  if (static_cast<int>(order.size()) != g.vertex_count())
    return fail("cut order length differs from the vertex count");
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : order) {
    if (v < 0 || v >= g.vertex_count()) return fail("cut order entry out of range");
    if (seen[v]) return fail("cut order repeats vertex " + std::to_string(v + 1));
    seen[v] = 1;
  }
  return {};
}

// max over i of |{edges with exactly one endpoint among the first i+1}|
inline int cut_order_width(const CutOrder& order, const Multigraph& g) {
  auto res = validate_cut(order, g);
  if (!res.ok) throw std::invalid_argument("cut_order_width: " + res.witness);
  std::vector<int> pos(g.vertex_count());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  int best = 0;
  for (int i = 0; i + 1 < g.vertex_count(); ++i) {
    int crossing = 0;
    for (const Edge& e : g.edges()) {
      int a = std::min(pos[e.u], pos[e.v]), b = std::max(pos[e.u], pos[e.v]);
      if (a <= i && i < b) ++crossing;
    }
    best = std::max(best, crossing);
  }
  return best;
}

inline CutOrder trivial_cut_order(const Multigraph& g) {
  CutOrder order(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
  return order;
}

// ---- nice decompositions ----

enum class NodeKind { kLeaf, kIntroduceVertex, kForgetVertex, kIntroduceEdge, kJoin };

struct NiceNode {
  NodeKind kind = NodeKind::kLeaf;
  int vertex = -1;            // IntroduceVertex / ForgetVertex
  int edge = -1;              // IntroduceEdge: index into the graph edge list
  int child = -1;             // post-order index; -1 only for leaves
  int child2 = -1;            // second child, joins only
  std::vector<int> bag;       // sorted ascending
};

struct NiceDecomposition {
  std::vector<NiceNode> nodes;  // post-order: children precede parents; root last

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const {
    int w = -1;
    for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
    return w;
  }
};

// Structural checks a DP relies on. Also verifies the semantic axioms:
// every edge introduced exactly once with both endpoints present, and the
// two branches of a join share exactly the join bag.
inline ValidationResult validate_nice(const NiceDecomposition& nd, const Multigraph& g) {
  int count = static_cast<int>(nd.nodes.size());
  if (count == 0) return fail("empty nice decomposition");
  std::vector<int> used(count, 0);
  std::vector<int> edge_seen(g.edge_count(), 0);
  // seen_below[x] = all vertices occurring in bags at or below x
  std::vector<std::set<int>> seen_below(count);
  for (int x = 0; x < count; ++x) {
    const NiceNode& node = nd.nodes[x];
    for (std::size_t i = 0; i < node.bag.size(); ++i) {
      int v = node.bag[i];
      if (v < 0 || v >= g.vertex_count())
        return fail("node " + std::to_string(x) + ": bag vertex out of range");
      if (i > 0 && node.bag[i - 1] >= v)
        return fail("node " + std::to_string(x) + ": bag not sorted");
    }
    auto check_child = [&](int c) {
      return c >= 0 && c < x && !used[c];
    };
    switch (node.kind) {
      case NodeKind::kLeaf:
        if (node.child != -1 || node.child2 != -1)
          return fail("node " + std::to_string(x) + ": leaf with a child");
        if (!node.bag.empty()) return fail("node " + std::to_string(x) + ": leaf bag not empty");
        break;
      case NodeKind::kIntroduceVertex: {
        if (!check_child(node.child) || node.child2 != -1)
          return fail("node " + std::to_string(x) + ": bad child links");
        const auto& cb = nd.nodes[node.child].bag;
        std::vector<int> expect = cb;
        expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (std::binary_search(cb.begin(), cb.end(), node.vertex) || node.bag != expect)
          return fail("node " + std::to_string(x) + ": introduce does not add exactly one vertex");
        if (seen_below[node.child].count(node.vertex))
          return fail("node " + std::to_string(x) + ": vertex " +
                      std::to_string(node.vertex + 1) + " reintroduced after being forgotten");
        break;
      }
      case NodeKind::kForgetVertex: {
        if (!check_child(node.child) || node.child2 != -1)
          return fail("node " + std::to_string(x) + ": bad child links");
        const auto& cb = nd.nodes[node.child].bag;
        std::vector<int> expect;
        for (int v : cb)
          if (v != node.vertex) expect.push_back(v);
        if (!std::binary_search(cb.begin(), cb.end(), node.vertex) || node.bag != expect)
          return fail("node " + std::to_string(x) + ": forget does not drop exactly one vertex");
        break;
      }
      case NodeKind::kIntroduceEdge: {
        if (!check_child(node.child) || node.child2 != -1)
          return fail("node " + std::to_string(x) + ": bad child links");
        if (node.bag != nd.nodes[node.child].bag)
          return fail("node " + std::to_string(x) + ": edge introduction changed the bag");
        if (node.edge < 0 || node.edge >= g.edge_count())
          return fail("node " + std::to_string(x) + ": edge index out of range");
        const Edge& e = g.edge(node.edge);
        if (!std::binary_search(node.bag.begin(), node.bag.end(), e.u) ||
            !std::binary_search(node.bag.begin(), node.bag.end(), e.v))
          return fail("node " + std::to_string(x) + ": edge endpoints not both in the bag");
        ++edge_seen[node.edge];
        break;
      }
      case NodeKind::kJoin: {
        if (!check_child(node.child)) return fail("node " + std::to_string(x) + ": bad child links");
        used[node.child] = 1;  // mark before checking the second child
        if (!check_child(node.child2))
          return fail("node " + std::to_string(x) + ": bad second child link");
        const auto& b1 = nd.nodes[node.child].bag;
        const auto& b2 = nd.nodes[node.child2].bag;
        if (node.bag != b1 || node.bag != b2)
          return fail("node " + std::to_string(x) + ": join bags differ");
        // branches may only share the bag itself
        for (int v : seen_below[node.child])
          if (seen_below[node.child2].count(v) &&
              !std::binary_search(node.bag.begin(), node.bag.end(), v))
            return fail("node " + std::to_string(x) + ": branches share vertex " +
                        std::to_string(v + 1) + " outside the bag");
        break;
      }
    }
    if (node.kind != NodeKind::kJoin && node.child >= 0) used[node.child] = 1;
    if (node.child2 >= 0) used[node.child2] = 1;
    seen_below[x].insert(node.bag.begin(), node.bag.end());
    if (node.child >= 0) {
      seen_below[x].insert(seen_below[node.child].begin(), seen_below[node.child].end());
      seen_below[node.child].clear();
    }
    if (node.child2 >= 0) {
      seen_below[x].insert(seen_below[node.child2].begin(), seen_below[node.child2].end());
      seen_below[node.child2].clear();
    }
  }
  if (!nd.nodes.back().bag.empty()) return fail("root bag not empty");
  for (int x = 0; x + 1 < count; ++x)
    if (!used[x]) return fail("node " + std::to_string(x) + " is not connected to the root");
  for (int i = 0; i < g.edge_count(); ++i)
    if (edge_seen[i] != 1)
      return fail("edge " + std::to_string(i) + " introduced " +
                  std::to_string(edge_seen[i]) + " times");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen_below[count - 1].count(v))
      return fail("vertex " + std::to_string(v + 1) + " never enters a bag");
  return {};
}

// Deterministic nice-form construction:
//  * the tree is rooted at the degree-<=1 node with the smallest bag
//    (ties by lowest index), so path-shaped inputs produce no joins;
//  * between a child bag and its parent bag, forgets come before
//    introduces, both in ascending vertex order;
//  * every edge is attached to its highest covering bag (closest to the
//    root) and introduced right after that bag is assembled, in edge
//    index order;
//  * multi-child nodes binarize into a left-leaning chain of joins.
inline NiceDecomposition make_nice(const TreeDecomposition& td, const Multigraph& g) {
  auto valid = validate(td, g);
  if (!valid.ok) throw std::invalid_argument("make_nice: invalid decomposition: " + valid.witness);

  NiceDecomposition out;
  auto push = [&](NiceNode node) {
    out.nodes.push_back(std::move(node));
    return static_cast<int>(out.nodes.size()) - 1;
  };

  int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {  // empty graph: a single leaf is a complete decomposition
    push(NiceNode{});
    return out;
  }

  // pick the root among degree-<=1 nodes
  std::vector<int> deg = td.degrees();
  int root = -1;
  for (int i = 0; i < nb; ++i) {
    if (deg[i] > 1) continue;
    if (root == -1 || td.bags[i].size() < td.bags[root].size()) root = i;
  }

  // rooted structure (BFS), children in ascending index order
  std::vector<std::vector<int>> adj(nb), children(nb);
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(nb, -2), bfs;
  parent[root] = -1;
  bfs.push_back(root);
  for (std::size_t h = 0; h < bfs.size(); ++h) {
    int x = bfs[h];
    std::sort(adj[x].begin(), adj[x].end());
    for (int y : adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        children[x].push_back(y);
        bfs.push_back(y);
      }
  }

  // assign every edge to its covering bag closest to the root
  std::vector<int> depth(nb, 0);
  for (std::size_t h = 1; h < bfs.size(); ++h) depth[bfs[h]] = depth[parent[bfs[h]]] + 1;
  std::vector<std::vector<int>> edges_at(nb);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    int best = -1;
    for (int x = 0; x < nb; ++x) {
      if (!std::binary_search(td.bags[x].begin(), td.bags[x].end(), e.u) ||
          !std::binary_search(td.bags[x].begin(), td.bags[x].end(), e.v))
        continue;
      if (best == -1 || depth[x] < depth[best]) best = x;
    }
    edges_at[best].push_back(i);  // coverage is guaranteed by validate()
  }

  // assemble bottom-up; result[x] = nice node index whose bag equals bags[x]
  std::vector<int> result(nb, -1);
  auto morph = [&](int from, const std::vector<int>& src, const std::vector<int>& dst) {
    int cur = from;
    std::vector<int> bag = src;
    for (int v : src) {
      if (std::binary_search(dst.begin(), dst.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      cur = push({NodeKind::kForgetVertex, v, -1, cur, -1, bag});
    }
    for (int v : dst) {
      if (std::binary_search(src.begin(), src.end(), v)) continue;
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      cur = push({NodeKind::kIntroduceVertex, v, -1, cur, -1, bag});
    }
    return cur;
  };
  for (std::size_t h = bfs.size(); h-- > 0;) {
    int x = bfs[h];
    const std::vector<int>& bag = td.bags[x];
    int cur;
    if (children[x].empty()) {
      cur = morph(push(NiceNode{}), {}, bag);
    } else {
      cur = morph(result[children[x][0]], td.bags[children[x][0]], bag);
      for (std::size_t c = 1; c < children[x].size(); ++c) {
        int other = morph(result[children[x][c]], td.bags[children[x][c]], bag);
        cur = push({NodeKind::kJoin, -1, -1, cur, other, bag});
      }
    }
    for (int ei : edges_at[x]) cur = push({NodeKind::kIntroduceEdge, -1, ei, cur, -1, bag});
    result[x] = cur;
  }
  morph(result[root], td.bags[root], {});
  return out;
}

// ---- path helpers ----

// Left-to-right node order of a path-shaped decomposition.
inline std::vector<int> path_order(const TreeDecomposition& td) {
  int nb = static_cast<int>(td.bags.size());
  if (!td.is_path()) throw std::invalid_argument("decomposition tree is not a path");
  if (nb == 0) return {};
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int start = 0;
  for (int i = 0; i < nb; ++i)
    if (adj[i].size() <= 1) {
      start = i;
      break;
    }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < nb) {
    int next = -1;
    for (int y : adj[cur])
      if (y != prev) next = y;
    if (next == -1) throw std::invalid_argument("decomposition tree is disconnected");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

inline TreeDecomposition path_of_bags(int n, std::vector<std::vector<int>> bags) {
  TreeDecomposition td;
  td.graph_vertex_count = n;
  td.bags = std::move(bags);
  for (std::size_t i = 0; i + 1 < td.bags.size(); ++i)
    td.tree_edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return td;
}

// ---- PACE-style .td and cut order I/O ----

inline TreeDecomposition read_td(std::istream& in) {
  std::string line;
  long nb = -1, n = -1, declared_width_plus1 = -1;
  TreeDecomposition td;
  std::vector<char> have_bag;
  long edges_seen = 0;
  while (std::getline(in, line)) {
    if (!detail::significant_line(line)) continue;
    std::istringstream ls(line);
    if (nb < 0) {
      std::string s, kind;
      if (!(ls >> s >> kind >> nb >> declared_width_plus1 >> n) || s != "s" || kind != "td" ||
          nb < 0 || n < 0)
        throw parse_error("expected header 's td <bags> <width+1> <n>', got: " + line);
      td.graph_vertex_count = static_cast<int>(n);
      td.bags.assign(static_cast<std::size_t>(nb), {});
      have_bag.assign(static_cast<std::size_t>(nb), 0);
      continue;
    }
    if (line[line.find_first_not_of(" \t")] == 'b') {
      std::string b;
      long id;
      ls >> b;
      if (!(ls >> id) || id < 1 || id > nb)
        throw parse_error("bad bag line: " + line);
      if (have_bag[id - 1]) throw parse_error("bag " + std::to_string(id) + " defined twice");
      have_bag[id - 1] = 1;
      long v;
      std::vector<int>& bag = td.bags[id - 1];
      while (ls >> v) {
        if (v < 1 || v > n) throw parse_error("bag vertex out of range: " + line);
        bag.push_back(static_cast<int>(v - 1));
      }
      if (!ls.eof()) throw parse_error("bad bag line: " + line);
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      continue;
    }
    long a, b;
    if (!(ls >> a >> b) || a < 1 || a > nb || b < 1 || b > nb)
      throw parse_error("bad decomposition edge line: " + line);
    std::string extra;
    if (ls >> extra) throw parse_error("trailing tokens: " + line);
    td.tree_edges.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
    ++edges_seen;
  }
  if (nb < 0) throw parse_error("missing 's td' header");
  return td;
}

inline void write_td(const TreeDecomposition& td, std::ostream& out) {
  out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << td.graph_vertex_count
      << "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << " " << v + 1;
    out << "\n";
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
}

inline TreeDecomposition load_td(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open decomposition file: " + path);
  return read_td(in);
}

inline void save_td(const TreeDecomposition& td, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write decomposition file: " + path);
  write_td(td, out);
}

// one whitespace-separated list of all vertices, 1-based
inline CutOrder read_cut_order(std::istream& in, int n) {
  CutOrder order;
  std::string line;
  while (std::getline(in, line)) {
    if (!detail::significant_line(line)) continue;
    std::istringstream ls(line);
    long v;
    while (ls >> v) {
      if (v < 1 || v > n) throw parse_error("cut order entry out of range");
      order.push_back(static_cast<int>(v - 1));
    }
    if (!ls.eof()) throw parse_error("bad cut order line: " + line);
  }
  if (static_cast<int>(order.size()) != n)
    throw parse_error("cut order must list every vertex exactly once");
  return order;
}

inline void write_cut_order(const CutOrder& order, std::ostream& out) {
  for (std::size_t i = 0; i < order.size(); ++i)
    out << order[i] + 1 << (i + 1 == order.size() ? "" : " ");
  out << "\n";
}

inline CutOrder load_cut_order(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open cut order file: " + path);
  return read_cut_order(in, n);
}

inline void save_cut_order(const CutOrder& order, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write cut order file: " + path);
  write_cut_order(order, out);
}

}  // namespace tuttex
