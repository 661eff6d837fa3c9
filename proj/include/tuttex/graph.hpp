#pragma once

// Multigraph with an explicit edge list. Vertices are 0-based ints; loops
// and parallel edges are kept as-is, since the polynomial identities depend
// on their multiplicities. File I/O uses the PACE-style format: a
// "p tw <n> <m>" header, then one "u v" line per edge with 1-based ids;
// repeated lines mean parallel edges, "c" lines are comments.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tuttex/errors.hpp"
#include "tuttex/union_find.hpp"

namespace tuttex {

struct Edge {
  int u = -1;
  int v = -1;
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  bool is_loop(int i) const { return edge(i).u == edge(i).v; }

  int add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    edges_.push_back({u, v});
    return edge_count() - 1;
  }

  // k(E): number of connected components, isolated vertices included
  int component_count() const {
    UnionFind uf(n_);
    int k = n_;
    for (const Edge& e : edges_)
      if (uf.unite(e.u, e.v)) --k;
    return k;
  }

  int rank() const { return n_ - component_count(); }
  int nullity() const { return edge_count() - rank(); }

  Multigraph deleted(int edge_index) const {
    Multigraph g(n_);
    for (int i = 0; i < edge_count(); ++i)
      if (i != edge_index) g.add_edge(edges_[i].u, edges_[i].v);
    return g;
  }

  // Contract an edge: endpoints merge (the smaller id survives), remaining
  // parallel copies of the edge become loops. Contracting a loop just
  // deletes it.
  Multigraph contracted(int edge_index) const {
    const Edge& e = edge(edge_index);
    if (e.u == e.v) return deleted(edge_index);
    int keep = std::min(e.u, e.v), drop = std::max(e.u, e.v);
    auto remap = [&](int w) {
      if (w == drop) return keep;
      return w > drop ? w - 1 : w;
    };
    Multigraph g(n_ - 1);
    for (int i = 0; i < edge_count(); ++i)
      if (i != edge_index) g.add_edge(remap(edges_[i].u), remap(edges_[i].v));
    return g;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

inline Multigraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// ---- PACE-style .gr I/O ----

namespace detail {
// blank lines and 'c' comment lines carry no content
inline bool significant_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && line[pos] != 'c';
}
}  // namespace detail

inline Multigraph read_gr(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  long seen = 0;
  Multigraph g;
  while (std::getline(in, line)) {
    if (!detail::significant_line(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string p, kind;
      if (!(ls >> p >> kind >> n >> m) || p != "p" || kind != "tw" || n < 0 || m < 0)
        throw parse_error("expected header 'p tw <n> <m>', got: " + line);
      std::string extra;
      if (ls >> extra) throw parse_error("trailing tokens in header: " + line);
      g = Multigraph(static_cast<int>(n));
      continue;
    }
    long u, v;
    if (!(ls >> u >> v)) throw parse_error("bad edge line: " + line);
    std::string extra;
    if (ls >> extra) throw parse_error("trailing tokens in edge line: " + line);
    if (u < 1 || u > n || v < 1 || v > n)
      throw parse_error("edge endpoint out of range: " + line);
    if (++seen > m) throw parse_error("more edge lines than the header declares");
    g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (n < 0) throw parse_error("missing 'p tw <n> <m>' header");
  if (seen != m)
    throw parse_error("header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(seen));
  return g;
}

inline void write_gr(const Multigraph& g, std::ostream& out) {
  out << "p tw " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u + 1 << " " << e.v + 1 << "\n";
}

inline Multigraph load_gr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file: " + path);
  return read_gr(in);
}

inline void save_gr(const Multigraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write graph file: " + path);
  write_gr(g, out);
}

}  // namespace tuttex
