#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "tuttex/general_dp.hpp"
#include "tuttex/oracle.hpp"

using namespace tuttex;
using namespace tuttex::testutil;

namespace {

Counts dp_with_trivial(const Multigraph& g) {
  return general_dp(g, make_nice(trivial_decomposition(g), g));
}

// width-1 decomposition of a tree-shaped multigraph: one bag per edge
TreeDecomposition edge_bag_decomposition(const Multigraph& g) {
  TreeDecomposition td;
  td.graph_vertex_count = g.vertex_count();
  for (const Edge& e : g.edges()) td.bags.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  if (td.bags.empty() && g.vertex_count() > 0)
    for (int v = 0; v < g.vertex_count(); ++v) td.bags.push_back({v});
  UnionFind uf(static_cast<int>(td.bags.size()));
  for (std::size_t a = 0; a < td.bags.size(); ++a)
    for (std::size_t b = a + 1; b < td.bags.size(); ++b) {
      bool share = false;
      for (int v : td.bags[a])
        if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), v)) share = true;
      if (share && uf.unite(static_cast<int>(a), static_cast<int>(b)))
        td.tree_edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  return td;
}

}  // namespace

TEST_CASE("census of a triangle via the one-bag decomposition") {
  Counts counts = dp_with_trivial(complete_graph(3));
  REQUIRE(counts.size() == 4);
  REQUIRE(counts.at({3, 0}) == 1);
  REQUIRE(counts.at({2, 1}) == 3);
  REQUIRE(counts.at({1, 2}) == 3);
  REQUIRE(counts.at({1, 3}) == 1);
}

TEST_CASE("census of an edgeless graph") {
  Counts counts = dp_with_trivial(Multigraph(5));
  REQUIRE(counts.size() == 1);
  REQUIRE(counts.at({5, 0}) == 1);
}

TEST_CASE("width-3 path decomposition of K4 evaluates to the forest count") {
  Multigraph k4 = complete_graph(4);
  TreeDecomposition td;
  td.graph_vertex_count = 4;
  td.bags = {{0, 1, 2, 3}, {1, 2, 3}};
  td.tree_edges = {{0, 1}};
  Counts counts = general_dp(k4, make_nice(td, k4));
  REQUIRE(tutte_from_counts(counts, k4, 2, 1) == 38);
  REQUIRE(counts == brute_counts(k4));
}

TEST_CASE("census is independent of the decomposition") {
  Multigraph k4 = complete_graph(4);
  TreeDecomposition path;
  path.graph_vertex_count = 4;
  path.bags = {{0, 1, 2, 3}, {1, 2, 3}};
  path.tree_edges = {{0, 1}};
  REQUIRE(general_dp(k4, make_nice(trivial_decomposition(k4), k4)) ==
          general_dp(k4, make_nice(path, k4)));

  // a branching decomposition with join nodes
  Multigraph star = graph_from_edges(
      7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
  TreeDecomposition branchy;
  branchy.graph_vertex_count = 7;
  branchy.bags = {{0}, {0, 1, 2}, {0, 3, 4}, {0, 5, 6}};
  branchy.tree_edges = {{0, 1}, {0, 2}, {0, 3}};
  Counts via_join = general_dp(star, make_nice(branchy, star));
  REQUIRE(via_join == brute_counts(star));
  REQUIRE(via_join == dp_with_trivial(star));
}

TEST_CASE("census handles loops and parallel edges") {
  Multigraph g = graph_from_edges(3, {{0, 1}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
  REQUIRE(dp_with_trivial(g) == brute_counts(g));
}

TEST_CASE("census of disconnected graphs") {
  Multigraph g = graph_from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  REQUIRE(dp_with_trivial(g) == brute_counts(g));
}

TEST_CASE("census agrees with enumeration on small corpora") {
  for (const Multigraph& g : connected_simple_graphs_up_to(4))
    REQUIRE(dp_with_trivial(g) == brute_counts(g));

  std::mt19937 rng(8101);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = random_multigraph(rng, 5, 8);
    Counts expect = brute_counts(g);
    REQUIRE(dp_with_trivial(g) == expect);
    Integer total = 0;
    for (const auto& [key, c] : expect) total += c;
    Integer subsets = 1;
    subsets <<= g.edge_count();
    REQUIRE(total == subsets);
  }
}

TEST_CASE("census over edge-bag decompositions of random trees") {
  std::mt19937 rng(8102);
  for (int trial = 0; trial < 15; ++trial) {
    Multigraph t = random_connected_simple(rng, 2 + int(rng() % 6), 0);
    TreeDecomposition td = edge_bag_decomposition(t);
    REQUIRE(validate(td, t).ok);
    REQUIRE(general_dp(t, make_nice(td, t)) == brute_counts(t));
  }
}

TEST_CASE("coefficient extraction recovers the polynomial") {
  Multigraph k3 = complete_graph(3);
  TutteCoefficients t = tutte_coefficients(dp_with_trivial(k3), k3);
  REQUIRE(t.to_string() == "x^2 + x + y");
  REQUIRE(t.at(2, 0) == 1);
  REQUIRE(t.at(1, 0) == 1);
  REQUIRE(t.at(0, 1) == 1);
  REQUIRE(t.at(0, 0) == 0);
  REQUIRE(t.evaluate(-2, 0) == 2);

  Multigraph k4 = complete_graph(4);
  TutteCoefficients t4 = tutte_coefficients(dp_with_trivial(k4), k4);
  REQUIRE(t4.at(3, 0) == 1);
  REQUIRE(t4.at(2, 0) == 3);
  REQUIRE(t4.at(1, 0) == 2);
  REQUIRE(t4.at(1, 1) == 4);
  REQUIRE(t4.at(0, 1) == 2);
  REQUIRE(t4.at(0, 2) == 3);
  REQUIRE(t4.at(0, 3) == 1);
  REQUIRE(t4.to_string() == "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y");

  std::mt19937 rng(8103);
  for (int trial = 0; trial < 10; ++trial) {
    Multigraph g = random_multigraph(rng, 4, 6);
    TutteCoefficients tc = tutte_coefficients(brute_counts(g), g);
    Rational x = random_rational(rng), y = random_rational(rng);
    REQUIRE(tc.evaluate(x, y) == brute_tutte(g, x, y));
  }
}

TEST_CASE("coefficient printing covers signs and constants") {
  TutteCoefficients zero;
  REQUIRE(zero.to_string() == "0");
  TutteCoefficients c;
  c.coeff = {{Rational(-2), Rational(1)}, {rational(7, 2)}};
  REQUIRE(c.to_string() == "7/2*x + y - 2");
}
