#pragma once

// The forest compatibility matrix over all partitions of {1..n}, its exact
// rank, and the uncrossing rewrite that expresses any row as a rational
// combination of rows indexed by noncrossing partitions. This is what lets
// the forest-counting DP keep only Catalan-many table entries.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tuttex/errors.hpp"
#include "tuttex/linalg.hpp"
#include "tuttex/partition.hpp"
#include "tuttex/rational.hpp"

namespace tuttex {

struct CompatMatrix {
  int n = 0;
  std::vector<Partition> parts;              // growth-string lexicographic order
  std::vector<std::vector<char>> entries;    // 1 iff gluing stays acyclic
  std::map<Partition, int> index;

  int index_of(const Partition& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw std::invalid_argument("partition not over this ground");
    return it->second;
  }
};

inline CompatMatrix compat_matrix(int n) {
  if (n < 0 || n > 8) throw resource_error("compatibility matrix limited to ground size 8");
  CompatMatrix cm;
  cm.n = n;
  std::vector<int> ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i + 1;
  cm.parts = enumerate_partitions(ground);
  int count = static_cast<int>(cm.parts.size());
  for (int i = 0; i < count; ++i) cm.index.emplace(cm.parts[i], i);
  cm.entries.assign(count, std::vector<char>(count, 0));
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) {
      char ok = induces_cycle(cm.parts[i], cm.parts[j]) ? 0 : 1;
      cm.entries[i][j] = ok;
      cm.entries[j][i] = ok;
    }
  return cm;
}

inline std::string dump_matrix(const CompatMatrix& cm) {
  std::string out;
  for (const auto& row : cm.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

inline int compat_rank(const CompatMatrix& cm) {
  Matrix m(cm.entries.size());
  for (std::size_t i = 0; i < cm.entries.size(); ++i)
    m[i].assign(cm.entries[i].begin(), cm.entries[i].end());
  return static_cast<int>(matrix_rank(m));
}

// one row's expansion over noncrossing partitions: row = sum of c * nc-row
using Expansion = std::vector<std::pair<Partition, Rational>>;

struct UncrossTable {
  // per ground size 4 and 5: every partition's expansion
  std::map<Partition, Expansion> expand4, expand5;

  const Expansion& lookup(const Partition& p) const {
    const auto& table = (p.ground_size() == 4) ? expand4 : expand5;
    auto it = table.find(p);
    if (it == table.end()) throw std::invalid_argument("no uncross entry for " + p.to_string());
    return it->second;
  }
};

namespace detail {

inline std::map<Partition, Expansion> solve_expansions(int n) {
  CompatMatrix cm = compat_matrix(n);
  int count = static_cast<int>(cm.parts.size());
  std::vector<int> ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i + 1;
  std::vector<int> nc;  // indices of rows noncrossing under the natural order
  for (int i = 0; i < count; ++i)
    if (cm.parts[i].is_noncrossing(ground)) nc.push_back(i);
  int basis = static_cast<int>(nc.size());

  // unknowns: one coefficient per noncrossing row; one equation per column;
  // all target rows solved at once through augmented columns
  Matrix m(count, std::vector<Rational>(basis + count, 0));
  for (int eq = 0; eq < count; ++eq) {
    for (int k = 0; k < basis; ++k) m[eq][k] = static_cast<int>(cm.entries[nc[k]][eq]);
    for (int j = 0; j < count; ++j) m[eq][basis + j] = static_cast<int>(cm.entries[j][eq]);
  }
  std::vector<std::size_t> pivots = row_reduce(m, static_cast<std::size_t>(basis));
  if (static_cast<int>(pivots.size()) != basis)
    throw std::logic_error("noncrossing compatibility rows are not independent");
  // pivoting is confined to the first `basis` columns; consistency of every
  // augmented column is what certifies that each row lies in their span
  for (int eq = static_cast<int>(pivots.size()); eq < count; ++eq)
    for (int j = 0; j < count; ++j)
      if (m[eq][basis + j] != 0)
        throw std::logic_error("a compatibility row falls outside the noncrossing span");

  std::map<Partition, Expansion> out;
  for (int j = 0; j < count; ++j) {
    Expansion e;
    for (int r = 0; r < basis; ++r) {
      const Rational& c = m[r][basis + j];
      if (c != 0) e.emplace_back(cm.parts[nc[pivots[r]]], c);
    }
    out.emplace(cm.parts[j], std::move(e));
  }
  return out;
}

}  // namespace detail

inline const UncrossTable& uncross_tables() {
  static const UncrossTable table = [] {
    UncrossTable t;
    t.expand4 = detail::solve_expansions(4);
    t.expand5 = detail::solve_expansions(5);
    return t;
  }();
  return table;
}

// Rewrite a partition that was noncrossing on `order` so that it is
// noncrossing after the adjacent positions pos, pos+1 are swapped:
// returns {(rho, c)} with row(pi) = sum c * row(rho) in the compatibility
// matrix, every rho noncrossing on the swapped order.
inline Expansion uncross_after_swap(const Partition& pi, const std::vector<int>& order, int pos) {
  if (pos < 0 || pos + 1 >= static_cast<int>(order.size()))
    throw std::invalid_argument("swap position out of range");
  if (!pi.is_noncrossing(order))
    throw std::invalid_argument("partition must be noncrossing before the swap");
  std::vector<int> swapped = order;
  std::swap(swapped[pos], swapped[pos + 1]);

  int u = order[pos], v = order[pos + 1];
  int a = pi.block_index_of(u), b = pi.block_index_of(v);
  if (a < 0 || b < 0 || a == b || pi.is_noncrossing(swapped)) return {{pi, Rational(1)}};

  const auto& block_a = pi.blocks()[a];
  const auto& block_b = pi.blocks()[b];

  // alternating runs of the two blocks under the swapped order
  std::vector<std::vector<int>> runs;
  for (int x : swapped) {
    bool in_a = std::binary_search(block_a.begin(), block_a.end(), x);
    bool in_b = std::binary_search(block_b.begin(), block_b.end(), x);
    if (!in_a && !in_b) continue;
    bool same_run = !runs.empty() && pi.same_block(runs.back().front(), x);
    if (same_run)
      runs.back().push_back(x);
    else
      runs.push_back({x});
  }
  int r = static_cast<int>(runs.size());
  if (r != 4 && r != 5)
    throw std::logic_error("crossing pair after one swap must form 4 or 5 runs");

  // contract run k to label k: the pair becomes {odd runs},{even runs}
  std::vector<std::vector<int>> pattern_blocks(2);
  for (int k = 1; k <= r; ++k) pattern_blocks[(k - 1) % 2].push_back(k);
  Partition pattern(std::move(pattern_blocks));

  // untouched blocks ride along unchanged
  std::vector<std::vector<int>> rest;
  for (int k = 0; k < pi.block_count(); ++k)
    if (k != a && k != b) rest.push_back(pi.blocks()[k]);

  int scratch_base = 0;
  for (const auto& run : runs)
    for (int x : run) scratch_base = std::min(scratch_base, x);

  Expansion out;
  for (const auto& [rho, coeff] : uncross_tables().lookup(pattern)) {
    // table labels 1..r -> fresh negatives -> blown back up to the runs
    std::map<int, int> scratch;
    for (int k = 1; k <= r; ++k) scratch.emplace(k, scratch_base - k);
    Partition cur = relabeled(rho, scratch);
    for (int k = 1; k <= r; ++k) cur = blown_up(cur, scratch_base - k, runs[k - 1]);
    std::vector<std::vector<int>> blocks = cur.blocks();
    blocks.insert(blocks.end(), rest.begin(), rest.end());
    out.emplace_back(Partition(std::move(blocks)), coeff);
  }
  return out;
}

}  // namespace tuttex
