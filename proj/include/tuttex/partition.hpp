#pragma once

// Partitions of ordered ground sets: the index type of the dynamic
// programming tables. Grounds are arbitrary distinct int labels; linear
// orders are passed explicitly where an operation depends on one.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tuttex/rational.hpp"
#include "tuttex/union_find.hpp"

namespace tuttex {

class Partition {
 public:
  Partition() = default;  // partition of the empty ground set

  explicit Partition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    std::vector<int> all;
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("partition block must be nonempty");
      std::sort(b.begin(), b.end());
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw std::invalid_argument("partition blocks must be disjoint");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  static Partition singletons(const std::vector<int>& ground) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(ground.size());
    for (int x : ground) blocks.push_back({x});
    return Partition(std::move(blocks));
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  std::vector<int> ground() const {
    std::vector<int> g;
    for (const auto& b : blocks_) g.insert(g.end(), b.begin(), b.end());
    std::sort(g.begin(), g.end());
    return g;
  }

  int ground_size() const {
    std::size_t total = 0;
    for (const auto& b : blocks_) total += b.size();
    return static_cast<int>(total);
  }

  int block_index_of(int x) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x))
        return static_cast<int>(i);
    return -1;
  }

  bool contains(int x) const { return block_index_of(x) >= 0; }

  bool same_block(int x, int y) const {
    int i = block_index_of(x);
    return i >= 0 && i == block_index_of(y);
  }

  // blocks intersected with keep, empties dropped
  Partition restricted_to(const std::vector<int>& keep) const {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks_) {
      std::vector<int> nb;
      for (int x : b)
        if (std::find(keep.begin(), keep.end(), x) != keep.end()) nb.push_back(x);
      if (!nb.empty()) out.push_back(std::move(nb));
    }
    return Partition(std::move(out));
  }

  Partition without(int x) const {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks_) {
      std::vector<int> nb;
      for (int y : b)
        if (y != x) nb.push_back(y);
      if (!nb.empty()) out.push_back(std::move(nb));
    }
    return Partition(std::move(out));
  }

  Partition with_singleton(int x) const {
    if (contains(x)) throw std::invalid_argument("label already present in partition");
    auto out = blocks_;
    out.push_back({x});
    return Partition(std::move(out));
  }

  // merge the blocks containing x and y (identity if already together)
  Partition merged(int x, int y) const {
    int i = block_index_of(x), j = block_index_of(y);
    if (i < 0 || j < 0) throw std::invalid_argument("merge label not in partition");
    if (i == j) return *this;
    std::vector<std::vector<int>> out;
    std::vector<int> fused = blocks_[i];
    fused.insert(fused.end(), blocks_[j].begin(), blocks_[j].end());
    out.push_back(std::move(fused));
    for (int k = 0; k < block_count(); ++k)
      if (k != i && k != j) out.push_back(blocks_[k]);
    return Partition(std::move(out));
  }

  // no two blocks interleave as a<b<a'<b' under the given label order;
  // single left-to-right sweep with a stack of open blocks
  bool is_noncrossing(const std::vector<int>& order) const {
    std::vector<int> remaining(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      remaining[i] = static_cast<int>(blocks_[i].size());
    int seen = 0;
    for (int x : order)
      if (block_index_of(x) >= 0) ++seen;
    if (seen != ground_size())
      throw std::invalid_argument("order does not cover the partition ground");
    std::vector<int> stack;
    std::vector<char> open(blocks_.size(), 0);
    for (int x : order) {
      int b = block_index_of(x);
      if (b < 0) continue;  // order may cover a larger label universe
      if (!open[b]) {
        open[b] = 1;
        stack.push_back(b);
      } else if (stack.back() != b) {
        return false;  // b resurfaces above an unfinished block
      }
      if (--remaining[b] == 0) stack.pop_back();
    }
    return true;
  }

  bool is_noncrossing() const { return is_noncrossing(ground()); }

  // every block occupies consecutive positions of the order
  bool is_interval(const std::vector<int>& order) const {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    for (const auto& b : blocks_) {
      int lo = -1, hi = -1;
      for (int x : b) {
        auto it = pos.find(x);
        if (it == pos.end()) throw std::invalid_argument("order missing a ground label");
        lo = (lo < 0) ? it->second : std::min(lo, it->second);
        hi = std::max(hi, it->second);
      }
      if (hi - lo + 1 != static_cast<int>(b.size())) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      s += (i ? ",{" : "{");
      for (std::size_t j = 0; j < blocks_[i].size(); ++j)
        s += (j ? "," : "") + std::to_string(blocks_[i][j]);
      s += "}";
    }
    return s + "}";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.blocks_ < b.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](long long v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& b : p.blocks()) {
      for (int x : b) mix(x);
      mix(-0x7fffffff);  // block separator
    }
    return h;
  }
};

// finest partition of the union ground coarser than both inputs
inline Partition join(const Partition& a, const Partition& b) {
  std::map<int, int> index;
  for (const auto& part : {a, b})
    for (const auto& block : part.blocks())
      for (int x : block) index.emplace(x, static_cast<int>(index.size()));
  UnionFind uf(static_cast<int>(index.size()));
  for (const auto& part : {a, b})
    for (const auto& block : part.blocks())
      for (int x : block) uf.unite(index[block.front()], index[x]);
  std::map<int, std::vector<int>> groups;
  for (const auto& [label, idx] : index) groups[uf.find(idx)].push_back(label);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return Partition(std::move(blocks));
}

// Glue one spanning star per block of each partition over the shared ground;
// true iff the union of the two forests contains a cycle.
inline bool induces_cycle(const Partition& a, const Partition& b) {
  std::vector<int> g = a.ground();
  if (g != b.ground()) throw std::invalid_argument("induces_cycle needs a common ground");
  UnionFind uf(static_cast<int>(g.size()));
  auto at = [&](int x) {
    return static_cast<int>(std::lower_bound(g.begin(), g.end(), x) - g.begin());
  };
  for (const auto& part : {a, b})
    for (const auto& block : part.blocks())
      for (std::size_t i = 1; i < block.size(); ++i)
        if (!uf.unite(at(block.front()), at(block[i]))) return true;
  return false;
}

// Euler-count criterion: the glued forest union has nullity
// |ground| - blocks(a) - blocks(b) + blocks(a join b).
inline bool induces_cycle_by_rank(const Partition& a, const Partition& b) {
  if (a.ground() != b.ground()) throw std::invalid_argument("induces_cycle needs a common ground");
  return a.ground_size() - a.block_count() - b.block_count() + join(a, b).block_count() > 0;
}

namespace detail {
inline std::vector<int> order_positions(const std::vector<int>& order,
                                        const std::vector<int>& labels) {
  std::vector<int> pos;
  for (int x : labels) {
    auto it = std::find(order.begin(), order.end(), x);
    if (it == order.end()) throw std::invalid_argument("label missing from order");
    pos.push_back(static_cast<int>(it - order.begin()));
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}
}  // namespace detail

// Merge every block meeting the interval into one, drop the interval's
// labels, and put the fresh label in their place. The interval must occupy
// consecutive positions of the order.
inline Partition contracted(const Partition& pi, const std::vector<int>& order,
                            const std::vector<int>& interval, int fresh) {
  if (interval.empty()) throw std::invalid_argument("contraction interval must be nonempty");
  std::vector<int> pos = detail::order_positions(order, interval);
  if (pos.back() - pos.front() + 1 != static_cast<int>(pos.size()))
    throw std::invalid_argument("contraction set is not an interval of the order");
  for (int x : interval)
    if (!pi.contains(x)) throw std::invalid_argument("interval label not in partition");
  std::vector<int> fused{fresh};
  std::vector<std::vector<int>> out;
  for (const auto& b : pi.blocks()) {
    bool meets = false;
    for (int x : b)
      if (std::find(interval.begin(), interval.end(), x) != interval.end()) meets = true;
    if (!meets) {
      out.push_back(b);
      continue;
    }
    for (int x : b)
      if (std::find(interval.begin(), interval.end(), x) == interval.end()) fused.push_back(x);
  }
  out.push_back(std::move(fused));
  return Partition(std::move(out));
}

inline std::vector<int> contract_order(const std::vector<int>& order,
                                       const std::vector<int>& interval, int fresh) {
  std::vector<int> out;
  bool placed = false;
  for (int x : order) {
    if (std::find(interval.begin(), interval.end(), x) != interval.end()) {
      if (!placed) out.push_back(fresh);
      placed = true;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

// Inverse of contraction: the label's block gains the interval, the label leaves.
inline Partition blown_up(const Partition& pi, int label, const std::vector<int>& interval) {
  int idx = pi.block_index_of(label);
  if (idx < 0) throw std::invalid_argument("blowup label not in partition");
  std::vector<std::vector<int>> out;
  for (int k = 0; k < pi.block_count(); ++k) {
    if (k != idx) {
      out.push_back(pi.blocks()[k]);
      continue;
    }
    std::vector<int> nb = interval;
    for (int x : pi.blocks()[k])
      if (x != label) nb.push_back(x);
    out.push_back(std::move(nb));
  }
  return Partition(std::move(out));
}

inline std::vector<int> blowup_order(const std::vector<int>& order, int label,
                                     const std::vector<int>& interval) {
  std::vector<int> out;
  for (int x : order) {
    if (x == label)
      out.insert(out.end(), interval.begin(), interval.end());
    else
      out.push_back(x);
  }
  return out;
}

// injective relabeling
inline Partition relabeled(const Partition& pi, const std::map<int, int>& f) {
  std::vector<std::vector<int>> out;
  for (const auto& b : pi.blocks()) {
    std::vector<int> nb;
    for (int x : b) {
      auto it = f.find(x);
      nb.push_back(it == f.end() ? x : it->second);
    }
    out.push_back(std::move(nb));
  }
  return Partition(std::move(out));  // ctor re-checks disjointness
}

// All partitions of the ground set in restricted-growth-string
// lexicographic order (so the one-block partition comes first and the
// all-singleton partition last).
inline std::vector<Partition> enumerate_partitions(std::vector<int> ground) {
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
    throw std::invalid_argument("ground labels must be distinct");
  std::size_t m = ground.size();
  std::vector<Partition> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> rgs(m, 0);
  auto emit = [&]() {
    int kmax = *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<int>> blocks(kmax + 1);
    for (std::size_t i = 0; i < m; ++i) blocks[rgs[i]].push_back(ground[i]);
    out.push_back(Partition(std::move(blocks)));
  };
  while (true) {
    emit();
    // next restricted growth string in lexicographic order
    int i = static_cast<int>(m) - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;  // can increment position i
    }
    if (i == 0) return out;
    ++rgs[i];
    for (std::size_t j = i + 1; j < m; ++j) rgs[j] = 0;
  }
}

inline Integer bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number of negative n");
  // Bell triangle
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next{row.back()};
    for (std::size_t j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
    row = std::move(next);
  }
  return row.front();
}

inline Integer catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("catalan_number of negative n");
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return c / (n + 1);
}

}  // namespace tuttex
