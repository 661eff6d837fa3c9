#pragma once

#include <numeric>
#include <vector>

namespace tuttex {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // true when a merge actually happened (x and y were separate)
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }

  void reset() { std::iota(parent.begin(), parent.end(), 0); }
};

}  // namespace tuttex
