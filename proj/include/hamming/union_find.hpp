#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace hamming {

// Disjoint sets over 0..n-1 with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int size() const noexcept { return static_cast<int>(parent_.size()); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  // Sets listed in order of their smallest element; members ascending.
  std::vector<std::vector<int>> groups() {
    std::vector<int> group_of_root(parent_.size(), -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < size(); ++x) {
      const int r = find(x);
      if (group_of_root[r] < 0) {
        group_of_root[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[group_of_root[r]].push_back(x);
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace hamming
