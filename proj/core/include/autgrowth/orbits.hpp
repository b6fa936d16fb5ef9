#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autgrowth/growth.hpp"

namespace ag {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n), size_(n, 1) {
    for (size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  size_t find(size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  bool unite(size_t i, size_t j) {
    i = find(i);
    j = find(j);
    if (i == j) return false;
    if (size_[i] < size_[j]) std::swap(i, j);
    parent_[j] = i;
    size_[i] += size_[j];
    return true;
  }
  size_t size() const { return parent_.size(); }

 private:
  std::vector<size_t> parent_, size_;
};

// Disjoint classes of ball elements under a set of partial maps. Classes are
// a refinement of the true orbit partition: unions only ever merge elements
// that really are in one orbit, so the class count bounds the orbit count
// from above.
struct OrbitPartition {
  std::vector<std::string> keys;         // sorted, only elements with |g| <= radius
  std::vector<size_t> lengths;           // parallel to keys
  std::vector<size_t> class_id;          // parallel to keys, 0..num_classes-1
  std::vector<size_t> class_min_length;  // indexed by class id
  size_t radius = 0;

  size_t num_classes() const { return class_min_length.size(); }

  // counts[n] = number of classes with min member length <= n.
  GrowthTable class_count_table() const;
};

}  // namespace ag
