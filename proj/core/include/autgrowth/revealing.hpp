#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "autgrowth/treepair.hpp"

namespace ag {

enum class LeafType {
  neutral,
  range_of_repulsion,
  repeller,
  domain_of_attraction,
  attractor,
  source,
  sink
};

const char* to_string(LeafType t);

// A (possibly unreduced) tree pair whose components of A\B each contain a
// repeller and whose components of B\A each contain an attractor, together
// with the leaf classification.
struct RevealingPair {
  std::map<std::string, std::string> rules;        // domain leaf -> range leaf
  std::map<std::string, LeafType> classification;  // over leaves of A union B

  TreePair element() const { return TreePair(rules); }
  std::vector<std::string> domain_leaves() const;
  std::vector<std::string> range_leaves() const;
};

// Classification of every leaf of the pair by its sigma-chain dynamics.
std::map<std::string, LeafType> classify_leaves(const std::map<std::string, std::string>& rules);

// True iff every component of A\B has a repeller and every component of
// B\A has an attractor.
bool is_revealing(const std::map<std::string, std::string>& rules);

// Iterated caret augmentation until the pair is revealing. Throws
// budget_error if max_rolls is exceeded; max_rolls = 0 picks the default
// guard of 10 * (pair size)^2.
RevealingPair make_revealing(const TreePair& x, size_t max_rolls = 0);

// One isolated periodic orbit: an attracting or repelling finite orbit of
// points, with a representative and the full orbit.
struct IsolatedOrbit {
  EventuallyPeriodicPoint rep;
  size_t period = 1;
  bool source = true;  // false: sink
  std::vector<EventuallyPeriodicPoint> orbit;
};

struct PeriodicData {
  std::vector<std::pair<std::string, size_t>> periodic_cones;  // (cone word, period)
  std::vector<IsolatedOrbit> isolated;

  size_t isolated_point_count() const;
};

PeriodicData periodic_points(const RevealingPair& r);

}  // namespace ag
