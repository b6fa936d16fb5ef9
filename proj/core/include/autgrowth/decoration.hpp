#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "autgrowth/revealing.hpp"
#include "autgrowth/treepair.hpp"

namespace ag {

// One equivalence class of decoration point representatives: words p that
// some power of the element maps rigidly into/out of a longer extension of
// themselves, up to rigid powers. Binary alphabet gives exactly one
// admissible decoration letter per class (the letter leaving the ray).
struct DecorationPoint {
  bool source = true;
  size_t orbit = 0;                  // index into PeriodicData.isolated
  std::string canonical;             // shortest representative
  char letter = '0';                 // the decoration letter
  std::vector<std::string> members;  // representatives within the collection window

  friend bool operator==(const DecorationPoint& a, const DecorationPoint& b) {
    return a.source == b.source && a.canonical == b.canonical && a.letter == b.letter;
  }
};

struct DecorationData {
  PeriodicData periodic;
  std::vector<DecorationPoint> sources;  // sorted by canonical representative
  std::vector<DecorationPoint> sinks;
};

DecorationData decoration_data(const RevealingPair& r);

// A prefix-replacement rule (S, w1) -> (S', w2) between labeled cones:
// the source decoration cone S.letter w1 C maps onto S'.letter w2 C.
struct DecorationRule {
  size_t src = 0, dst = 0;  // indices into sources / sinks
  std::string w1, w2;

  friend bool operator==(const DecorationRule&, const DecorationRule&) = default;
  bool operator<(const DecorationRule& o) const {
    if (src != o.src) return src < o.src;
    if (w1 != o.w1) return w1 < o.w1;
    if (dst != o.dst) return dst < o.dst;
    return w2 < o.w2;
  }
};

struct DecorationMap {
  std::vector<DecorationPoint> sources, sinks;
  std::vector<DecorationRule> rules;  // reduced, sorted

  // Rules out of the source class with the given canonical representative,
  // as (w1 -> (sink canonical, w2)) pairs.
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> branch(
      const std::string& source_canonical) const;

  friend bool operator==(const DecorationMap&, const DecorationMap&) = default;
};

DecorationMap decoration_map(const RevealingPair& r);

// The rule-level inverse; satisfies invert(decoration_map(v)) ==
// decoration_map(v^-1) after normalization.
DecorationMap invert(const DecorationMap& m);

}  // namespace ag
