#pragma once

#include <string>
#include <vector>

#include "autgrowth/ball.hpp"
#include "autgrowth/growth.hpp"
#include "autgrowth/intmat.hpp"

namespace ag {

// Z^r with the standard generating set; elements keyed by their coordinates.
struct ZrGroup {
  using Element = ZVector;
  size_t rank;

  explicit ZrGroup(size_t r) : rank(r) {}
  Element identity() const { return ZVector(rank, 0); }
  std::vector<Element> generators() const;
  Element mul(const Element& x, const Element& y) const;
  std::string key(const Element& x) const;
};

// The GL_r(Z)-orbit representative of x: (g, 0, ..., 0) with
// g = gcd of the absolute entries (0 for the zero vector).
ZVector gcd_canonical(const ZVector& x);

// Same representative, but computed by replaying the coordinate-level
// Euclidean elimination through actual generator matrices. Returns the
// applied matrices so tests can replay the trace. Serves as the
// independent oracle for gcd_canonical.
struct EuclidTrace {
  ZVector result;
  std::vector<IntMatrix> steps;  // product (left to right) maps x to result
};
EuclidTrace gcd_canonical_traced(const ZVector& x);

// Elementary additions (both signs), coordinate swaps and single-coordinate
// negations; closed under the listed inverses.
std::vector<IntMatrix> gl_generators(size_t r);

// Exact cumulative orbit table of Z^r: built by running the canonical-form
// counter over the L1 ball, not by writing down n+1 directly.
GrowthTable alpha_zr(size_t r, size_t max_n);

}  // namespace ag
