#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autgrowth/ball.hpp"
#include "autgrowth/growth.hpp"
#include "autgrowth/intmat.hpp"

namespace ag {

// The integer Heisenberg group in Mal'cev normal form a^i b^j c^k with
// c = [a,b] central. Multiplication carries the cocycle term
// (i,j,k)(i',j',k') = (i+i', j+j', k+k' - j*i'), the convention verified
// symbolically by heis_relations_hold() and the unit tests.
struct HeisElement {
  int64_t i = 0, j = 0, k = 0;
  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

HeisElement heis_mul(const HeisElement& x, const HeisElement& y);
HeisElement heis_inverse(const HeisElement& x);
HeisElement heis_pow(const HeisElement& x, int64_t n);

// a = (1,0,0), b = (0,1,0), c = (0,0,1).
HeisElement heis_a();
HeisElement heis_b();
HeisElement heis_c();

// Checks c = [a,b] and centrality of c in normal-form arithmetic.
bool heis_relations_hold();

std::string heis_key(const HeisElement& x);
HeisElement heis_parse(const std::string& text);  // "i,j,k"

// Group evaluator over the generating set {a, b, a^-1, b^-1}.
struct HeisenbergGroup {
  using Element = HeisElement;
  Element identity() const { return {}; }
  std::vector<Element> generators() const;
  Element mul(const Element& x, const Element& y) const { return heis_mul(x, y); }
  std::string key(const Element& x) const { return heis_key(x); }
};

// Exact word length over {a,b}^+- by breadth-first search. Throws
// budget_error when the element lies outside the radius budget.
size_t heis_length_bfs(const HeisElement& x, size_t max_radius);

// The named automorphisms: phi_M sends a -> a^m11 b^m12, b -> a^m21 b^m22,
// c -> c^det(M). A = diag(-1,1); B is unitriangular with phi_B(b) = ab.
enum class HeisAutName { A, B, A_inv, B_inv };
HeisElement phi_named(const HeisElement& x, HeisAutName name);

// Same map for an arbitrary M in GL_2(Z); every such M yields an
// automorphism (relations are preserved; tests verify).
HeisElement phi_matrix(const HeisElement& x, const IntMatrix& m);

// Conjugation by b: (i,j,k) -> (i,j,k+i).
HeisElement inner_by_b(const HeisElement& x, int64_t times = 1);

// Orbit representative key. Commutator elements (i = j = 0) map to the
// certified class |k|; the rest map to (d, k'') with d = gcd(|i|,|j|) and
// k'' the +-collapsed residue of the reduced c-exponent, an upper-bound
// canonicalizer realized by an explicit automorphism chain.
struct HeisOrbitRep {
  bool commutator = false;
  int64_t commutator_k = 0;  // |k|, valid when commutator
  int64_t d = 0, k2 = 0;     // valid when !commutator
  friend bool operator==(const HeisOrbitRep&, const HeisOrbitRep&) = default;
};
HeisOrbitRep heis_orbit_rep(const HeisElement& x);
std::string heis_orbit_key(const HeisElement& x);

// Exact geodesic length of c^k is 2*ceil(2*sqrt(|k|)).
size_t heis_c_power_length_formula(int64_t k);

// lower: commutator orbit classes counted by the c^k length formula
// (valid beyond any BFS radius); upper: distinct orbit-rep keys over the
// BFS ball. Both cumulative.
struct HeisSandwich {
  GrowthTable lower;
  GrowthTable upper;
};
HeisSandwich heis_growth_sandwich(size_t max_n);

}  // namespace ag
