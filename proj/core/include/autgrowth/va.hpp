#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "autgrowth/ball.hpp"
#include "autgrowth/growth.hpp"
#include "autgrowth/intmat.hpp"

namespace ag {

// Presentation data for a virtually abelian group G with a finite-index
// free abelian subgroup A of rank m: transversal generators with their sgn
// values and conjugation action on A, and the defining relations of G/A
// as positive words with abelian tails in A.
struct VARelation {
  std::string word;  // positive word over the transversal generator names
  ZVector tail;      // x_r, the element of A equal to the relator in G
};

struct VAPresentation {
  size_t rank = 0;                      // m
  std::vector<char> sigma;              // transversal generator names
  std::map<char, int> sgn;              // each +1 or -1
  std::map<char, IntMatrix> action;     // m x m conjugation action on A
  std::vector<VARelation> relations;

  // sgn must be multiplicative on the quotient: over each relation word the
  // product of sgn values is +1.
  void validate() const;

  // true when every action matrix is sgn(s) * I.
  bool sgn_dichotomy_mode() const;

  static VAPresentation parse(std::istream& in);
  std::string serialize() const;
};

// Entry (r, t) = sum over positions i of relation r with r_i = t of
// sgn(r_1 ... r_{i-1}).
IntMatrix lambda_matrix(const VAPresentation& p);

// Row r = the abelian tail x_r of relation r.
IntMatrix w_matrix(const VAPresentation& p);

struct ExtensionMatrices {
  IntMatrix Lambda, W, L, LLambda, LW;
  std::vector<size_t> pivot_cols;  // of L * Lambda
  int64_t scale = 1;
};
ExtensionMatrices extension_matrices(const VAPresentation& p);

// The checkable extension condition for groups in sgn-dichotomy mode:
// every zero row of L*Lambda must have a zero row of L*W. When it holds
// the group has linear orbit growth.
struct LinearCertificate {
  bool holds = true;
  struct RowReport {
    size_t relation;
    bool lambda_row_zero;
    bool w_row_zero;
    bool violation;
  };
  std::vector<RowReport> rows;
};
LinearCertificate linear_growth_certificate(const VAPresentation& p);

enum class Rank2Growth { linear, quadratic };

// Rank-2 classification: linear iff the action is scalar (+I or -I for
// every transversal generator) with the scalars forming a homomorphism;
// quadratic otherwise.
Rank2Growth classify_rank2(const VAPresentation& p);

// G_r = Z^r x| C_2^r, with t_i inverting a_i and fixing the other a_j.
// Normal form (v, eps); generators a_1..a_r, t_1..t_r and inverses.
struct ConstructionGroup {
  struct Element {
    ZVector v;
    std::vector<uint8_t> eps;
    friend bool operator==(const Element&, const Element&) = default;
  };
  size_t r;

  explicit ConstructionGroup(size_t rank) : r(rank) {}
  Element identity() const;
  std::vector<Element> generators() const;
  Element mul(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  std::string key(const Element& x) const;

  Element gen_a(size_t i, int sign = 1) const;
  Element gen_t(size_t i) const;

  // All defining relations evaluated to normal form; true iff all trivial.
  bool relations_hold() const;
};

// Exact count of Z^r vectors up to coordinatewise sign with L1 norm <= n:
// counts[n] = C(n + r, r).
GrowthTable sign_orbit_count(size_t r, size_t max_n);

// Order computation for 2x2 integer matrices with |det| = 1. For non-real
// spectrum the order is asserted to divide 4 or 6.
struct FiniteOrderReport {
  bool finite = false;
  uint64_t order = 0;  // valid when finite
  bool real_spectrum = true;
};
FiniteOrderReport finite_order_matrix_check(const IntMatrix& m);

// All X in GL_r(Z) with |entries| <= bound commuting with every matrix in
// ms. Exhaustive search; desk-scale evidence only.
std::vector<IntMatrix> bounded_centralizer(const std::vector<IntMatrix>& ms, int64_t bound);

// The Klein bottle group <a,b | b^-1 a b = a^-1> in the normal form
// a^i b^j; A = <a, b^2> with transversal {1, b}.
struct KleinGroup {
  struct Element {
    int64_t i = 0, j = 0;
    friend bool operator==(const Element&, const Element&) = default;
  };
  Element identity() const { return {}; }
  std::vector<Element> generators() const;
  Element mul(const Element& x, const Element& y) const;
  std::string key(const Element& x) const;
};

// The presentation data used for the rank-2 classification of the Klein
// bottle group: A = <a, b^2>, transversal generator b acting as diag(-1,1).
VAPresentation klein_presentation();

// Z^2 x| C_2 with the C_2 generator acting as -I (central-inversion data).
VAPresentation z2_inversion_presentation();

// Cumulative count of invariant classes (|i|, |j|) over elements a^{2i}b^{2j}
// (i, j != 0) of the Klein bottle ball of the given radius.
GrowthTable klein_square_class_table(size_t radius);

}  // namespace ag
