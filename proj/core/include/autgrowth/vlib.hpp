#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "autgrowth/decoration.hpp"
#include "autgrowth/treepair.hpp"

namespace ag {

// ---- standard elements -------------------------------------------------

// The order-preserving pair 00->0, 01->10, 1->11.
TreePair tp_x0();
// x0 acting inside the cone 1.
TreePair tp_x1();
// x_k = x0^{-(k-1)} x1 x0^{k-1} for k >= 2 (x_0, x_1 are the above).
TreePair tp_xk(size_t k);
// The cyclic rotation 0->10, 10->11, 11->0.
TreePair tp_c();
// The transposition of the cones 0 and 10.
TreePair tp_tau();
// The transposition of the cones 00 and 01.
TreePair tp_sigma0();

// The T elements used for the conjugacy separation: y0 = 0->00, 10->01,
// 11->1 and y1 = 0->01, 10->1, 11->00.
TreePair tp_y0();
TreePair tp_y1();

// ---- words over the base generating set ---------------------------------

// Letters: +-1 = x0^{+-1}, +-2 = x1^{+-1}, +-3 = C^{+-1}, +-4 = tau^{+-1}.
using VWord = std::vector<int>;

TreePair eval_base_word(const VWord& w);
VWord invert_word(const VWord& w);

// Factorization of an arbitrary element over {x0, x1, C, tau}; the result
// always evaluates back to v (checked).
VWord factor_over_base(const TreePair& v);

// ---- the two-element generating set -------------------------------------

// A fixed pair {a, b} generating V, with certificate words expressing
// x0, x1, C and tau over {a, b} (verified by evaluation in the tests).
struct TwoGenerators {
  TreePair a, b;
  // words over {a, b}: +-1 = a^{+-1}, +-2 = b^{+-1}
  std::vector<int> x0_word, x1_word, c_word, tau_word;
};
const TwoGenerators& two_generators();

TreePair eval_ab_word(const std::vector<int>& w);

// Length of v as a word in {a, b}, via factor_over_base and the
// certificate substitution. An upper bound on the geodesic length.
size_t expression_length_ab(const TreePair& v);
std::vector<int> express_over_ab(const TreePair& v);

// ---- the separating family ----------------------------------------------

// v acting inside the cone `cone`, fixing its complement.
TreePair shift_into_cone(const TreePair& v, const std::string& cone);

// The fixed complete prefix code of size 29 (balanced depth, sorted) with
// its (i, j) labels, i in {1,2,3,5,7,11}, 0 <= j < i.
struct PrimeCode {
  std::vector<std::string> words;                    // sorted
  std::string at(size_t i, size_t j) const;          // p_{i,j}
};
const PrimeCode& prime_code();

// The element v' built over the prime code from the two library
// generators; v -> v' is injective on automorphic orbits.
TreePair construct_prime(const TreePair& v);

// The structural identity v' = 1' * (v lifted into the p_{11,0}0 cone)
// behind the linear length bound, and the measured constant.
struct PrimeLengthData {
  size_t a_sharp_len = 0, b_sharp_len = 0, one_prime_len = 0;
  size_t m = 0;  // max of the above
};
const PrimeLengthData& prime_length_data();

// True iff the S_{x3}-branch rules of the decoration maps of v' and w'
// differ; true implies v' and w' lie in distinct automorphic orbits.
bool distinguish_primes(const TreePair& v, const TreePair& w);

// ---- the T-element invariant ---------------------------------------------

// y_w: the product of y0/y1 with 0 rigidly mapped to 0w (asserted).
TreePair y_word(const std::string& w);

// Lexicographically least rotation.
std::string canonical_rotation(const std::string& s);

// The cyclic class of the word written along the attracting periodic point
// of y_w inside the cone 0; equals the cyclic class of w.
std::string t_word_invariant(const std::string& w);

// ---- fixtures -------------------------------------------------------------

// Deterministic pseudo-random reduced tree pair with at most max_leaves
// leaves (at least 1).
TreePair random_tree_pair(std::mt19937& rng, size_t max_leaves);

}  // namespace ag
