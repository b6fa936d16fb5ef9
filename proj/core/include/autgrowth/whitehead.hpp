#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autgrowth/orbits.hpp"
#include "autgrowth/words.hpp"

namespace ag {

// A Whitehead automorphism of F_r: either a permutation of the signed
// generators commuting with inversion, or a multiplier automorphism with a
// fixed signed letter `a` sending every other generator x to one of
// x, xa, a^-1 x, a^-1 x a.
enum class MultAction : uint8_t { fix, right, left, conj };

struct WhiteheadAut {
  struct Permutation {
    // image of generator g taken with sign +1; inverses map consistently
    std::vector<Letter> images;
  };
  struct Multiplier {
    Letter a;
    std::vector<MultAction> actions;  // indexed by generator; actions[a.gen] = fix
  };

  bool is_permutation = false;
  Permutation perm;
  Multiplier mult;
  size_t rank = 2;

  static WhiteheadAut permutation(size_t rank, std::vector<Letter> images);
  static WhiteheadAut multiplier(size_t rank, Letter a, std::vector<MultAction> actions);
  void validate() const;
  std::string str() const;
};

GroupWord apply_whitehead(const WhiteheadAut& phi, const GroupWord& w);

// All multiplier automorphisms of F_rank in the deterministic enumeration
// order (multiplier letter, then action vector, lexicographically); the
// all-fix identity is skipped.
std::vector<WhiteheadAut> whitehead_multipliers(size_t rank);

// All signed permutations (2^rank * rank! of them), identity included.
std::vector<WhiteheadAut> whitehead_permutations(size_t rank);

// Cyclic length after free and cyclic reduction.
size_t cyclic_length(const GroupWord& w);

// Canonical cyclic form of the freely reduced core of w.
CyclicWord cyclic_form(const GroupWord& w);

// Greedy cyclic-length descent through multiplier automorphisms; the result
// is automorphically minimal. The trace replays to the returned form.
struct MinimizeResult {
  CyclicWord min_cyclic;
  std::vector<WhiteheadAut> trace;
};
MinimizeResult whitehead_minimize(const GroupWord& w, size_t rank = 2);

bool is_automorphically_minimal(const GroupWord& w, size_t rank = 2);

// Whitehead's algorithm for the orbit problem at small scale: minimize
// both words, then search the level graph of equal-length cyclic words
// connected by length-preserving Whitehead automorphisms.
bool orbit_equal_small(const GroupWord& u, const GroupWord& v, size_t rank = 2,
                       size_t budget = 10);

// Canonical representative of the minimal level set reachable from w:
// minimize, then take the least cyclic word in the level component.
CyclicWord orbit_canonical_small(const GroupWord& w, size_t rank = 2, size_t budget = 10);

// Words a^{i_1} b^{j_1} ... a^{i_k} b^{j_k} with all exponents non-zero.
struct ExponentWord {
  std::vector<std::pair<int64_t, int64_t>> pairs;
  GroupWord word() const;
  size_t length() const;
};

// Exact count of the all-exponents >= 3, total length m, words up to
// rotation of the pair sequence (positive-only mode by default; the
// absolute-value mode counts |exponents| >= 3 divided by sign symmetry is
// NOT applied - each signed word counts, still up to rotation).
struct FamilyCount {
  uint64_t exact_necklaces = 0;     // enumerated, deduplicated by rotation
  uint64_t lower_bound_formula = 0;  // sum over k of floor(C(m-4k-1, 2k-1)/k)
};
FamilyCount count_normal_family(uint64_t m, bool positive_only = true);

// Union-find closure of cyclic words of F_2 with length <= radius under all
// Whitehead automorphisms whose images stay within the slack length.
OrbitPartition saturation_oracle_f2(size_t radius, size_t slack);

}  // namespace ag
