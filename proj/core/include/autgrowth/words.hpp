#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ag {

// One signed generator. Generators are indexed 0..r-1; an inverse is the
// same index with sign -1, not a separate letter.
struct Letter {
  int8_t gen = 0;
  int8_t sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return Letter{gen, static_cast<int8_t>(-sign)}; }
};

// Order: generator index first, then sign with +1 < -1.
inline bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;
}

// A word in a free group, as a sequence of signed generators.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static GroupWord parse(const std::string& text);
  std::string str() const;

  const std::vector<Letter>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord inverse() const;
  GroupWord concat(const GroupWord& other) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  bool operator<(const GroupWord& other) const;

 private:
  std::vector<Letter> letters_;
};

// A cyclic word: the lexicographically least rotation of a cyclically
// reduced word, plus the number of distinct rotations.
struct CyclicWord {
  GroupWord representative;
  size_t class_size = 1;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  bool operator<(const CyclicWord& o) const { return representative < o.representative; }
};

GroupWord free_reduce(const GroupWord& w);

// w must be freely reduced. Returns (core, conjugator) with
// conjugator^-1 * core * conjugator = w and core cyclically reduced.
struct CyclicReduction {
  GroupWord core;
  GroupWord conjugator;
};
CyclicReduction cyclic_reduce(const GroupWord& w);

// w must be cyclically reduced.
CyclicWord cyclic_canonical(const GroupWord& w);

GroupWord rotate(const GroupWord& w, size_t by);

}  // namespace ag
