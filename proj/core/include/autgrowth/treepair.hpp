#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ag {

// Binary words are std::strings over '0'/'1'; the empty string is the root.
bool is_binary_word(const std::string& w);
bool is_prefix(const std::string& p, const std::string& w);

// True iff the set is the leaf set of a finite rooted binary tree.
bool is_complete_prefix_code(const std::vector<std::string>& words);

// The coarsest common refinement of two complete prefix codes.
std::vector<std::string> refine_codes(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b);

// x = preperiod . period^infinity, canonical: the period is primitive and
// the preperiod is as short as possible.
struct EventuallyPeriodicPoint {
  std::string preperiod;
  std::string period;

  void canonicalize();
  char at(size_t idx) const;
  std::string prefix(size_t len) const;
  bool starts_with(const std::string& p) const;
  std::string str() const;
  friend bool operator==(const EventuallyPeriodicPoint&, const EventuallyPeriodicPoint&) = default;
  bool operator<(const EventuallyPeriodicPoint& o) const;
};

// An element of Thompson's group V: a bijection between the leaves of two
// finite binary trees, acting on the Cantor space by prefix replacement.
// Stored reduced unless stated otherwise.
class TreePair {
 public:
  TreePair();  // identity
  explicit TreePair(std::map<std::string, std::string> rules, bool reduce_now = true);

  static TreePair identity();
  static TreePair parse(const std::string& text);
  std::string serialize() const;

  const std::map<std::string, std::string>& rules() const { return rules_; }
  size_t size() const { return rules_.size(); }

  std::vector<std::string> domain_code() const;
  std::vector<std::string> range_code() const;
  size_t domain_depth() const;

  bool is_identity() const { return rules_.size() == 1 && rules_.begin()->first.empty(); }

  // The rigid image of a finite word, when the word extends a domain leaf.
  std::optional<std::string> rigid_image(const std::string& w) const;
  std::optional<std::string> rigid_preimage(const std::string& w) const;

  // Image of a point of the Cantor space.
  EventuallyPeriodicPoint apply(const EventuallyPeriodicPoint& x) const;

  TreePair inverse() const;

  // Split the domain leaf d into d0, d1 (images split accordingly).
  // Returns the unreduced expanded rule map.
  static std::map<std::string, std::string> expand_leaf(
      const std::map<std::string, std::string>& rules, const std::string& d);

  // Expansion of this pair so its domain code refines `words`.
  std::map<std::string, std::string> expanded_to_domain(
      const std::vector<std::string>& words) const;

  friend bool operator==(const TreePair&, const TreePair&) = default;
  bool operator<(const TreePair& o) const { return rules_ < o.rules_; }

 private:
  std::map<std::string, std::string> rules_;  // domain leaf -> range leaf
  void validate_and_reduce(bool reduce_now);
};

// Composite homeomorphism: apply x first, then y; result reduced.
TreePair tp_compose(const TreePair& x, const TreePair& y);

TreePair tp_power(const TreePair& x, int64_t n);

// True iff the leaf bijection is a cyclic rotation with respect to the
// lexicographic order of domain and range leaves (membership in T).
bool tp_in_T(const TreePair& x);

std::map<std::string, std::string> reduce_rules(std::map<std::string, std::string> rules);

}  // namespace ag
