#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autgrowth/treepair.hpp"

namespace ag {

// An initial transducer (Q, pi, lambda, q0) over the binary alphabet:
// reading a letter from a state emits a binary word and moves to the next
// state.
struct Transducer {
  struct StateRow {
    size_t next[2] = {0, 0};
    std::string out[2];
  };
  std::vector<StateRow> states;
  size_t initial = 0;

  size_t size() const { return states.size(); }

  static Transducer identity();
  static Transducer parse(const std::string& text);
  std::string serialize() const;

  friend bool operator==(const Transducer&, const Transducer&) = default;
};

struct EvalResult {
  std::string output;
  size_t end_state;
};
EvalResult evaluate(const Transducer& t, const std::string& w, std::optional<size_t> from = {});

// Image of an eventually periodic point under the rational map.
EventuallyPeriodicPoint evaluate_point(const Transducer& t, const EventuallyPeriodicPoint& x);

// No reachable all-empty-output cycle: long enough inputs always produce
// output from every state.
bool non_degenerate(const Transducer& t);

// The product machine computing "t1 then t2" on the reachable part.
Transducer product(const Transducer& t1, const Transducer& t2);

// Minimal form: accessible, complete response, no duplicate states;
// canonical state numbering by breadth-first order from the initial state.
Transducer minimize(const Transducer& t);

// Least k <= cap with every length-k word sending all states to one state.
std::optional<size_t> sync_length(const Transducer& t, size_t cap = 16);

// Minimal transducer of a prefix-replacement homeomorphism.
Transducer tree_pair_to_transducer(const TreePair& x);

// The tree pair of v conjugated by the homeomorphism of c: assembled from
// rigid mappings lambda(q0, w) -> lambda(q0, (w)v) over a deep enough
// refinement and reduced. c_inv must be the minimal transducer of the
// inverse map; both must be strongly synchronizing within the cap.
TreePair conjugate_by_transducer(const TreePair& v, const Transducer& c, const Transducer& c_inv,
                                 size_t sync_cap = 16);

}  // namespace ag
