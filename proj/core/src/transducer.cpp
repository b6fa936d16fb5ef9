#include "autgrowth/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "autgrowth/errors.hpp"

namespace ag {

Transducer Transducer::identity() {
  Transducer t;
  t.states.resize(1);
  t.states[0].next[0] = t.states[0].next[1] = 0;
  t.states[0].out[0] = "0";
  t.states[0].out[1] = "1";
  return t;
}

Transducer Transducer::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Transducer t;
  size_t n = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "states") {
      std::string kw;
      if (!(ls >> n >> kw >> t.initial) || kw != "initial")
        throw format_error("header: states N initial q");
      t.states.resize(n);
      header = true;
    } else {
      if (!header) throw format_error("transducer header missing");
      // q,letter -> output,q'
      std::string lhs, arrow, rhs;
      lhs = tok;
      if (!(ls >> arrow >> rhs) || arrow != "->")
        throw format_error("transition line: q,letter -> output,q'");
      auto comma1 = lhs.find(',');
      auto comma2 = rhs.rfind(',');
      if (comma1 == std::string::npos || comma2 == std::string::npos)
        throw format_error("transition line: q,letter -> output,q'");
      size_t q = std::stoul(lhs.substr(0, comma1));
      std::string letter = lhs.substr(comma1 + 1);
      std::string out = rhs.substr(0, comma2);
      if (out == "e") out.clear();
      size_t q2 = std::stoul(rhs.substr(comma2 + 1));
      if (q >= n || q2 >= n || (letter != "0" && letter != "1") || !is_binary_word(out))
        throw format_error("bad transition: " + line);
      int l = letter == "1";
      t.states[q].next[l] = q2;
      t.states[q].out[l] = out;
    }
  }
  if (!header) throw format_error("empty transducer");
  return t;
}

std::string Transducer::serialize() const {
  std::ostringstream os;
  os << "states " << states.size() << " initial " << initial << "\n";
  for (size_t q = 0; q < states.size(); ++q)
    for (int l = 0; l < 2; ++l)
      os << q << "," << l << " -> " << (states[q].out[l].empty() ? "e" : states[q].out[l]) << ","
         << states[q].next[l] << "\n";
  return os.str();
}

EvalResult evaluate(const Transducer& t, const std::string& w, std::optional<size_t> from) {
  size_t q = from.value_or(t.initial);
  std::string out;
  for (char c : w) {
    AG_CHECK(c == '0' || c == '1', "transducer input must be binary");
    int l = c == '1';
    out += t.states[q].out[l];
    q = t.states[q].next[l];
  }
  return {std::move(out), q};
}

EventuallyPeriodicPoint evaluate_point(const Transducer& t, const EventuallyPeriodicPoint& x) {
  // Run the preperiod, then cycle the period until the state repeats.
  EvalResult pre = evaluate(t, x.preperiod);
  std::vector<size_t> seen_at(t.states.size(), SIZE_MAX);
  size_t q = pre.end_state;
  std::string cycle_out;
  std::vector<std::string> outs;
  std::vector<size_t> qs;
  while (seen_at[q] == SIZE_MAX) {
    seen_at[q] = outs.size();
    qs.push_back(q);
    EvalResult r = evaluate(t, x.period, q);
    outs.push_back(r.output);
    q = r.end_state;
  }
  size_t loop_start = seen_at[q];
  std::string preperiod = pre.output;
  for (size_t i = 0; i < loop_start; ++i) preperiod += outs[i];
  std::string period;
  for (size_t i = loop_start; i < outs.size(); ++i) period += outs[i];
  AG_CHECK(!period.empty(), "degenerate transducer: empty period image");
  EventuallyPeriodicPoint out{std::move(preperiod), std::move(period)};
  out.canonicalize();
  return out;
}

bool non_degenerate(const Transducer& t) {
  // look for a cycle whose edges all output the empty word
  size_t n = t.states.size();
  std::vector<int> color(n, 0);
  std::vector<size_t> stack;
  for (size_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    // iterative DFS over empty-output edges
    std::vector<std::pair<size_t, int>> work{{s, 0}};
    while (!work.empty()) {
      auto& [q, l] = work.back();
      if (l == 0) color[q] = 1;
      if (l >= 2) {
        color[q] = 2;
        work.pop_back();
        continue;
      }
      int edge = l++;
      if (!t.states[q].out[edge].empty()) continue;
      size_t nq = t.states[q].next[edge];
      if (color[nq] == 1) return false;  // empty-output cycle
      if (color[nq] == 0) work.push_back({nq, 0});
    }
  }
  return true;
}

Transducer product(const Transducer& t1, const Transducer& t2) {
  AG_CHECK(non_degenerate(t1) && non_degenerate(t2), "product needs non-degenerate transducers");
  std::map<std::pair<size_t, size_t>, size_t> index;
  std::deque<std::pair<size_t, size_t>> queue;
  Transducer t;
  auto intern = [&](size_t q1, size_t q2) {
    auto [it, fresh] = index.emplace(std::make_pair(q1, q2), index.size());
    if (fresh) {
      queue.push_back({q1, q2});
      t.states.emplace_back();
    }
    return it->second;
  };
  t.initial = intern(t1.initial, t2.initial);
  while (!queue.empty()) {
    auto [q1, q2] = queue.front();
    queue.pop_front();
    size_t self = index.at({q1, q2});
    for (int l = 0; l < 2; ++l) {
      size_t n1 = t1.states[q1].next[l];
      EvalResult r2 = evaluate(t2, t1.states[q1].out[l], q2);
      size_t target = intern(n1, r2.end_state);
      t.states[self].next[l] = target;
      t.states[self].out[l] = r2.output;
    }
  }
  return t;
}

namespace {

// Longest common prefix of all outputs from each state (the response
// surplus); fixpoint over h(q) = lcp_l(out[l] . h(next[l])).
std::vector<std::string> response_surplus(const Transducer& t, size_t depth_cap = 64) {
  size_t n = t.states.size();
  std::vector<std::string> h(n);
  auto lcp = [](const std::string& a, const std::string& b) {
    size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return a.substr(0, k);
  };
  for (size_t iter = 0; iter < depth_cap; ++iter) {
    bool changed = false;
    for (size_t q = 0; q < n; ++q) {
      std::string a = t.states[q].out[0] + h[t.states[q].next[0]];
      std::string b = t.states[q].out[1] + h[t.states[q].next[1]];
      std::string v = lcp(a, b);
      if (v != h[q]) {
        h[q] = v;
        changed = true;
      }
    }
    if (!changed) return h;
  }
  throw budget_error("response surplus did not stabilize (degenerate transducer?)");
}

}  // namespace

Transducer minimize(const Transducer& t0) {
  AG_CHECK(non_degenerate(t0), "cannot minimize a degenerate transducer");
  Transducer t = t0;
  // complete response: push surplus output forward
  std::vector<std::string> h = response_surplus(t);
  AG_CHECK(h[t.initial].empty(),
           "initial state has response surplus; map is not represented exactly");
  for (size_t q = 0; q < t.states.size(); ++q)
    for (int l = 0; l < 2; ++l) {
      std::string full = t.states[q].out[l] + h[t.states[q].next[l]];
      AG_CHECK(is_prefix(h[q], full), "surplus push failed");
      t.states[q].out[l] = full.substr(h[q].size());
    }
  // merge behaviourally equivalent states by partition refinement
  size_t n = t.states.size();
  std::vector<size_t> cls(n, 0);
  while (true) {
    std::map<std::tuple<size_t, std::string, size_t, std::string, size_t>, size_t> sig;
    std::vector<size_t> next_cls(n);
    for (size_t q = 0; q < n; ++q) {
      auto key = std::make_tuple(cls[q], t.states[q].out[0], cls[t.states[q].next[0]],
                                 t.states[q].out[1], cls[t.states[q].next[1]]);
      auto [it, fresh] = sig.emplace(key, sig.size());
      next_cls[q] = it->second;
    }
    if (next_cls == cls) break;
    cls = next_cls;
  }
  // accessible part with canonical BFS numbering
  std::map<size_t, size_t> order;  // class -> new id
  std::deque<size_t> queue;
  auto intern = [&](size_t c) {
    auto [it, fresh] = order.emplace(c, order.size());
    if (fresh) queue.push_back(c);
    return it->second;
  };
  std::vector<size_t> rep_of_class(n, SIZE_MAX);
  for (size_t q = 0; q < n; ++q)
    if (rep_of_class[cls[q]] == SIZE_MAX) rep_of_class[cls[q]] = q;
  Transducer out;
  out.initial = intern(cls[t.initial]);
  while (!queue.empty()) {
    size_t c = queue.front();
    queue.pop_front();
    size_t q = rep_of_class[c];
    Transducer::StateRow row;
    for (int l = 0; l < 2; ++l) {
      row.out[l] = t.states[q].out[l];
      row.next[l] = intern(cls[t.states[q].next[l]]);
    }
    out.states.push_back(row);
  }
  return out;
}

std::optional<size_t> sync_length(const Transducer& t, size_t cap) {
  size_t n = t.states.size();
  auto constant = [n](const std::vector<size_t>& f) {
    for (size_t q = 1; q < n; ++q)
      if (f[q] != f[0]) return false;
    return true;
  };
  std::vector<std::vector<size_t>> level;
  {
    std::vector<size_t> id(n);
    for (size_t q = 0; q < n; ++q) id[q] = q;
    level.push_back(id);
  }
  if (constant(level[0])) return 0;
  std::set<std::vector<size_t>> seen(level.begin(), level.end());
  for (size_t k = 1; k <= cap; ++k) {
    std::vector<std::vector<size_t>> next;
    bool all_const = true;
    for (const auto& f : level)
      for (int l = 0; l < 2; ++l) {
        std::vector<size_t> g(n);
        for (size_t q = 0; q < n; ++q) g[q] = t.states[f[q]].next[l];
        if (!constant(g)) all_const = false;
        if (seen.insert(g).second) next.push_back(g);
        else if (!constant(g)) next.push_back(g);  // keep exploring non-constant reps
      }
    if (all_const) return k;
    // dedupe next to keep the frontier small
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
    if (level.empty()) return std::nullopt;
  }
  return std::nullopt;
}

Transducer tree_pair_to_transducer(const TreePair& x) {
  // States are the internal nodes of the domain tree plus one copy state;
  // the output at each node is the new part of the longest common prefix of
  // the images below it.
  const auto& rules = x.rules();
  std::map<std::string, std::string> lcp_below;  // node -> lcp of images
  std::vector<std::string> nodes;
  {
    std::set<std::string> node_set;
    for (const auto& [d, r] : rules)
      for (size_t k = 0; k <= d.size(); ++k) node_set.insert(d.substr(0, k));
    nodes.assign(node_set.begin(), node_set.end());
  }
  auto lcp = [](const std::string& a, const std::string& b) {
    size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return a.substr(0, k);
  };
  // compute lcp of sigma images over each subtree, deepest first
  std::sort(nodes.begin(), nodes.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  for (const std::string& w : nodes) {
    auto it = rules.find(w);
    if (it != rules.end()) {
      lcp_below[w] = it->second;
    } else {
      lcp_below[w] = lcp(lcp_below.at(w + "0"), lcp_below.at(w + "1"));
    }
  }
  // build: state per internal node, plus identity state
  std::map<std::string, size_t> id_of;
  std::vector<std::string> internal;
  for (const std::string& w : nodes)
    if (!rules.count(w)) internal.push_back(w);
  std::sort(internal.begin(), internal.end());
  Transducer t;
  t.states.resize(internal.size() + 1);
  size_t copy_state = internal.size();
  t.states[copy_state].next[0] = t.states[copy_state].next[1] = copy_state;
  t.states[copy_state].out[0] = "0";
  t.states[copy_state].out[1] = "1";
  for (size_t i = 0; i < internal.size(); ++i) id_of[internal[i]] = i;
  for (size_t i = 0; i < internal.size(); ++i) {
    const std::string& w = internal[i];
    for (int l = 0; l < 2; ++l) {
      std::string child = w + (l ? "1" : "0");
      const std::string& below = lcp_below.at(child);
      AG_CHECK(is_prefix(lcp_below.at(w), below), "lcp monotonicity failed");
      t.states[i].out[l] = below.substr(lcp_below.at(w).size());
      t.states[i].next[l] = rules.count(child) ? copy_state : id_of.at(child);
    }
  }
  if (internal.empty()) {
    // identity-like single-rule pair: epsilon -> r
    t.initial = copy_state;
    AG_CHECK(rules.size() == 1, "no internal nodes but multiple rules");
    // represent the constant prefix r by splitting: the minimal transducer
    // of a rigid root map needs the prefix emitted up front; only the
    // identity (r = epsilon) is expressible with complete response.
    const std::string& r = rules.begin()->second;
    AG_CHECK(r.empty(), "root rule with non-trivial image cannot be an element of V");
    return minimize(t);
  }
  t.initial = id_of.at("");
  return minimize(t);
}

namespace {

struct CandidateRule {
  std::string from, to;
};

}  // namespace

TreePair conjugate_by_transducer(const TreePair& v, const Transducer& c, const Transducer& c_inv,
                                 size_t sync_cap) {
  // preconditions: mutually inverse, both synchronizing
  Transducer cc = minimize(product(c, c_inv));
  if (!(cc == Transducer::identity()))
    throw precondition_error("c and c_inv are not mutually inverse");
  Transducer cc2 = minimize(product(c_inv, c));
  if (!(cc2 == Transducer::identity()))
    throw precondition_error("c_inv and c are not mutually inverse");
  auto s1 = sync_length(c, sync_cap);
  auto s2 = sync_length(c_inv, sync_cap);
  if (!s1 || !s2) throw precondition_error("conjugator is not strongly synchronizing within cap");

  size_t depth = std::max({v.domain_depth(), *s1, *s2}) + 2;
  for (size_t attempt = 0; attempt < 6; ++attempt, ++depth) {
    // collect candidate rigid rules lambda(q0,w) -> lambda(q0,(w)v)
    std::vector<CandidateRule> cand;
    std::vector<std::string> stack{""};
    std::vector<std::string> words;
    words.push_back("");
    for (size_t len = 0; len < depth; ++len) {
      std::vector<std::string> next;
      for (const auto& w : words) {
        next.push_back(w + "0");
        next.push_back(w + "1");
      }
      words = std::move(next);
    }
    bool bad = false;
    for (const auto& w : words) {
      auto img = v.rigid_image(w);
      if (!img) {
        bad = true;
        break;
      }
      cand.push_back({evaluate(c, w).output, evaluate(c, *img).output});
    }
    if (bad) continue;
    // keep minimal domains; consistency-check nested candidates
    std::sort(cand.begin(), cand.end(),
              [](const CandidateRule& a, const CandidateRule& b) {
                if (a.from != b.from) return a.from < b.from;
                return a.to < b.to;
              });
    std::map<std::string, std::string> rules;
    bool consistent = true;
    for (const auto& r : cand) {
      // find a shorter accepted rule covering this one
      bool covered = false;
      for (const auto& [d, t] : rules) {
        if (is_prefix(d, r.from)) {
          std::string expect = t + r.from.substr(d.size());
          if (expect != r.to) consistent = false;
          covered = true;
          break;
        }
      }
      if (!consistent) break;
      if (!covered) {
        auto [it, fresh] = rules.emplace(r.from, r.to);
        if (!fresh && it->second != r.to) consistent = false;
      }
    }
    if (!consistent) continue;
    // domains must tile the whole space
    std::vector<std::string> dom;
    for (const auto& [d, t] : rules) dom.push_back(d);
    if (!is_complete_prefix_code(dom)) continue;
    std::vector<std::string> ran;
    for (const auto& [d, t] : rules) ran.push_back(t);
    std::set<std::string> distinct(ran.begin(), ran.end());
    if (distinct.size() != ran.size() || !is_complete_prefix_code(ran)) continue;
    return TreePair(std::move(rules));
  }
  throw internal_error("assembled rules never formed a bijection of complete codes");
}

}  // namespace ag
