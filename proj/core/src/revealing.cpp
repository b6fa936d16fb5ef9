#include "autgrowth/revealing.hpp"

#include <algorithm>
#include <set>

#include "autgrowth/errors.hpp"

namespace ag {

const char* to_string(LeafType t) {
  switch (t) {
    case LeafType::neutral: return "neutral";
    case LeafType::range_of_repulsion: return "range_of_repulsion";
    case LeafType::repeller: return "repeller";
    case LeafType::domain_of_attraction: return "domain_of_attraction";
    case LeafType::attractor: return "attractor";
    case LeafType::source: return "source";
    case LeafType::sink: return "sink";
  }
  return "?";
}

std::vector<std::string> RevealingPair::domain_leaves() const {
  std::vector<std::string> v;
  for (const auto& [d, r] : rules) v.push_back(d);
  return v;
}

std::vector<std::string> RevealingPair::range_leaves() const {
  std::vector<std::string> v;
  for (const auto& [d, r] : rules) v.push_back(r);
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

struct LeafSets {
  std::set<std::string> a, b;                // leaves of A and of B
  std::map<std::string, std::string> sigma;  // A leaf -> B leaf
  std::map<std::string, std::string> sigma_inv;
};

LeafSets leaf_sets(const std::map<std::string, std::string>& rules) {
  LeafSets s;
  for (const auto& [d, r] : rules) {
    s.a.insert(d);
    s.b.insert(r);
    s.sigma[d] = r;
    s.sigma_inv[r] = d;
  }
  return s;
}

bool strict_prefix(const std::string& p, const std::string& w) {
  return p.size() < w.size() && is_prefix(p, w);
}

}  // namespace

std::map<std::string, LeafType> classify_leaves(const std::map<std::string, std::string>& rules) {
  LeafSets s = leaf_sets(rules);
  std::map<std::string, LeafType> cls;
  for (const std::string& l : s.a)
    if (s.b.count(l)) cls[l] = LeafType::neutral;

  // forward chains from non-neutral leaves of A
  for (const std::string& a : s.a) {
    if (cls.count(a)) continue;
    std::string cur = s.sigma.at(a);
    size_t guard = rules.size() + 2;
    while (s.a.count(cur) && guard--) cur = s.sigma.at(cur);
    AG_CHECK(guard + 1 != 0, "sigma chain did not terminate");
    if (strict_prefix(cur, a)) {
      cls[a] = LeafType::repeller;
      cls[cur] = LeafType::range_of_repulsion;
    } else if (strict_prefix(a, cur)) {
      cls[a] = LeafType::domain_of_attraction;
      cls[cur] = LeafType::attractor;
    } else {
      cls[a] = LeafType::source;
    }
  }
  // remaining leaves of B are sinks
  for (const std::string& b : s.b)
    if (!cls.count(b)) cls[b] = LeafType::sink;

  // cross-check with backward chains
  for (const std::string& b : s.b) {
    if (cls.at(b) == LeafType::neutral) continue;
    std::string cur = s.sigma_inv.at(b);
    size_t guard = rules.size() + 2;
    while (s.b.count(cur) && guard--) cur = s.sigma_inv.at(cur);
    AG_CHECK(guard + 1 != 0, "inverse sigma chain did not terminate");
    LeafType expect = strict_prefix(cur, b)   ? LeafType::attractor
                      : strict_prefix(b, cur) ? LeafType::range_of_repulsion
                                              : LeafType::sink;
    if (cls.count(b))
      AG_CHECK(cls.at(b) == expect, "leaf classification passes disagree on " + b);
  }
  return cls;
}

namespace {

// Leaves of the common tree A intersect B, i.e. maximal words lying in both
// prefix closures.
std::vector<std::string> common_tree_leaves(const LeafSets& s) {
  std::set<std::string> a_tree, b_tree;
  for (const std::string& l : s.a)
    for (size_t k = 0; k <= l.size(); ++k) a_tree.insert(l.substr(0, k));
  for (const std::string& l : s.b)
    for (size_t k = 0; k <= l.size(); ++k) b_tree.insert(l.substr(0, k));
  std::set<std::string> c;
  for (const std::string& w : a_tree)
    if (b_tree.count(w)) c.insert(w);
  std::vector<std::string> leaves;
  for (const std::string& w : c)
    if (!c.count(w + "0") && !c.count(w + "1")) leaves.push_back(w);
  return leaves;
}

struct Offender {
  std::string root;
  bool in_a;  // component of A\B (else B\A)
};

// Components lacking their repeller/attractor, sorted by root.
std::vector<Offender> offending_components(const std::map<std::string, std::string>& rules,
                                           const std::map<std::string, LeafType>& cls) {
  LeafSets s = leaf_sets(rules);
  std::vector<Offender> out;
  for (const std::string& l : common_tree_leaves(s)) {
    if (s.a.count(l) && s.b.count(l)) continue;  // neutral leaf, no component
    if (!s.a.count(l)) {
      // component of A\B under l
      bool has_repeller = false;
      size_t members = 0;
      for (const std::string& a : s.a)
        if (is_prefix(l, a)) {
          ++members;
          if (cls.at(a) == LeafType::repeller) has_repeller = true;
        }
      AG_CHECK(members > 0, "empty component of A\\B");
      if (!has_repeller) out.push_back({l, true});
    } else {
      // l is a leaf of A but not of B: component of B\A under l
      bool has_attractor = false;
      size_t members = 0;
      for (const std::string& b : s.b)
        if (is_prefix(l, b)) {
          ++members;
          if (cls.at(b) == LeafType::attractor) has_attractor = true;
        }
      AG_CHECK(members > 0, "empty component of B\\A");
      if (!has_attractor) out.push_back({l, false});
    }
  }
  std::sort(out.begin(), out.end(), [](const Offender& x, const Offender& y) {
    return x.root != y.root ? x.root < y.root : x.in_a < y.in_a;
  });
  return out;
}

}  // namespace

bool is_revealing(const std::map<std::string, std::string>& rules) {
  auto cls = classify_leaves(rules);
  return offending_components(rules, cls).empty();
}

RevealingPair make_revealing(const TreePair& x, size_t max_rolls) {
  std::map<std::string, std::string> rules = x.rules();
  if (max_rolls == 0) max_rolls = 10 * rules.size() * rules.size() + 64;
  for (size_t roll = 0;; ++roll) {
    auto cls = classify_leaves(rules);
    auto bad = offending_components(rules, cls);
    if (bad.empty()) {
      RevealingPair r;
      r.rules = std::move(rules);
      r.classification = std::move(cls);
      return r;
    }
    if (roll >= max_rolls)
      throw budget_error("make_revealing roll guard exceeded (" + std::to_string(max_rolls) +
                         " rolls)");
    const Offender& off = bad.front();
    LeafSets s = leaf_sets(rules);
    if (off.in_a) {
      // component of A\B under the B-leaf off.root: expand the domain leaf
      // mapping onto off.root by the component's shape
      std::string d = s.sigma_inv.at(off.root);
      std::map<std::string, std::string> next = rules;
      next.erase(d);
      for (const std::string& a : s.a)
        if (is_prefix(off.root, a)) {
          std::string suffix = a.substr(off.root.size());
          next.emplace(d + suffix, off.root + suffix);
        }
      rules = std::move(next);
    } else {
      // component of B\A under the A-leaf off.root: expand off.root by the
      // component's shape on the range side
      std::string e = s.sigma.at(off.root);
      std::map<std::string, std::string> next = rules;
      next.erase(off.root);
      for (const std::string& b : s.b)
        if (is_prefix(off.root, b)) {
          std::string suffix = b.substr(off.root.size());
          next.emplace(off.root + suffix, e + suffix);
        }
      rules = std::move(next);
    }
  }
}

size_t PeriodicData::isolated_point_count() const {
  size_t n = 0;
  for (const auto& o : isolated) n += o.period;
  return n;
}

PeriodicData periodic_points(const RevealingPair& r) {
  PeriodicData out;
  LeafSets s = leaf_sets(r.rules);
  // neutral cycles
  std::set<std::string> on_cycle;
  for (const auto& [leaf, type] : r.classification) {
    if (type != LeafType::neutral || on_cycle.count(leaf)) continue;
    std::vector<std::string> chain{leaf};
    std::string cur = leaf;
    while (true) {
      cur = s.sigma.at(cur);
      if (cur == leaf) {
        for (size_t i = 0; i < chain.size(); ++i) {
          out.periodic_cones.emplace_back(chain[i], chain.size());
          on_cycle.insert(chain[i]);
        }
        break;
      }
      if (!s.a.count(cur) || !s.b.count(cur)) break;  // left the neutral zone
      if (std::find(chain.begin(), chain.end(), cur) != chain.end()) break;
      chain.push_back(cur);
    }
  }
  std::sort(out.periodic_cones.begin(), out.periodic_cones.end());

  TreePair v = r.element();
  std::set<EventuallyPeriodicPoint> seen;
  auto add_orbit = [&](const std::string& base, const std::string& cycle, size_t period,
                       bool source) {
    EventuallyPeriodicPoint p{base, cycle};
    p.canonicalize();
    if (seen.count(p)) return;
    IsolatedOrbit orb;
    orb.rep = p;
    orb.source = source;
    EventuallyPeriodicPoint cur = p;
    do {
      orb.orbit.push_back(cur);
      seen.insert(cur);
      cur = v.apply(cur);
    } while (!(cur == p));
    orb.period = orb.orbit.size();
    AG_CHECK(orb.period % period == 0 || period % orb.period == 0,
             "orbit size disagrees with chain length");
    orb.period = orb.orbit.size();
    out.isolated.push_back(std::move(orb));
  };

  for (const auto& [leaf, type] : r.classification) {
    if (type == LeafType::repeller) {
      std::string cur = s.sigma.at(leaf);
      size_t steps = 1;
      while (s.a.count(cur)) {
        cur = s.sigma.at(cur);
        ++steps;
      }
      AG_CHECK(strict_prefix(cur, leaf), "repeller chain endpoint not a prefix");
      add_orbit(cur, leaf.substr(cur.size()), steps, /*source=*/true);
    } else if (type == LeafType::attractor) {
      std::string cur = s.sigma_inv.at(leaf);
      size_t steps = 1;
      while (s.b.count(cur)) {
        cur = s.sigma_inv.at(cur);
        ++steps;
      }
      AG_CHECK(strict_prefix(cur, leaf), "attractor chain endpoint not a prefix");
      add_orbit(cur, leaf.substr(cur.size()), steps, /*source=*/false);
    }
  }
  std::sort(out.isolated.begin(), out.isolated.end(),
            [](const IsolatedOrbit& a, const IsolatedOrbit& b) {
              if (a.source != b.source) return a.source > b.source;
              return a.rep < b.rep;
            });
  return out;
}

}  // namespace ag
