#include "autgrowth/decoration.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "autgrowth/errors.hpp"
#include "autgrowth/orbits.hpp"

namespace ag {

namespace {

size_t pair_depth(const std::map<std::string, std::string>& rules) {
  size_t d = 0;
  for (const auto& [k, v] : rules) d = std::max({d, k.size(), v.size()});
  return d;
}

// Stepwise-rigid walks deciding representative-hood. A source
// representative reaches a strict extension of itself under backward
// steps; a sink representative under forward steps.
bool is_rep_walk(const TreePair& step, const std::string& p, size_t guard) {
  std::string q = p;
  for (size_t t = 0; t < guard; ++t) {
    auto next = step.rigid_image(q);
    if (!next) return false;
    q = *next;
    if (q == p) return false;  // periodic without growth
    if (q.size() > p.size() && is_prefix(p, q)) return true;
  }
  return false;
}

struct RepIndex {
  // word -> (class index within kind)
  std::map<std::string, size_t> class_of;
};

}  // namespace

DecorationData decoration_data(const RevealingPair& r) {
  DecorationData dd;
  dd.periodic = periodic_points(r);
  TreePair v = r.element();
  TreePair vinv = v.inverse();
  size_t depth = pair_depth(r.rules);

  for (size_t oi = 0; oi < dd.periodic.isolated.size(); ++oi) {
    const IsolatedOrbit& orb = dd.periodic.isolated[oi];
    const TreePair& walk_step = orb.source ? vinv : v;
    size_t period_len = 0;
    for (const auto& x : orb.orbit) period_len = std::max(period_len, x.period.size());
    size_t l_report = depth + period_len * static_cast<size_t>(orb.period) + 2;
    size_t l_collect = l_report + depth + period_len + 2;
    size_t guard = 8 * orb.period + 4 * (depth + l_collect) + 16;

    // collect representatives along each orbit point's ray
    std::vector<std::string> reps;
    std::set<std::string> rep_set;
    for (const auto& x : orb.orbit) {
      for (size_t len = 1; len <= l_collect; ++len) {
        std::string p = x.prefix(len);
        if (rep_set.count(p)) continue;
        if (is_rep_walk(walk_step, p, guard)) {
          rep_set.insert(p);
          reps.push_back(p);
        }
      }
    }
    std::sort(reps.begin(), reps.end());
    std::map<std::string, size_t> idx;
    for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = i;

    // single rigid steps in both directions connect a class
    UnionFind uf(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) {
      for (const TreePair* tp : {&v, &vinv}) {
        auto img = tp->rigid_image(reps[i]);
        if (!img) continue;
        auto it = idx.find(*img);
        if (it != idx.end()) uf.unite(i, it->second);
      }
    }

    std::map<size_t, std::vector<std::string>> classes;
    for (size_t i = 0; i < reps.size(); ++i) classes[uf.find(i)].push_back(reps[i]);
    for (auto& [root, members] : classes) {
      std::sort(members.begin(), members.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      DecorationPoint pt;
      pt.source = orb.source;
      pt.orbit = oi;
      pt.canonical = members.front();
      pt.members = members;
      // the decoration letter: the letter leaving the periodic ray, which
      // must agree across the class
      char letter = 0;
      for (const std::string& m : members) {
        char ray = 0;
        for (const auto& x : orb.orbit) {
          if (x.starts_with(m)) {
            ray = x.at(m.size());
            break;
          }
        }
        AG_CHECK(ray != 0, "representative is not a ray prefix");
        char dec = ray == '0' ? '1' : '0';
        if (letter == 0) letter = dec;
        AG_CHECK(letter == dec, "decoration letter inconsistent across a class");
      }
      pt.letter = letter;
      (orb.source ? dd.sources : dd.sinks).push_back(std::move(pt));
    }
  }
  auto by_canon = [](const DecorationPoint& a, const DecorationPoint& b) {
    return a.canonical < b.canonical;
  };
  std::sort(dd.sources.begin(), dd.sources.end(), by_canon);
  std::sort(dd.sinks.begin(), dd.sinks.end(), by_canon);
  return dd;
}

namespace {

// Locate the longest sink-representative prefix of u that is followed in u
// by the sink class's decoration letter. Returns (class index, prefix
// length) or (SIZE_MAX, 0).
std::pair<size_t, size_t> terminal_split(const std::string& u, const DecorationData& dd,
                                         const std::map<std::string, size_t>& sink_class_of) {
  // The decomposition uses the longest representative prefix; the branch is
  // terminal only when the letter after it leaves the ray (the class's
  // decoration letter). A ray letter there means the flow must continue.
  for (size_t len = u.size() >= 1 ? u.size() - 1 : 0; len >= 1; --len) {
    auto it = sink_class_of.find(u.substr(0, len));
    if (it == sink_class_of.end()) continue;
    const DecorationPoint& pt = dd.sinks[it->second];
    if (u[len] == pt.letter) return {it->second, len};
    return {SIZE_MAX, 0};
  }
  return {SIZE_MAX, 0};
}

std::vector<DecorationRule> reduce_decoration_rules(std::vector<DecorationRule> rules) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < rules.size() && !merged; ++i) {
      const DecorationRule a = rules[i];
      if (a.w1.empty() || a.w1.back() != '0' || a.w2.empty() || a.w2.back() != '0') continue;
      DecorationRule sib = a;
      sib.w1.back() = '1';
      sib.w2.back() = '1';
      for (size_t j = 0; j < rules.size(); ++j) {
        if (rules[j] == sib) {
          DecorationRule parent = a;
          parent.w1.pop_back();
          parent.w2.pop_back();
          rules.erase(rules.begin() + j);
          rules.erase(std::find(rules.begin(), rules.end(), a));
          rules.push_back(parent);
          merged = true;
          break;
        }
      }
    }
  }
  std::sort(rules.begin(), rules.end());
  return rules;
}

}  // namespace

DecorationMap decoration_map(const RevealingPair& r) {
  DecorationData dd = decoration_data(r);
  TreePair v = r.element();
  TreePair vinv = v.inverse();
  size_t depth = pair_depth(r.rules);

  // membership index over collected sink representatives
  std::map<std::string, size_t> sink_class_of;
  for (size_t i = 0; i < dd.sinks.size(); ++i)
    for (const std::string& m : dd.sinks[i].members) sink_class_of[m] = i;

  DecorationMap dm;
  dm.sources = dd.sources;
  dm.sinks = dd.sinks;

  const size_t step_guard = 256 * (r.rules.size() + 4);
  const size_t branch_guard = 1u << 14;

  for (size_t si = 0; si < dd.sources.size(); ++si) {
    const DecorationPoint& S = dd.sources[si];
    // seed from a representative deep enough for stepwise rigidity
    std::string seed;
    for (const std::string& m : S.members)
      if (m.size() > depth) {
        seed = m;
        break;
      }
    AG_CHECK(!seed.empty(), "no representative deeper than the pair");

    struct Branch {
      std::string w1, u;
      size_t steps = 0;
    };
    std::deque<Branch> queue{{std::string(), seed + S.letter, 0}};
    size_t branches = 0;
    while (!queue.empty()) {
      Branch br = queue.front();
      queue.pop_front();
      if (++branches > branch_guard) throw budget_error("decoration flow branch guard exceeded");
      bool terminal = false;
      while (!terminal) {
        auto img = v.rigid_image(br.u);
        if (!img) {
          queue.push_back({br.w1 + "0", br.u + "0", br.steps});
          queue.push_back({br.w1 + "1", br.u + "1", br.steps});
          break;
        }
        br.u = *img;
        if (++br.steps > step_guard) throw budget_error("decoration flow depth guard exceeded");
        auto [cls, len] = terminal_split(br.u, dd, sink_class_of);
        if (cls != SIZE_MAX) {
          dm.rules.push_back(DecorationRule{si, cls, br.w1, br.u.substr(len + 1)});
          terminal = true;
        }
      }
    }
  }

  // rule domains per source decoration must tile the cone
  for (size_t si = 0; si < dd.sources.size(); ++si) {
    std::vector<std::string> dom;
    for (const auto& rule : dm.rules)
      if (rule.src == si) dom.push_back(rule.w1);
    AG_CHECK(is_complete_prefix_code(dom), "rule domains do not tile a source decoration");
  }
  dm.rules = reduce_decoration_rules(std::move(dm.rules));

  // bijectivity: ranges per sink decoration tile the cone
  for (size_t ti = 0; ti < dd.sinks.size(); ++ti) {
    std::vector<std::string> ran;
    for (const auto& rule : dm.rules)
      if (rule.dst == ti) ran.push_back(rule.w2);
    AG_CHECK(is_complete_prefix_code(ran), "rule ranges do not tile a sink decoration");
    std::set<std::string> distinct(ran.begin(), ran.end());
    AG_CHECK(distinct.size() == ran.size(), "rule ranges overlap");
  }
  return dm;
}

std::vector<std::pair<std::string, std::pair<std::string, std::string>>> DecorationMap::branch(
    const std::string& source_canonical) const {
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> out;
  for (const auto& rule : rules)
    if (sources[rule.src].canonical == source_canonical)
      out.push_back({rule.w1, {sinks[rule.dst].canonical, rule.w2}});
  std::sort(out.begin(), out.end());
  return out;
}

DecorationMap invert(const DecorationMap& m) {
  DecorationMap inv;
  inv.sources = m.sinks;
  inv.sinks = m.sources;
  for (auto& p : inv.sources) p.source = true;
  for (auto& p : inv.sinks) p.source = false;
  for (const auto& rule : m.rules)
    inv.rules.push_back(DecorationRule{rule.dst, rule.src, rule.w2, rule.w1});
  inv.rules = reduce_decoration_rules(std::move(inv.rules));
  return inv;
}

}  // namespace ag
