#include "autgrowth/treepair.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "autgrowth/errors.hpp"

namespace ag {

bool is_binary_word(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_complete_prefix_code(const std::vector<std::string>& words) {
  if (words.empty()) return false;
  std::vector<std::string> s = words;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == s[i + 1]) return false;
    if (is_prefix(s[i], s[i + 1])) return false;
  }
  // prefix-free; complete iff the Kraft sum is 1
  size_t max_len = 0;
  for (const auto& w : s) max_len = std::max(max_len, w.size());
  if (max_len > 62) throw budget_error("prefix code too deep");
  uint64_t total = 0, unit = uint64_t(1) << max_len;
  for (const auto& w : s) total += unit >> w.size();
  return total == unit;
}

std::vector<std::string> refine_codes(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::set<std::string> out;
  for (const auto& x : a) {
    bool covered = false;
    for (const auto& y : b) {
      if (is_prefix(y, x)) {
        covered = true;
        break;
      }
    }
    if (covered) {
      out.insert(x);
    } else {
      for (const auto& y : b)
        if (is_prefix(x, y)) out.insert(y);
    }
  }
  return {out.begin(), out.end()};
}

void EventuallyPeriodicPoint::canonicalize() {
  AG_CHECK(!period.empty(), "point needs a non-empty period");
  // primitive period
  for (size_t p = 1; p <= period.size() / 2; ++p) {
    if (period.size() % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < period.size() && ok; ++i)
      if (period[i] != period[i - p]) ok = false;
    if (ok) {
      period = period.substr(0, p);
      break;
    }
  }
  // absorb the preperiod tail into the period rotation
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    period = period.back() + period.substr(0, period.size() - 1);
  }
}

char EventuallyPeriodicPoint::at(size_t idx) const {
  if (idx < preperiod.size()) return preperiod[idx];
  return period[(idx - preperiod.size()) % period.size()];
}

std::string EventuallyPeriodicPoint::prefix(size_t len) const {
  std::string s;
  s.reserve(len);
  for (size_t i = 0; i < len; ++i) s.push_back(at(i));
  return s;
}

bool EventuallyPeriodicPoint::starts_with(const std::string& p) const {
  for (size_t i = 0; i < p.size(); ++i)
    if (at(i) != p[i]) return false;
  return true;
}

std::string EventuallyPeriodicPoint::str() const {
  return preperiod + "(" + period + ")*";
}

bool EventuallyPeriodicPoint::operator<(const EventuallyPeriodicPoint& o) const {
  if (preperiod != o.preperiod) return preperiod < o.preperiod;
  return period < o.period;
}

std::map<std::string, std::string> reduce_rules(std::map<std::string, std::string> rules) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = rules.begin(); it != rules.end(); ++it) {
      const std::string& d = it->first;
      if (d.empty() || d.back() != '0') continue;
      std::string sib = d.substr(0, d.size() - 1) + "1";
      auto jt = rules.find(sib);
      if (jt == rules.end()) continue;
      const std::string& u = it->second;
      const std::string& v = jt->second;
      if (u.empty() || v.empty() || u.back() != '0' || v.back() != '1') continue;
      if (u.substr(0, u.size() - 1) != v.substr(0, v.size() - 1)) continue;
      std::string parent_d = d.substr(0, d.size() - 1);
      std::string parent_r = u.substr(0, u.size() - 1);
      rules.erase(jt);
      rules.erase(it);
      rules.emplace(parent_d, parent_r);
      merged = true;
      break;
    }
  }
  return rules;
}

TreePair::TreePair() : rules_{{"", ""}} {}

TreePair::TreePair(std::map<std::string, std::string> rules, bool reduce_now)
    : rules_(std::move(rules)) {
  validate_and_reduce(reduce_now);
}

void TreePair::validate_and_reduce(bool reduce_now) {
  std::vector<std::string> dom, ran;
  for (const auto& [d, r] : rules_) {
    if (!is_binary_word(d) || !is_binary_word(r)) throw format_error("rules must be binary words");
    dom.push_back(d);
    ran.push_back(r);
  }
  if (!is_complete_prefix_code(dom)) throw format_error("domain is not a complete prefix code");
  if (!is_complete_prefix_code(ran)) throw format_error("range is not a complete prefix code");
  std::set<std::string> distinct(ran.begin(), ran.end());
  if (distinct.size() != ran.size()) throw format_error("leaf bijection is not injective");
  if (reduce_now) rules_ = reduce_rules(std::move(rules_));
}

TreePair TreePair::identity() { return TreePair(); }

TreePair TreePair::parse(const std::string& text) {
  std::map<std::string, std::string> rules;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string d, arrow, r;
    if (!(ls >> d)) continue;
    if (!(ls >> arrow >> r) || arrow != "->") throw format_error("rule line: <dom> -> <ran>");
    if (d == "e") d.clear();
    if (r == "e") r.clear();
    if (!rules.emplace(d, r).second) throw format_error("duplicate domain leaf " + d);
  }
  if (rules.empty()) throw format_error("empty tree pair");
  return TreePair(std::move(rules));
}

std::string TreePair::serialize() const {
  std::ostringstream os;
  for (const auto& [d, r] : rules_)
    os << (d.empty() ? "e" : d) << " -> " << (r.empty() ? "e" : r) << "\n";
  return os.str();
}

std::vector<std::string> TreePair::domain_code() const {
  std::vector<std::string> v;
  for (const auto& [d, r] : rules_) v.push_back(d);
  return v;
}

std::vector<std::string> TreePair::range_code() const {
  std::vector<std::string> v;
  for (const auto& [d, r] : rules_) v.push_back(r);
  std::sort(v.begin(), v.end());
  return v;
}

size_t TreePair::domain_depth() const {
  size_t d = 0;
  for (const auto& [k, v] : rules_) d = std::max(d, k.size());
  return d;
}

std::optional<std::string> TreePair::rigid_image(const std::string& w) const {
  // A prefix-code leaf that is a prefix of w is necessarily w's largest
  // lexicographic predecessor among the leaves.
  auto it = rules_.upper_bound(w);
  if (it == rules_.begin()) return std::nullopt;
  --it;
  if (is_prefix(it->first, w)) return it->second + w.substr(it->first.size());
  return std::nullopt;
}

std::optional<std::string> TreePair::rigid_preimage(const std::string& w) const {
  for (const auto& [d, r] : rules_)
    if (is_prefix(r, w)) return d + w.substr(r.size());
  return std::nullopt;
}

EventuallyPeriodicPoint TreePair::apply(const EventuallyPeriodicPoint& x) const {
  // extend the prefix until it covers a domain leaf
  size_t depth = domain_depth();
  for (size_t len = x.preperiod.size(); len <= x.preperiod.size() + depth + x.period.size();
       ++len) {
    std::string p = x.prefix(len);
    auto img = rigid_image(p);
    if (!img) continue;
    // x = p . tail where the tail is periodic with the same period rotated
    size_t phase = (len >= x.preperiod.size())
                       ? (len - x.preperiod.size()) % x.period.size()
                       : 0;
    std::string rot = x.period.substr(phase) + x.period.substr(0, phase);
    EventuallyPeriodicPoint out{*img, rot};
    out.canonicalize();
    return out;
  }
  throw internal_error("point prefix never reached a domain leaf");
}

TreePair TreePair::inverse() const {
  std::map<std::string, std::string> inv;
  for (const auto& [d, r] : rules_) inv.emplace(r, d);
  return TreePair(std::move(inv));
}

std::map<std::string, std::string> TreePair::expand_leaf(
    const std::map<std::string, std::string>& rules, const std::string& d) {
  auto it = rules.find(d);
  AG_CHECK(it != rules.end(), "expand_leaf: no such domain leaf");
  std::map<std::string, std::string> out = rules;
  std::string r = it->second;
  out.erase(d);
  out.emplace(d + "0", r + "0");
  out.emplace(d + "1", r + "1");
  return out;
}

std::map<std::string, std::string> TreePair::expanded_to_domain(
    const std::vector<std::string>& words) const {
  std::map<std::string, std::string> out = rules_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& w : words) {
      // any domain leaf that is a strict prefix of w must split
      for (const auto& [d, r] : out) {
        if (d.size() < w.size() && is_prefix(d, w)) {
          out = expand_leaf(out, d);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return out;
}

TreePair tp_compose(const TreePair& x, const TreePair& y) {
  // refine x's range against y's domain
  std::vector<std::string> mid = refine_codes(x.range_code(), y.domain_code());
  std::map<std::string, std::string> rules;
  for (const std::string& m : mid) {
    auto d = x.rigid_preimage(m);
    auto r = y.rigid_image(m);
    AG_CHECK(d && r, "refinement failed in composition");
    rules.emplace(*d, *r);
  }
  return TreePair(std::move(rules));
}

TreePair tp_power(const TreePair& x, int64_t n) {
  TreePair base = n < 0 ? x.inverse() : x;
  int64_t cnt = n < 0 ? -n : n;
  TreePair acc = TreePair::identity();
  for (int64_t i = 0; i < cnt; ++i) acc = tp_compose(acc, base);
  return acc;
}

bool tp_in_T(const TreePair& x) {
  std::vector<std::string> dom = x.domain_code();  // already sorted (map order)
  std::vector<std::string> ran = x.range_code();   // sorted
  size_t n = dom.size();
  std::map<std::string, size_t> ran_idx;
  for (size_t i = 0; i < n; ++i) ran_idx[ran[i]] = i;
  size_t shift = ran_idx.at(x.rules().at(dom[0]));
  for (size_t i = 0; i < n; ++i)
    if (ran_idx.at(x.rules().at(dom[i])) != (shift + i) % n) return false;
  return true;
}

}  // namespace ag
