#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "autgrowth/errors.hpp"
#include "autgrowth/growth.hpp"
#include "autgrowth/orbits.hpp"

namespace ag {

// A group evaluator supplies an identity, a generator list closed under
// inversion, multiplication, and an injective normal-form key.
template <class G>
concept GroupEvaluator = requires(const G& g, const typename G::Element& x) {
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.generators() } -> std::convertible_to<std::vector<typename G::Element>>;
  { g.mul(x, x) } -> std::convertible_to<typename G::Element>;
  { g.key(x) } -> std::convertible_to<std::string>;
};

template <class Elem>
struct Ball {
  struct Entry {
    std::string key;
    Elem elem;
    size_t length;
  };
  std::vector<Entry> entries;  // sorted by key for reproducibility
  size_t radius = 0;

  size_t size() const { return entries.size(); }

  std::vector<uint64_t> layer_sizes() const {
    std::vector<uint64_t> s(radius + 1, 0);
    for (const auto& e : entries) ++s[e.length];
    return s;
  }
};

// Breadth-first layering of the ball of the word metric; each element gets
// its exact word length. Throws budget_error (naming the completed radius)
// when max_elements would be exceeded.
template <GroupEvaluator G>
Ball<typename G::Element> enumerate_ball(const G& group, size_t radius,
                                         size_t max_elements = SIZE_MAX) {
  using Elem = typename G::Element;
  Ball<Elem> ball;
  ball.radius = radius;
  std::unordered_map<std::string, size_t> seen;
  std::vector<Elem> frontier{group.identity()};
  seen.emplace(group.key(group.identity()), 0);
  ball.entries.push_back({group.key(group.identity()), group.identity(), 0});
  const std::vector<Elem> gens = group.generators();
  for (size_t len = 1; len <= radius; ++len) {
    std::vector<Elem> next;
    for (const Elem& x : frontier) {
      for (const Elem& s : gens) {
        Elem y = group.mul(x, s);
        std::string k = group.key(y);
        if (seen.emplace(std::move(k), len).second) {
          if (ball.entries.size() + 1 > max_elements)
            throw budget_error("ball memory budget exceeded; completed radius " +
                               std::to_string(len - 1));
          ball.entries.push_back({group.key(y), y, len});
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;  // whole group enumerated
  }
  std::sort(ball.entries.begin(), ball.entries.end(),
            [](const auto& a, const auto& b) { return a.key < b.key; });
  return ball;
}

// Orbit counting through a canonical form. `canon` must be constant on the
// orbits being counted; the table is exact only when the caller certifies
// the canonical form as complete (injective on orbits), otherwise the key
// count is reported as an upper bound on distinct-key growth.
template <class Elem>
GrowthTable orbits_by_canonical_form(const Ball<Elem>& ball,
                                     const std::function<std::string(const Elem&)>& canon,
                                     bool certified_complete) {
  std::map<std::string, size_t> min_len;  // class key -> min member length
  for (const auto& e : ball.entries) {
    std::string c = canon(e.elem);
    auto [it, fresh] = min_len.emplace(std::move(c), e.length);
    if (!fresh && e.length < it->second) it->second = e.length;
  }
  GrowthTable t;
  t.cumulative = true;
  t.kind = certified_complete ? TableKind::exact : TableKind::upper_bound;
  t.counts.assign(ball.radius + 1, 0);
  for (const auto& [k, m] : min_len) ++t.counts[m];
  for (size_t n = 1; n <= ball.radius; ++n) t.counts[n] += t.counts[n - 1];
  return t;
}

// Union-find closure of the radius-`radius` ball under the given partial
// maps, with intermediate images allowed to use the slack ball. Every map's
// inverse must also be in the list for the closure to be symmetric.
template <GroupEvaluator G>
OrbitPartition orbits_by_saturation(
    const G& group, const Ball<typename G::Element>& slack_ball, size_t radius,
    const std::vector<std::function<std::optional<typename G::Element>(
        const typename G::Element&)>>& auts) {
  if (slack_ball.radius < radius)
    throw precondition_error("slack_radius must be at least the partition radius");
  std::unordered_map<std::string, size_t> index;
  index.reserve(slack_ball.entries.size());
  for (size_t i = 0; i < slack_ball.entries.size(); ++i)
    index.emplace(slack_ball.entries[i].key, i);
  UnionFind uf(slack_ball.entries.size());
  for (size_t i = 0; i < slack_ball.entries.size(); ++i) {
    for (const auto& phi : auts) {
      std::optional<typename G::Element> img = phi(slack_ball.entries[i].elem);
      if (!img) continue;
      auto it = index.find(group.key(*img));
      if (it == index.end()) continue;  // image escapes the slack ball
      uf.unite(i, it->second);
    }
  }
  // Restrict to the inner ball and compress class ids deterministically.
  OrbitPartition part;
  part.radius = radius;
  std::unordered_map<size_t, size_t> root_to_class;
  std::vector<size_t> roots;
  for (const auto& e : slack_ball.entries) {
    if (e.length > radius) continue;
    part.keys.push_back(e.key);
    part.lengths.push_back(e.length);
    size_t root = uf.find(index.at(e.key));
    auto [it, fresh] = root_to_class.emplace(root, root_to_class.size());
    if (fresh) part.class_min_length.push_back(e.length);
    size_t cid = it->second;
    part.class_id.push_back(cid);
    part.class_min_length[cid] = std::min(part.class_min_length[cid], e.length);
  }
  return part;
}

}  // namespace ag
