#include "autgrowth/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "autgrowth/errors.hpp"

namespace ag {

WhiteheadAut WhiteheadAut::permutation(size_t rank, std::vector<Letter> images) {
  WhiteheadAut w;
  w.is_permutation = true;
  w.rank = rank;
  w.perm.images = std::move(images);
  w.validate();
  return w;
}

WhiteheadAut WhiteheadAut::multiplier(size_t rank, Letter a, std::vector<MultAction> actions) {
  WhiteheadAut w;
  w.is_permutation = false;
  w.rank = rank;
  w.mult.a = a;
  w.mult.actions = std::move(actions);
  w.validate();
  return w;
}

void WhiteheadAut::validate() const {
  if (is_permutation) {
    if (perm.images.size() != rank) throw format_error("permutation needs an image per generator");
    std::set<int> gens;
    for (const Letter& l : perm.images) {
      if (l.gen < 0 || static_cast<size_t>(l.gen) >= rank)
        throw format_error("permutation image out of range");
      gens.insert(l.gen);
    }
    if (gens.size() != rank) throw format_error("permutation images must hit every generator");
  } else {
    if (mult.actions.size() != rank) throw format_error("multiplier needs an action per generator");
    if (mult.a.gen < 0 || static_cast<size_t>(mult.a.gen) >= rank)
      throw format_error("multiplier letter out of range");
    if (mult.actions[mult.a.gen] != MultAction::fix)
      throw format_error("the multiplier letter must be fixed");
  }
}

std::string WhiteheadAut::str() const {
  std::ostringstream os;
  if (is_permutation) {
    os << "perm(";
    for (size_t g = 0; g < rank; ++g) {
      Letter img = perm.images[g];
      os << static_cast<char>((img.sign > 0 ? 'a' : 'A') + img.gen);
    }
    os << ")";
  } else {
    os << "mult(" << static_cast<char>((mult.a.sign > 0 ? 'a' : 'A') + mult.a.gen) << ";";
    for (size_t g = 0; g < rank; ++g) {
      switch (mult.actions[g]) {
        case MultAction::fix: os << '.'; break;
        case MultAction::right: os << 'r'; break;
        case MultAction::left: os << 'l'; break;
        case MultAction::conj: os << 'c'; break;
      }
    }
    os << ")";
  }
  return os.str();
}

GroupWord apply_whitehead(const WhiteheadAut& phi, const GroupWord& w) {
  phi.validate();
  std::vector<Letter> out;
  out.reserve(w.size() * 3);
  if (phi.is_permutation) {
    for (const Letter& l : w.letters()) {
      Letter img = phi.perm.images[l.gen];
      if (l.sign < 0) img = img.inverse();
      out.push_back(img);
    }
    return free_reduce(GroupWord(std::move(out)));
  }
  const Letter a = phi.mult.a;
  const Letter a_inv = a.inverse();
  for (const Letter& l : w.letters()) {
    MultAction act = phi.mult.actions[l.gen];
    // x -> image; x^-1 -> image inverted
    switch (act) {
      case MultAction::fix:
        out.push_back(l);
        break;
      case MultAction::right:  // x -> xa, x^-1 -> a^-1 x^-1
        if (l.sign > 0) {
          out.push_back(l);
          out.push_back(a);
        } else {
          out.push_back(a_inv);
          out.push_back(l);
        }
        break;
      case MultAction::left:  // x -> a^-1 x, x^-1 -> x^-1 a
        if (l.sign > 0) {
          out.push_back(a_inv);
          out.push_back(l);
        } else {
          out.push_back(l);
          out.push_back(a);
        }
        break;
      case MultAction::conj:  // x -> a^-1 x a
        out.push_back(a_inv);
        out.push_back(l);
        out.push_back(a);
        break;
    }
  }
  return free_reduce(GroupWord(std::move(out)));
}

std::vector<WhiteheadAut> whitehead_multipliers(size_t rank) {
  std::vector<WhiteheadAut> list;
  const MultAction acts[4] = {MultAction::fix, MultAction::right, MultAction::left,
                              MultAction::conj};
  std::vector<Letter> letters;
  for (size_t g = 0; g < rank; ++g) {
    letters.push_back(Letter{static_cast<int8_t>(g), 1});
    letters.push_back(Letter{static_cast<int8_t>(g), -1});
  }
  for (const Letter& a : letters) {
    // enumerate action vectors lexicographically over non-a generators
    size_t free_slots = rank - 1;
    size_t total = 1;
    for (size_t i = 0; i < free_slots; ++i) total *= 4;
    for (size_t code = 0; code < total; ++code) {
      std::vector<MultAction> actions(rank, MultAction::fix);
      size_t c = code;
      bool all_fix = true;
      for (size_t g = 0; g < rank; ++g) {
        if (static_cast<int8_t>(g) == a.gen) continue;
        actions[g] = acts[c % 4];
        if (actions[g] != MultAction::fix) all_fix = false;
        c /= 4;
      }
      if (all_fix) continue;  // identity
      list.push_back(WhiteheadAut::multiplier(rank, a, std::move(actions)));
    }
  }
  return list;
}

std::vector<WhiteheadAut> whitehead_permutations(size_t rank) {
  std::vector<WhiteheadAut> list;
  std::vector<size_t> perm(rank);
  for (size_t i = 0; i < rank; ++i) perm[i] = i;
  do {
    for (size_t signs = 0; signs < (1u << rank); ++signs) {
      std::vector<Letter> images(rank);
      for (size_t g = 0; g < rank; ++g)
        images[g] = Letter{static_cast<int8_t>(perm[g]),
                           static_cast<int8_t>((signs >> g) & 1 ? -1 : 1)};
      list.push_back(WhiteheadAut::permutation(rank, images));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return list;
}

size_t cyclic_length(const GroupWord& w) {
  return cyclic_reduce(free_reduce(w)).core.size();
}

CyclicWord cyclic_form(const GroupWord& w) {
  return cyclic_canonical(cyclic_reduce(free_reduce(w)).core);
}

MinimizeResult whitehead_minimize(const GroupWord& w, size_t rank) {
  AG_CHECK(rank == 2 || rank == 3, "whitehead_minimize supports rank 2 and 3");
  MinimizeResult res;
  res.min_cyclic = cyclic_form(w);
  const auto multipliers = whitehead_multipliers(rank);
  bool progress = true;
  while (progress) {
    progress = false;
    size_t len = res.min_cyclic.representative.size();
    for (const WhiteheadAut& phi : multipliers) {
      GroupWord image = apply_whitehead(phi, res.min_cyclic.representative);
      if (cyclic_length(image) < len) {
        res.min_cyclic = cyclic_form(image);
        res.trace.push_back(phi);
        progress = true;
        break;  // first strict decrease in enumeration order
      }
    }
  }
  return res;
}

bool is_automorphically_minimal(const GroupWord& w, size_t rank) {
  size_t len = cyclic_length(w);
  for (const WhiteheadAut& phi : whitehead_multipliers(rank))
    if (cyclic_length(apply_whitehead(phi, w)) < len) return false;
  return true;
}

namespace {

// Component of the equal-length Whitehead move graph containing `start`,
// as canonical cyclic forms. Permutations and length-preserving multipliers
// are both edges.
std::set<CyclicWord> level_component(const CyclicWord& start, size_t rank) {
  std::set<CyclicWord> seen{start};
  std::deque<CyclicWord> queue{start};
  const auto multipliers = whitehead_multipliers(rank);
  const auto permutations = whitehead_permutations(rank);
  const size_t len = start.representative.size();
  while (!queue.empty()) {
    CyclicWord cur = queue.front();
    queue.pop_front();
    auto push = [&](const GroupWord& img) {
      if (cyclic_length(img) != len) return;
      CyclicWord c = cyclic_form(img);
      if (seen.insert(c).second) queue.push_back(c);
    };
    for (const WhiteheadAut& phi : permutations) push(apply_whitehead(phi, cur.representative));
    for (const WhiteheadAut& phi : multipliers) push(apply_whitehead(phi, cur.representative));
  }
  return seen;
}

}  // namespace

bool orbit_equal_small(const GroupWord& u, const GroupWord& v, size_t rank, size_t budget) {
  if (u.size() > budget || v.size() > budget)
    throw budget_error("orbit_equal_small budget exceeded");
  MinimizeResult mu = whitehead_minimize(u, rank);
  MinimizeResult mv = whitehead_minimize(v, rank);
  if (mu.min_cyclic.representative.size() != mv.min_cyclic.representative.size()) return false;
  if (mu.min_cyclic == mv.min_cyclic) return true;
  auto comp = level_component(mu.min_cyclic, rank);
  return comp.count(mv.min_cyclic) > 0;
}

CyclicWord orbit_canonical_small(const GroupWord& w, size_t rank, size_t budget) {
  if (w.size() > budget) throw budget_error("orbit_canonical_small budget exceeded");
  MinimizeResult mw = whitehead_minimize(w, rank);
  auto comp = level_component(mw.min_cyclic, rank);
  return *comp.begin();
}

GroupWord ExponentWord::word() const {
  std::vector<Letter> ls;
  for (const auto& [i, j] : pairs) {
    for (int64_t t = 0; t < std::abs(i); ++t)
      ls.push_back(Letter{0, static_cast<int8_t>(i > 0 ? 1 : -1)});
    for (int64_t t = 0; t < std::abs(j); ++t)
      ls.push_back(Letter{1, static_cast<int8_t>(j > 0 ? 1 : -1)});
  }
  return GroupWord(std::move(ls));
}

size_t ExponentWord::length() const {
  size_t n = 0;
  for (const auto& [i, j] : pairs) n += std::abs(i) + std::abs(j);
  return n;
}

namespace {

uint64_t binom(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Compositions of m into parts >= 3, generated recursively.
void compositions(uint64_t m, size_t parts, std::vector<int64_t>& cur,
                  std::vector<std::vector<int64_t>>& out) {
  if (parts == 1) {
    if (m >= 3) {
      cur.push_back(static_cast<int64_t>(m));
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (uint64_t first = 3; first + 3 * (parts - 1) <= m; ++first) {
    cur.push_back(static_cast<int64_t>(first));
    compositions(m - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

FamilyCount count_normal_family(uint64_t m, bool positive_only) {
  AG_CHECK(m >= 6, "family counting needs total length >= 6");
  FamilyCount fc;
  for (uint64_t k = 1; 6 * k <= m; ++k)
    fc.lower_bound_formula += binom(m - 4 * k - 1, 2 * k - 1) / k;

  std::set<std::vector<std::pair<int64_t, int64_t>>> necklaces;
  for (uint64_t k = 1; 6 * k <= m; ++k) {
    std::vector<int64_t> cur;
    std::vector<std::vector<int64_t>> comps;
    compositions(m, 2 * k, cur, comps);
    for (const auto& c : comps) {
      // sign choices: positive-only mode keeps everything positive
      size_t sign_codes = positive_only ? 1 : (1u << (2 * k));
      for (size_t code = 0; code < sign_codes; ++code) {
        std::vector<std::pair<int64_t, int64_t>> pairs(k);
        for (size_t t = 0; t < k; ++t) {
          int64_t i = c[2 * t], j = c[2 * t + 1];
          if (!positive_only) {
            if ((code >> (2 * t)) & 1) i = -i;
            if ((code >> (2 * t + 1)) & 1) j = -j;
          }
          pairs[t] = {i, j};
        }
        // canonical rotation of the pair sequence
        auto best = pairs;
        for (size_t rot = 1; rot < k; ++rot) {
          std::rotate(pairs.begin(), pairs.begin() + 1, pairs.end());
          if (pairs < best) best = pairs;
        }
        necklaces.insert(best);
      }
    }
  }
  fc.exact_necklaces = necklaces.size();
  return fc;
}

OrbitPartition saturation_oracle_f2(size_t radius, size_t slack) {
  if (slack < radius) throw precondition_error("slack must be at least the radius");
  if (radius > 8) throw budget_error("saturation oracle supports radius <= 8");
  // Enumerate canonical cyclic words of F_2 with length <= slack.
  std::vector<CyclicWord> words;
  std::map<CyclicWord, size_t> index;
  {
    std::vector<GroupWord> frontier{GroupWord{}};
    std::set<std::string> seen{""};
    auto add_cyclic = [&](const GroupWord& w) {
      if (cyclic_reduce(w).core.size() != w.size()) return;  // want cyclically reduced
      CyclicWord c = cyclic_canonical(w);
      if (index.emplace(c, words.size()).second) words.push_back(c);
    };
    add_cyclic(GroupWord{});
    for (size_t len = 1; len <= slack; ++len) {
      std::vector<GroupWord> next;
      for (const GroupWord& w : frontier)
        for (int g = 0; g < 2; ++g)
          for (int s : {1, -1}) {
            GroupWord e = free_reduce(
                w.concat(GroupWord({Letter{static_cast<int8_t>(g), static_cast<int8_t>(s)}})));
            if (e.size() != len) continue;
            if (seen.insert(e.str()).second) {
              add_cyclic(e);
              next.push_back(e);
            }
          }
      frontier = std::move(next);
    }
  }
  UnionFind uf(words.size());
  auto multipliers = whitehead_multipliers(2);
  auto permutations = whitehead_permutations(2);
  std::vector<WhiteheadAut> all = permutations;
  all.insert(all.end(), multipliers.begin(), multipliers.end());
  for (size_t i = 0; i < words.size(); ++i) {
    for (const WhiteheadAut& phi : all) {
      GroupWord img = apply_whitehead(phi, words[i].representative);
      if (cyclic_length(img) > slack) continue;
      CyclicWord c = cyclic_form(img);
      auto it = index.find(c);
      if (it != index.end()) uf.unite(i, it->second);
    }
  }
  OrbitPartition part;
  part.radius = radius;
  std::unordered_map<size_t, size_t> root_to_class;
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i].representative.size() > radius) continue;
    part.keys.push_back(words[i].representative.str());
    part.lengths.push_back(words[i].representative.size());
    size_t root = uf.find(i);
    auto [it, fresh] = root_to_class.emplace(root, root_to_class.size());
    if (fresh) part.class_min_length.push_back(words[i].representative.size());
    part.class_id.push_back(it->second);
    part.class_min_length[it->second] =
        std::min(part.class_min_length[it->second], words[i].representative.size());
  }
  return part;
}

}  // namespace ag
