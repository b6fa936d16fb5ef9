#include "autgrowth/heisenberg.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "autgrowth/errors.hpp"

namespace ag {

HeisElement heis_mul(const HeisElement& x, const HeisElement& y) {
  return HeisElement{x.i + y.i, x.j + y.j, x.k + y.k - x.j * y.i};
}

HeisElement heis_inverse(const HeisElement& x) {
  return HeisElement{-x.i, -x.j, -x.k - x.j * x.i};
}

HeisElement heis_pow(const HeisElement& x, int64_t n) {
  HeisElement base = n < 0 ? heis_inverse(x) : x;
  int64_t cnt = std::llabs(n);
  HeisElement acc{};
  for (int64_t t = 0; t < cnt; ++t) acc = heis_mul(acc, base);
  return acc;
}

HeisElement heis_a() { return {1, 0, 0}; }
HeisElement heis_b() { return {0, 1, 0}; }
HeisElement heis_c() { return {0, 0, 1}; }

bool heis_relations_hold() {
  HeisElement a = heis_a(), b = heis_b(), c = heis_c();
  HeisElement comm =
      heis_mul(heis_mul(heis_inverse(a), heis_inverse(b)), heis_mul(a, b));
  if (!(comm == c)) return false;
  for (const HeisElement& g : {a, b}) {
    if (!(heis_mul(c, g) == heis_mul(g, c))) return false;
  }
  // associativity spot-check on the generators
  for (const HeisElement& x : {a, b, c})
    for (const HeisElement& y : {a, b, c})
      for (const HeisElement& z : {a, b, c})
        if (!(heis_mul(heis_mul(x, y), z) == heis_mul(x, heis_mul(y, z)))) return false;
  return true;
}

std::string heis_key(const HeisElement& x) {
  std::ostringstream os;
  os << x.i << "," << x.j << "," << x.k;
  return os.str();
}

HeisElement heis_parse(const std::string& text) {
  HeisElement e;
  char c1, c2;
  std::istringstream is(text);
  if (!(is >> e.i >> c1 >> e.j >> c2 >> e.k) || c1 != ',' || c2 != ',')
    throw format_error("Heisenberg element format is i,j,k");
  return e;
}

std::vector<HeisElement> HeisenbergGroup::generators() const {
  return {heis_a(), heis_inverse(heis_a()), heis_b(), heis_inverse(heis_b())};
}

size_t heis_length_bfs(const HeisElement& x, size_t max_radius) {
  HeisenbergGroup g;
  if (x == g.identity()) return 0;
  std::unordered_map<std::string, size_t> seen;
  std::vector<HeisElement> frontier{g.identity()};
  seen[heis_key(g.identity())] = 0;
  for (size_t len = 1; len <= max_radius; ++len) {
    std::vector<HeisElement> next;
    for (const HeisElement& e : frontier)
      for (const HeisElement& s : g.generators()) {
        HeisElement y = heis_mul(e, s);
        if (seen.emplace(heis_key(y), len).second) {
          if (y == x) return len;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  throw budget_error("element outside BFS radius " + std::to_string(max_radius));
}

HeisElement phi_matrix(const HeisElement& x, const IntMatrix& m) {
  AG_CHECK(m.rows() == 2 && m.cols() == 2, "phi needs a 2x2 matrix");
  int64_t det = m.det();
  AG_CHECK(std::abs(det) == 1, "phi matrix must be in GL_2(Z)");
  HeisElement pa{m.at(0, 0), m.at(0, 1), 0};
  HeisElement pb{m.at(1, 0), m.at(1, 1), 0};
  HeisElement out = heis_mul(heis_pow(pa, x.i), heis_pow(pb, x.j));
  out.k += det * x.k;
  return out;
}

HeisElement phi_named(const HeisElement& x, HeisAutName name) {
  IntMatrix m(2, 2);
  switch (name) {
    case HeisAutName::A:
    case HeisAutName::A_inv:  // phi_A is self-inverse
      m.at(0, 0) = -1;
      m.at(1, 1) = 1;
      break;
    case HeisAutName::B:
      m.at(0, 0) = 1;
      m.at(1, 0) = 1;
      m.at(1, 1) = 1;
      break;
    case HeisAutName::B_inv:
      m.at(0, 0) = 1;
      m.at(1, 0) = -1;
      m.at(1, 1) = 1;
      break;
  }
  return phi_matrix(x, m);
}

HeisElement inner_by_b(const HeisElement& x, int64_t times) {
  return HeisElement{x.i, x.j, x.k + times * x.i};
}

namespace {

// An explicit M in GL_2(Z) with (i,j) * M = (gcd(|i|,|j|), 0).
IntMatrix reduction_matrix(int64_t i, int64_t j) {
  // Column operations tracked as 2x2 right factors.
  IntMatrix m = IntMatrix::identity(2);
  auto apply = [&](int64_t a00, int64_t a01, int64_t a10, int64_t a11) {
    IntMatrix s(2, 2);
    s.at(0, 0) = a00;
    s.at(0, 1) = a01;
    s.at(1, 0) = a10;
    s.at(1, 1) = a11;
    int64_t ni = i * a00 + j * a10;
    int64_t nj = i * a01 + j * a11;
    i = ni;
    j = nj;
    m = m * s;
  };
  while (j != 0) {
    int64_t q = i / j;
    if (q != 0) apply(1, 0, -q, 1);  // first coord -= q * second
    apply(0, 1, 1, 0);               // swap coords
  }
  if (i < 0) apply(-1, 0, 0, 1);
  return m;
}

}  // namespace

HeisOrbitRep heis_orbit_rep(const HeisElement& x) {
  HeisOrbitRep rep;
  if (x.i == 0 && x.j == 0) {
    rep.commutator = true;
    rep.commutator_k = std::llabs(x.k);
    return rep;
  }
  IntMatrix m = reduction_matrix(x.i, x.j);
  HeisElement y = phi_matrix(x, m);
  AG_CHECK(y.j == 0 && y.i == std::gcd(std::llabs(x.i), std::llabs(x.j)),
           "orbit reduction did not reach (d, 0)");
  rep.d = y.i;
  int64_t r = ((y.k % rep.d) + rep.d) % rep.d;
  // The stabilizer of (d, 0) negates the residue; collapse the sign.
  rep.k2 = std::min(r, (rep.d - r) % rep.d);
  return rep;
}

std::string heis_orbit_key(const HeisElement& x) {
  HeisOrbitRep r = heis_orbit_rep(x);
  std::ostringstream os;
  if (r.commutator)
    os << "c:" << r.commutator_k;
  else
    os << "g:" << r.d << "," << r.k2;
  return os.str();
}

size_t heis_c_power_length_formula(int64_t k) {
  if (k == 0) return 0;
  double root = std::sqrt(static_cast<double>(std::llabs(k)));
  auto ceil2root = static_cast<size_t>(std::ceil(2.0 * root - 1e-12));
  // guard against floating error at perfect squares
  while (static_cast<int64_t>(ceil2root) * static_cast<int64_t>(ceil2root) <
         4 * std::llabs(k))
    ++ceil2root;
  while (ceil2root > 0 && (static_cast<int64_t>(ceil2root) - 1) * (static_cast<int64_t>(ceil2root) - 1) >=
         4 * std::llabs(k))
    --ceil2root;
  return 2 * ceil2root;
}

HeisSandwich heis_growth_sandwich(size_t max_n) {
  HeisSandwich s;
  // Lower table: the identity orbit plus one certified orbit per k > 0,
  // placed at the exact length of c^k from the closed formula.
  s.lower.cumulative = true;
  s.lower.kind = TableKind::lower_bound;
  s.lower.counts.assign(max_n + 1, 0);
  s.lower.counts[0] = 1;
  for (int64_t k = 1;; ++k) {
    size_t len = heis_c_power_length_formula(k);
    if (len > max_n) break;
    ++s.lower.counts[len];
  }
  for (size_t n = 1; n <= max_n; ++n) s.lower.counts[n] += s.lower.counts[n - 1];

  // Upper table: distinct orbit-rep keys over the BFS ball.
  HeisenbergGroup g;
  auto ball = enumerate_ball(g, max_n);
  s.upper = orbits_by_canonical_form<HeisElement>(
      ball, [](const HeisElement& e) { return heis_orbit_key(e); },
      /*certified_complete=*/false);
  return s;
}

}  // namespace ag
