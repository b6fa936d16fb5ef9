#include "autgrowth/free_abelian.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "autgrowth/errors.hpp"

namespace ag {

std::vector<ZVector> ZrGroup::generators() const {
  std::vector<ZVector> gens;
  for (size_t i = 0; i < rank; ++i) {
    ZVector e(rank, 0);
    e[i] = 1;
    gens.push_back(e);
    e[i] = -1;
    gens.push_back(e);
  }
  return gens;
}

ZVector ZrGroup::mul(const ZVector& x, const ZVector& y) const {
  ZVector z(rank);
  for (size_t i = 0; i < rank; ++i) z[i] = x[i] + y[i];
  return z;
}

std::string ZrGroup::key(const ZVector& x) const {
  std::ostringstream os;
  for (size_t i = 0; i < rank; ++i) os << (i ? "," : "") << x[i];
  return os.str();
}

ZVector gcd_canonical(const ZVector& x) {
  ZVector out(x.size(), 0);
  if (!x.empty()) out[0] = gcd_all(x);
  return out;
}

namespace {

IntMatrix elem_add(size_t r, size_t i, size_t j, int64_t c) {
  IntMatrix m = IntMatrix::identity(r);
  m.at(i, j) = c;
  return m;
}

IntMatrix negate_coord(size_t r, size_t i) {
  IntMatrix m = IntMatrix::identity(r);
  m.at(i, i) = -1;
  return m;
}

IntMatrix swap_coords(size_t r, size_t i, size_t j) {
  IntMatrix m(r, r);
  for (size_t k = 0; k < r; ++k) m.at(k, k) = 1;
  m.at(i, i) = m.at(j, j) = 0;
  m.at(i, j) = m.at(j, i) = 1;
  return m;
}

}  // namespace

EuclidTrace gcd_canonical_traced(const ZVector& x) {
  const size_t r = x.size();
  EuclidTrace trace;
  ZVector v = x;
  auto apply = [&](const IntMatrix& m) {
    v = mul_vec(v, m);
    trace.steps.push_back(m);
  };
  // Clear entries right to left: fold entry j into entry j-1 by the
  // Euclidean algorithm realized with elementary additions and negations.
  for (size_t j = r; j-- > 1;) {
    size_t i = j - 1;
    while (v[j] != 0) {
      int64_t q = v[i] / v[j];
      if (q != 0) apply(elem_add(r, j, i, -q));  // entry i -= q * entry j
      apply(swap_coords(r, i, j));
    }
  }
  if (r > 0 && v[0] < 0) apply(negate_coord(r, 0));
  trace.result = v;
  AG_CHECK(trace.result == gcd_canonical(x), "euclidean trace disagrees with gcd");
  return trace;
}

std::vector<IntMatrix> gl_generators(size_t r) {
  AG_CHECK(r >= 1, "gl_generators needs rank >= 1");
  std::vector<IntMatrix> gens;
  if (r == 1) {
    gens.push_back(negate_coord(1, 0));
    return gens;
  }
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      gens.push_back(elem_add(r, i, j, 1));
      gens.push_back(elem_add(r, i, j, -1));
    }
  for (size_t i = 0; i < r; ++i) gens.push_back(negate_coord(r, i));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) gens.push_back(swap_coords(r, i, j));
  return gens;
}

GrowthTable alpha_zr(size_t r, size_t max_n) {
  AG_CHECK(r >= 1, "alpha_zr needs rank >= 1");
  ZrGroup g(r);
  auto ball = enumerate_ball(g, max_n);
  auto canon = [&g](const ZVector& x) { return g.key(gcd_canonical(x)); };
  // gcd is a complete invariant for the GL_r(Z) action on Z^r.
  GrowthTable t = orbits_by_canonical_form<ZVector>(ball, canon, /*certified_complete=*/true);
  return t;
}

}  // namespace ag
