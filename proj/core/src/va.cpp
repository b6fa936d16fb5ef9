#include "autgrowth/va.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "autgrowth/errors.hpp"

namespace ag {

void VAPresentation::validate() const {
  for (char s : sigma) {
    auto it = sgn.find(s);
    if (it == sgn.end() || (it->second != 1 && it->second != -1))
      throw format_error(std::string("generator '") + s + "' needs sgn +1 or -1");
    auto at = action.find(s);
    if (at == action.end() || at->second.rows() != rank || at->second.cols() != rank)
      throw format_error(std::string("generator '") + s + "' needs an mxm action matrix");
    if (std::abs(at->second.det()) != 1)
      throw format_error(std::string("action of '") + s + "' is not in GL_m(Z)");
  }
  for (const VARelation& r : relations) {
    if (r.tail.size() != rank) throw format_error("relation tail has wrong dimension");
    int prod = 1;
    for (char c : r.word) {
      if (sgn.find(c) == sgn.end())
        throw format_error(std::string("relation uses unknown generator '") + c + "'");
      prod *= sgn.at(c);
    }
    if (prod != 1)
      throw format_error("sgn is not a homomorphism: relation '" + r.word + "' has sgn -1");
  }
}

bool VAPresentation::sgn_dichotomy_mode() const {
  for (char s : sigma) {
    IntMatrix expect = IntMatrix::identity(rank);
    for (size_t i = 0; i < rank; ++i) expect.at(i, i) = sgn.at(s);
    if (action.at(s) != expect) return false;
  }
  return true;
}

VAPresentation VAPresentation::parse(std::istream& in) {
  VAPresentation p;
  std::string line;
  bool have_rank = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "#") continue;
    if (tok == "rank") {
      if (!(ls >> p.rank)) throw format_error("rank line needs an integer");
      have_rank = true;
    } else if (tok == "gen") {
      if (!have_rank) throw format_error("rank must come before gen lines");
      std::string name, kw;
      int sg;
      if (!(ls >> name >> kw >> sg) || name.size() != 1 || kw != "sgn")
        throw format_error("gen line: gen <c> sgn <+-1> action <m*m ints>");
      if (!(ls >> kw) || kw != "action") throw format_error("gen line missing action");
      IntMatrix m(p.rank, p.rank);
      for (size_t i = 0; i < p.rank; ++i)
        for (size_t j = 0; j < p.rank; ++j)
          if (!(ls >> m.at(i, j))) throw format_error("gen action needs m*m integers");
      p.sigma.push_back(name[0]);
      p.sgn[name[0]] = sg;
      p.action[name[0]] = m;
    } else if (tok == "rel") {
      if (!have_rank) throw format_error("rank must come before rel lines");
      VARelation r;
      std::string kw;
      if (!(ls >> r.word >> kw) || kw != "tail")
        throw format_error("rel line: rel <word> tail <m ints>");
      r.tail.resize(p.rank);
      for (size_t i = 0; i < p.rank; ++i)
        if (!(ls >> r.tail[i])) throw format_error("rel tail needs m integers");
      p.relations.push_back(std::move(r));
    } else {
      throw format_error("unknown presentation line: " + line);
    }
  }
  p.validate();
  return p;
}

std::string VAPresentation::serialize() const {
  std::ostringstream os;
  os << "rank " << rank << "\n";
  for (char s : sigma) {
    os << "gen " << s << " sgn " << sgn.at(s) << " action";
    const IntMatrix& m = action.at(s);
    for (size_t i = 0; i < rank; ++i)
      for (size_t j = 0; j < rank; ++j) os << " " << m.at(i, j);
    os << "\n";
  }
  for (const VARelation& r : relations) {
    os << "rel " << r.word << " tail";
    for (int64_t z : r.tail) os << " " << z;
    os << "\n";
  }
  return os.str();
}

IntMatrix lambda_matrix(const VAPresentation& p) {
  p.validate();
  IntMatrix lam(p.relations.size(), p.sigma.size());
  std::map<char, size_t> col;
  for (size_t t = 0; t < p.sigma.size(); ++t) col[p.sigma[t]] = t;
  for (size_t ri = 0; ri < p.relations.size(); ++ri) {
    const std::string& w = p.relations[ri].word;
    int prefix_sgn = 1;
    for (char c : w) {
      lam.at(ri, col.at(c)) += prefix_sgn;
      prefix_sgn *= p.sgn.at(c);
    }
  }
  return lam;
}

IntMatrix w_matrix(const VAPresentation& p) {
  IntMatrix w(p.relations.size(), p.rank);
  for (size_t ri = 0; ri < p.relations.size(); ++ri)
    for (size_t j = 0; j < p.rank; ++j) w.at(ri, j) = p.relations[ri].tail[j];
  return w;
}

ExtensionMatrices extension_matrices(const VAPresentation& p) {
  ExtensionMatrices em;
  em.Lambda = lambda_matrix(p);
  em.W = w_matrix(p);
  IntRowReduction red = row_reduce_integer(em.Lambda);
  em.L = red.L;
  em.LLambda = red.LA;
  em.LW = em.L * em.W;
  em.pivot_cols = red.pivot_cols;
  em.scale = red.scale;
  return em;
}

LinearCertificate linear_growth_certificate(const VAPresentation& p) {
  if (!p.sgn_dichotomy_mode())
    throw precondition_error("linear_growth_certificate needs scalar (+-1) action");
  ExtensionMatrices em = extension_matrices(p);
  LinearCertificate cert;
  for (size_t r = 0; r < em.LLambda.rows(); ++r) {
    bool lz = em.LLambda.row_is_zero(r);
    bool wz = em.LW.row_is_zero(r);
    bool bad = lz && !wz;
    cert.rows.push_back({r, lz, wz, bad});
    if (bad) cert.holds = false;
  }
  return cert;
}

Rank2Growth classify_rank2(const VAPresentation& p) {
  if (p.rank != 2) throw precondition_error("classify_rank2 needs rank 2");
  p.validate();
  return p.sgn_dichotomy_mode() ? Rank2Growth::linear : Rank2Growth::quadratic;
}

ConstructionGroup::Element ConstructionGroup::identity() const {
  return Element{ZVector(r, 0), std::vector<uint8_t>(r, 0)};
}

ConstructionGroup::Element ConstructionGroup::gen_a(size_t i, int sign) const {
  Element e = identity();
  e.v[i] = sign;
  return e;
}

ConstructionGroup::Element ConstructionGroup::gen_t(size_t i) const {
  Element e = identity();
  e.eps[i] = 1;
  return e;
}

std::vector<ConstructionGroup::Element> ConstructionGroup::generators() const {
  std::vector<Element> gens;
  for (size_t i = 0; i < r; ++i) {
    gens.push_back(gen_a(i, 1));
    gens.push_back(gen_a(i, -1));
    gens.push_back(gen_t(i));  // involution, self-inverse
  }
  return gens;
}

ConstructionGroup::Element ConstructionGroup::mul(const Element& x, const Element& y) const {
  // (v, eps)(w, delta) = (v + eps.w, eps xor delta), eps.w flipping the
  // sign of w_i exactly when eps_i = 1.
  Element z = identity();
  for (size_t i = 0; i < r; ++i) {
    z.v[i] = x.v[i] + (x.eps[i] ? -y.v[i] : y.v[i]);
    z.eps[i] = x.eps[i] ^ y.eps[i];
  }
  return z;
}

ConstructionGroup::Element ConstructionGroup::inverse(const Element& x) const {
  Element z = identity();
  for (size_t i = 0; i < r; ++i) {
    z.eps[i] = x.eps[i];
    z.v[i] = x.eps[i] ? x.v[i] : -x.v[i];
  }
  return z;
}

std::string ConstructionGroup::key(const Element& x) const {
  std::ostringstream os;
  for (size_t i = 0; i < r; ++i) os << x.v[i] << ",";
  os << "|";
  for (size_t i = 0; i < r; ++i) os << int(x.eps[i]);
  return os.str();
}

bool ConstructionGroup::relations_hold() const {
  auto is_id = [&](const Element& e) { return e == identity(); };
  auto conj = [&](const Element& g, const Element& t) {
    return mul(mul(inverse(t), g), t);
  };
  for (size_t i = 0; i < r; ++i) {
    if (!is_id(mul(gen_t(i), gen_t(i)))) return false;  // t_i^2 = 1
    for (size_t j = 0; j < r; ++j) {
      // a_i a_j = a_j a_i and t_i t_j = t_j t_i
      if (!(mul(gen_a(i), gen_a(j)) == mul(gen_a(j), gen_a(i)))) return false;
      if (!(mul(gen_t(i), gen_t(j)) == mul(gen_t(j), gen_t(i)))) return false;
      // conjugation: a_j^{t_i} = a_j for i != j, a_i^{-1} for i = j
      Element expect = (i == j) ? gen_a(j, -1) : gen_a(j, 1);
      if (!(conj(gen_a(j), gen_t(i)) == expect)) return false;
    }
  }
  return true;
}

GrowthTable sign_orbit_count(size_t r, size_t max_n) {
  AG_CHECK(r >= 1, "sign_orbit_count needs rank >= 1");
  // Non-negative orthant representatives: counts[n] = C(n + r, r).
  GrowthTable t;
  t.cumulative = true;
  t.kind = TableKind::exact;
  t.counts.resize(max_n + 1);
  for (size_t n = 0; n <= max_n; ++n) {
    uint64_t c = 1;
    for (size_t k = 1; k <= r; ++k) c = c * (n + k) / k;
    t.counts[n] = c;
  }
  return t;
}

FiniteOrderReport finite_order_matrix_check(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw precondition_error("need a 2x2 matrix");
  int64_t det = m.det();
  if (std::abs(det) != 1) throw precondition_error("matrix not in GL_2(Z)");
  int64_t tr = m.at(0, 0) + m.at(1, 1);
  FiniteOrderReport rep;
  // Non-real spectrum forces det = 1 and trace in {-1, 0, 1}.
  rep.real_spectrum = !(det == 1 && (tr == -1 || tr == 0 || tr == 1) &&
                        tr * tr < 4 * det);
  IntMatrix id = IntMatrix::identity(2);
  IntMatrix pw = id;
  for (uint64_t k = 1; k <= 12; ++k) {
    pw = pw * m;
    if (pw == id) {
      rep.finite = true;
      rep.order = k;
      break;
    }
  }
  if (!rep.real_spectrum)
    AG_CHECK(rep.finite && (4 % rep.order == 0 || 6 % rep.order == 0),
             "non-real-spectrum matrix must have M^4 = I or M^6 = I");
  return rep;
}

std::vector<IntMatrix> bounded_centralizer(const std::vector<IntMatrix>& ms, int64_t bound) {
  size_t r = ms.empty() ? 2 : ms.front().rows();
  for (const IntMatrix& m : ms) {
    if (m.rows() != r || m.cols() != r) throw precondition_error("mixed matrix sizes");
    if (std::abs(m.det()) != 1) throw precondition_error("matrix not in GL_r(Z)");
  }
  std::vector<IntMatrix> out;
  size_t cells = r * r;
  int64_t base = 2 * bound + 1;
  uint64_t total = 1;
  for (size_t i = 0; i < cells; ++i) total *= static_cast<uint64_t>(base);
  for (uint64_t code = 0; code < total; ++code) {
    IntMatrix x(r, r);
    uint64_t c = code;
    for (size_t i = 0; i < cells; ++i) {
      x.at(i / r, i % r) = static_cast<int64_t>(c % base) - bound;
      c /= base;
    }
    if (std::abs(x.det()) != 1) continue;
    bool commutes = true;
    for (const IntMatrix& m : ms)
      if (!(x * m == m * x)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KleinGroup::Element> KleinGroup::generators() const {
  // a, a^-1, b, b^-1 in the normal form a^i b^j with b a b^-1 = a^-1.
  return {Element{1, 0}, Element{-1, 0}, Element{0, 1}, Element{0, -1}};
}

KleinGroup::Element KleinGroup::mul(const Element& x, const Element& y) const {
  // a^i b^j a^k b^l = a^{i + (-1)^j k} b^{j + l}
  int64_t k = (x.j % 2 == 0) ? y.i : -y.i;
  return Element{x.i + k, x.j + y.j};
}

std::string KleinGroup::key(const Element& x) const {
  return std::to_string(x.i) + "," + std::to_string(x.j);
}

VAPresentation klein_presentation() {
  // A = <a, b^2> with basis (a, b^2); transversal generator b inverts a and
  // fixes b^2; the relation b*b = b^2 has tail (0, 1).
  VAPresentation p;
  p.rank = 2;
  p.sigma = {'b'};
  p.sgn['b'] = -1;
  IntMatrix m = IntMatrix::identity(2);
  m.at(0, 0) = -1;
  p.action['b'] = m;
  p.relations.push_back({"bb", ZVector{0, 1}});
  p.validate();
  return p;
}

VAPresentation z2_inversion_presentation() {
  VAPresentation p;
  p.rank = 2;
  p.sigma = {'t'};
  p.sgn['t'] = -1;
  IntMatrix m(2, 2);
  m.at(0, 0) = m.at(1, 1) = -1;
  p.action['t'] = m;
  p.relations.push_back({"tt", ZVector{0, 0}});
  p.validate();
  return p;
}

GrowthTable klein_square_class_table(size_t radius) {
  KleinGroup g;
  auto ball = enumerate_ball(g, radius);
  std::map<std::pair<int64_t, int64_t>, size_t> min_len;
  for (const auto& e : ball.entries) {
    // restrict to <a^2, b^2> with both exponents non-zero
    if (e.elem.i == 0 || e.elem.j == 0) continue;
    if (e.elem.i % 2 != 0 || e.elem.j % 2 != 0) continue;
    std::pair<int64_t, int64_t> cls{std::abs(e.elem.i / 2), std::abs(e.elem.j / 2)};
    auto [it, fresh] = min_len.emplace(cls, e.length);
    if (!fresh) it->second = std::min(it->second, e.length);
  }
  GrowthTable t;
  t.cumulative = true;
  t.kind = TableKind::lower_bound;  // invariant classes bound orbits below
  t.counts.assign(radius + 1, 0);
  for (const auto& [cls, m] : min_len) ++t.counts[m];
  for (size_t n = 1; n <= radius; ++n) t.counts[n] += t.counts[n - 1];
  return t;
}

}  // namespace ag
