#include "autgrowth/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "autgrowth/errors.hpp"

namespace ag {

namespace {

// Exact rational with int64 parts; magnitudes here stay tiny.
struct Rat {
  int64_t num = 0, den = 1;

  static Rat of(int64_t n, int64_t d = 1) {
    Rat r{n, d};
    r.normalize();
    return r;
  }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
  bool is_zero() const { return num == 0; }
  Rat operator*(const Rat& o) const { return of(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const { return of(num * o.den, den * o.num); }
  Rat operator-(const Rat& o) const { return of(num * o.den - o.num * den, den * o.den); }
};

}  // namespace

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  AG_CHECK(cols_ == o.rows_, "matrix dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      int64_t v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return a_ < o.a_;
}

ZVector IntMatrix::row(size_t r) const {
  return ZVector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

bool IntMatrix::row_is_zero(size_t r) const {
  for (size_t c = 0; c < cols_; ++c)
    if (at(r, c) != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

int64_t IntMatrix::det() const {
  AG_CHECK(rows_ == cols_, "det of non-square matrix");
  size_t n = rows_;
  if (n == 0) return 1;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat::of(at(i, j));
  Rat d = Rat::of(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = Rat::of(-d.num, d.den);
    }
    d = d * m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      Rat f = m[i][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
    }
  }
  AG_CHECK(d.den == 1, "determinant not integral");
  return d.num;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

ZVector mul_vec(const ZVector& x, const IntMatrix& m) {
  AG_CHECK(x.size() == m.rows(), "vector/matrix dimension mismatch");
  ZVector y(m.cols(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m.at(i, j);
  }
  return y;
}

int64_t gcd_all(const ZVector& x) {
  int64_t g = 0;
  for (int64_t v : x) g = std::gcd(g, std::abs(v));
  return g;
}

IntRowReduction row_reduce_integer(const IntMatrix& a) {
  const size_t n = a.rows(), m = a.cols();
  // Rational RREF with an augmented transform, deterministic pivoting:
  // leftmost column, smallest row index.
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(m));
  std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) w[i][j] = Rat::of(a.at(i, j));
    t[i][i] = Rat::of(1);
  }
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t piv = row;
    while (piv < n && w[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(w[piv], w[row]);
    std::swap(t[piv], t[row]);
    Rat lead = w[row][col];
    for (size_t j = 0; j < m; ++j) w[row][j] = w[row][j] / lead;
    for (size_t j = 0; j < n; ++j) t[row][j] = t[row][j] / lead;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || w[i][col].is_zero()) continue;
      Rat f = w[i][col];
      for (size_t j = 0; j < m; ++j) w[i][j] = w[i][j] - f * w[row][j];
      for (size_t j = 0; j < n; ++j) t[i][j] = t[i][j] - f * t[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  // Clear denominators with one global positive scalar.
  int64_t lcm = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) lcm = std::lcm(lcm, w[i][j].den);
    for (size_t j = 0; j < n; ++j) lcm = std::lcm(lcm, t[i][j].den);
  }
  IntRowReduction out;
  out.scale = lcm;
  out.pivot_cols = std::move(pivots);
  out.L = IntMatrix(n, n);
  out.LA = IntMatrix(n, m);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out.L.at(i, j) = t[i][j].num * (lcm / t[i][j].den);
    for (size_t j = 0; j < m; ++j) out.LA.at(i, j) = w[i][j].num * (lcm / w[i][j].den);
  }
  AG_CHECK(out.L * a == out.LA, "row reduction transform mismatch");
  return out;
}

}  // namespace ag
