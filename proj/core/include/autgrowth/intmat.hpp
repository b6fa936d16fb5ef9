#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace ag {

using ZVector = std::vector<int64_t>;

// Dense integer matrix, row-major. Vectors are rows and act on the right:
// y = x * M.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  int64_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  int64_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  bool operator<(const IntMatrix& o) const;

  ZVector row(size_t r) const;
  bool row_is_zero(size_t r) const;
  IntMatrix transpose() const;

  // Determinant by fraction-free Gaussian elimination (Bareiss).
  int64_t det() const;

  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<int64_t> a_;
};

ZVector mul_vec(const ZVector& x, const IntMatrix& m);
int64_t gcd_all(const ZVector& x);

// Integer row reduction: a full-rank integer L with L*A equal to a positive
// integer multiple of the rational reduced row echelon form of A.
struct IntRowReduction {
  IntMatrix L;        // rows(A) x rows(A), full rank over Q
  IntMatrix LA;       // L * A
  std::vector<size_t> pivot_cols;
  int64_t scale = 1;  // LA / scale is in reduced row echelon form
};
IntRowReduction row_reduce_integer(const IntMatrix& a);

}  // namespace ag
