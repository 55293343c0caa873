#pragma once

#include "satkit/numeric.hpp"

namespace satkit {

// Dense matrix over Z, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
  }

  static IntMatrix from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) m.at(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  Vec apply(const Vec& v) const {
    Vec r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return data_ < o.data_;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  // Fraction-free determinant (Bareiss).
  Int det() const {
    if (rows_ != cols_) throw spec_error("det of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    Int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a.at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
          a.at(i, j) = num / prev;
        }
      prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
  }

  // Inverse of a unimodular matrix, stays integral.
  IntMatrix inverse_unimodular() const {
    Int d = det();
    if (d != 1 && d != -1)
      throw computation_error("matrix is not unimodular");
    std::size_t n = rows_;
    // Gauss-Jordan over Q, then the result is integral because det = +-1.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(at(i, j));
      a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && a[p][k] == 0) ++p;
      std::swap(a[k], a[p]);
      Rat piv = a[k][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k || a[i][k] == 0) continue;
        Rat f = a[i][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
      }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat v = a[i][n + j];
        v.canonicalize();
        if (v.get_den() != 1)
          throw computation_error("unimodular inverse is not integral");
        inv.at(i, j) = v.get_num();
      }
    return inv;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// Rank over Q by fraction-free elimination.
inline std::size_t rank_q(const IntMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a[i][j] = Rat(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t p = rank;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < c; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace satkit
