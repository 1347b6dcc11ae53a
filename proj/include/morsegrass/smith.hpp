#pragma once

// Exact Smith normal form over Z with unimodular transforms.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "morsegrass/bigint.hpp"
#include "morsegrass/errors.hpp"

namespace morsegrass {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<std::vector<long long>>& data) : IntMatrix(rows, cols) {
    if (data.size() != rows) throw DomainError("row count does not match matrix shape");
    for (std::size_t i = 0; i < rows; ++i) {
      if (data[i].size() != cols) throw DomainError("row length does not match matrix shape");
      for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = data[i][j];
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw DomainError("matrix product shape mismatch");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t l = 0; l < x.cols_; ++l) {
        if (x(i, l) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, l) * y(l, j);
      }
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
  }
  /// col_i += f * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

struct SmithResult {
  IntMatrix d;    // diagonal, d_1 | d_2 | ...
  IntMatrix u;    // unimodular, rows x rows
  IntMatrix v;    // unimodular, cols x cols
  std::vector<BigInt> diagonal;  // nonzero invariant factors, ascending

  std::size_t rank() const noexcept { return diagonal.size(); }
};

namespace detail {

/// Quotient rounded to nearest, so the remainder has magnitude at most |b|/2.
inline BigInt nearest_quotient(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  const BigInt r = a - q * b;
  if (2 * boost::multiprecision::abs(r) > boost::multiprecision::abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

}  // namespace detail

/// U * M * V = D.
inline SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  using boost::multiprecision::abs;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    bool done = false;
    bool empty = false;
    while (!done) {
      // Pivot: entry of least nonzero magnitude in the trailing block.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        empty = true;
        break;
      }
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = detail::nearest_quotient(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = detail::nearest_quotient(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      done = true;
      for (std::size_t i = t + 1; i < rows && done; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            done = false;
            break;
          }
    }
    if (empty) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  SmithResult r{d, u, v, {}};
  for (std::size_t i = 0; i < rows && i < cols; ++i)
    if (d(i, i) != 0) r.diagonal.push_back(d(i, i));
  return r;
}

/// Rank over the two-element field.
inline std::size_t rank_mod2(const IntMatrix& m) {
  std::vector<std::vector<unsigned char>> a(m.rows(), std::vector<unsigned char>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = static_cast<unsigned char>(boost::multiprecision::abs(m(i, j)) % 2 != 0);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && !a[p][c]) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != rank && a[i][c])
        for (std::size_t j = c; j < m.cols(); ++j) a[i][j] ^= a[rank][j];
    ++rank;
  }
  return rank;
}

}  // namespace morsegrass
