#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

/// Exact integers. Everything in the toolkit is computed over Z (or Z[s])
/// with arbitrary precision; there is no floating point anywhere.
using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
/// Floor-division quotient (rounds toward minus infinity).
Int fdiv(const Int& a, const Int& b);

/// Dense matrix of exact integers with optional row/column index labels.
/// Labels name what each index stands for (vertex ids, edge ids, canonical
/// generators) so that transformation output stays auditable.  Zero-sized
/// matrices (0xN, Nx0) are first-class values: they show up as the
/// Bowen-Franks presentations of graphs made of sinks.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(size_t n);
  static IntMatrix zero(size_t rows, size_t cols) { return {rows, cols}; }
  static IntMatrix column(const std::vector<Int>& v);
  /// Diagonal matrix (rows x cols) with the given entries on the diagonal.
  static IntMatrix diagonal(size_t rows, size_t cols,
                            const std::vector<Int>& d);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  Int& operator()(size_t i, size_t j) { return at(i, j); }
  const Int& operator()(size_t i, size_t j) const { return at(i, j); }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<Int> col(size_t j) const;
  std::vector<Int> row(size_t i) const;
  void set_col(size_t j, const std::vector<Int>& v);

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  /// row(i) += c * row(j)
  void add_row(size_t i, size_t j, const Int& c);
  /// col(i) += c * col(j)
  void add_col(size_t i, size_t j, const Int& c);
  void negate_row(size_t i);
  void negate_col(size_t i);

  /// Columns [0, k) of this matrix.
  IntMatrix left_cols(size_t k) const;
  /// Rows [0, k) of this matrix.
  IntMatrix top_rows(size_t k) const;
  /// Horizontal concatenation [this | o].
  IntMatrix hcat(const IntMatrix& o) const;
  /// Vertical concatenation [this; o].
  IntMatrix vcat(const IntMatrix& o) const;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Int> e_;
};

std::vector<Int> vec_sub(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> vec_add(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> vec_scale(const Int& c, const std::vector<Int>& a);
bool vec_is_zero(const std::vector<Int>& a);

}  // namespace lpa
