#include "lpa/intmatrix.hpp"

#include <sstream>

namespace lpa {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged initializer");
    for (long x : r) e_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
  IntMatrix m(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

IntMatrix IntMatrix::diagonal(size_t rows, size_t cols,
                              const std::vector<Int>& d) {
  IntMatrix m(rows, cols);
  for (size_t i = 0; i < d.size() && i < rows && i < cols; ++i)
    m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix sum shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix difference shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
  std::vector<Int> r(rows_, Int(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

std::vector<Int> IntMatrix::col(size_t j) const {
  std::vector<Int> v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::row(size_t i) const {
  std::vector<Int> v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntMatrix::set_col(size_t j, const std::vector<Int>& v) {
  for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(size_t i, size_t j, const Int& c) {
  for (size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(size_t i, size_t j, const Int& c) {
  for (size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(size_t i) {
  for (size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(size_t i) {
  for (size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

IntMatrix IntMatrix::left_cols(size_t k) const {
  IntMatrix r(rows_, k);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < k; ++j) r.at(i, j) = at(i, j);
  return r;
}

IntMatrix IntMatrix::top_rows(size_t k) const {
  IntMatrix r(k, cols_);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw ShapeMismatch("hcat shape mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::vcat(const IntMatrix& o) const {
  if (cols_ != o.cols_) throw ShapeMismatch("vcat shape mismatch");
  IntMatrix r(rows_ + o.rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (size_t i = 0; i < o.rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

std::vector<Int> vec_sub(const std::vector<Int>& a,
                         const std::vector<Int>& b) {
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<Int> vec_add(const std::vector<Int>& a,
                         const std::vector<Int>& b) {
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<Int> vec_scale(const Int& c, const std::vector<Int>& a) {
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const std::vector<Int>& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace lpa
