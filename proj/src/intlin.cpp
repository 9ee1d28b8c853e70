#include "lpa/intlin.hpp"

#include <algorithm>

namespace lpa {

HnfResult hnf(const IntMatrix& M) {
  const size_t m = M.rows(), n = M.cols();
  IntMatrix H = M;
  H.row_labels.clear();
  H.col_labels.clear();
  IntMatrix U = IntMatrix::identity(m);
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    // Euclid down column c until a single nonzero entry sits at row r.
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i) {
        if (H.at(i, c) == 0) continue;
        if (best == m || cmp(abs(H.at(i, c)), abs(H.at(best, c))) < 0)
          best = i;
      }
      if (best == m) break;  // column is zero below r
      if (best != r) {
        H.swap_rows(r, best);
        U.swap_rows(r, best);
      }
      bool clean = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (H.at(i, c) == 0) continue;
        Int q = fdiv(H.at(i, c), H.at(r, c));
        if (q != 0) {
          H.add_row(i, r, -q);
          U.add_row(i, r, -q);
        }
        if (H.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(r, c) == 0) continue;
    if (H.at(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (size_t i = 0; i < r; ++i) {
      Int q = fdiv(H.at(i, c), H.at(r, c));
      if (q != 0) {
        H.add_row(i, r, -q);
        U.add_row(i, r, -q);
      }
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

ColHnfResult col_hnf(const IntMatrix& M) {
  // Row HNF of the transpose, transposed back.
  HnfResult rh = hnf(M.transpose());
  ColHnfResult res;
  res.H = rh.H.transpose();
  res.V = rh.U.transpose();
  for (size_t j = 0; j < res.H.cols(); ++j) {
    size_t i = 0;
    while (i < res.H.rows() && res.H.at(i, j) == 0) ++i;
    if (i == res.H.rows()) break;  // zero columns are trailing
    res.pivot_rows.push_back(i);
  }
  res.rank = res.pivot_rows.size();
  return res;
}

SnfResult snf(const IntMatrix& M) {
  const size_t m = M.rows(), n = M.cols();
  IntMatrix D = M;
  D.row_labels.clear();
  D.col_labels.clear();
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  size_t t = 0;
  while (t < m && t < n) {
    // Smallest nonzero |entry| of the trailing block, row-major tie-break.
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        if (D.at(i, j) == 0) continue;
        if (pi == m || cmp(abs(D.at(i, j)), abs(D.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;  // trailing block is zero
    D.swap_rows(t, pi);
    U.swap_rows(t, pi);
    D.swap_cols(t, pj);
    V.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t.
      for (size_t i = t + 1; i < m; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = fdiv(D.at(i, t), D.at(t, t));
        if (q != 0) {
          D.add_row(i, t, -q);
          U.add_row(i, t, -q);
        }
        if (D.at(i, t) != 0) {
          // Remainder is strictly smaller; promote it to the pivot.
          D.swap_rows(t, i);
          U.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t.
      for (size_t j = t + 1; j < n; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = fdiv(D.at(t, j), D.at(t, t));
        if (q != 0) {
          D.add_col(j, t, -q);
          V.add_col(j, t, -q);
        }
        if (D.at(t, j) != 0) {
          D.swap_cols(t, j);
          V.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility fix: the pivot must divide the whole trailing block.
      for (size_t i = t + 1; i < m && !dirty; ++i)
        for (size_t j = t + 1; j < n && !dirty; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            D.add_row(t, i, 1);
            U.add_row(t, i, 1);
            dirty = true;
          }
    }
    ++t;
  }
  // Positive diagonal; sign fixes go through V so U rows stay untouched.
  for (size_t k = 0; k < t; ++k)
    if (D.at(k, k) < 0) {
      D.negate_col(k);
      V.negate_col(k);
    }
  return {std::move(D), std::move(U), std::move(V)};
}

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> d;
  for (size_t i = 0; i < D.rows() && i < D.cols(); ++i) d.push_back(D.at(i, i));
  return d;
}

IntMatrix kernel_basis(const IntMatrix& M) {
  SnfResult s = snf(M);
  const size_t n = M.cols();
  const size_t k = std::min(M.rows(), n);
  std::vector<size_t> free_idx;
  for (size_t i = 0; i < k; ++i)
    if (s.D.at(i, i) == 0) free_idx.push_back(i);
  for (size_t i = k; i < n; ++i) free_idx.push_back(i);
  IntMatrix K(n, free_idx.size());
  for (size_t j = 0; j < free_idx.size(); ++j)
    K.set_col(j, s.V.col(free_idx[j]));
  return K;
}

std::optional<std::vector<Int>> solve(const IntMatrix& M,
                                      const std::vector<Int>& b) {
  if (b.size() != M.rows()) throw ShapeMismatch("solve: rhs size mismatch");
  ColHnfResult ch = col_hnf(M);
  std::vector<Int> rest = b;
  std::vector<Int> z(M.cols(), Int(0));
  for (size_t j = 0; j < ch.rank; ++j) {
    size_t r = ch.pivot_rows[j];
    const Int& p = ch.H.at(r, j);
    if (rest[r] % p != 0) return std::nullopt;
    Int q = rest[r] / p;
    z[j] = q;
    if (q != 0)
      for (size_t i = 0; i < rest.size(); ++i) rest[i] -= q * ch.H.at(i, j);
  }
  if (!vec_is_zero(rest)) return std::nullopt;
  return ch.V * z;
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& M, const IntMatrix& B) {
  if (B.rows() != M.rows()) throw ShapeMismatch("solve_matrix shape mismatch");
  IntMatrix X(M.cols(), B.cols());
  for (size_t j = 0; j < B.cols(); ++j) {
    auto x = solve(M, B.col(j));
    if (!x) return std::nullopt;
    X.set_col(j, *x);
  }
  return X;
}

Int det(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw NonSquare("determinant of nonsquare matrix");
  const size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A.at(k, k) == 0) {
      size_t i = k + 1;
      while (i < n && A.at(i, k) == 0) ++i;
      if (i == n) return 0;
      A.swap_rows(k, i);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int v = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        internal_check(v % prev == 0, "Bareiss division must be exact");
        A.at(i, j) = v / prev;
      }
    prev = A.at(k, k);
  }
  return sign * A.at(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
  // The row HNF of a unimodular matrix is the identity, so the transform is
  // the inverse.
  HnfResult h = hnf(U);
  if (h.H != IntMatrix::identity(U.rows()))
    throw Error("unimodular_inverse: matrix is not unimodular");
  return h.U;
}

std::vector<Int> reduce_mod_column_lattice(std::vector<Int> x,
                                           const ColHnfResult& lattice) {
  for (size_t j = 0; j < lattice.rank; ++j) {
    size_t r = lattice.pivot_rows[j];
    Int q = fdiv(x[r], lattice.H.at(r, j));
    if (q != 0)
      for (size_t i = 0; i < x.size(); ++i) x[i] -= q * lattice.H.at(i, j);
  }
  return x;
}

}  // namespace lpa
