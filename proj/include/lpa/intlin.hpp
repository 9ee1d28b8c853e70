#pragma once

#include <optional>

#include "lpa/intmatrix.hpp"

namespace lpa {

/// Row-style Hermite normal form: U * M = H with U unimodular, H in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot).
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};
HnfResult hnf(const IntMatrix& M);

/// Column-style Hermite normal form: M * V = H with V unimodular.  The
/// nonzero columns of H are a basis of the column lattice of M; column j of
/// V is a preimage of column j of H.
struct ColHnfResult {
  IntMatrix H;
  IntMatrix V;
  /// Pivot row of each nonzero column of H, strictly increasing.
  std::vector<size_t> pivot_rows;
  /// Number of nonzero columns (= rank of M).
  size_t rank = 0;
};
ColHnfResult col_hnf(const IntMatrix& M);

/// Smith normal form witnesses: U * M * V = D with U, V unimodular and D
/// diagonal, d_i >= 0, d_i | d_{i+1}.  Pivoting picks the smallest nonzero
/// absolute value with row-major tie-breaking, so witnesses are reproducible.
struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Int> diagonal() const;
};
SnfResult snf(const IntMatrix& M);

/// Basis of the integer kernel {x : Mx = 0}, one column per basis vector.
/// The kernel of an integer map is automatically a saturated lattice.
IntMatrix kernel_basis(const IntMatrix& M);

/// Some integer solution of Mx = b, or nullopt if none exists.  Solvability
/// is decided by divisibility against the column Hermite form of M; the
/// returned solution is the one with zero coefficients on the kernel part,
/// so identical inputs give identical outputs.
std::optional<std::vector<Int>> solve(const IntMatrix& M,
                                      const std::vector<Int>& b);

/// Solve M * X = B column by column; nullopt if any column is unsolvable.
std::optional<IntMatrix> solve_matrix(const IntMatrix& M, const IntMatrix& B);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& M);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& U);

/// Canonical representative of x modulo the column lattice of M: reduce at
/// each pivot row of the column Hermite form so the pivot coordinates land
/// in [0, pivot).  Deterministic representative for lattice cosets.
std::vector<Int> reduce_mod_column_lattice(std::vector<Int> x,
                                           const ColHnfResult& lattice);

}  // namespace lpa
