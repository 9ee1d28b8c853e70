#pragma once

#include <optional>

#include "lpa/fgab.hpp"

namespace lpa {

/// Element a + b*s of the group ring Z[s], s^2 = 1.  The evaluation pair
/// (a+b, a-b) identifies Z[s] with a subring of Z x Z, which is how products
/// and determinants are computed exactly.
struct SigmaScalar {
  Int a = 0;
  Int b = 0;

  SigmaScalar() = default;
  SigmaScalar(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

  SigmaScalar operator+(const SigmaScalar& o) const { return {a + o.a, b + o.b}; }
  SigmaScalar operator-(const SigmaScalar& o) const { return {a - o.a, b - o.b}; }
  SigmaScalar operator*(const SigmaScalar& o) const {
    return {a * o.a + b * o.b, a * o.b + b * o.a};
  }
  bool operator==(const SigmaScalar& o) const = default;

  Int eval_plus() const { return a + b; }   // s -> 1
  Int eval_minus() const { return a - b; }  // s -> -1
  /// The units of Z[s] are 1, -1, s, -s.
  bool is_unit() const { return abs(eval_plus()) == 1 && abs(eval_minus()) == 1; }
  /// Norm (a+b)(a-b); multiplicative, and det(double(M)) = norm(det(M)).
  Int norm() const { return eval_plus() * eval_minus(); }
  std::string to_string() const;
};

/// Matrix over Z[s], stored as the pair of integer matrices P + s*Q.
class SigmaMatrix {
 public:
  SigmaMatrix() = default;
  SigmaMatrix(IntMatrix p, IntMatrix q);
  /// Purely integral matrix (Q = 0).
  explicit SigmaMatrix(IntMatrix p);

  static SigmaMatrix identity(size_t n) {
    return SigmaMatrix(IntMatrix::identity(n));
  }

  const IntMatrix& p() const { return p_; }
  const IntMatrix& q() const { return q_; }
  size_t rows() const { return p_.rows(); }
  size_t cols() const { return p_.cols(); }
  SigmaScalar at(size_t i, size_t j) const { return {p_.at(i, j), q_.at(i, j)}; }

  SigmaMatrix operator*(const SigmaMatrix& o) const;
  SigmaMatrix operator+(const SigmaMatrix& o) const;
  SigmaMatrix operator-(const SigmaMatrix& o) const;
  SigmaMatrix transpose() const;
  bool operator==(const SigmaMatrix& o) const = default;

  /// Restriction of scalars along Z -> Z[s] with basis {1, s} per
  /// coordinate: the 2m x 2n block matrix [[P, Q], [Q, P]].
  IntMatrix doubled() const;

 private:
  IntMatrix p_, q_;
};

/// Finitely generated Z[s]-module, stored as a Z-presentation together with
/// the induced order-2 automorphism on the cokernel.
struct SigmaModule {
  FgAbelianGroup underlying;
  GroupHom sigma_action;

  bool sigma_is_involution() const;
  bool sigma_is_trivial() const;
  /// The module with trivial s-action on a given group.
  static SigmaModule with_trivial_sigma(const FgAbelianGroup& g);
};

/// Cokernel of a Z[s]-matrix through restriction of scalars: underlying
/// group of coker(doubled M) with the coordinate-swap automorphism
/// (multiplication by s) descended to the quotient.
SigmaModule coker_sigma(const SigmaMatrix& m);

/// Exact determinant over Z[s] via the evaluation pair.
SigmaScalar det_sigma(const SigmaMatrix& m);
inline bool is_unit(const SigmaScalar& x) { return x.is_unit(); }

/// Coinvariants: underlying/(s - 1) underlying.
FgAbelianGroup mod_sigma_minus_one(const SigmaModule& m);

/// Equivariant isomorphism h with h
/// sigma_M = sigma_N h, found by exhaustive
/// search; finite modules only.
std::optional<GroupHom> sigma_iso_decide(const SigmaModule& m,
                                         const SigmaModule& n);

/// Group of s-equivariant homomorphisms M -> N.
FgAbelianGroup hom_sigma(const SigmaModule& m, const SigmaModule& n);
/// (M (x) N) / (s m (x) n - m (x) s n).
FgAbelianGroup tensor_sigma(const SigmaModule& m, const SigmaModule& n);

}  // namespace lpa
