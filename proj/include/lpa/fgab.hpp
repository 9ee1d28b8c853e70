#pragma once

#include <functional>
#include <optional>

#include "lpa/intlin.hpp"

namespace lpa {

/// Finitely generated abelian group presented as Z^m / im(presentation).
///
/// The canonical form is Z^rank + Z/d_1 + ... + Z/d_t with d_i >= 2 and
/// d_i | d_{i+1}; canonical coordinates list the free coordinates first and
/// the torsion coordinates in ascending order.  `proj` maps an ambient
/// vector to its canonical coordinates; `gens` holds one ambient lift per
/// canonical generator.  Structural equality of (rank, factors) is the
/// isomorphism test.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  static FgAbelianGroup from_presentation(const IntMatrix& presentation);
  /// Abstract group with the given rank and invariant factors (which must
  /// already form a divisibility chain with every factor >= 2).
  static FgAbelianGroup make(size_t rank, std::vector<Int> factors);
  /// Canonicalize an arbitrary multiset of torsion orders plus a free rank.
  static FgAbelianGroup from_torsion_multiset(size_t rank,
                                              const std::vector<Int>& orders);
  static FgAbelianGroup trivial() { return make(0, {}); }

  size_t rank() const { return rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  const IntMatrix& presentation() const { return presentation_; }
  const IntMatrix& proj() const { return proj_; }
  const IntMatrix& gens() const { return gens_; }

  /// Number of canonical generators (rank + #factors).
  size_t gen_count() const { return rank_ + factors_.size(); }
  size_t ambient_dim() const { return presentation_.rows(); }
  bool is_trivial() const { return rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  bool is_free() const { return factors_.empty(); }
  /// Group order; nullopt when infinite.
  std::optional<Int> order() const;

  /// Relations among the canonical generators: one column d_i * e_i per
  /// torsion coordinate (gen_count() x #factors).
  IntMatrix canonical_relations() const;

  /// Canonical coordinates of an ambient vector, torsion reduced into
  /// [0, d_i).
  std::vector<Int> canonical_coords(const std::vector<Int>& ambient) const;
  /// Normalize a canonical coordinate vector in place conventions.
  std::vector<Int> normalize(std::vector<Int> coords) const;
  bool coords_are_zero(const std::vector<Int>& coords) const;
  std::vector<Int> zero() const {
    return std::vector<Int>(gen_count(), Int(0));
  }
  /// Order of the element with the given canonical coordinates (finite
  /// elements only; nullopt for infinite order).
  std::optional<Int> element_order(const std::vector<Int>& coords) const;

  /// All elements of a finite group, a deterministic odometer enumeration.
  std::vector<std::vector<Int>> elements() const;

  bool same_structure(const FgAbelianGroup& o) const {
    return rank_ == o.rank_ && factors_ == o.factors_;
  }
  /// "Z^r + Z/a + Z/b" style description.
  std::string to_string() const;

 private:
  size_t rank_ = 0;
  std::vector<Int> factors_;
  IntMatrix presentation_;
  IntMatrix proj_;
  IntMatrix gens_;
};

/// Homomorphism between canonical presentations: column i of `matrix` is the
/// image of the i-th canonical generator of `domain` in canonical
/// coordinates of `codomain`.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix);

  const FgAbelianGroup& domain() const { return dom_; }
  const FgAbelianGroup& codomain() const { return cod_; }
  const IntMatrix& matrix() const { return mat_; }

  /// A matrix defines a homomorphism iff it kills the domain relations
  /// modulo the codomain relations.
  bool is_well_defined() const;
  std::vector<Int> apply(const std::vector<Int>& coords) const;
  GroupHom compose(const GroupHom& inner) const;  // this after inner
  bool is_surjective() const;
  bool is_injective() const;
  bool is_isomorphism() const;
  /// Equal as maps (columns agree modulo codomain relations).
  bool equals(const GroupHom& o) const;

  static GroupHom identity(const FgAbelianGroup& g);
  static GroupHom zero(const FgAbelianGroup& dom, const FgAbelianGroup& cod);

 private:
  FgAbelianGroup dom_, cod_;
  IntMatrix mat_;
};

/// Cokernel of an integer matrix viewed as a map into its row space.
inline FgAbelianGroup cokernel(const IntMatrix& m) {
  return FgAbelianGroup::from_presentation(m);
}

/// Kernel of a map between presented groups, as an abstract group.
/// F maps Z^a/im(rel_dom) -> Z^b/im(rel_cod) on ambient coordinates.
FgAbelianGroup presented_kernel(const IntMatrix& F, const IntMatrix& rel_dom,
                                const IntMatrix& rel_cod);
FgAbelianGroup kernel_of_hom(const GroupHom& h);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Hom(A, B) by invariant-factor arithmetic:
/// Hom(Z,B)=B, Hom(Z/a,Z)=0, Hom(Z/a,Z/b)=Z/gcd(a,b).
FgAbelianGroup hom_group(const FgAbelianGroup& a, const FgAbelianGroup& b);
/// A (x) B by invariant-factor arithmetic.
FgAbelianGroup tensor_group(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Hom(A, B) together with explicit generator matrices, for computations
/// that need to evaluate or transform homomorphisms (for example the
/// equivariance constraint).  `express` maps a well-defined matrix to its
/// canonical coordinates in the hom group.
struct HomGroupBasis {
  FgAbelianGroup group;
  std::vector<IntMatrix> gen_matrices;
  std::function<std::vector<Int>(const IntMatrix&)> express;
};
HomGroupBasis hom_group_with_basis(const FgAbelianGroup& a,
                                   const FgAbelianGroup& b);

/// A homomorphism h: A -> B with h(a) = b, decided by integer linear
/// solvability against both presentations; nullopt when none exists.
std::optional<GroupHom> hom_exists_with_value(const FgAbelianGroup& A,
                                              const std::vector<Int>& a,
                                              const FgAbelianGroup& B,
                                              const std::vector<Int>& b);

/// An isomorphism h: A -> B with h(a) = b, found by exhaustive search over
/// generator images (finite groups only; throws UnsupportedInfiniteGroup on
/// positive rank and SearchCapExceeded past the desk-scale cap).
std::optional<GroupHom> iso_with_element_constraint(const FgAbelianGroup& A,
                                                    const std::vector<Int>& a,
                                                    const FgAbelianGroup& B,
                                                    const std::vector<Int>& b);

/// Exhaustive search for an isomorphism A -> B satisfying `accept`.
/// Candidate images are filtered by exact element order; the first hit in
/// deterministic enumeration order is returned.
std::optional<GroupHom> search_iso(
    const FgAbelianGroup& A, const FgAbelianGroup& B,
    const std::function<bool(const GroupHom&)>& accept);

/// The isomorphism taking canonical generators to canonical generators;
/// requires same_structure.
GroupHom canonical_iso(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Inverse of an isomorphism, found by integer linear solving.
GroupHom invert_iso(const GroupHom& h);

}  // namespace lpa
