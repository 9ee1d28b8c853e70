#pragma once

#include "lpa/invariants.hpp"

namespace lpa {

/// Chain map between the two-term complexes presented by mat_a and mat_m,
/// together with the data certifying that it is a quasi-isomorphism:
/// a commuting square f0 * mat_a = mat_m * f1, the induced isomorphism xi0
/// on cokernels, and the induced isomorphism xi1 on kernels (given against
/// the stored kernel bases).  When present, (g0, g1) is the reverse chain
/// map built from the inverse of xi0 and `homotopy` satisfies
///   homotopy * mat_a = 1 - g1 * f1,   mat_a * homotopy = 1 - g0 * f0.
struct ChainMapCertificate {
  IntMatrix mat_a;
  IntMatrix mat_m;
  IntMatrix f0;
  IntMatrix f1;
  GroupHom xi0;
  IntMatrix ker_a;
  IntMatrix ker_m;
  IntMatrix xi1;
  std::optional<IntMatrix> g0;
  std::optional<IntMatrix> g1;
  std::optional<IntMatrix> homotopy;
  bool verified = false;
};

/// Lift an isomorphism of cokernels to a full quasi-isomorphism
/// certificate.  xi0 must map cokernel(mat_a) to cokernel(mat_m); the two
/// kernels must have equal rank.  The construction is deterministic:
/// image sections and generator lifts are canonical Hermite-form choices.
ChainMapCertificate lift_iso(const IntMatrix& mat_a, const IntMatrix& mat_m,
                             const GroupHom& xi0);

/// Independent re-verification of every certificate invariant.  Never
/// trusts the `verified` flag.
bool verify_certificate(const ChainMapCertificate& c);

/// Quasi-isomorphism certificate over Z[s].  Requires both doubled
/// differentials to be injective, in which case f1 is the unique solution
/// of mat_m * f1 = f0 * mat_a.
struct SigmaChainCertificate {
  SigmaMatrix mat_a;
  SigmaMatrix mat_m;
  SigmaMatrix f0;
  SigmaMatrix f1;
  GroupHom xi0;  // on the doubled cokernels
  bool verified = false;
};

SigmaChainCertificate lift_iso_sigma(const SigmaMatrix& mat_a,
                                     const SigmaMatrix& mat_m,
                                     const GroupHom& xi0);

bool verify_certificate_sigma(const SigmaChainCertificate& c);

struct LiftOutcome {
  std::optional<ChainMapCertificate> certificate;
  std::string reason;
};

/// Certificate for some cokernel isomorphism between the Bowen-Franks
/// presentations of E and F, when the singular counts agree and the groups
/// are isomorphic; otherwise absent with the failing hypothesis named.
LiftOutcome kk_iso_exists(const Graph& e, const Graph& f);

struct TwistedLiftOutcome {
  std::optional<SigmaChainCertificate> certificate;
  std::string reason;
};

/// Twisted analogue: searches for an equivariant isomorphism of the
/// twisted Bowen-Franks modules and lifts it.  Throws KernelNonzero when a
/// doubled presentation is not injective (lifting unsupported there).
TwistedLiftOutcome kk_iso_exists_twisted(const Graph& e, const Graph& f);

}  // namespace lpa
