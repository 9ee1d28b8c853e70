#pragma once

#include "lpa/lifting.hpp"

namespace lpa {

/// Ground-ring facts the caller asserts; the toolkit only decides the
/// graph-side hypotheses and echoes these flags back in the report.
struct RingFlags {
  bool regular_supercoherent = false;
  bool two_invertible = false;
  bool minus_one_positive = false;
};

/// One classification statement: its graph-side status plus the ring-side
/// hypotheses it would additionally need.
struct TheoremApplicability {
  std::string name;
  std::string conclusion;
  std::vector<std::string> ring_hypotheses;
  bool graph_side_ok = false;
  bool ring_side_asserted = false;
  bool applicable = false;
};

struct ClassificationReport {
  PisReport pis_e;
  PisReport pis_f;
  BFData bf_e;
  BFData bf_f;
  std::optional<GroupHom> bf_iso;
  std::optional<GroupHom> unital_iso;
  std::string unital_note;
  std::optional<ChainMapCertificate> certificate;
  std::string certificate_note;
  std::vector<TheoremApplicability> theorems;
  RingFlags flags;
};

/// Decide every graph-side classification hypothesis for the pair (E, F):
/// pure infinite simplicity, existence of a Bowen-Franks isomorphism, a
/// unit-class-preserving isomorphism when the groups are finite, and a
/// chain-level certificate realizing the isomorphism that was found.
ClassificationReport classify_pair(const Graph& e, const Graph& f,
                                   const RingFlags& flags = {});

struct ObstructionReport {
  bool possible = false;
  std::string detail;
  std::optional<GroupHom> witness;
};

/// Necessary condition for a unital even/odd-graded homomorphism from the
/// algebra of E to the algebra of F: a group homomorphism of twisted
/// Bowen-Franks groups taking unit class to unit class.  `possible = false`
/// certifies non-existence under the ground-ring hypotheses.
ObstructionReport graded_hom_obstruction(const Graph& e, const Graph& f);

}  // namespace lpa
