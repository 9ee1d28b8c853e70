#pragma once

#include <map>
#include <optional>

#include "lpa/invariants.hpp"

namespace lpa {

/// Coefficient data: one Z[s]-module per homological degree.
struct CoefficientData {
  std::map<int, SigmaModule> kh;

  const SigmaModule& degree(int n) const;
  bool has_degree(int n) const { return kh.count(n) > 0; }
};

/// End terms of a short exact sequence.  `middle` is present only when the
/// extension is forced (one end vanishes or the right end is free); the
/// toolkit never guesses an extension class.
struct SequenceEnds {
  FgAbelianGroup left;
  FgAbelianGroup right;
  std::optional<FgAbelianGroup> middle;
  std::string split_reason;
};

/// End terms of the degree-n sequence
///   0 -> BF (x) KH_n -> KH_n(L(E) (x) R) -> ker((I - A^t) (x) KH_{n-1}) -> 0
/// (twisted variant over Z[s]).
SequenceEnds kh_ends(const Graph& g, const CoefficientData& coeff, int n,
                     bool twisted);

/// End terms of the universal-coefficient sequence
///   0 -> KH_1 (x) BF_dual -> kk(L(E), R) -> Hom(BF, KH_0) -> 0
/// (twisted variant with equivariant Hom and tensor over Z[s]).
SequenceEnds uct_ends(const Graph& g, const CoefficientData& coeff,
                      bool twisted);

}  // namespace lpa
