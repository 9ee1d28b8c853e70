#pragma once

#include "lpa/graph.hpp"
#include "lpa/sigma.hpp"

namespace lpa {

/// Bowen-Franks data of a graph: the group, the class of sum_v [v] in
/// canonical coordinates, and which presentation produced it.
struct BFData {
  FgAbelianGroup group;
  std::vector<Int> unit_class;
  std::string source;
};

/// Twisted Bowen-Franks data: the Z[s]-module plus the class of
/// sum_v [v] (the level-0 diagonal of the doubled presentation).
struct TwistedBFData {
  SigmaModule module;
  std::vector<Int> unit_class;
};

/// I - s*A_E^t as a sigma matrix (rows E^0, columns reg(E)).
SigmaMatrix twisted_bf_matrix(const Graph& g);
/// I^t - s*A_E (rows reg(E), columns E^0).
SigmaMatrix twisted_bf_dual_matrix(const Graph& g);

BFData bf(const Graph& g);
BFData bf_dual(const Graph& g);
TwistedBFData bf_twisted(const Graph& g);
SigmaModule bf_twisted_dual(const Graph& g);

enum class CoeffRing { Z, Zsigma };

struct JhVanishing {
  bool untwisted = false;
  bool twisted = false;
};
/// Vanishing criteria with coefficients in Z or Z[s]: both demand a regular
/// graph; untwisted asks det(I - A^t) to be a unit, twisted asks
/// det(I - s*A^t) to be a unit of the coefficient ring.
JhVanishing jh_vanishes(const Graph& g, CoeffRing coeff);

/// Data (s, r - s, [d_i + 1]) describing the canonical direct-sum shape
/// determined by the singular count and the Bowen-Franks invariants.
struct StructDescriptor {
  size_t singular_count = 0;
  size_t free_rest = 0;
  std::vector<Int> cycle_sizes;
};
StructDescriptor canonical_form(const Graph& g);

/// Determinant criterion for a regular graph with incidence matrix A:
/// det(I + A) a unit and det(I - A) neither zero nor a unit.
struct BfOlbfCriterion {
  Int det_plus;
  Int det_minus;
  bool det_plus_unit = false;
  bool det_minus_nonunit_nonzero = false;
  bool holds = false;
};
BfOlbfCriterion bfolbf_criterion(const Graph& g);

}  // namespace lpa
