#include "lpa/invariants.hpp"

namespace lpa {

SigmaMatrix twisted_bf_matrix(const Graph& g) {
  auto reg = g.regular_indices();
  IntMatrix a = g.incidence_matrix();
  IntMatrix p(g.vertices().size(), reg.size());
  IntMatrix q(g.vertices().size(), reg.size());
  for (size_t v = 0; v < g.vertices().size(); ++v)
    for (size_t j = 0; j < reg.size(); ++j) {
      p.at(v, j) = reg[j] == v ? 1 : 0;
      q.at(v, j) = -a.at(j, v);
    }
  p.row_labels = g.vertices();
  for (size_t j : reg) p.col_labels.push_back(g.vertices()[j]);
  return {p, q};
}

SigmaMatrix twisted_bf_dual_matrix(const Graph& g) {
  auto reg = g.regular_indices();
  IntMatrix a = g.incidence_matrix();
  IntMatrix p(reg.size(), g.vertices().size());
  IntMatrix q(reg.size(), g.vertices().size());
  for (size_t j = 0; j < reg.size(); ++j)
    for (size_t v = 0; v < g.vertices().size(); ++v) {
      p.at(j, v) = reg[j] == v ? 1 : 0;
      q.at(j, v) = -a.at(j, v);
    }
  for (size_t j : reg) p.row_labels.push_back(g.vertices()[j]);
  p.col_labels = g.vertices();
  return {p, q};
}

BFData bf(const Graph& g) {
  IntMatrix m = g.bf_matrix();
  FgAbelianGroup grp = FgAbelianGroup::from_presentation(m);
  std::vector<Int> ones(m.rows(), Int(1));
  return {grp, grp.canonical_coords(ones), "I-A^t"};
}

BFData bf_dual(const Graph& g) {
  IntMatrix m = g.bf_dual_matrix();
  FgAbelianGroup grp = FgAbelianGroup::from_presentation(m);
  std::vector<Int> ones(m.rows(), Int(1));
  return {grp, grp.canonical_coords(ones), "I^t-A"};
}

TwistedBFData bf_twisted(const Graph& g) {
  SigmaModule mod = coker_sigma(twisted_bf_matrix(g));
  // sum_v [v]: ones on the level-0 half of the doubled ambient basis.
  const size_t n = g.vertices().size();
  std::vector<Int> amb(2 * n, Int(0));
  for (size_t v = 0; v < n; ++v) amb[v] = 1;
  return {mod, mod.underlying.canonical_coords(amb)};
}

SigmaModule bf_twisted_dual(const Graph& g) {
  return coker_sigma(twisted_bf_dual_matrix(g));
}

JhVanishing jh_vanishes(const Graph& g, CoeffRing coeff) {
  JhVanishing out;
  if (!g.is_regular()) return out;
  IntMatrix a = g.incidence_matrix();
  IntMatrix iat = IntMatrix::identity(a.rows()) - a.transpose();
  out.untwisted = abs(det(iat)) == 1;
  SigmaScalar d = det_sigma(twisted_bf_matrix(g));
  out.twisted =
      coeff == CoeffRing::Zsigma ? d.is_unit() : abs(d.eval_plus()) == 1;
  return out;
}

StructDescriptor canonical_form(const Graph& g) {
  BFData data = bf(g);
  StructDescriptor d;
  d.singular_count = g.sink_indices().size();
  internal_check(data.group.rank() >= d.singular_count,
                 "every sink contributes a free generator");
  d.free_rest = data.group.rank() - d.singular_count;
  for (const auto& f : data.group.invariant_factors())
    d.cycle_sizes.push_back(f + 1);
  return d;
}

BfOlbfCriterion bfolbf_criterion(const Graph& g) {
  if (!g.is_regular())
    throw NotRegular("determinant criterion needs a regular graph");
  IntMatrix a = g.incidence_matrix();
  IntMatrix id = IntMatrix::identity(a.rows());
  BfOlbfCriterion c;
  c.det_plus = det(id + a);
  c.det_minus = det(id - a);
  c.det_plus_unit = abs(c.det_plus) == 1;
  c.det_minus_nonunit_nonzero = c.det_minus != 0 && abs(c.det_minus) != 1;
  c.holds = c.det_plus_unit && c.det_minus_nonunit_nonzero;
  return c;
}

}  // namespace lpa
