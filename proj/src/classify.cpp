#include "lpa/classify.hpp"

namespace lpa {

ClassificationReport classify_pair(const Graph& e, const Graph& f,
                                   const RingFlags& flags) {
  ClassificationReport rep;
  rep.flags = flags;
  rep.pis_e = e.is_purely_infinite_simple();
  rep.pis_f = f.is_purely_infinite_simple();
  rep.bf_e = bf(e);
  rep.bf_f = bf(f);

  if (rep.bf_e.group.same_structure(rep.bf_f.group))
    rep.bf_iso = canonical_iso(rep.bf_e.group, rep.bf_f.group);

  if (rep.bf_iso) {
    if (rep.bf_e.group.is_finite()) {
      rep.unital_iso = iso_with_element_constraint(
          rep.bf_e.group, rep.bf_e.unit_class, rep.bf_f.group,
          rep.bf_f.unit_class);
      rep.unital_note = rep.unital_iso
                            ? "isomorphism matching the unit classes found"
                            : "no isomorphism matches the unit classes";
    } else {
      rep.unital_note = "unit-class matching unsupported for infinite BF";
    }
  }

  if (rep.bf_iso) {
    if (e.sink_indices().size() == f.sink_indices().size()) {
      const GroupHom& xi0 = rep.unital_iso ? *rep.unital_iso : *rep.bf_iso;
      rep.certificate = lift_iso(e.bf_matrix(), f.bf_matrix(), xi0);
      rep.certificate_note = rep.unital_iso
                                 ? "certificate realizes the unit-preserving "
                                   "isomorphism"
                                 : "certificate realizes the canonical "
                                   "invariant-factor matching";
    } else {
      rep.certificate_note = "singular vertex counts differ; no lift";
    }
  }

  bool graph_side = rep.pis_e.value && rep.pis_f.value && rep.bf_iso.has_value();
  auto add = [&](std::string name, std::string conclusion,
                 std::vector<std::string> hyp, bool asserted) {
    TheoremApplicability t;
    t.name = std::move(name);
    t.conclusion = std::move(conclusion);
    t.ring_hypotheses = std::move(hyp);
    t.graph_side_ok = graph_side;
    t.ring_side_asserted = asserted;
    t.applicable = graph_side && asserted;
    rep.theorems.push_back(std::move(t));
  };
  add("involutive_stable",
      "involution-preserving homotopy equivalence after matrix stabilization",
      {"regular_supercoherent", "two_invertible"},
      flags.regular_supercoherent && flags.two_invertible);
  add("involutive_unital",
      "involution-preserving homotopy equivalence; unital when the unit "
      "classes match",
      {"regular_supercoherent", "two_invertible", "minus_one_positive"},
      flags.regular_supercoherent && flags.two_invertible &&
          flags.minus_one_positive);
  add("plain_homotopy",
      "homotopy equivalence ignoring involutions; unital when the unit "
      "classes match",
      {"regular_supercoherent"}, flags.regular_supercoherent);
  return rep;
}

ObstructionReport graded_hom_obstruction(const Graph& e, const Graph& f) {
  TwistedBFData te = bf_twisted(e);
  TwistedBFData tf = bf_twisted(f);
  ObstructionReport rep;
  rep.witness = hom_exists_with_value(te.module.underlying, te.unit_class,
                                      tf.module.underlying, tf.unit_class);
  rep.possible = rep.witness.has_value();
  if (rep.possible) {
    rep.detail =
        "a homomorphism of twisted Bowen-Franks groups carries unit class "
        "to unit class";
  } else {
    rep.detail = "no homomorphism " + te.module.underlying.to_string() +
                 " -> " + tf.module.underlying.to_string() +
                 " takes the unit class to the unit class; no unital "
                 "even/odd-graded homomorphism can exist";
  }
  return rep;
}

}  // namespace lpa
