#include "lpa/json_io.hpp"

namespace lpa {

json matrix_to_json(const IntMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t k = 0; k < m.cols(); ++k) entries.push_back(m.at(i, k).get_str());
  j["entries"] = entries;
  if (!m.row_labels.empty()) j["row_labels"] = m.row_labels;
  if (!m.col_labels.empty()) j["col_labels"] = m.col_labels;
  return j;
}

namespace {
Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(v.get<long>());
  if (v.is_string()) return Int(v.get<std::string>());
  throw ParseError("expected an integer or decimal string");
}
}  // namespace

IntMatrix matrix_from_json(const json& j) {
  try {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows * cols)
      throw ParseError("matrix entry count does not match dimensions");
    IntMatrix m(rows, cols);
    size_t idx = 0;
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) m.at(i, k) = int_from_json(entries[idx++]);
    if (j.contains("row_labels"))
      m.row_labels = j["row_labels"].get<std::vector<std::string>>();
    if (j.contains("col_labels"))
      m.col_labels = j["col_labels"].get<std::vector<std::string>>();
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad matrix json: ") + e.what());
  }
}

json group_to_json(const FgAbelianGroup& g) {
  json j;
  j["rank"] = g.rank();
  json f = json::array();
  for (const auto& d : g.invariant_factors()) f.push_back(d.get_str());
  j["factors"] = f;
  j["description"] = g.to_string();
  return j;
}

json hom_to_json(const GroupHom& h) {
  json j;
  j["domain"] = group_to_json(h.domain());
  j["codomain"] = group_to_json(h.codomain());
  j["matrix"] = matrix_to_json(h.matrix());
  return j;
}

json sigma_scalar_to_json(const SigmaScalar& s) {
  return {{"a", s.a.get_str()}, {"b", s.b.get_str()}, {"repr", s.to_string()}};
}

json sigma_matrix_to_json(const SigmaMatrix& m) {
  return {{"P", matrix_to_json(m.p())}, {"Q", matrix_to_json(m.q())}};
}

json sigma_module_to_json(const SigmaModule& m) {
  json j;
  j["group"] = group_to_json(m.underlying);
  j["sigma"] = matrix_to_json(m.sigma_action.matrix());
  return j;
}

json coords_to_json(const std::vector<Int>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

json pis_to_json(const PisReport& r) {
  json j;
  j["purely_infinite_simple"] = r.value;
  if (!r.value) {
    j["failed_condition"] = r.failed_condition;
    j["witness"] = r.witness;
  }
  return j;
}

json struct_descriptor_to_json(const StructDescriptor& d) {
  json j;
  j["singular"] = d.singular_count;
  j["free_rest"] = d.free_rest;
  json c = json::array();
  for (const auto& x : d.cycle_sizes) c.push_back(x.get_str());
  j["cycle_sizes"] = c;
  return j;
}

json sequence_ends_to_json(const SequenceEnds& e) {
  json j;
  j["left"] = group_to_json(e.left);
  j["right"] = group_to_json(e.right);
  if (e.middle) j["middle"] = group_to_json(*e.middle);
  j["split_reason"] = e.split_reason;
  return j;
}

json certificate_to_json(const ChainMapCertificate& c) {
  json j;
  j["mat_a"] = matrix_to_json(c.mat_a);
  j["mat_m"] = matrix_to_json(c.mat_m);
  j["f0"] = matrix_to_json(c.f0);
  j["f1"] = matrix_to_json(c.f1);
  j["xi0"] = hom_to_json(c.xi0);
  j["ker_a"] = matrix_to_json(c.ker_a);
  j["ker_m"] = matrix_to_json(c.ker_m);
  j["xi1"] = matrix_to_json(c.xi1);
  if (c.g0) j["g0"] = matrix_to_json(*c.g0);
  if (c.g1) j["g1"] = matrix_to_json(*c.g1);
  if (c.homotopy) j["homotopy"] = matrix_to_json(*c.homotopy);
  j["verified"] = verify_certificate(c);
  return j;
}

json certificate_to_json(const SigmaChainCertificate& c) {
  json j;
  j["mat_a"] = sigma_matrix_to_json(c.mat_a);
  j["mat_m"] = sigma_matrix_to_json(c.mat_m);
  j["f0"] = sigma_matrix_to_json(c.f0);
  j["f1"] = sigma_matrix_to_json(c.f1);
  j["xi0"] = hom_to_json(c.xi0);
  j["verified"] = verify_certificate_sigma(c);
  return j;
}

json classification_to_json(const ClassificationReport& r) {
  json j;
  j["pis_E"] = pis_to_json(r.pis_e);
  j["pis_F"] = pis_to_json(r.pis_f);
  j["bf_E"] = group_to_json(r.bf_e.group);
  j["bf_E"]["unit_class"] = coords_to_json(r.bf_e.unit_class);
  j["bf_F"] = group_to_json(r.bf_f.group);
  j["bf_F"]["unit_class"] = coords_to_json(r.bf_f.unit_class);
  j["bf_iso"] = r.bf_iso ? hom_to_json(*r.bf_iso) : json();
  j["unital_iso"] = r.unital_iso ? hom_to_json(*r.unital_iso) : json();
  if (!r.unital_note.empty()) j["unital_note"] = r.unital_note;
  j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json();
  if (!r.certificate_note.empty()) j["certificate_note"] = r.certificate_note;
  json th = json::array();
  for (const auto& t : r.theorems) {
    th.push_back({{"name", t.name},
                  {"conclusion", t.conclusion},
                  {"ring_hypotheses", t.ring_hypotheses},
                  {"graph_side_ok", t.graph_side_ok},
                  {"ring_side_asserted", t.ring_side_asserted},
                  {"applicable", t.applicable}});
  }
  j["theorems"] = th;
  j["asserted_flags"] = {{"regular_supercoherent", r.flags.regular_supercoherent},
                         {"two_invertible", r.flags.two_invertible},
                         {"minus_one_positive", r.flags.minus_one_positive}};
  return j;
}

json obstruction_to_json(const ObstructionReport& r) {
  json j;
  j["possible"] = r.possible;
  j["detail"] = r.detail;
  if (r.witness) j["witness"] = hom_to_json(*r.witness);
  return j;
}

json invariant_report(const std::string& graph_id, const Graph& g) {
  json j;
  j["graph_id"] = graph_id;
  BFData data = bf(g);
  j["bf"] = group_to_json(data.group);
  j["bf"]["unit_class"] = coords_to_json(data.unit_class);
  TwistedBFData tw = bf_twisted(g);
  j["bf_twisted"] = group_to_json(tw.module.underlying);
  j["bf_twisted"]["unit_class"] = coords_to_json(tw.unit_class);
  j["bf_twisted"]["sigma"] = matrix_to_json(tw.module.sigma_action.matrix());
  j["bf_dual"] = group_to_json(bf_dual(g).group);
  j["bf_twisted_dual"] = group_to_json(bf_twisted_dual(g).underlying);

  json dets;
  if (g.is_regular()) {
    IntMatrix a = g.incidence_matrix();
    IntMatrix id = IntMatrix::identity(a.rows());
    dets["det_i_minus_a"] = det(id - a).get_str();
    dets["det_i_plus_a"] = det(id + a).get_str();
    dets["det_sigma"] = sigma_scalar_to_json(det_sigma(twisted_bf_matrix(g)));
    BfOlbfCriterion c = bfolbf_criterion(g);
    dets["criterion_holds"] = c.holds;
  }
  j["dets"] = dets;

  PisReport pis = g.is_purely_infinite_simple();
  JhVanishing jh = jh_vanishes(g, CoeffRing::Zsigma);
  j["flags"] = {{"pis", pis.value},
                {"regular", g.is_regular()},
                {"essential", g.is_essential()},
                {"jh_vanishes_untwisted", jh.untwisted},
                {"jh_vanishes_twisted", jh.twisted}};
  if (!pis.value) j["flags"]["pis_failure"] = pis.failed_condition;
  j["canonical_form"] = struct_descriptor_to_json(canonical_form(g));
  return j;
}

CoefficientData coefficients_from_json(const json& j) {
  CoefficientData out;
  try {
    for (const auto& [key, val] : j.at("degrees").items()) {
      int n = std::stoi(key);
      size_t rank = val.value("rank", 0);
      std::vector<Int> factors;
      if (val.contains("factors"))
        for (const auto& f : val["factors"]) factors.push_back(int_from_json(f));
      FgAbelianGroup g = FgAbelianGroup::from_torsion_multiset(rank, factors);
      GroupHom sigma = GroupHom::identity(g);
      if (val.contains("sigma"))
        sigma = GroupHom(g, g, matrix_from_json(val["sigma"]));
      SigmaModule mod{g, sigma};
      if (!sigma.is_well_defined() || !mod.sigma_is_involution())
        throw ParseError("sigma action at degree " + key +
                         " is not an order-2 automorphism");
      out.kh.emplace(n, std::move(mod));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad coefficient json: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("coefficient degrees must be integers");
  }
  return out;
}

}  // namespace lpa
