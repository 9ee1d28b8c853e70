#pragma once

#include "json.hpp"
#include "lpa/classify.hpp"
#include "lpa/homology.hpp"
#include "lpa/terms.hpp"

namespace lpa {

using nlohmann::json;

Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

/// {rows, cols, entries (row-major decimal strings), row_labels?, col_labels?}
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json group_to_json(const FgAbelianGroup& g);
json hom_to_json(const GroupHom& h);
json sigma_scalar_to_json(const SigmaScalar& s);
json sigma_matrix_to_json(const SigmaMatrix& m);
json sigma_module_to_json(const SigmaModule& m);
json coords_to_json(const std::vector<Int>& v);

json pis_to_json(const PisReport& r);
json struct_descriptor_to_json(const StructDescriptor& d);
json sequence_ends_to_json(const SequenceEnds& e);
/// Re-verifies before stamping `verified`.
json certificate_to_json(const ChainMapCertificate& c);
json certificate_to_json(const SigmaChainCertificate& c);
json classification_to_json(const ClassificationReport& r);
json obstruction_to_json(const ObstructionReport& r);

/// Full invariant report for one graph.
json invariant_report(const std::string& graph_id, const Graph& g);

/// Coefficient data: {"degrees": {"0": {rank, factors, sigma?}, ...}};
/// sigma defaults to the identity and must square to it.
CoefficientData coefficients_from_json(const json& j);

}  // namespace lpa
