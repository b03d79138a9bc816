#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "twistr/branching.hpp"
#include "twistr/jimbo.hpp"
#include "twistr/qrep.hpp"
#include "twistr/tensor.hpp"
#include "twistr/tpg.hpp"

namespace twistr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "twistr-report/1";

/// Sparse triplets [[row, col, "p/q"], ...] in row-major order.
Json matrix_json(const Matrix& m);
Json spec_json(const FamilySpec& spec);
Json generators_json(const GeneratorSet& g);
Json rep_json(const Representation& rep);
Json relation_json(const RelationReport& r);
Json branching_json(const BranchingTable& t);
/// (nu, dim, Casimir, parity if known) per component.
Json decomposition_json(const FamilySpec& spec, const IsotypicDecomposition& dec, const std::map<Weight, int>& parity = {});
Json rmatrix_json(const RMatrixResult& r);

template <typename S>
Json eigenvalues_json(const FamilySpec& spec, const std::map<Weight, S>& values) {
  Json j = Json::array();
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    j.push_back({{"component", weight_label(spec, it->first)}, {"weight", it->first.str()}, {"rho", to_string(it->second)}});
  return j;
}

}  // namespace twistr
