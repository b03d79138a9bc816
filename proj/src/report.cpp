#include "twistr/report.hpp"

namespace twistr {

Json matrix_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json e = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) e.push_back({r, c, m(r, c).str()});
  j["entries"] = std::move(e);
  return j;
}

Json spec_json(const FamilySpec& spec) {
  Json j;
  j["family"] = family_name(spec.family);
  j["l"] = spec.l;
  j["n"] = spec.n;
  j["fixed_subalgebra"] = root_type_name(spec.l0, spec.l);
  j["theta0"] = spec.theta0.str();
  Json roots = Json::array();
  for (const auto& r : spec.simple_roots) roots.push_back(r.str());
  j["simple_roots"] = std::move(roots);
  j["rho0"] = spec.rho0.str();
  return j;
}

Json generators_json(const GeneratorSet& g) {
  Json j = Json::array();
  for (int i = 0; i <= g.rank(); ++i) {
    const auto I = static_cast<std::size_t>(i);
    j.push_back({{"index", i}, {"E", matrix_json(g.E[I])}, {"F", matrix_json(g.F[I])}, {"H", matrix_json(g.H[I])}});
  }
  return j;
}

Json rep_json(const Representation& rep) {
  Json j;
  j["spec"] = spec_json(rep.spec);
  j["highest_weight"] = rep.highest.str();
  j["dimension"] = rep.dim();
  j["w"] = rep.sample ? rep.sample->w().str() : "classical";
  Json w = Json::array();
  for (const auto& x : rep.weights) w.push_back(x.str());
  j["weights"] = std::move(w);
  Json gens = Json::array();
  for (int i = 0; i <= rep.rank(); ++i) {
    const auto I = static_cast<std::size_t>(i);
    Json kp = Json::array();
    for (const auto& v : rep.kplus[I]) kp.push_back(v.str());
    gens.push_back({{"index", i}, {"e", matrix_json(rep.e[I])}, {"f", matrix_json(rep.f[I])}, {"q^(h/2)", std::move(kp)}});
  }
  j["generators"] = std::move(gens);
  return j;
}

Json relation_json(const RelationReport& r) {
  Json j;
  long passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  j["checked"] = r.checks.size();
  j["passed"] = passed;
  Json fails = Json::array();
  for (const auto& c : r.checks)
    if (!c.pass) fails.push_back({{"relation", c.name}, {"residual", matrix_json(c.residual)}});
  j["failures"] = std::move(fails);
  return j;
}

Json branching_json(const BranchingTable& t) {
  Json j;
  j["family"] = family_name(t.spec.family);
  j["l"] = t.spec.l;
  j["lambda"] = weight_label(t.spec, t.lambda);
  j["mu"] = weight_label(t.spec, t.mu);
  Json comps = Json::array();
  for (const auto& e : t.entries)
    comps.push_back({{"component", weight_label(t.spec, e.nu)}, {"weight", e.nu.str()}, {"dim", e.dim}, {"parent", e.parent.str()}});
  j["components"] = std::move(comps);
  return j;
}

Json decomposition_json(const FamilySpec& spec, const IsotypicDecomposition& dec, const std::map<Weight, int>& parity) {
  Json j = Json::array();
  for (const auto& c : dec.components) {
    Json e{{"component", weight_label(spec, c.nu)}, {"weight", c.nu.str()}, {"dim", c.dim},
           {"casimir", casimir_eigenvalue(spec, c.nu).str()}};
    const auto it = parity.find(c.nu);
    if (it != parity.end()) e["parity"] = it->second;
    j.push_back(std::move(e));
  }
  return j;
}

Json rmatrix_json(const RMatrixResult& r) {
  Json j;
  j["w"] = r.w ? r.w->str() : "classical";
  j["u"] = r.u.str();
  j["normalization"] = "R = 1 on the product of highest weight vectors";
  j["unknowns"] = r.unknowns;
  j["equations"] = r.equations;
  j["nullity"] = r.nullity;
  j["R"] = matrix_json(r.R);
  return j;
}

}  // namespace twistr
