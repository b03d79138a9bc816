#pragma once

#include <optional>
#include <vector>

#include "twistr/liealg.hpp"
#include "twistr/rational.hpp"
#include "twistr/scalars.hpp"
#include "twistr/weight.hpp"

namespace twistr {

/// Images of e_i, f_i, q^{+-h_i/2} (i = 0..l) on a seed module, in the weight basis.
/// Basis vector 0 carries the highest weight.
struct Representation {
  FamilySpec spec;
  Weight highest;
  std::vector<Weight> weights;
  std::vector<Matrix> e, f;
  std::vector<std::vector<Rational>> h;       // classical (weight, alpha_i)
  std::vector<std::vector<Rational>> kplus;   // q^{h_i/2}
  std::vector<std::vector<Rational>> kminus;  // q^{-h_i/2}
  std::optional<QSample> sample;              // empty: classical point q = 1

  [[nodiscard]] int dim() const { return static_cast<int>(weights.size()); }
  [[nodiscard]] int rank() const { return spec.l; }
  [[nodiscard]] bool classical() const { return !sample.has_value(); }
  /// Diagonal matrix of q^{sign*h_i/2}.
  [[nodiscard]] Matrix k(int i, int sign) const;
};

/// Seed module with the quantum normalization at w; the e's are the classical matrices.
Representation build_seed_rep(const FamilySpec& spec, const QSample& w);
/// The same module at q = 1 (all q^{h/2} equal to the identity).
Representation build_classical_rep(const FamilySpec& spec);

/// e_i, f_i and the diagonal h_i as matrices.
GeneratorSet generator_matrices(const Representation& rep);

/// Cartan relations, [e_i,f_j] q-relation and quantum Serre relations at the module's sample.
RelationReport check_quantum_relations(const Representation& rep);

/// Orbit check for the finite subalgebra: every basis vector generates the whole
/// module under e_i, f_i (i >= 1).
bool finite_part_irreducible(const Representation& rep);

}  // namespace twistr
