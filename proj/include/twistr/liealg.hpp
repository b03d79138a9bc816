#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistr/rational.hpp"
#include "twistr/weight.hpp"

namespace twistr {

enum class Family { A2Even, A2Odd, D2 };

/// Classical root systems in the epsilon basis. D is only used for so(2l+2) itself.
enum class RootType { B, C, D };

std::string family_name(Family f);  // "a2even", "a2odd", "d2"
Family parse_family(const std::string& s);
std::string root_type_name(RootType t, int rank);  // "B2", "C3", ...

/// Classical data of one twisted family at rank l.
struct FamilySpec {
  Family family{};
  int l = 0;
  int n = 0;                        // size of the ambient gl(n)
  RootType l0{};                    // type of the fixed subalgebra
  Weight theta0;                    // highest weight of the e0 tensor operator
  std::vector<Weight> simple_roots;  // index 0 is the affine root, 1..l finite
  Weight rho0;

  /// a_ij = 2(a_i,a_j)/(a_i,a_i).
  [[nodiscard]] int cartan(int i, int j) const;
  /// Seed highest weight: vector for A-families, spinor for D.
  [[nodiscard]] Weight seed_weight() const;
};

FamilySpec family_spec(Family f, int l);

/// Weyl vector of the given type at rank r.
Weight weyl_vector(RootType t, int r);
bool is_dominant(RootType t, const Weight& nu);
/// Brings x into the closed dominant chamber. Returns nullopt when x lies on a wall,
/// otherwise the image and det of the Weyl group element used.
std::optional<std::pair<int, Weight>> reflect_to_dominant(RootType t, const Weight& x);
long weyl_dim(RootType t, const Weight& nu);
/// (nu, nu + 2 rho).
Rational casimir(RootType t, const Weight& nu);
Rational casimir_eigenvalue(const FamilySpec& spec, const Weight& nu);

/// Weights of the defining module of the given type, with multiplicity.
std::vector<Weight> vector_weights(RootType t, int r);

/// Weight written in the lambda basis used for the family, e.g. "2λ1+λ2".
/// For d2 the last fundamental weight is the spinor weight; otherwise lambda_k = eps_1+...+eps_k.
std::string weight_label(const FamilySpec& spec, const Weight& nu);

/// Chevalley-type generators as n x n matrices. Index 0 is the affine node.
struct GeneratorSet {
  std::vector<Matrix> E, F, H;
  [[nodiscard]] int rank() const { return static_cast<int>(E.size()) - 1; }
};

/// Matrix unit e_ij (1-based) in gl(n).
Matrix matrix_unit(int n, int i, int j);
Matrix commutator(const Matrix& a, const Matrix& b);

GeneratorSet kac_generators(const FamilySpec& spec);
/// Weight of each basis vector of the ambient gl(n) module under the fixed subalgebra.
std::vector<Weight> ambient_weights(const FamilySpec& spec);

struct RelationCheck {
  std::string name;
  bool pass = false;
  Matrix residual;  // empty when pass
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] const RelationCheck* first_failure() const;
};

/// Cartan commutators, [E_i,F_j] = delta_ij H_i, Serre relations.
RelationReport check_classical_relations(const GeneratorSet& g, const FamilySpec& spec);

}  // namespace twistr
