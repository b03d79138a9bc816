#pragma once

#include <string>
#include <vector>

#include "twistr/liealg.hpp"
#include "twistr/weight.hpp"

namespace twistr {

/// Tensor factors: lambda_k (x) lambda_r for a2even, k lambda_1 (x) r lambda_1 for a2odd,
/// a lambda_l (x) b lambda_l for d2. Always p <= s.
struct TensorParams {
  int p = 1;
  int s = 1;
};

/// Identifies the irreducible module of the big algebra a component comes from.
struct LParent {
  std::vector<int> key;
  friend bool operator==(const LParent&, const LParent&) = default;
  friend auto operator<=>(const LParent&, const LParent&) = default;
  [[nodiscard]] std::string str() const;
};

struct BranchEntry {
  Weight nu;
  LParent parent;
  long dim = 0;
};

struct BranchingTable {
  FamilySpec spec;
  TensorParams params;
  Weight lambda, mu;
  std::vector<BranchEntry> entries;  // top component first

  [[nodiscard]] const BranchEntry& find(const Weight& nu) const;
  [[nodiscard]] Weight top() const { return lambda + mu; }
};

/// Highest weights of the two factors.
Weight factor_weight(const FamilySpec& spec, int p);
void validate_params(const FamilySpec& spec, const TensorParams& tp);

BranchingTable decompose_tensor_closed_form(const FamilySpec& spec, const TensorParams& tp);
LParent l_parent_of(const BranchingTable& table, const Weight& nu);

/// Weight multiset of the theta_0 module, built from the defining module.
std::vector<Weight> theta0_weights(const FamilySpec& spec);
/// Multiplicity of V(nu') in V(theta_0) (x) V(nu) by Klimyk's rule.
long theta_tensor_multiplicity(const FamilySpec& spec, const Weight& nu, const Weight& nu_prime);
bool contains_in_theta_tensor(const FamilySpec& spec, const Weight& nu, const Weight& nu_prime);

}  // namespace twistr
