#pragma once

#include <map>
#include <vector>

#include "twistr/qrep.hpp"
#include "twistr/rational.hpp"
#include "twistr/weight.hpp"

namespace twistr {

enum class Gen { E, F, KPlus, KMinus };

struct GenId {
  Gen kind;
  int index;
};

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);
/// Flip V (x) W -> W (x) V for dim V = dv, dim W = dw.
Matrix flip(int dv, int dw);

/// V_lambda (x) V_mu with product basis index a*dim(mu) + b.
class TensorModule {
 public:
  TensorModule(Representation left, Representation right);

  [[nodiscard]] const Representation& left() const { return left_; }
  [[nodiscard]] const Representation& right() const { return right_; }
  [[nodiscard]] int dim() const { return left_.dim() * right_.dim(); }
  [[nodiscard]] const std::vector<Weight>& weights() const { return weights_; }
  [[nodiscard]] bool classical() const { return left_.classical(); }

  /// Delta^u(x), or the opposite coproduct Delta^{T,u}(x) when opposite is set.
  /// u enters only through e_0 (factor u) and f_0 (factor 1/u) on the first tensor factor.
  [[nodiscard]] Matrix coproduct_action(GenId g, const Rational& u = Rational(1), bool opposite = false) const;

 private:
  Representation left_, right_;
  std::vector<Weight> weights_;
};

struct Component {
  Weight nu;
  long dim = 0;
  Matrix basis;      // columns span the component
  Matrix projector;  // idempotent onto the component along the others
};

struct IsotypicDecomposition {
  std::vector<Component> components;  // ordered from the top weight down
  [[nodiscard]] const Component& at(const Weight& nu) const;
  [[nodiscard]] bool contains(const Weight& nu) const;
};

/// Highest weight vectors per weight space, components generated by Delta(f_i), exact projectors.
IsotypicDecomposition decompose(const TensorModule& t);

/// Eigenvalue of the flip on each component of V (x) V at q = 1.
std::map<Weight, int> classical_parity_signs(const TensorModule& t, const IsotypicDecomposition& dec);

}  // namespace twistr
