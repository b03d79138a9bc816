#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistr/qrep.hpp"
#include "twistr/rational.hpp"
#include "twistr/tensor.hpp"

namespace twistr {

struct RMatrixResult {
  Matrix R;       // on V_lambda (x) V_mu
  Matrix Rcheck;  // P R : V_lambda (x) V_mu -> V_mu (x) V_lambda
  std::optional<Rational> w;  // empty at q = 1
  Rational u;
  int unknowns = 0;
  int equations = 0;
  int nullity = 0;
};

/// Solves R Delta^u(a) = Delta^{T,u}(a) R for a in {e_i, f_i (i >= 1), e_0}, R block diagonal
/// by total weight, normalized by R = 1 on the product of the two highest weight vectors.
/// Throws InconsistentSystem (no solution) or NonGenericSample (solution space dimension >= 2).
RMatrixResult solve_rmatrix(const Representation& lambda, const Representation& mu, const Rational& u);

/// Every intertwining relation, including f_0 and q^{h_i/2}, which the solve does not impose.
bool satisfies_all_intertwiners(const RMatrixResult& r, const Representation& lambda, const Representation& mu);

struct YbeReport {
  bool pass = false;
  Rational max_residual;  // largest |entry| of LHS - RHS
  long nonzero_entries = 0;
  int dim = 0;
};

/// R12(u) R13(uv) R23(v) = R23(v) R13(uv) R12(u) on V1 (x) V2 (x) V3.
YbeReport check_ybe(const Representation& v1, const Representation& v2, const Representation& v3, const Rational& u,
                    const Rational& v);
/// Same check from already solved matrices.
YbeReport check_ybe(const RMatrixResult& r12, const RMatrixResult& r13, const RMatrixResult& r23, int d1, int d2,
                    int d3);

/// Rcheck^{lambda mu}(u) Rcheck^{mu lambda}(1/u) = I.
bool check_unitarity(const RMatrixResult& at_u, const RMatrixResult& at_inv_u);

struct SpectralMismatch {
  Weight nu;
  Rational expected;
  std::string detail;
};

struct SpectralReport {
  bool pass = false;
  std::vector<SpectralMismatch> mismatches;
  std::map<Weight, Rational> measured;  // eigenvalue of Rcheck(u) Rcheck(1)^{-1} per component
};

/// Rcheck(u) Rcheck(1)^{-1} = sum_nu rho_nu(u) P_nu with rho from an eigenvalue table at the same (w, u).
SpectralReport spectral_compare(const RMatrixResult& at_u, const RMatrixResult& at_one, const IsotypicDecomposition& dec,
                                const std::map<Weight, Rational>& rho);

/// Eigenvalue (+1 or -1) of the q = 1 solution on each classical component of V (x) V.
std::map<Weight, int> parity_spectrum(const RMatrixResult& classical, const IsotypicDecomposition& classical_dec);

}  // namespace twistr
