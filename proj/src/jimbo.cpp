#include "twistr/jimbo.hpp"

#include <Eigen/SparseCore>

#include "twistr/errors.hpp"
#include "twistr/linsolve.hpp"

namespace twistr {

namespace {

struct Generator {
  GenId id;
  Weight shift;
};

std::vector<Generator> imposed_generators(const FamilySpec& spec) {
  std::vector<Generator> g;
  for (int i = 1; i <= spec.l; ++i) {
    g.push_back({{Gen::E, i}, spec.simple_roots[static_cast<std::size_t>(i)]});
    g.push_back({{Gen::F, i}, -spec.simple_roots[static_cast<std::size_t>(i)]});
  }
  g.push_back({{Gen::E, 0}, spec.simple_roots[0]});
  return g;
}

using Entries = std::vector<std::pair<int, Rational>>;

void merge_into(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
    else out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
  row = std::move(out);
}

}  // namespace

RMatrixResult solve_rmatrix(const Representation& lambda, const Representation& mu, const Rational& u) {
  const TensorModule t(lambda, mu);
  const int d = t.dim();
  const auto& wts = t.weights();
  std::map<Weight, std::vector<int>> blocks;
  for (int a = 0; a < d; ++a) blocks[wts[static_cast<std::size_t>(a)]].push_back(a);

  // unknown ids for weight-preserving entries only
  std::vector<int> id(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), -1);
  auto at = [&](int i, int k) -> int& { return id[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)]; };
  int n_unknowns = 0;
  for (const auto& [w, idx] : blocks)
    for (int i : idx)
      for (int k : idx) at(i, k) = n_unknowns++;

  RMatrixResult res;
  res.u = u;
  if (lambda.sample) res.w = lambda.sample->w();
  res.unknowns = n_unknowns;
  RowEchelon re(n_unknowns);
  for (const auto& g : imposed_generators(lambda.spec)) {
    const Matrix x = t.coproduct_action(g.id, u, false);
    const Matrix y = t.coproduct_action(g.id, u, true);
    std::vector<Entries> xcol(static_cast<std::size_t>(d)), yrow(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (!x(a, b).is_zero()) xcol[static_cast<std::size_t>(b)].emplace_back(a, x(a, b));
        if (!y(a, b).is_zero()) yrow[static_cast<std::size_t>(a)].emplace_back(b, y(a, b));
      }
    // (R X - Y R)(i, j) with wt(i) = wt(j) + shift
    for (int j = 0; j < d; ++j) {
      const auto target = blocks.find(wts[static_cast<std::size_t>(j)] + g.shift);
      if (target == blocks.end()) continue;
      for (int i : target->second) {
        SparseRow row;
        for (const auto& [k, v] : xcol[static_cast<std::size_t>(j)])
          if (at(i, k) >= 0) row.emplace_back(at(i, k), v);
        for (const auto& [k, v] : yrow[static_cast<std::size_t>(i)])
          if (at(k, j) >= 0) row.emplace_back(at(k, j), -v);
        merge_into(row);
        if (row.empty()) continue;
        ++res.equations;
        re.add_row(std::move(row));
      }
    }
  }
  res.nullity = re.nullity();
  if (res.nullity == 0) throw InconsistentSystem("intertwining equations have only the zero solution");
  if (res.nullity >= 2)
    throw NonGenericSample("solution space has dimension " + std::to_string(res.nullity) + " at u = " + u.str());
  const Vector sol = re.null_space().front();
  const Rational top = sol(at(0, 0));
  if (top.is_zero()) throw InconsistentSystem("solution vanishes on the top vector");
  res.R = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (at(i, k) >= 0) res.R(i, k) = sol(at(i, k)) / top;
  res.Rcheck = flip(lambda.dim(), mu.dim()) * res.R;
  return res;
}

bool satisfies_all_intertwiners(const RMatrixResult& r, const Representation& lambda, const Representation& mu) {
  const TensorModule t(lambda, mu);
  for (int i = 0; i <= lambda.rank(); ++i)
    for (Gen kind : {Gen::E, Gen::F, Gen::KPlus, Gen::KMinus}) {
      const Matrix x = t.coproduct_action({kind, i}, r.u, false);
      const Matrix y = t.coproduct_action({kind, i}, r.u, true);
      if (!is_zero(Matrix(r.R * x - y * r.R))) return false;
    }
  return true;
}

namespace {

using Sparse = Eigen::SparseMatrix<Rational>;
using Triplet = Eigen::Triplet<Rational>;

// Embeds R acting on factors (p, q) of V1 (x) V2 (x) V3.
Sparse embed(const Matrix& r, int which, int d1, int d2, int d3) {
  std::vector<Triplet> trip;
  const int n = d1 * d2 * d3;
  auto idx = [&](int a, int b, int c) { return (a * d2 + b) * d3 + c; };
  for (Eigen::Index row = 0; row < r.rows(); ++row)
    for (Eigen::Index col = 0; col < r.cols(); ++col) {
      const Rational& v = r(row, col);
      if (v.is_zero()) continue;
      const int rr = static_cast<int>(row), cc = static_cast<int>(col);
      switch (which) {
        case 12:
          for (int c = 0; c < d3; ++c) trip.emplace_back(idx(rr / d2, rr % d2, c), idx(cc / d2, cc % d2, c), v);
          break;
        case 13:
          for (int b = 0; b < d2; ++b) trip.emplace_back(idx(rr / d3, b, rr % d3), idx(cc / d3, b, cc % d3), v);
          break;
        case 23:
          for (int a = 0; a < d1; ++a) trip.emplace_back(idx(a, rr / d3, rr % d3), idx(a, cc / d3, cc % d3), v);
          break;
        default:
          throw ValidationError("bad factor pair");
      }
    }
  Sparse s(n, n);
  s.setFromTriplets(trip.begin(), trip.end());
  return s;
}

}  // namespace

YbeReport check_ybe(const RMatrixResult& r12, const RMatrixResult& r13, const RMatrixResult& r23, int d1, int d2,
                    int d3) {
  const Sparse a = embed(r12.R, 12, d1, d2, d3);
  const Sparse b = embed(r13.R, 13, d1, d2, d3);
  const Sparse c = embed(r23.R, 23, d1, d2, d3);
  const Sparse lhs = Sparse(a * b) * c;
  const Sparse rhs = Sparse(c * b) * a;
  const Sparse diff = lhs - rhs;
  YbeReport rep;
  rep.dim = d1 * d2 * d3;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (Sparse::InnerIterator it(diff, k); it; ++it) {
      if (it.value().is_zero()) continue;
      ++rep.nonzero_entries;
      const Rational m = abs(it.value());
      if (m > rep.max_residual) rep.max_residual = m;
    }
  rep.pass = rep.nonzero_entries == 0;
  return rep;
}

YbeReport check_ybe(const Representation& v1, const Representation& v2, const Representation& v3, const Rational& u,
                    const Rational& v) {
  const RMatrixResult r12 = solve_rmatrix(v1, v2, u);
  const RMatrixResult r13 = solve_rmatrix(v1, v3, u * v);
  const RMatrixResult r23 = solve_rmatrix(v2, v3, v);
  return check_ybe(r12, r13, r23, v1.dim(), v2.dim(), v3.dim());
}

bool check_unitarity(const RMatrixResult& at_u, const RMatrixResult& at_inv_u) {
  if (at_u.w != at_inv_u.w || at_u.u * at_inv_u.u != Rational(1)) return false;
  if (at_inv_u.Rcheck.cols() != at_u.Rcheck.rows()) return false;
  const Matrix p = at_inv_u.Rcheck * at_u.Rcheck;
  return p == Matrix::Identity(p.rows(), p.cols());
}

SpectralReport spectral_compare(const RMatrixResult& at_u, const RMatrixResult& at_one, const IsotypicDecomposition& dec,
                                const std::map<Weight, Rational>& rho) {
  if (at_u.w != at_one.w || at_one.u != Rational(1)) throw ValidationError("spectral comparison needs the same w and u = 1");
  SpectralReport rep;
  const Matrix m = at_u.Rcheck * inverse(at_one.Rcheck);
  Matrix expected = Matrix::Zero(m.rows(), m.cols());
  for (const auto& c : dec.components) {
    const auto it = rho.find(c.nu);
    if (it == rho.end()) {
      rep.mismatches.push_back({c.nu, Rational(0), "no eigenvalue supplied"});
      continue;
    }
    expected += it->second * c.projector;
    // measured value on the highest weight vector
    const Vector v = c.basis.col(0);
    const Vector mv = m * v;
    Eigen::Index p = 0;
    while (v(p).is_zero()) ++p;
    const Rational val = mv(p) / v(p);
    if (Vector(mv - val * v) == Vector::Zero(v.size())) rep.measured[c.nu] = val;
    const Matrix img = m * c.basis;
    if (img != it->second * c.basis) {
      const auto meas = rep.measured.find(c.nu);
      rep.mismatches.push_back({c.nu, it->second,
                                meas == rep.measured.end() ? "component is not an eigenspace"
                                                           : "measured " + meas->second.str()});
    }
  }
  rep.pass = rep.mismatches.empty() && m == expected;
  return rep;
}

std::map<Weight, int> parity_spectrum(const RMatrixResult& classical, const IsotypicDecomposition& classical_dec) {
  if (classical.w) throw ValidationError("parity spectrum is read off the q = 1 solution");
  std::map<Weight, int> out;
  for (const auto& c : classical_dec.components) {
    const Matrix img = classical.Rcheck * c.basis;
    if (img == c.basis) out[c.nu] = 1;
    else if (img == -c.basis) out[c.nu] = -1;
    else throw ContractViolation("eigenvalue on component " + c.nu.str() + " is not +1 or -1");
  }
  return out;
}

}  // namespace twistr
