#include "twistr/qrep.hpp"

#include <string>

#include "twistr/errors.hpp"
#include "twistr/linsolve.hpp"

namespace twistr {

Matrix Representation::k(int i, int sign) const {
  const auto& d = sign > 0 ? kplus.at(static_cast<std::size_t>(i)) : kminus.at(static_cast<std::size_t>(i));
  Matrix m = Matrix::Zero(dim(), dim());
  for (int a = 0; a < dim(); ++a) m(a, a) = d[static_cast<std::size_t>(a)];
  return m;
}

namespace {

struct Classical {
  std::vector<Weight> weights;
  std::vector<Matrix> E, F;
};

Classical vector_module(const FamilySpec& spec) {
  GeneratorSet g = kac_generators(spec);
  return {ambient_weights(spec), std::move(g.E), std::move(g.F)};
}

// Matrix that is linear in the unknown transition coefficients; one matrix per unknown.
std::vector<Matrix> unit_transitions(int dim, const std::vector<std::pair<int, int>>& tr) {
  std::vector<Matrix> out;
  for (auto [to, from] : tr) {
    Matrix m = Matrix::Zero(dim, dim);
    m(to, from) = Rational(1);
    out.push_back(std::move(m));
  }
  return out;
}

// Linear constraints sum_s x_s * phi(U_s) = 0 over all matrix entries.
template <typename Phi>
void add_constraints(RowEchelon& re, const std::vector<Matrix>& units, Phi phi) {
  std::vector<Matrix> imgs;
  imgs.reserve(units.size());
  for (const auto& u : units) imgs.push_back(phi(u));
  const Eigen::Index d = units.front().rows();
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) {
      SparseRow row;
      for (std::size_t s = 0; s < imgs.size(); ++s)
        if (!imgs[s](a, b).is_zero()) row.emplace_back(static_cast<int>(s), imgs[s](a, b));
      if (!row.empty()) re.add_row(std::move(row));
    }
}

Matrix ad_power(const Matrix& x, const Matrix& y, int k) {
  Matrix r = y;
  for (int t = 0; t < k; ++t) r = commutator(x, r);
  return r;
}

// Spinor of B_l on sign vectors; bit t set means s_{t+1} = -1/2, so index 0 is all +.
Classical spinor_module(const FamilySpec& spec) {
  const int l = spec.l;
  const int d = 1 << l;
  const auto L = static_cast<std::size_t>(l);
  auto neg = [](int s, int t) { return ((s >> t) & 1) != 0; };
  Classical c;
  for (int s = 0; s < d; ++s) {
    Weight w(L);
    for (int t = 0; t < l; ++t) w.twice(static_cast<std::size_t>(t)) = neg(s, t) ? -1 : 1;
    c.weights.push_back(w);
  }
  c.E.assign(L + 1, Matrix::Zero(d, d));
  c.F.assign(L + 1, Matrix::Zero(d, d));
  for (int i = 1; i < l; ++i) {
    const int a = i - 1, b = i;
    for (int s = 0; s < d; ++s) {
      if (neg(s, a) && !neg(s, b)) {
        const int t = s ^ (1 << a) ^ (1 << b);
        c.E[static_cast<std::size_t>(i)](t, s) = Rational(1);
        c.F[static_cast<std::size_t>(i)](s, t) = Rational(1);
      }
    }
  }
  for (int s = 0; s < d; ++s) {
    if (neg(s, l - 1)) {
      const int t = s ^ (1 << (l - 1));
      c.E[L](t, s) = Rational(1);
      c.F[L](s, t) = Rational(1, 2);
    }
  }

  // e0 lowers s_1 from + to -; its coefficients follow from the relations with the finite part.
  std::vector<std::pair<int, int>> tr;
  for (int s = 0; s < d; ++s)
    if (!neg(s, 0)) tr.emplace_back(s | 1, s);
  const auto units = unit_transitions(d, tr);
  RowEchelon re(static_cast<int>(units.size()));
  for (int j = 1; j <= l; ++j) {
    const auto J = static_cast<std::size_t>(j);
    add_constraints(re, units, [&](const Matrix& u) { return commutator(u, c.F[J]); });
    const int k = 1 - spec.cartan(j, 0);
    add_constraints(re, units, [&](const Matrix& u) { return ad_power(c.E[J], u, k); });
  }
  const auto ns = re.null_space();
  if (ns.size() != 1)
    throw ConstructionError("spinor e0 is not unique up to scale (solution space dimension " +
                            std::to_string(ns.size()) + ")");
  Vector x = ns.front();
  Eigen::Index first = 0;
  while (x(first).is_zero()) ++first;
  const Rational norm = x(first).inverse();
  for (Eigen::Index s = 0; s < x.size(); ++s) x(s) *= norm;

  Matrix e0 = Matrix::Zero(d, d), f0 = Matrix::Zero(d, d);
  for (std::size_t s = 0; s < tr.size(); ++s) {
    const auto [to, from] = tr[s];
    if (x(static_cast<Eigen::Index>(s)).is_zero())
      throw ConstructionError("spinor e0 has a vanishing transition");
    e0(to, from) = x(static_cast<Eigen::Index>(s));
    // [e0,f0] = h0, and h0 = +1/2 on the target vector
    f0(from, to) = Rational(1, 2) / x(static_cast<Eigen::Index>(s));
  }
  c.E[0] = e0;
  c.F[0] = f0;
  return c;
}

Representation assemble(const FamilySpec& spec, Classical c, const std::optional<QSample>& w) {
  Representation rep;
  rep.spec = spec;
  rep.highest = spec.seed_weight();
  rep.weights = std::move(c.weights);
  if (rep.weights.front() != rep.highest) throw ConstructionError("basis vector 0 is not the highest weight vector");
  rep.sample = w;
  const int d = rep.dim();
  const auto L1 = static_cast<std::size_t>(spec.l + 1);
  rep.h.resize(L1);
  rep.kplus.resize(L1);
  rep.kminus.resize(L1);
  for (std::size_t i = 0; i < L1; ++i) {
    for (int a = 0; a < d; ++a) {
      const Rational hv = dot(rep.weights[static_cast<std::size_t>(a)], spec.simple_roots[i]);
      rep.h[i].push_back(hv);
      if (w) {
        rep.kplus[i].push_back(w->qpow(hv / Rational(2)));
        rep.kminus[i].push_back(w->qpow(-hv / Rational(2)));
      } else {
        rep.kplus[i].emplace_back(1);
        rep.kminus[i].emplace_back(1);
      }
    }
  }
  rep.e = std::move(c.E);
  rep.f = std::move(c.F);
  if (!w) return rep;
  // Rescale f_i so that [e_i,f_i] = (q^{h_i} - q^{-h_i})/(q - q^{-1}).
  const Rational q = w->q();
  const Rational qq = q - q.inverse();
  for (std::size_t i = 0; i < L1; ++i) {
    const Matrix ef = commutator(rep.e[i], rep.f[i]);
    std::optional<Rational> kappa;
    for (int a = 0; a < d && !kappa; ++a) {
      const Rational& hv = rep.h[i][static_cast<std::size_t>(a)];
      if (hv.is_zero()) continue;
      if (ef(a, a).is_zero()) continue;
      const Rational target = (w->qpow(hv) - w->qpow(-hv)) / qq;
      kappa = target / ef(a, a);
    }
    if (!kappa) throw ConstructionError("generator pair " + std::to_string(i) + " acts trivially");
    rep.f[i] *= *kappa;
  }
  return rep;
}

Classical classical_data(const FamilySpec& spec) {
  return spec.family == Family::D2 ? spinor_module(spec) : vector_module(spec);
}

}  // namespace

Representation build_seed_rep(const FamilySpec& spec, const QSample& w) {
  Representation rep = assemble(spec, classical_data(spec), w);
  const RelationReport r = check_quantum_relations(rep);
  if (const auto* bad = r.first_failure())
    throw ConstructionError("seed module of " + family_name(spec.family) + " l=" + std::to_string(spec.l) +
                            " fails relation " + bad->name + " at w=" + w.w().str());
  return rep;
}

GeneratorSet generator_matrices(const Representation& rep) {
  GeneratorSet g{rep.e, rep.f, {}};
  for (std::size_t i = 0; i < rep.h.size(); ++i) {
    Matrix hm = Matrix::Zero(rep.dim(), rep.dim());
    for (int a = 0; a < rep.dim(); ++a) hm(a, a) = rep.h[i][static_cast<std::size_t>(a)];
    g.H.push_back(std::move(hm));
  }
  return g;
}

Representation build_classical_rep(const FamilySpec& spec) {
  Representation rep = assemble(spec, classical_data(spec), std::nullopt);
  const RelationReport r = check_classical_relations(generator_matrices(rep), spec);
  if (const auto* bad = r.first_failure())
    throw ConstructionError("classical seed module fails relation " + bad->name);
  return rep;
}

namespace {

void record(RelationReport& rep, std::string name, const Matrix& residual) {
  RelationCheck c;
  c.name = std::move(name);
  c.pass = is_zero(residual);
  if (!c.pass) c.residual = residual;
  rep.checks.push_back(std::move(c));
}

}  // namespace

RelationReport check_quantum_relations(const Representation& rep) {
  RelationReport out;
  if (!rep.sample) throw ValidationError("quantum relations need a sample point");
  const QSample& w = *rep.sample;
  const Rational q = w.q();
  const Rational qq = q - q.inverse();
  const int l = rep.rank();
  const int d = rep.dim();
  const Matrix id = Matrix::Identity(d, d);
  for (int i = 0; i <= l; ++i) {
    const auto I = static_cast<std::size_t>(i);
    const Matrix kp = rep.k(i, 1), km = rep.k(i, -1);
    record(out, "K+K- " + std::to_string(i), kp * km - id);
    const Matrix k2 = kp * kp, k2i = km * km;
    for (int j = 0; j <= l; ++j) {
      const auto J = static_cast<std::size_t>(j);
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      const Rational c = w.qpow(dot(rep.spec.simple_roots[I], rep.spec.simple_roots[J]) / Rational(2));
      record(out, "K e K^-1 " + ij, kp * rep.e[J] * km - c * rep.e[J]);
      record(out, "K f K^-1 " + ij, kp * rep.f[J] * km - c.inverse() * rep.f[J]);
      Matrix ef = commutator(rep.e[I], rep.f[J]);
      if (i == j) ef -= (k2 - k2i) / qq;
      record(out, "[e_i,f_j] " + ij, ef);
      if (i == j) continue;
      const int n = 1 - rep.spec.cartan(i, j);
      const Rational qi = w.qpow(dot(rep.spec.simple_roots[I], rep.spec.simple_roots[I]) / Rational(2));
      Matrix se = Matrix::Zero(d, d), sf = Matrix::Zero(d, d);
      for (int k = 0; k <= n; ++k) {
        const Rational coef = ((k & 1) ? Rational(-1) : Rational(1)) / (qfactorial(n - k, qi) * qfactorial(k, qi));
        Matrix el = id, er = id, fl = id, fr = id;
        for (int t = 0; t < n - k; ++t) {
          el = el * rep.e[I];
          fl = fl * rep.f[I];
        }
        for (int t = 0; t < k; ++t) {
          er = er * rep.e[I];
          fr = fr * rep.f[I];
        }
        se += coef * (el * rep.e[J] * er);
        sf += coef * (fl * rep.f[J] * fr);
      }
      record(out, "q-serre e " + ij, se);
      record(out, "q-serre f " + ij, sf);
    }
  }
  return out;
}

bool finite_part_irreducible(const Representation& rep) {
  const int d = rep.dim();
  for (int start = 0; start < d; ++start) {
    RowEchelon span(d);
    std::vector<Vector> frontier;
    Vector v = Vector::Zero(d);
    v(start) = Rational(1);
    auto push = [&](const Vector& x) {
      SparseRow row;
      for (int a = 0; a < d; ++a)
        if (!x(a).is_zero()) row.emplace_back(a, x(a));
      if (!row.empty() && span.add_row(std::move(row))) frontier.push_back(x);
    };
    push(v);
    while (!frontier.empty()) {
      Vector x = std::move(frontier.back());
      frontier.pop_back();
      for (int i = 1; i <= rep.rank(); ++i) {
        push(rep.e[static_cast<std::size_t>(i)] * x);
        push(rep.f[static_cast<std::size_t>(i)] * x);
      }
    }
    if (span.rank() != d) return false;
  }
  return true;
}

}  // namespace twistr
