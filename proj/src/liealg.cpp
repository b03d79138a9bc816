#include "twistr/liealg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "twistr/errors.hpp"

namespace twistr {

std::string family_name(Family f) {
  switch (f) {
    case Family::A2Even: return "a2even";
    case Family::A2Odd: return "a2odd";
    case Family::D2: return "d2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "a2even") return Family::A2Even;
  if (s == "a2odd") return Family::A2Odd;
  if (s == "d2") return Family::D2;
  throw ValidationError("unknown family '" + s + "' (expected a2even, a2odd or d2)");
}

std::string root_type_name(RootType t, int rank) {
  const char c = t == RootType::B ? 'B' : (t == RootType::C ? 'C' : 'D');
  return std::string(1, c) + std::to_string(rank);
}

int FamilySpec::cartan(int i, int j) const {
  const auto& ai = simple_roots.at(static_cast<std::size_t>(i));
  const auto& aj = simple_roots.at(static_cast<std::size_t>(j));
  const Rational v = Rational(2) * dot(ai, aj) / dot(ai, ai);
  if (!v.is_integer()) throw ContractViolation("non-integral Cartan entry");
  return static_cast<int>(v.numerator_long());
}

Weight FamilySpec::seed_weight() const {
  if (family == Family::D2) return Weight::doubled(std::vector<int>(static_cast<std::size_t>(l), 1));
  return Weight::eps(static_cast<std::size_t>(l), 0);
}

FamilySpec family_spec(Family f, int l) {
  const int min_l = f == Family::A2Even ? 1 : (f == Family::A2Odd ? 3 : 2);
  if (l < min_l)
    throw ValidationError(family_name(f) + " requires l >= " + std::to_string(min_l) + " (got " + std::to_string(l) + ")");
  const auto L = static_cast<std::size_t>(l);
  FamilySpec s;
  s.family = f;
  s.l = l;
  s.simple_roots.resize(L + 1);
  for (std::size_t i = 1; i < L; ++i) s.simple_roots[i] = Weight::eps(L, i - 1) - Weight::eps(L, i);
  const Weight e1 = Weight::eps(L, 0);
  const Weight el = Weight::eps(L, L - 1);
  switch (f) {
    case Family::A2Even:
      s.n = 2 * l + 1;
      s.l0 = RootType::B;
      s.theta0 = 2 * e1;
      s.simple_roots[L] = el;
      s.simple_roots[0] = -(2 * e1);
      break;
    case Family::A2Odd:
      s.n = 2 * l;
      s.l0 = RootType::C;
      s.theta0 = e1 + Weight::eps(L, 1);
      s.simple_roots[L] = 2 * el;
      s.simple_roots[0] = -s.theta0;
      break;
    case Family::D2:
      s.n = 2 * l + 2;
      s.l0 = RootType::B;
      s.theta0 = e1;
      s.simple_roots[L] = el;
      s.simple_roots[0] = -e1;
      break;
  }
  s.rho0 = weyl_vector(s.l0, l);
  return s;
}

Weight weyl_vector(RootType t, int r) {
  Weight w(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const int k = r - i;  // r - (i+1) + 1
    switch (t) {
      case RootType::B: w.twice(static_cast<std::size_t>(i)) = 2 * k - 1; break;
      case RootType::C: w.twice(static_cast<std::size_t>(i)) = 2 * k; break;
      case RootType::D: w.twice(static_cast<std::size_t>(i)) = 2 * (k - 1); break;
    }
  }
  return w;
}

bool is_dominant(RootType t, const Weight& nu) {
  const auto& d = nu.twice_coords();
  if (d.empty()) return true;
  const int par = d[0] & 1;
  for (int x : d)
    if ((x & 1) != par) return false;
  if (t == RootType::C && par) return false;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (t == RootType::D && i + 2 == d.size()) {
      if (d[i] < std::abs(d[i + 1])) return false;
    } else if (d[i] < d[i + 1]) {
      return false;
    }
  }
  if (t != RootType::D && d.back() < 0) return false;
  return true;
}

std::optional<std::pair<int, Weight>> reflect_to_dominant(RootType t, const Weight& x) {
  std::vector<int> y = x.twice_coords();
  int flips = 0;
  for (auto& v : y)
    if (v < 0) {
      v = -v;
      ++flips;
    }
  // insertion sort, descending, tracking permutation parity
  int swaps = 0;
  for (std::size_t i = 1; i < y.size(); ++i)
    for (std::size_t j = i; j > 0 && y[j - 1] < y[j]; --j) {
      std::swap(y[j - 1], y[j]);
      ++swaps;
    }
  for (std::size_t i = 0; i + 1 < y.size(); ++i)
    if (y[i] == y[i + 1]) return std::nullopt;
  const int perm_sign = (swaps & 1) ? -1 : 1;
  if (t == RootType::D) {
    if ((flips & 1) && !y.empty() && y.back() != 0) y.back() = -y.back();
    return std::make_pair(perm_sign, Weight::doubled(std::move(y)));
  }
  if (!y.empty() && y.back() == 0) return std::nullopt;
  return std::make_pair(perm_sign * ((flips & 1) ? -1 : 1), Weight::doubled(std::move(y)));
}

namespace {

std::vector<Weight> positive_roots(RootType t, int r) {
  const auto R = static_cast<std::size_t>(r);
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = i + 1; j < R; ++j) {
      roots.push_back(Weight::eps(R, i) - Weight::eps(R, j));
      roots.push_back(Weight::eps(R, i) + Weight::eps(R, j));
    }
  for (std::size_t i = 0; i < R; ++i) {
    if (t == RootType::B) roots.push_back(Weight::eps(R, i));
    if (t == RootType::C) roots.push_back(2 * Weight::eps(R, i));
  }
  return roots;
}

}  // namespace

long weyl_dim(RootType t, const Weight& nu) {
  if (!is_dominant(t, nu)) throw ValidationError("weyl_dim needs a dominant weight, got " + nu.str());
  const int r = static_cast<int>(nu.size());
  const Weight rho = weyl_vector(t, r);
  const Weight shifted = nu + rho;
  Rational d(1);
  for (const auto& a : positive_roots(t, r)) d *= dot(shifted, a) / dot(rho, a);
  if (!d.is_integer()) throw ContractViolation("Weyl dimension is not an integer");
  return d.numerator_long();
}

Rational casimir(RootType t, const Weight& nu) {
  const Weight rho = weyl_vector(t, static_cast<int>(nu.size()));
  return dot(nu, nu + 2 * rho);
}

Rational casimir_eigenvalue(const FamilySpec& spec, const Weight& nu) {
  if (nu.size() != static_cast<std::size_t>(spec.l) || !is_dominant(spec.l0, nu))
    throw ValidationError("Casimir needs a dominant " + root_type_name(spec.l0, spec.l) + " weight, got " + nu.str());
  return dot(nu, nu + 2 * spec.rho0);
}

std::vector<Weight> vector_weights(RootType t, int r) {
  const auto R = static_cast<std::size_t>(r);
  std::vector<Weight> w;
  for (std::size_t i = 0; i < R; ++i) w.push_back(Weight::eps(R, i));
  if (t == RootType::B) w.emplace_back(R);
  for (std::size_t i = R; i-- > 0;) w.push_back(-Weight::eps(R, i));
  return w;
}

std::string weight_label(const FamilySpec& spec, const Weight& nu) {
  const std::size_t L = nu.size();
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < L; ++i) {
    Rational m = i + 1 < L ? nu.at(i) - nu.at(i + 1) : nu.at(i);
    if (i + 1 == L && spec.family == Family::D2) m *= Rational(2);
    if (m.is_zero()) continue;
    if (any) os << (m.sign() > 0 ? "+" : "");
    if (m == Rational(-1)) os << '-';
    else if (m != Rational(1)) os << m;
    os << "λ" << (i + 1);
    any = true;
  }
  return any ? os.str() : "0";
}

Matrix matrix_unit(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i - 1, j - 1) = Rational(1);
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// a_ij = e_ij - (-1)^(i+j) e_{jbar,ibar}; bar runs over 1..m with bar i = m+1-i.
Matrix a_elem(int n, int m, int i, int j) {
  Matrix x = matrix_unit(n, i, j);
  const int ib = m + 1 - i, jb = m + 1 - j;
  const Rational s = ((i + j) & 1) ? Rational(-1) : Rational(1);
  x(jb - 1, ib - 1) -= s;
  return x;
}

}  // namespace

GeneratorSet kac_generators(const FamilySpec& spec) {
  const int l = spec.l, n = spec.n;
  const int m = spec.family == Family::D2 ? 2 * l + 1 : n;
  GeneratorSet g;
  const auto L1 = static_cast<std::size_t>(l + 1);
  g.E.resize(L1);
  g.F.resize(L1);
  g.H.resize(L1);
  for (int i = 1; i < l; ++i) {
    const auto I = static_cast<std::size_t>(i);
    g.E[I] = a_elem(n, m, i, i + 1);
    g.F[I] = a_elem(n, m, i + 1, i);
    g.H[I] = a_elem(n, m, i, i) - a_elem(n, m, i + 1, i + 1);
  }
  const auto Ll = static_cast<std::size_t>(l);
  switch (spec.family) {
    case Family::A2Even:
    case Family::D2:
      g.E[Ll] = a_elem(n, m, l, l + 1);
      g.F[Ll] = a_elem(n, m, l + 1, l);
      g.H[Ll] = a_elem(n, m, l, l);
      break;
    case Family::A2Odd:
      // the short/long rescaling keeps E*F fixed
      g.E[Ll] = Rational(2) * matrix_unit(n, l, l + 1);
      g.F[Ll] = matrix_unit(n, l + 1, l);
      g.H[Ll] = Rational(2) * a_elem(n, m, l, l);
      break;
  }
  switch (spec.family) {
    case Family::A2Even:
      g.E[0] = Rational(2) * matrix_unit(n, n, 1);
      g.F[0] = matrix_unit(n, 1, n);
      g.H[0] = Rational(-2) * a_elem(n, m, 1, 1);
      break;
    case Family::A2Odd:
      g.E[0] = matrix_unit(n, 2 * l - 1, 1) + matrix_unit(n, 2 * l, 2);
      g.F[0] = matrix_unit(n, 1, 2 * l - 1) + matrix_unit(n, 2, 2 * l);
      g.H[0] = -(a_elem(n, m, 1, 1) + a_elem(n, m, 2, 2));
      break;
    case Family::D2:
      g.E[0] = matrix_unit(n, 2 * l + 1, 2 * l + 2) + matrix_unit(n, 2 * l + 2, 1);
      g.F[0] = matrix_unit(n, 2 * l + 2, 2 * l + 1) + matrix_unit(n, 1, 2 * l + 2);
      g.H[0] = -a_elem(n, m, 1, 1);
      break;
  }
  return g;
}

std::vector<Weight> ambient_weights(const FamilySpec& spec) {
  const auto L = static_cast<std::size_t>(spec.l);
  const int m = spec.family == Family::D2 ? 2 * spec.l + 1 : spec.n;
  std::vector<Weight> w;
  for (int j = 1; j <= spec.n; ++j) {
    if (j <= spec.l) w.push_back(Weight::eps(L, static_cast<std::size_t>(j - 1)));
    else if (j > m || 2 * j == m + 1) w.emplace_back(L);
    else w.push_back(-Weight::eps(L, static_cast<std::size_t>(m - j)));
  }
  return w;
}

bool RelationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

const RelationCheck* RelationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
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

RelationReport check_classical_relations(const GeneratorSet& g, const FamilySpec& spec) {
  RelationReport rep;
  const int l = g.rank();
  for (int i = 0; i <= l; ++i) {
    const auto I = static_cast<std::size_t>(i);
    for (int j = 0; j <= l; ++j) {
      const auto J = static_cast<std::size_t>(j);
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      const Rational aij = dot(spec.simple_roots[I], spec.simple_roots[J]);
      record(rep, "[H_i,H_j] " + ij, commutator(g.H[I], g.H[J]));
      record(rep, "[H_i,E_j] " + ij, commutator(g.H[I], g.E[J]) - aij * g.E[J]);
      record(rep, "[H_i,F_j] " + ij, commutator(g.H[I], g.F[J]) + aij * g.F[J]);
      Matrix ef = commutator(g.E[I], g.F[J]);
      if (i == j) ef -= g.H[I];
      record(rep, "[E_i,F_j] " + ij, ef);
      if (i == j) continue;
      const int k = 1 - spec.cartan(i, j);
      Matrix xe = g.E[J], xf = g.F[J];
      for (int t = 0; t < k; ++t) {
        xe = commutator(g.E[I], xe);
        xf = commutator(g.F[I], xf);
      }
      record(rep, "serre E " + ij, xe);
      record(rep, "serre F " + ij, xf);
    }
  }
  return rep;
}

}  // namespace twistr
