#include "twistr/tensor.hpp"

#include <algorithm>
#include <string>

#include "twistr/errors.hpp"
#include "twistr/linsolve.hpp"

namespace twistr {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

Matrix flip(int dv, int dw) {
  Matrix p = Matrix::Zero(dv * dw, dv * dw);
  for (int a = 0; a < dv; ++a)
    for (int b = 0; b < dw; ++b) p(b * dv + a, a * dw + b) = Rational(1);
  return p;
}

TensorModule::TensorModule(Representation left, Representation right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.spec.family != right_.spec.family || left_.spec.l != right_.spec.l)
    throw ValidationError("tensor factors belong to different algebras");
  if (left_.classical() != right_.classical() ||
      (!left_.classical() && left_.sample->w() != right_.sample->w()))
    throw ValidationError("tensor factors use different sample points");
  for (const auto& a : left_.weights)
    for (const auto& b : right_.weights) weights_.push_back(a + b);
}

Matrix TensorModule::coproduct_action(GenId g, const Rational& u, bool opposite) const {
  const int i = g.index;
  const auto I = static_cast<std::size_t>(i);
  if (i < 0 || i > left_.rank()) throw ValidationError("generator index out of range");
  switch (g.kind) {
    case Gen::KPlus: return kron(left_.k(i, 1), right_.k(i, 1));
    case Gen::KMinus: return kron(left_.k(i, -1), right_.k(i, -1));
    case Gen::E:
    case Gen::F: {
      const Matrix& xl = g.kind == Gen::E ? left_.e[I] : left_.f[I];
      const Matrix& xr = g.kind == Gen::E ? right_.e[I] : right_.f[I];
      Rational t(1);
      if (i == 0) t = g.kind == Gen::E ? u : u.inverse();
      if (!opposite) return kron(left_.k(i, -1), xr) + t * kron(xl, right_.k(i, 1));
      return t * kron(xl, right_.k(i, -1)) + kron(left_.k(i, 1), xr);
    }
  }
  return {};
}

const Component& IsotypicDecomposition::at(const Weight& nu) const {
  for (const auto& c : components)
    if (c.nu == nu) return c;
  throw ValidationError("component " + nu.str() + " not in decomposition");
}

bool IsotypicDecomposition::contains(const Weight& nu) const {
  return std::any_of(components.begin(), components.end(), [&](const Component& c) { return c.nu == nu; });
}

namespace {

SparseRow to_row(const Vector& v) {
  SparseRow row;
  for (Eigen::Index a = 0; a < v.size(); ++a)
    if (!v(a).is_zero()) row.emplace_back(static_cast<int>(a), v(a));
  return row;
}

}  // namespace

IsotypicDecomposition decompose(const TensorModule& t) {
  const FamilySpec& spec = t.left().spec;
  const int l = spec.l;
  const int d = t.dim();
  std::vector<Matrix> e, f;
  for (int i = 1; i <= l; ++i) {
    e.push_back(t.coproduct_action({Gen::E, i}));
    f.push_back(t.coproduct_action({Gen::F, i}));
  }
  std::map<Weight, std::vector<int>> spaces;
  for (int a = 0; a < d; ++a) spaces[t.weights()[static_cast<std::size_t>(a)]].push_back(a);

  IsotypicDecomposition dec;
  for (auto it = spaces.rbegin(); it != spaces.rend(); ++it) {
    const Weight& mu = it->first;
    if (!is_dominant(spec.l0, mu)) continue;
    const auto& idx = it->second;
    const int m = static_cast<int>(idx.size());
    // joint kernel of all e_i on this weight space
    RowEchelon re(m);
    for (const auto& ei : e)
      for (int r = 0; r < d; ++r) {
        SparseRow row;
        for (int c = 0; c < m; ++c)
          if (!ei(r, idx[static_cast<std::size_t>(c)]).is_zero()) row.emplace_back(c, ei(r, idx[static_cast<std::size_t>(c)]));
        if (!row.empty()) re.add_row(std::move(row));
      }
    const auto ker = re.null_space();
    if (ker.empty()) continue;
    if (ker.size() > 1)
      throw ContractViolation("component " + mu.str() + " occurs with multiplicity " + std::to_string(ker.size()));
    Vector hw = Vector::Zero(d);
    for (int c = 0; c < m; ++c) hw(idx[static_cast<std::size_t>(c)]) = ker.front()(c);

    RowEchelon span(d);
    std::vector<Vector> basis, frontier;
    auto push = [&](const Vector& v) {
      if (span.add_row(to_row(v))) {
        basis.push_back(v);
        frontier.push_back(v);
      }
    };
    push(hw);
    while (!frontier.empty()) {
      Vector v = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& fi : f) push(fi * v);
    }
    Component comp;
    comp.nu = mu;
    comp.dim = static_cast<long>(basis.size());
    const long expected = weyl_dim(spec.l0, mu);
    if (comp.dim != expected)
      throw ContractViolation("component " + mu.str() + " has dimension " + std::to_string(comp.dim) +
                              ", expected " + std::to_string(expected));
    comp.basis = Matrix(d, comp.dim);
    for (long c = 0; c < comp.dim; ++c) comp.basis.col(c) = basis[static_cast<std::size_t>(c)];
    dec.components.push_back(std::move(comp));
  }

  long total = 0;
  for (const auto& c : dec.components) total += c.dim;
  if (total != d) throw ContractViolation("components span " + std::to_string(total) + " of " + std::to_string(d) + " dimensions");

  Matrix b(d, d);
  long col = 0;
  for (const auto& c : dec.components) {
    b.middleCols(col, c.dim) = c.basis;
    col += c.dim;
  }
  const Matrix binv = inverse(b);
  col = 0;
  for (auto& c : dec.components) {
    c.projector = c.basis * binv.middleRows(col, c.dim);
    col += c.dim;
  }
  return dec;
}

std::map<Weight, int> classical_parity_signs(const TensorModule& t, const IsotypicDecomposition& dec) {
  if (!t.classical()) throw ValidationError("parity signs are defined at q = 1");
  if (t.left().highest != t.right().highest) throw ValidationError("parity signs need equal tensor factors");
  const Matrix p = flip(t.left().dim(), t.right().dim());
  std::map<Weight, int> out;
  for (const auto& c : dec.components) {
    const Matrix img = p * c.basis;
    if (img == c.basis) out[c.nu] = 1;
    else if (img == -c.basis) out[c.nu] = -1;
    else throw ContractViolation("component " + c.nu.str() + " has mixed symmetry");
  }
  return out;
}

}  // namespace twistr
