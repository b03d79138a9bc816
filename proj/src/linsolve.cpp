#include "twistr/linsolve.hpp"

#include "twistr/errors.hpp"

namespace twistr {

SparseRow axpy(const SparseRow& x, const Rational& a, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool RowEchelon::add_row(SparseRow row) {
  // Pivot rows carry no other pivot columns, so a single sweep suffices.
  SparseRow r = std::move(row);
  for (std::size_t k = 0; k < r.size();) {
    const int c = r[k].first;
    const int pr = pivot_row_[static_cast<std::size_t>(c)];
    if (pr < 0) {
      ++k;
      continue;
    }
    const Rational f = -r[k].second;
    r = axpy(r, f, rows_[static_cast<std::size_t>(pr)]);
    // entries before position k are untouched non-pivot columns
  }
  if (r.empty()) return false;
  const int pc = r.front().first;
  const Rational inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  for (auto& other : rows_) {
    for (const auto& e : other) {
      if (e.first == pc) {
        const Rational f = -e.second;
        other = axpy(other, f, r);
        break;
      }
      if (e.first > pc) break;
    }
  }
  pivot_row_[static_cast<std::size_t>(pc)] = static_cast<int>(rows_.size());
  pivot_col_.push_back(pc);
  rows_.push_back(std::move(r));
  return true;
}

std::vector<Vector> RowEchelon::null_space() const {
  std::vector<Vector> basis;
  for (int f = 0; f < cols_; ++f) {
    if (pivot_row_[static_cast<std::size_t>(f)] >= 0) continue;
    Vector x = Vector::Zero(cols_);
    x(f) = Rational(1);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r])
        if (e.first == f) x(pivot_col_[r]) = -e.second;
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

RowEchelon echelon_of(const Matrix& m) {
  RowEchelon re(static_cast<int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.emplace_back(static_cast<int>(j), m(i, j));
    re.add_row(std::move(row));
  }
  return re;
}

}  // namespace

std::vector<Vector> null_space(const Matrix& m) { return echelon_of(m).null_space(); }

long rank(const Matrix& m) { return echelon_of(m).rank(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw ContractViolation("matrix is singular");
    if (p != c) {
      a.row(p).swap(a.row(c));
      inv.row(p).swap(inv.row(c));
    }
    const Rational s = a(c, c).inverse();
    a.row(c) *= s;
    inv.row(c) *= s;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

}  // namespace twistr
