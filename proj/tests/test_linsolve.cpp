#include <doctest.h>

#include "twistr/errors.hpp"
#include "twistr/linsolve.hpp"

using namespace twistr;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = static_cast<Eigen::Index>(rows.begin()->size());
  Matrix a(n, m);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) a(i, j++) = Rational(v);
    ++i;
  }
  return a;
}

}  // namespace

TEST_CASE("incremental echelon form drops dependent rows") {
  RowEchelon re(3);
  CHECK(re.add_row({{0, Rational(1)}, {1, Rational(2)}}));
  CHECK(re.add_row({{1, Rational(1)}, {2, Rational(-1)}}));
  CHECK_FALSE(re.add_row({{0, Rational(2)}, {1, Rational(5)}, {2, Rational(-1)}}));
  CHECK(re.rank() == 2);
  CHECK(re.nullity() == 1);
  const auto ns = re.null_space();
  REQUIRE(ns.size() == 1);
  const Vector& v = ns.front();
  CHECK(v(0) + Rational(2) * v(1) == Rational(0));
  CHECK(v(1) - v(2) == Rational(0));
  CHECK(v != Vector::Zero(3));
}

TEST_CASE("dense helpers") {
  const Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const auto ns = null_space(a);
  REQUIRE(ns.size() == 1);
  CHECK(Vector(a * ns.front()) == Vector::Zero(3));

  const Matrix b = from_rows({{2, 1}, {7, 4}});
  const Matrix bi = inverse(b);
  CHECK(Matrix(b * bi) == Matrix::Identity(2, 2));
  CHECK(bi(0, 0) == Rational(4));
  CHECK_THROWS_AS(inverse(a), ContractViolation);
}

TEST_CASE("axpy cancels exactly") {
  const SparseRow x{{0, Rational(1)}, {3, Rational(1, 2)}};
  const SparseRow y{{3, Rational(1)}, {4, Rational(1)}};
  const SparseRow z = axpy(x, Rational(-1, 2), y);
  REQUIRE(z.size() == 2);
  CHECK(z[0].first == 0);
  CHECK(z[1].first == 4);
  CHECK(z[1].second == Rational(-1, 2));
}
