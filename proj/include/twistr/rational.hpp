#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace twistr {

/// Exact element of Q. Always stored in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  /// Integer power; negative exponents invert.
  [[nodiscard]] Rational pow(long e) const;
  [[nodiscard]] Rational inverse() const { return Rational(1) / *this; }

  [[nodiscard]] std::string numerator_str() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator_str() const { return value_.get_den().get_str(); }
  /// Numerator as long; throws if it does not fit.
  [[nodiscard]] long numerator_long() const;
  [[nodiscard]] long denominator_long() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const { return value_.get_str(); }

  [[nodiscard]] const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace twistr

namespace Eigen {

template <>
struct NumTraits<twistr::Rational> : GenericNumTraits<twistr::Rational> {
  using Real = twistr::Rational;
  using NonInteger = twistr::Rational;
  using Nested = twistr::Rational;
  using Literal = twistr::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace twistr {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// True if every entry is exactly zero.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace twistr
