#pragma once

#include <concepts>
#include <ostream>
#include <string>
#include <vector>

#include "twistr/rational.hpp"

namespace twistr {

/// Univariate polynomial over Q in the spectral parameter u. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  /// The monomial u.
  static Poly u() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int k) const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Euclidean division: a = quot * b + rem with deg rem < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  [[nodiscard]] Poly monic() const;
  /// Integer coefficients obtained by clearing denominators (content not removed).
  [[nodiscard]] std::vector<mpz_class> integer_coeffs(const mpz_class& scale) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Element of Q(u), kept reduced with a monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(Rational(1)) {}
  template <std::integral I>
  RatFun(I v) : RatFun(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  static RatFun u() { return RatFun(Poly::u(), Poly(Rational(1))); }

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  /// Value at a rational point; PoleError if the denominator vanishes.
  [[nodiscard]] Rational operator()(const Rational& x) const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const { return RatFun(-num_, den_, Reduced{}); }
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  /// "num(u)/den(u)" with integer coefficients, e.g. "(16*u+1)/(u+16)".
  [[nodiscard]] std::string str() const;

 private:
  struct Reduced {};
  RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& f);

/// Both scalar modes share this contract.
template <typename S>
concept Field = requires(S a, S b) {
  { S(0) } -> std::convertible_to<S>;
  { S(1) } -> std::convertible_to<S>;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Scalar string for reports.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const RatFun& f) { return f.str(); }

}  // namespace twistr
