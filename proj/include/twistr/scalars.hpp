#pragma once

#include <string>

#include "twistr/errors.hpp"
#include "twistr/ratfun.hpp"
#include "twistr/rational.hpp"

namespace twistr {

/// Base sample for the deformation parameter; q = w^4 so q^(1/4) = w is rational.
class QSample {
 public:
  explicit QSample(Rational w);

  [[nodiscard]] const Rational& w() const { return w_; }
  [[nodiscard]] Rational q() const { return w_.pow(4); }
  /// q^a for a in (1/4)Z.
  [[nodiscard]] Rational qpow(const Rational& a) const;
  /// w^e.
  [[nodiscard]] Rational wpow(long e) const { return w_.pow(e); }

 private:
  Rational w_;
};

/// [k]_q = (q^k - q^-k)/(q - q^-1).
template <Field S>
S qint(long k, const S& q) {
  if (q.is_zero() || q == S(1) || q == S(-1)) throw DegenerateParameter("q-integer needs q not in {0, 1, -1}");
  if (k == 0) return S(0);
  if (k < 0) return -qint(-k, q);
  const S qi = S(1) / q;
  // q^(k-1) + q^(k-3) + ... + q^(1-k)
  S acc(0), t(1);
  for (long j = 0; j < k - 1; ++j) t = t * qi;
  for (long j = 0; j < k; ++j) {
    acc = acc + t;
    t = t * q * q;
  }
  return acc;
}

/// [k]_q!
template <Field S>
S qfactorial(long k, const S& q) {
  S acc(1);
  for (long j = 2; j <= k; ++j) acc = acc * qint(j, q);
  return acc;
}

/// <a>_s = (1 + s u q^a)/(u + s q^a), s = +1 or -1.
template <Field S>
S bracket(const Rational& a, int sign, const S& u, const QSample& qs) {
  if (sign != 1 && sign != -1) throw ValidationError("bracket sign must be +1 or -1");
  const Rational qa = qs.qpow(a);
  const Rational s(sign);
  const S den = u + S(s * qa);
  if (den.is_zero()) throw PoleError("bracket <" + a.str() + ">" + (sign > 0 ? "+" : "-") + " has a pole here");
  return (S(1) + S(s * qa) * u) / den;
}

/// Same bracket at a plain rational q; only integer a is allowed here.
template <Field S>
S bracket(const Rational& a, int sign, const S& u, const Rational& q) {
  if (!a.is_integer()) throw ValidationError("bracket at a plain q needs an integer exponent, got " + a.str());
  if (q.is_zero() || q == Rational(1) || q == Rational(-1)) throw DegenerateParameter("bracket needs q not in {0, 1, -1}");
  if (sign != 1 && sign != -1) throw ValidationError("bracket sign must be +1 or -1");
  const Rational qa = q.pow(a.numerator_long());
  const S den = u + S(Rational(sign) * qa);
  if (den.is_zero()) throw PoleError("bracket <" + a.str() + ">" + (sign > 0 ? "+" : "-") + " has a pole here");
  return (S(1) + S(Rational(sign) * qa) * u) / den;
}

}  // namespace twistr
