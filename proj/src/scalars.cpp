#include "twistr/scalars.hpp"

namespace twistr {

QSample::QSample(Rational w) : w_(std::move(w)) {
  if (w_.is_zero() || w_ == Rational(1) || w_ == Rational(-1))
    throw DegenerateParameter("w must not be 0, 1 or -1 (got " + w_.str() + ")");
}

Rational QSample::qpow(const Rational& a) const {
  const Rational e = a * Rational(4);
  if (!e.is_integer()) throw ValidationError("q^" + a.str() + " is not an integer power of w");
  return w_.pow(e.numerator_long());
}

}  // namespace twistr
