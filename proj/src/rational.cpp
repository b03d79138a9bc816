#include "twistr/rational.hpp"

#include <climits>

#include "twistr/errors.hpp"

namespace twistr {

Rational::Rational(long num, long den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ValidationError("malformed rational literal '" + s + "'");
  if (v.get_den() == 0) throw PoleError("rational literal with zero denominator '" + s + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

long Rational::numerator_long() const {
  if (!value_.get_num().fits_slong_p()) throw Error("numerator does not fit in long");
  return value_.get_num().get_si();
}

long Rational::denominator_long() const {
  if (!value_.get_den().fits_slong_p()) throw Error("denominator does not fit in long");
  return value_.get_den().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace twistr
