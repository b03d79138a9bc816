#include "twistr/ratfun.hpp"

#include <sstream>

#include "twistr/errors.hpp"

namespace twistr {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw PoleError("polynomial division by zero");
  rem = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  const Rational lead_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational f = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= f * b.coeffs_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  quot = Poly(std::move(q));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  const Rational inv = leading().inverse();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

std::vector<mpz_class> Poly::integer_coeffs(const mpz_class& scale) const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    mpq_class v = c.raw() * scale;
    v.canonicalize();
    out.push_back(v.get_num());
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("rational function with zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = std::move(q);
    Poly::divmod(den_, g, q, r);
    den_ = std::move(q);
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    const Rational inv = lead.inverse();
    num_ = num_ * Poly(inv);
    den_ = den_ * Poly(inv);
  }
}

Rational RatFun::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw PoleError("rational function has a pole at u = " + x.str());
  return num_(x) / d;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw PoleError("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

namespace {

mpz_class denominator_lcm(const Poly& p, mpz_class acc) {
  for (const auto& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.raw().get_den_mpz_t());
  return acc;
}

std::string poly_str(const std::vector<mpz_class>& c) {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    const mpz_class& a = c[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (a < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'u';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

std::string RatFun::str() const {
  if (num_.is_zero()) return "0";
  mpz_class scale = denominator_lcm(den_, denominator_lcm(num_, mpz_class(1)));
  auto n = num_.integer_coeffs(scale);
  auto d = den_.integer_coeffs(scale);
  mpz_class content(0);
  for (const auto& x : n) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (const auto& x : d) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (auto& x : n) x /= content;
  for (auto& x : d) x /= content;
  if (d.size() == 1 && d[0] == 1) return poly_str(n);
  const bool n_simple = n.size() == 1 && n[0] > 0;
  std::string ns = poly_str(n);
  if (!n_simple) ns = "(" + ns + ")";
  return ns + "/(" + poly_str(d) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

}  // namespace twistr
