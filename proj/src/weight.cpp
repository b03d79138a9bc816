#include "twistr/weight.hpp"

#include <algorithm>
#include <sstream>

#include "twistr/errors.hpp"

namespace twistr {

Weight Weight::doubled(std::vector<int> d) {
  Weight w;
  w.d_ = std::move(d);
  return w;
}

Weight Weight::from_ints(std::initializer_list<int> v) { return from_ints(std::vector<int>(v)); }

Weight Weight::from_ints(const std::vector<int>& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w.d_[i] = 2 * v[i];
  return w;
}

Weight Weight::eps(std::size_t n, std::size_t i) {
  Weight w(n);
  w.d_.at(i) = 2;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw ValidationError("weight length mismatch");
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw ValidationError("weight length mismatch");
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.d_) x = -x;
  return r;
}

Weight operator*(int k, Weight a) {
  for (auto& x : a.d_) x *= k;
  return a;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) os << ',';
    os << at(i);
  }
  os << ')';
  return os.str();
}

Rational dot(const Weight& x, const Weight& y) {
  if (x.size() != y.size()) throw ValidationError("weight length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<long>(x.twice(i)) * y.twice(i);
  return Rational(s, 4);
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

}  // namespace twistr
