#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "twistr/rational.hpp"

namespace twistr {

/// Vector in the epsilon basis with half-integer entries, stored doubled.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : d_(n, 0) {}
  /// From doubled coordinates.
  static Weight doubled(std::vector<int> d);
  /// From integer coordinates.
  static Weight from_ints(std::initializer_list<int> v);
  static Weight from_ints(const std::vector<int>& v);
  /// epsilon_i (0-based) in dimension n.
  static Weight eps(std::size_t n, std::size_t i);

  [[nodiscard]] std::size_t size() const { return d_.size(); }
  [[nodiscard]] int twice(std::size_t i) const { return d_[i]; }
  int& twice(std::size_t i) { return d_[i]; }
  [[nodiscard]] Rational at(std::size_t i) const { return Rational(d_[i], 2); }
  [[nodiscard]] const std::vector<int>& twice_coords() const { return d_; }
  [[nodiscard]] bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "(1,1/2,0)".
  [[nodiscard]] std::string str() const;

 private:
  std::vector<int> d_;
};

/// (x, y) with (eps_i, eps_j) = delta_ij.
Rational dot(const Weight& x, const Weight& y);

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace twistr
