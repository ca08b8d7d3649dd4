#pragma once

#include <string>
#include <vector>

#include "swf/qlinalg.hpp"

namespace swf {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i.
class UPoly {
 public:
  using Rat = qlinalg::Rat;

  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly x_power(int e, const Rat& c = 1);
  /// (x + c)^e
  static UPoly binomial_power(const Rat& c, int e);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  /// Smallest power present (-1 for zero).
  int valuation() const;

  /// p(x + t)
  UPoly shift(const Rat& t) const;
  /// Taylor coefficients of p at x = 1 below order n.
  std::vector<Rat> taylor_at_one(int n) const;
  /// p == q mod (x - 1)^n; true for n <= 0.
  static bool congruent_mod_x_minus_1(const UPoly& p, const UPoly& q, int n);

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace swf
