#pragma once

#include <map>
#include <string>

#include "swf/qlinalg.hpp"

namespace swf {

using qlinalg::Rat;

/// Monomial eta^a theta^b of Q[eta, theta]; both generators have degree 2.
struct BiMono {
  int eta = 0;
  int theta = 0;
  int half_degree() const { return eta + theta; }
};

/// Ordered by total degree, then eta exponent descending.
struct BiMonoLess {
  bool operator()(const BiMono& l, const BiMono& r) const {
    if (l.half_degree() != r.half_degree()) return l.half_degree() < r.half_degree();
    return l.eta > r.eta;
  }
};

/// Element of Q[eta, theta]. Never stores zero coefficients.
class BiPoly {
 public:
  using Terms = std::map<BiMono, Rat, BiMonoLess>;

  BiPoly() = default;
  explicit BiPoly(const Rat& constant);
  static BiPoly monomial(int eta, int theta, const Rat& coef = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int eta, int theta) const;
  void add(const BiMono& m, const Rat& c);

  /// Homogeneous component of total degree 2*half_degree.
  BiPoly homogeneous_part(int half_degree) const;
  int min_half_degree() const;  // -1 for zero
  int max_half_degree() const;  // -1 for zero

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

inline bool operator==(const BiMono& a, const BiMono& b) {
  return a.eta == b.eta && a.theta == b.theta;
}

}  // namespace swf
