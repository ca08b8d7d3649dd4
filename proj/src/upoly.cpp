#include "swf/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace swf {

using Rat = qlinalg::Rat;

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::x_power(int e, const Rat& c) {
  std::vector<Rat> v(e + 1);
  v[e] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::binomial_power(const Rat& c, int e) {
  std::vector<Rat> v(e + 1);
  Rat cp = 1;
  for (int i = 0; i <= e; ++i) {
    // coefficient of x^{e-i} is C(e,i) c^i
    v[e - i] = Rat(qlinalg::binom(e, i)) * cp;
    cp *= c;
  }
  return UPoly(std::move(v));
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

UPoly UPoly::shift(const Rat& t) const {
  UPoly out;
  for (int i = degree(); i >= 0; --i) {
    // Horner in (x + t)
    out = out * UPoly({t, Rat(1)});
    out += UPoly({c_[i]});
  }
  return out;
}

std::vector<Rat> UPoly::taylor_at_one(int n) const {
  const UPoly s = shift(1);
  std::vector<Rat> out(std::max(n, 0));
  for (int i = 0; i < n; ++i) out[i] = s.coeff(i);
  return out;
}

bool UPoly::congruent_mod_x_minus_1(const UPoly& p, const UPoly& q, int n) {
  for (const Rat& c : (p - q).taylor_at_one(n))
    if (sgn(c) != 0) return false;
  return true;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
  for (Rat& c : c_) c *= s;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = c_[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rat a = abs(c);
    const bool unit = a == 1;
    if (!unit || i == 0) os << qlinalg::to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace swf
