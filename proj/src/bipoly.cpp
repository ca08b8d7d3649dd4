#include "swf/bipoly.hpp"

#include <sstream>

namespace swf {

BiPoly::BiPoly(const Rat& constant) { add({0, 0}, constant); }

BiPoly BiPoly::monomial(int eta, int theta, const Rat& coef) {
  BiPoly p;
  p.add({eta, theta}, coef);
  return p;
}

Rat BiPoly::coeff(int eta, int theta) const {
  auto it = terms_.find({eta, theta});
  return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add(const BiMono& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::homogeneous_part(int half_degree) const {
  BiPoly out;
  for (const auto& [m, c] : terms_)
    if (m.half_degree() == half_degree) out.terms_.emplace(m, c);
  return out;
}

int BiPoly::min_half_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.half_degree();
}

int BiPoly::max_half_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.half_degree();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add({ma.eta + mb.eta, ma.theta + mb.theta}, ca * cb);
  return out;
}

namespace {

void append_factor(std::ostringstream& os, const char* name, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << name;
  if (e > 1) os << '^' << e;
  first_factor = false;
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = m.half_degree() > 0 && mag == 1;
    bool first_factor = true;
    if (!unit) {
      os << mag.get_str();
      first_factor = false;
    }
    append_factor(os, "eta", m.eta, first_factor);
    append_factor(os, "theta", m.theta, first_factor);
  }
  return os.str();
}

}  // namespace swf
