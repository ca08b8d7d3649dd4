#include "swf/extalg.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "swf/error.hpp"

namespace swf::extalg {

namespace {

void check_genus(int g) {
  if (g < 1 || g > kMaxGenus) throw DomainError("genus " + std::to_string(g) + " out of range");
}

void check_same_genus(const ExtClass& a, const ExtClass& b) {
  if (a.genus() != b.genus())
    throw GenusMismatch("genus " + std::to_string(a.genus()) + " vs " + std::to_string(b.genus()));
}

// k-subsets of {0..n-1} in lexicographic order of their sorted sequences.
std::vector<GammaMask> subsets_lex(int n, int k) {
  std::vector<GammaMask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    GammaMask m = 0;
    for (int i : idx) m |= GammaMask{1} << i;
    out.push_back(m);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<int> ExtMono::gamma_indices() const {
  std::vector<int> out;
  for (GammaMask m = gammas; m; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
  return out;
}

bool ExtMonoLess::operator()(const ExtMono& l, const ExtMono& r) const {
  const int dl = l.degree(), dr = r.degree();
  if (dl != dr) return dl < dr;
  if (l.xexp != r.xexp) return l.xexp > r.xexp;
  const GammaMask diff = l.gammas ^ r.gammas;
  if (diff == 0) return false;
  return (l.gammas & (diff & (~diff + 1))) != 0;
}

int wedge_sign(GammaMask a, GammaMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (GammaMask m = b; m; m &= m - 1) {
    const int j = __builtin_ctz(m);
    const GammaMask above = j >= 31 ? 0 : ~((GammaMask{1} << (j + 1)) - 1);
    inversions += __builtin_popcount(a & above);
  }
  return (inversions & 1) ? -1 : 1;
}

bool is_paired(int g, GammaMask m) {
  const GammaMask low = m & ((GammaMask{1} << g) - 1);
  return (m >> g) == low;
}

int paired_sign(int g, GammaMask m) {
  GammaMask acc = 0;
  int sign = 1;
  for (int i = 1; i <= g; ++i) {
    const GammaMask p = pair_mask(g, i);
    if ((m & p) != p) continue;
    const GammaMask lo = GammaMask{1} << (i - 1), hi = GammaMask{1} << (g + i - 1);
    sign *= wedge_sign(acc, lo);
    acc |= lo;
    sign *= wedge_sign(acc, hi);
    acc |= hi;
  }
  return sign;
}

ExtClass::ExtClass(int genus) : genus_(genus) { check_genus(genus); }

ExtClass::ExtClass(int genus, const ExtMono& m, const Rat& coef) : ExtClass(genus) { add(m, coef); }

ExtClass ExtClass::gamma(int genus, int i) {
  if (i < 1 || i > 2 * genus) throw DomainError("gamma index " + std::to_string(i) + " out of range");
  return ExtClass(genus, ExtMono{0, GammaMask{1} << (i - 1)});
}

Rat ExtClass::coeff(const ExtMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ExtClass::add(const ExtMono& m, const Rat& c) {
  if (sgn(c) == 0) return;
  if (m.gammas >> (2 * genus_)) throw DomainError("gamma index exceeds 2g");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool ExtClass::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int ExtClass::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

ExtClass ExtClass::homogeneous_part(int degree) const {
  ExtClass out(genus_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

ExtClass ExtClass::truncated(int max_degree) const {
  ExtClass out(genus_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

ExtClass& ExtClass::operator+=(const ExtClass& o) {
  check_same_genus(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ExtClass& ExtClass::operator-=(const ExtClass& o) {
  check_same_genus(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ExtClass& ExtClass::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string monomial_to_string(const ExtMono& m) {
  if (m.xexp == 0 && m.gammas == 0) return "1";
  std::ostringstream os;
  bool first = true;
  if (m.xexp > 0) {
    os << 'x';
    if (m.xexp > 1) os << '^' << m.xexp;
    first = false;
  }
  for (int i : m.gamma_indices()) {
    if (!first) os << '*';
    os << 'g' << i;
    first = false;
  }
  return os.str();
}

std::string ExtClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const Rat mag = abs(c);
    const bool unit_mono = m.xexp == 0 && m.gammas == 0;
    if (unit_mono) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << monomial_to_string(m);
    }
  }
  return os.str();
}

ExtClass wedge(const ExtClass& u, const ExtClass& v) {
  check_same_genus(u, v);
  ExtClass out(u.genus());
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      const int s = wedge_sign(mu.gammas, mv.gammas);
      if (s == 0) continue;
      Rat c = cu * cv;
      if (s < 0) c = -c;
      out.add(ExtMono{mu.xexp + mv.xexp, mu.gammas | mv.gammas}, c);
    }
  }
  return out;
}

ExtClass theta_class(int g) {
  if (g < 2) throw DomainError("theta_class requires g >= 2");
  ExtClass t(g);
  for (int i = 1; i <= g; ++i) t.add(ExtMono{0, pair_mask(g, i)}, 1);
  return t;
}

const ExtClass& theta_power(int g, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ExtClass>> cache;
  if (k < 0) throw DomainError("negative theta power");
  std::lock_guard lock(mu);
  auto key = std::make_pair(g, k);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;
  ExtClass p = ExtClass::one(g);
  const ExtClass t = theta_class(g);
  for (int i = 0; i < k; ++i) p = wedge(p, t);
  return *cache.emplace(key, std::make_unique<ExtClass>(std::move(p))).first->second;
}

Rat top_eval(const ExtClass& u) {
  const int g = u.genus();
  const GammaMask full = (GammaMask{1} << (2 * g)) - 1;
  // theta^g / g! = prod_i gamma_i gamma_{g+i} = paired_sign(full) * gamma_{1..2g}
  Rat c = u.coeff(ExtMono{0, full});
  return paired_sign(g, full) < 0 ? Rat(-c) : c;
}

const std::vector<ExtClass>& primitive_basis(int g, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<ExtClass>>> cache;
  if (g < 2 || k < 0 || k > g) throw DomainError("primitive_basis requires 0 <= k <= g, g >= 2");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({g, k}); it != cache.end()) return *it->second;
  }
  const std::vector<GammaMask> cols = subsets_lex(2 * g, k);
  const int target = 2 * g - k + 2;
  const std::vector<GammaMask> rows = subsets_lex(2 * g, target);
  std::map<GammaMask, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  qlinalg::QMatrix m(rows.size(), cols.size());
  const ExtClass& tp = theta_power(g, g - k + 1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const ExtClass img = wedge(tp, ExtClass(g, ExtMono{0, cols[j]}));
    for (const auto& [mono, c] : img.terms()) m(row_index.at(mono.gammas), j) = c;
  }
  auto basis = std::make_unique<std::vector<ExtClass>>();
  for (const auto& v : qlinalg::kernel_basis(m)) {
    ExtClass w(g);
    for (std::size_t j = 0; j < cols.size(); ++j) w.add(ExtMono{0, cols[j]}, v[j]);
    basis->push_back(std::move(w));
  }
  std::lock_guard lock(mu);
  return *cache.emplace(std::make_pair(g, k), std::move(basis)).first->second;
}

std::vector<ExtMono> monomials_of_degree(int g, int degree) {
  std::vector<ExtMono> out;
  for (int a = degree / 2; a >= 0; --a) {
    const int m = degree - 2 * a;
    if (m > 2 * g) continue;
    for (GammaMask s : subsets_lex(2 * g, m)) out.push_back(ExtMono{a, s});
  }
  return out;
}

std::vector<ExtMono> monomials_up_to(int g, int maxdeg) {
  check_genus(g);
  std::vector<ExtMono> out;
  for (int d = 0; d <= maxdeg; ++d) {
    auto part = monomials_of_degree(g, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ExtClass embed_bipoly(const BiPoly& p, int g) {
  ExtClass out(g);
  for (const auto& [m, c] : p.terms()) {
    if (m.theta > g) continue;  // theta^{g+1} = 0
    ExtClass term = wedge(ExtClass::x_power(g, m.eta), theta_power(g, m.theta));
    term *= c;
    out += term;
  }
  return out;
}

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, int g) : s_(text), g_(g) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  int genus() const { return g_; }

 private:
  std::string_view s_;
  int g_;
  std::size_t pos_ = 0;
};

struct Factor {
  enum Kind { kCoef, kX, kGamma, kTheta } kind;
  long value = 1;
  long den = 1;
};

Factor parse_factor(Lexer& lx, bool allow_extended) {
  const char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    Factor f{Factor::kCoef, lx.number(), 1};
    if (lx.accept('/')) {
      if (!allow_extended) lx.fail("coefficients are not allowed in a monomial");
      f.den = lx.number();
      if (f.den == 0) lx.fail("zero denominator");
    } else if (!allow_extended && f.value != 1) {
      lx.fail("coefficients are not allowed in a monomial");
    }
    return f;
  }
  if (lx.accept('x')) {
    Factor f{Factor::kX, 1};
    if (lx.accept('^')) f.value = lx.number();
    return f;
  }
  if (lx.accept('g')) {
    Factor f{Factor::kGamma, lx.number()};
    if (f.value < 1 || f.value > 2 * lx.genus()) lx.fail("gamma index out of range 1..2g");
    return f;
  }
  if (allow_extended && lx.accept('t')) {
    Factor f{Factor::kTheta, 1};
    if (lx.accept('^')) f.value = lx.number();
    return f;
  }
  lx.fail("unexpected token");
}

ExtClass parse_term(Lexer& lx, bool allow_extended, bool strict) {
  const int g = lx.genus();
  Rat coef = 1;
  ExtClass acc = ExtClass::one(g);
  int last_gamma = 0;
  bool seen_x = false, seen_gamma = false, seen_one = false;
  int nfactors = 0;
  do {
    Factor f = parse_factor(lx, allow_extended);
    ++nfactors;
    switch (f.kind) {
      case Factor::kCoef:
        if (!allow_extended) seen_one = true;
        coef *= qlinalg::rat(f.value, f.den);
        break;
      case Factor::kX:
        if (strict && (seen_x || seen_gamma)) lx.fail("x must appear once, before gammas");
        seen_x = true;
        acc = wedge(acc, ExtClass::x_power(g, static_cast<int>(f.value)));
        break;
      case Factor::kGamma:
        if (f.value <= last_gamma) lx.fail("gamma indices must be strictly increasing");
        last_gamma = static_cast<int>(f.value);
        seen_gamma = true;
        acc = wedge(acc, ExtClass::gamma(g, static_cast<int>(f.value)));
        break;
      case Factor::kTheta:
        acc = wedge(acc, theta_power(g, static_cast<int>(f.value)));
        break;
    }
  } while (lx.accept('*'));
  if (strict && seen_one && nfactors > 1) lx.fail("'1' must stand alone");
  return acc * coef;
}

}  // namespace

ExtMono parse_monomial(std::string_view text, int g) {
  check_genus(g);
  Lexer lx(text, g);
  if (lx.done()) lx.fail("empty monomial");
  ExtClass c = parse_term(lx, false, true);
  if (!lx.done()) lx.fail("trailing input");
  if (c.terms().size() != 1) lx.fail("not a monomial");
  return c.terms().begin()->first;
}

ExtClass parse_expression(std::string_view text, int g) {
  check_genus(g);
  Lexer lx(text, g);
  if (lx.done()) lx.fail("empty expression");
  ExtClass out(g);
  bool negate = lx.accept('-');
  while (true) {
    ExtClass term = parse_term(lx, true, false);
    if (negate) term *= -1;
    out += term;
    if (lx.done()) break;
    if (lx.accept('+'))
      negate = false;
    else if (lx.accept('-'))
      negate = true;
    else
      lx.fail("expected '+' or '-'");
  }
  return out;
}

}  // namespace swf::extalg
