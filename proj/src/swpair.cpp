#include "swf/swpair.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

#include "swf/error.hpp"

namespace swf::swpair {

using extalg::GammaMask;

namespace {

Rat int_power(long base, int e) {
  qlinalg::Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(e));
  if (base < 0 && (e & 1)) out = -out;
  return Rat(out);
}

// Value of sw_sphere at class n on a monomial whose degree already matches 2D.
Rat sw_monomial_value(int g, int n, GammaMask gammas) {
  if (!extalg::is_paired(g, gammas)) return 0;
  const int pairs = __builtin_popcount(gammas) / 2;
  Rat v = int_power(-n, g - pairs);
  return extalg::paired_sign(g, gammas) < 0 ? Rat(-v) : v;
}

using MonoMap = std::map<ExtMono, Rat, extalg::ExtMonoLess>;

// Block key of a monomial: degree class and torus weight.
struct BlockKey {
  int degree_class;
  int weight_code;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

int weight_code(int g, GammaMask m, bool negate) {
  int code = 0, base = 1;
  for (int i = 0; i < g; ++i) {
    int w = static_cast<int>((m >> i) & 1) - static_cast<int>((m >> (g + i)) & 1);
    if (negate) w = -w;
    code += (w + 1) * base;
    base *= 3;
  }
  return code;
}

int degree_class(const SphereParams& p, PairingKind kind, int degree) {
  if (kind == PairingKind::kFundamental) return degree;
  const int n = p.grading_modulus();
  return ((degree % n) + n) % n;
}

BlockKey row_key(const SphereParams& p, PairingKind kind, const ExtMono& m) {
  return {degree_class(p, kind, m.degree()), weight_code(p.g(), m.gammas, false)};
}

// Key that a column monomial must carry to pair with rows of key k.
BlockKey partner_key(const SphereParams& p, PairingKind kind, const ExtMono& m) {
  return {degree_class(p, kind, 2 * p.d() - m.degree()), weight_code(p.g(), m.gammas, true)};
}

struct Blocks {
  std::vector<BlockKey> keys;
  std::vector<std::vector<ExtMono>> rows;
  std::vector<std::vector<ExtMono>> cols;
};

Blocks make_blocks(const SphereParams& p, PairingKind kind, int row_maxdeg) {
  std::map<BlockKey, std::vector<ExtMono>> rows;
  for (const ExtMono& m : extalg::monomials_up_to(p.g(), row_maxdeg)) rows[row_key(p, kind, m)].push_back(m);
  std::map<BlockKey, std::vector<ExtMono>> cols;
  for (const ExtMono& m : extalg::monomials_up_to(p.g(), 2 * p.d())) cols[partner_key(p, kind, m)].push_back(m);
  Blocks b;
  for (auto& [k, v] : rows) {
    b.keys.push_back(k);
    b.rows.push_back(std::move(v));
    auto it = cols.find(k);
    b.cols.push_back(it == cols.end() ? std::vector<ExtMono>{} : it->second);
  }
  return b;
}

}  // namespace

SphereParams::SphereParams(int g, int r) : g_(g), r_(r) {
  if (g < 2 || g > extalg::kMaxGenus) throw DomainError("genus must satisfy g >= 2");
  const int a = r < 0 ? -r : r;
  if (a < 1 || a > g - 1)
    throw DomainError("r = " + std::to_string(r) + " outside 1 <= |r| <= g-1 for g = " + std::to_string(g));
}

Rat sw_sphere(const SphereParams& p, int n, const ExtClass& z) {
  if (z.genus() != p.g()) throw GenusMismatch("sw_sphere: class genus differs from params");
  if (n >= 0) return 0;
  const int big_d = p.abs_r() * n + p.g() - 1;
  if (big_d < 0) return 0;
  Rat total = 0;
  for (const auto& [m, c] : z.terms()) {
    if (m.degree() != 2 * big_d) continue;
    const Rat v = sw_monomial_value(p.g(), n, m.gammas);
    if (sgn(v) != 0) total += c * v;
  }
  return total;
}

Rat sw_sphere_reference(const SphereParams& p, int n, const ExtClass& z) {
  const int g = p.g();
  if (n >= 0) return 0;
  const int big_d = p.abs_r() * n + g - 1;
  if (big_d < 0) return 0;
  ExtClass expo(g);
  for (int j = 0; j <= g; ++j) {
    ExtClass t = extalg::theta_power(g, j);
    t *= int_power(-n, j) / Rat(qlinalg::factorial(j));
    expo += t;
  }
  const ExtClass comp = z.homogeneous_part(2 * big_d);
  std::map<int, ExtClass> by_x;
  for (const auto& [m, c] : comp.terms()) {
    by_x.try_emplace(m.xexp, g).first->second.add(ExtMono{0, m.gammas}, c);
  }
  Rat total = 0;
  for (const auto& [a, omega] : by_x) total += extalg::top_eval(extalg::wedge(omega, expo));
  return total;
}

Rat functional_on_monomial(const SphereParams& p, PairingKind kind, const ExtMono& m) {
  const int deg = m.degree();
  if (deg & 1) return 0;
  const int half = deg / 2;
  int n;
  if (kind == PairingKind::kFundamental) {
    if (half != p.d()) return 0;
    n = -1;
  } else {
    const int diff = half - (p.g() - 1);
    if (diff % p.abs_r() != 0) return 0;
    n = diff / p.abs_r();
    if (n >= 0) return 0;
  }
  return sw_monomial_value(p.g(), n, m.gammas);
}

Rat pair(const SphereParams& p, const ExtClass& z1, const ExtClass& z2, PairingKind kind) {
  if (z1.genus() != p.g() || z2.genus() != p.g()) throw GenusMismatch("pair: genus differs from params");
  Rat total = 0;
  for (const auto& [m1, c1] : z1.terms()) {
    for (const auto& [m2, c2] : z2.terms()) {
      const int s = extalg::wedge_sign(m1.gammas, m2.gammas);
      if (s == 0) continue;
      const Rat v = functional_on_monomial(p, kind, ExtMono{m1.xexp + m2.xexp, m1.gammas | m2.gammas});
      if (sgn(v) == 0) continue;
      if (s > 0)
        total += c1 * c2 * v;
      else
        total -= c1 * c2 * v;
    }
  }
  return total;
}

MonoMap pairing_functional(const SphereParams& p, const ExtClass& z, PairingKind kind) {
  const int g = p.g();
  const int top = 2 * p.d();
  MonoMap out;
  for (const auto& [u, c] : z.terms()) {
    const GammaMask s = u.gammas;
    GammaMask required = 0;
    std::vector<GammaMask> free_pairs;
    for (int i = 1; i <= g; ++i) {
      const GammaMask pm = extalg::pair_mask(g, i);
      const GammaMask have = s & pm;
      if (have == 0)
        free_pairs.push_back(pm);
      else if (have != pm)
        required |= pm & ~have;
    }
    const int base_deg = u.degree() + __builtin_popcount(required);
    if (base_deg > top) continue;
    const std::size_t nsub = std::size_t{1} << free_pairs.size();
    for (std::size_t sub = 0; sub < nsub; ++sub) {
      GammaMask t = required;
      for (std::size_t k = 0; k < free_pairs.size(); ++k)
        if (sub >> k & 1) t |= free_pairs[k];
      const int sign = extalg::wedge_sign(s, t);
      for (int b = 0;; ++b) {
        const ExtMono m{b, t};
        if (u.degree() + m.degree() > top) break;
        const Rat v = functional_on_monomial(p, kind, ExtMono{u.xexp + b, s | t});
        if (sgn(v) == 0) continue;
        auto [it, inserted] = out.try_emplace(m, 0);
        if (sign > 0)
          it->second += c * v;
        else
          it->second -= c * v;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }
  return out;
}

bool in_annihilator(const SphereParams& p, const ExtClass& z, PairingKind kind) {
  return pairing_functional(p, z, kind).empty();
}

QMatrix gram(const SphereParams& p, const std::vector<ExtClass>& basis, PairingKind kind) {
  const std::size_t n = basis.size();
  QMatrix g(n, n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    const MonoMap f = pairing_functional(p, basis[i], kind);
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc = 0;
      for (const auto& [m, c] : basis[j].terms()) {
        auto it = f.find(m);
        if (it != f.end()) acc += c * it->second;
      }
      g(i, j) = acc;
    }
  }
  return g;
}

QMatrix gram_serial(const SphereParams& p, const std::vector<ExtClass>& basis, PairingKind kind) {
  const std::size_t n = basis.size();
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = pair(p, basis[i], basis[j], kind);
  return g;
}

QMatrix pairing_matrix(const SphereParams& p, const std::vector<ExtMono>& rows,
                       const std::vector<ExtMono>& cols, PairingKind kind) {
  QMatrix m(rows.size(), cols.size());
#pragma omp parallel for schedule(dynamic) if (rows.size() > 64)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const int s = extalg::wedge_sign(rows[i].gammas, cols[j].gammas);
      if (s == 0) continue;
      const Rat v = functional_on_monomial(
          p, kind, ExtMono{rows[i].xexp + cols[j].xexp, rows[i].gammas | cols[j].gammas});
      m(i, j) = s > 0 ? v : Rat(-v);
    }
  }
  return m;
}

std::size_t quotient_dimension(const SphereParams& p, PairingKind kind) {
  const Blocks b = make_blocks(p, kind, 2 * p.d());
  std::vector<std::size_t> ranks(b.keys.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < b.keys.size(); ++k) {
    if (b.cols[k].empty()) continue;
    ranks[k] = qlinalg::rank(pairing_matrix(p, b.rows[k], b.cols[k], kind));
  }
  std::size_t total = 0;
  for (std::size_t r : ranks) total += r;
  return total;
}

std::vector<ExtClass> annihilator(const SphereParams& p, int maxdeg, PairingKind kind) {
  if (maxdeg < 0) maxdeg = 2 * p.d();
  const Blocks b = make_blocks(p, kind, maxdeg);
  std::vector<std::vector<ExtClass>> per_block(b.keys.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < b.keys.size(); ++k) {
    const auto& rows = b.rows[k];
    const QMatrix bt = pairing_matrix(p, b.cols[k], rows, kind);  // z^T B = 0  <=>  B^T z = 0
    for (const QVector& v : qlinalg::kernel_basis(bt)) {
      ExtClass z(p.g());
      for (std::size_t i = 0; i < rows.size(); ++i) z.add(rows[i], v[i]);
      per_block[k].push_back(std::move(z));
    }
  }
  std::vector<ExtClass> out;
  for (auto& v : per_block)
    for (auto& z : v) out.push_back(std::move(z));
  return out;
}

PairingQuotient::PairingQuotient(const SphereParams& p, PairingKind kind, std::vector<ExtClass> basis)
    : params_(p), kind_(kind), basis_(std::move(basis)) {
  for (const ExtClass& e : basis_) {
    if (e.genus() != p.g()) throw GenusMismatch("quotient basis genus differs from params");
    if (e.is_zero() || !e.is_homogeneous()) throw DomainError("quotient basis elements must be homogeneous and nonzero");
    degrees_.push_back(e.max_degree());
  }
  if (basis_.size() != quotient_dimension(p, kind))
    throw DomainError("quotient basis has " + std::to_string(basis_.size()) + " elements, quotient dimension is " +
                      std::to_string(quotient_dimension(p, kind)));
  gram_ = swpair::gram(p, basis_, kind);
  gram_inv_ = qlinalg::invert(gram_);
  coord_map_ = gram_inv_.transpose();
}

QVector PairingQuotient::coords(const ExtClass& z) const {
  const MonoMap f = pairing_functional(params_, z, kind_);
  QVector rhs(basis_.size());
  if (f.empty()) return rhs;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    for (const auto& [m, c] : basis_[j].terms()) {
      auto it = f.find(m);
      if (it != f.end()) rhs[j] += c * it->second;
    }
  }
  return coord_map_.apply(rhs);
}

ExtClass PairingQuotient::element(const QVector& coords) const {
  ExtClass out(params_.g());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    out += basis_[i] * coords[i];
  }
  return out;
}

Rat PairingQuotient::pair_coords(const QVector& a, const QVector& b) const {
  const QVector gb = gram_.apply(b);
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * gb[i];
  return acc;
}

}  // namespace swf::swpair
