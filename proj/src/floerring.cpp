#include "swf/floerring.hpp"

#include <mutex>
#include <set>
#include <sstream>

#include "swf/error.hpp"

namespace swf::floerring {

using qlinalg::binom;
using qlinalg::factorial;
using qlinalg::QMatrix;

namespace {

int abs_int(int v) { return v < 0 ? -v : v; }

swpair::SphereParams positive_params(int g, int r) { return swpair::SphereParams(g, abs_int(r)); }

BiPoly truncate_nilpotent(const BiPoly& p, int d) {
  BiPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.eta <= d && m.theta <= d) out.add(m, c);
  return out;
}

// Contribution a/(i! C(g,i)) eta^{top-i} theta^i.
void add_scaled(BiPoly& out, int g, int top, int i, const Rat& a) {
  if (sgn(a) == 0) return;
  out.add(BiMono{top - i, i}, a / Rat(factorial(i) * binom(g, i)));
}

std::vector<Rat> seed_coefficients(int d, int alpha) {
  const int e = d - alpha + 1;
  std::vector<Rat> a(e + 1);
  for (int i = 0; i <= e; ++i) a[i] = (i & 1) ? Rat(-binom(e, i)) : Rat(binom(e, i));
  return a;
}

UPoly from_a(int g, const std::map<int, Rat>& a) {
  UPoly out;
  for (const auto& [i, c] : a) out += UPoly::x_power(g - i, c);
  return out;
}

ExtClass gamma_prefix(int g, int k) {
  ExtClass w = ExtClass::one(g);
  for (int i = 1; i <= k; ++i) w = extalg::wedge(w, ExtClass::gamma(g, i));
  return w;
}

}  // namespace

FloerRing::FloerRing(int g, int r)
    : labels_(symprod::canonical_basis(g, positive_params(g, r).d()).labels),
      quotient_(positive_params(g, r), swpair::PairingKind::kFloer,
                symprod::canonical_basis(g, positive_params(g, r).d()).elements) {}

QVector FloerRing::structure_constants(std::size_t i, std::size_t j) const {
  return quotient_.product(basis().at(i), basis().at(j));
}

std::shared_ptr<const FloerRing> build_oracle(int g, int r) {
  const swpair::SphereParams p = positive_params(g, r);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const FloerRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p.g(), p.r()}];
  if (!slot) slot = std::make_shared<const FloerRing>(p.g(), p.r());
  return slot;
}

BiPoly tilde_relation(int g, int r, int k) {
  const swpair::SphereParams p = positive_params(g, r);
  const int d = p.d();
  const int ar = p.abs_r();
  if (k < 0 || k > d + 1) throw DomainError("tilde_relation: k outside 0..d+1");
  if (k == d + 1) return BiPoly(1);
  const int alpha = (d - k) / 2 + 1;
  BiPoly out = symprod::relation_R(g, d, k);
  for (int i = 0; i <= alpha + ar; ++i)
    out.add(BiMono{alpha + ar - i, i}, -Rat(binom(alpha + ar, i)) / Rat(factorial(i) * binom(g - k, i)));
  return out;
}

PresentationQuotient::PresentationQuotient(int g, int r, int k)
    : d_(positive_params(g, r).d()), k_(k), quotient_([&] {
        if (k < 0 || k > d_) throw DomainError("presentation_quotient: k outside 0..d");
        std::vector<BiMono> universe;
        for (int a = 0; a <= d_; ++a)
          for (int b = 0; b <= d_; ++b) universe.push_back(BiMono{a, b});
        std::sort(universe.begin(), universe.end(), BiMonoLess{});
        const BiPoly g1 = tilde_relation(g, r, k);
        const BiPoly g2 = BiPoly::monomial(0, 1) * tilde_relation(g, r, k + 1);
        std::vector<BiPoly> span;
        for (const BiMono& u : universe) {
          const BiPoly mu = BiPoly::monomial(u.eta, u.theta);
          for (const BiPoly* gen : {&g1, &g2}) {
            BiPoly t = truncate_nilpotent(mu * *gen, d_);
            if (!t.is_zero()) span.push_back(std::move(t));
          }
        }
        return symprod::MonomialQuotient(universe, span, symprod::sector_monomials(d_ - k));
      }()) {}

BiPoly PresentationQuotient::normal_form(const BiPoly& p) const {
  return quotient_.normal_form(truncate_nilpotent(p, d_));
}

PresentationQuotient presentation_quotient(int g, int r, int k) { return PresentationQuotient(g, r, k); }

std::size_t presentation_dimension(int g, int r) {
  const int d = positive_params(g, r).d();
  std::size_t total = 0;
  for (int k = 0; k <= d; ++k)
    total += extalg::primitive_basis(g, k).size() * presentation_quotient(g, r, k).dimension();
  return total;
}

RelationSet recursion_unique(int g, int r) {
  const swpair::SphereParams p = positive_params(g, r);
  if (r < 1) throw DomainError("recursion_unique needs r >= 1");
  const int d = p.d();
  RelationSet out;
  out.g = g;
  out.r = r;
  out.alpha = d / 2 + 1;
  const int alpha = out.alpha;

  std::map<int, Rat> a0;
  const std::vector<Rat> seed = seed_coefficients(d, alpha);
  for (std::size_t i = 0; i < seed.size(); ++i) a0[static_cast<int>(i)] = seed[i];
  out.a.push_back(a0);
  out.p.push_back(from_a(g, a0));

  for (int m = 1;; ++m) {
    const int n = d - alpha - m * r + 1;
    if (n <= 0) break;
    const int lo = 2 * alpha + 2 * m * r - d;
    const int hi = alpha + m * r;
    UPoly rhs;
    for (int j = 0; j < m; ++j) rhs -= out.p[j].shift(m - j);
    const std::vector<Rat> target = rhs.taylor_at_one(n);
    QMatrix sys(n, hi - lo + 1);
    for (int i = lo; i <= hi; ++i) {
      const std::vector<Rat> col = UPoly::x_power(g - i).taylor_at_one(n);
      for (int t = 0; t < n; ++t) sys(t, i - lo) = col[t];
    }
    const auto sol = qlinalg::solve(sys, target);
    std::ostringstream where;
    where << "recursion step m=" << m << " for g=" << g << ", r=" << r;
    if (!sol) throw InconsistentRecursion(where.str() + " has no solution");
    if (qlinalg::rank(sys) != static_cast<std::size_t>(hi - lo + 1))
      throw InconsistentRecursion(where.str() + " has more than one solution");
    std::map<int, Rat> am;
    for (int i = lo; i <= hi; ++i) am[i] = (*sol)[i - lo];
    const UPoly pm = from_a(g, am);
    if (!UPoly::congruent_mod_x_minus_1(pm, rhs, n)) throw InconsistentRecursion(where.str() + " failed its congruence");
    out.a.push_back(std::move(am));
    out.p.push_back(pm);
  }

  for (std::size_t m = 0; m < out.a.size(); ++m)
    for (const auto& [i, c] : out.a[m]) add_scaled(out.relation, g, alpha + static_cast<int>(m) * r, i, c);
  return out;
}

BiPoly recursion_relation(int g, int r, int k) {
  const swpair::SphereParams p = positive_params(g, r);
  if (k < 0 || k > p.d() + 1) throw DomainError("recursion_relation: k outside 0..d+1");
  if (k == p.d() + 1) return BiPoly(1);
  return recursion_unique(g - k, p.abs_r()).relation;
}

Rat closed_form_a1(int g, int r, int i) {
  const swpair::SphereParams p = positive_params(g, r);
  const int d = p.d();
  const int ar = p.abs_r();
  const int alpha = d / 2 + 1;
  const int lo = 2 * alpha + 2 * ar - d;
  Rat total = 0;
  for (int j = 0; j <= i - lo; ++j) {
    Rat term = Rat(factorial(alpha + ar)) / Rat(factorial(i - j) * factorial(j) * factorial(alpha + ar - i));
    qlinalg::Int two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(i - j));
    term *= Rat(two);
    if ((j + 1) & 1) term = -term;
    total += term;
  }
  return total;
}

BiPoly direct_sector_relation(int g, int r, int k) {
  const swpair::SphereParams p = positive_params(g, r);
  const int d = p.d();
  const int ar = p.abs_r();
  if (k < 0 || k > d + 1) throw DomainError("direct_sector_relation: k outside 0..d+1");
  if (k == d + 1) return BiPoly(1);
  const int dk = d - k;
  const int alpha = dk / 2 + 1;
  const BiPoly base = symprod::relation_R(g, d, k);
  std::vector<BiMono> unknowns;
  for (int m = 1; dk - alpha - m * ar + 1 > 0; ++m)
    for (int i = 2 * alpha + 2 * m * ar - dk; i <= alpha + m * ar; ++i) unknowns.push_back(BiMono{alpha + m * ar - i, i});

  const ExtClass w = gamma_prefix(g, k);
  auto lift = [&](const BiPoly& q) { return extalg::wedge(w, extalg::embed_bipoly(q, g)); };
  using Functional = std::map<extalg::ExtMono, Rat, extalg::ExtMonoLess>;
  const Functional f0 = swpair::pairing_functional(p, lift(base));
  std::vector<Functional> cols;
  std::map<extalg::ExtMono, std::size_t, extalg::ExtMonoLess> row_of;
  for (const auto& [m, c] : f0) row_of.emplace(m, row_of.size());
  for (const BiMono& u : unknowns) {
    cols.push_back(swpair::pairing_functional(p, lift(BiPoly::monomial(u.eta, u.theta))));
    for (const auto& [m, c] : cols.back()) row_of.emplace(m, row_of.size());
  }
  std::ostringstream where;
  where << "direct sector solve k=" << k << " for g=" << g << ", r=" << r;
  QMatrix sys(row_of.size(), unknowns.size());
  QVector rhs(row_of.size());
  for (const auto& [m, c] : f0) rhs[row_of[m]] = -c;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, c] : cols[j]) sys(row_of[m], j) = c;
  const auto sol = qlinalg::solve(sys, rhs);
  if (!sol) throw InconsistentRecursion(where.str() + " has no solution");
  if (qlinalg::rank(sys) != unknowns.size()) throw InconsistentRecursion(where.str() + " has more than one solution");
  BiPoly out = base;
  for (std::size_t j = 0; j < unknowns.size(); ++j) out.add(unknowns[j], (*sol)[j]);
  return out;
}

FreeRecursion recursion_free(int g, int r) {
  const swpair::SphereParams p = positive_params(g, r);
  const int d = p.d();
  const int ar = p.abs_r();
  const int alpha = d / 2 + 1;
  std::map<int, Rat> a0;
  const std::vector<Rat> seed = seed_coefficients(d, alpha);
  for (std::size_t i = 0; i < seed.size(); ++i) a0[static_cast<int>(i)] = seed[i];
  const UPoly p0 = from_a(g, a0);
  const UPoly p1 = UPoly::x_power(g - alpha - ar) * UPoly::binomial_power(1, alpha + ar) * Rat(-1);

  FreeRecursion out;
  out.congruences_hold = UPoly::congruent_mod_x_minus_1(p1, p0.shift(1) * Rat(-1), d - alpha - ar + 1);
  for (int k = 2; k <= d + 2; ++k)
    if (!(p0.shift(k) + p1.shift(k - 1)).is_zero()) out.congruences_hold = false;
  for (int i = 0; i <= alpha + ar; ++i) out.a1.push_back(p1.coeff(g - i));
  for (const auto& [i, c] : a0) add_scaled(out.relation, g, alpha, i, c);
  for (int i = 0; i <= alpha + ar; ++i) add_scaled(out.relation, g, alpha + ar, i, out.a1[i]);
  return out;
}

bool recursion_free_check(int g, int r) {
  const FreeRecursion f = recursion_free(g, r);
  return f.congruences_hold && f.relation == tilde_relation(g, r, 0);
}

Deformation deformation_components(const FloerRing& ring, const ExtClass& f1, const ExtClass& f2) {
  if (!f1.is_homogeneous() || !f2.is_homogeneous()) throw DomainError("deformation_components needs homogeneous inputs");
  if (f1.is_zero() || f2.is_zero()) return {};
  const int base = f1.max_degree() + f2.max_degree();
  const int step = ring.params().grading_modulus();
  const int top = 2 * ring.params().d();
  const QVector c = ring.product(f1, f2);
  Deformation out;
  for (int m = 0; base + m * step <= top; ++m) out.phi.emplace_back(c.size());
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (sgn(c[t]) == 0) continue;
    const int deg = ring.degrees()[t];
    if (deg >= base && (deg - base) % step == 0)
      out.phi[(deg - base) / step][t] = c[t];
    else
      out.off_ladder_zero = false;
  }
  return out;
}

}  // namespace swf::floerring
