#include "swf/verify.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "swf/error.hpp"
#include "swf/glueadj.hpp"

namespace swf::verify {

using extalg::ExtClass;
using extalg::ExtMono;
using qlinalg::QMatrix;
using qlinalg::QVector;
using qlinalg::Rat;

std::string CheckResult::line() const {
  return pass ? "PASS " + name : "FAIL " + name + ": " + detail;
}

std::vector<std::pair<int, int>> default_sweep() {
  std::vector<std::pair<int, int>> out;
  for (int g = 2; g <= 5; ++g)
    for (int r = -(g - 1); r <= g - 1; ++r)
      if (r != 0) out.emplace_back(g, r);
  return out;
}

namespace {

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string tag(int g, int r) {
  return "(g=" + std::to_string(g) + ",r=" + std::to_string(r) + ")";
}

CheckResult run(const std::string& name, const Check& check) {
  CheckResult res{name, false, {}};
  try {
    res.detail = check();
    res.pass = res.detail.empty();
  } catch (const Error& e) {
    res.detail = e.name() + ": " + e.what();
  } catch (const std::exception& e) {
    res.detail = std::string("exception: ") + e.what();
  }
  return res;
}

long total(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

int d_of(int g, int r) { return swpair::SphereParams(g, r).d(); }

std::string check_dimension(int g, int r) {
  const swpair::SphereParams p(g, r);
  const long want = total(symprod::betti(g, p.d()));
  const auto ring = floerring::build_oracle(g, r);
  const std::size_t blocked = swpair::quotient_dimension(p);
  if (static_cast<long>(ring->dimension()) != want || static_cast<long>(blocked) != want) {
    std::ostringstream os;
    os << tag(g, r) << " basis=" << ring->dimension() << " rank=" << blocked << " betti=" << want;
    return os.str();
  }
  return {};
}

std::string check_tilde_relations(int g, int r) {
  const swpair::SphereParams p(g, r);
  for (int k = 0; k <= p.d(); ++k) {
    const ExtClass a = extalg::embed_bipoly(floerring::tilde_relation(g, r, k), g);
    const ExtClass b = extalg::embed_bipoly(BiPoly::monomial(0, 1) * floerring::tilde_relation(g, r, k + 1), g);
    for (const ExtClass& w : extalg::primitive_basis(g, k)) {
      if (!swpair::in_annihilator(p, extalg::wedge(w, a))) return tag(g, r) + " w*tildeR_" + std::to_string(k);
      if (!swpair::in_annihilator(p, extalg::wedge(w, b))) return tag(g, r) + " w*theta*tildeR_" + std::to_string(k + 1);
    }
  }
  return {};
}

std::string check_recursion_relations(int g, int r) {
  const swpair::SphereParams p(g, r);
  for (int k = 0; k <= p.d(); ++k) {
    const ExtClass a = extalg::embed_bipoly(floerring::recursion_relation(g, p.abs_r(), k), g);
    for (const ExtClass& w : extalg::primitive_basis(g, k))
      if (!swpair::in_annihilator(p, extalg::wedge(w, a))) return tag(g, r) + " w*R_" + std::to_string(k) + " (recursion)";
  }
  return {};
}

std::string check_presentation(int g, int r) {
  const int d = d_of(g, r);
  for (int k = 0; k <= d; ++k) {
    const auto q = floerring::presentation_quotient(g, r, k);
    if (q.basis() != symprod::sector_monomials(d - k)) return tag(g, r) + " sector " + std::to_string(k) + " basis";
  }
  const long want = total(symprod::betti(g, d));
  if (static_cast<long>(floerring::presentation_dimension(g, r)) != want) return tag(g, r) + " weighted sector sum";
  return {};
}

std::string check_recursion(int g, int r) {
  const int ar = r < 0 ? -r : r;
  const int d = d_of(g, r);
  const floerring::RelationSet rs = floerring::recursion_unique(g, ar);
  if (rs.a.size() > 1)
    for (const auto& [i, c] : rs.a[1])
      if (c != floerring::closed_form_a1(g, ar, i)) return tag(g, r) + " a_" + std::to_string(i) + "1 mismatch";
  if (!floerring::recursion_free_check(g, ar)) return tag(g, r) + " recursion-free check";
  BiPoly lowest = rs.relation.homogeneous_part(rs.alpha);
  if (!(lowest == symprod::relation_R(g, d, 0))) return tag(g, r) + " seed differs from R_0";
  for (int k = 0; k <= d; ++k)
    if (!(floerring::direct_sector_relation(g, ar, k) == floerring::recursion_relation(g, ar, k)))
      return tag(g, r) + " sector " + std::to_string(k) + " differs from genus g-k relation";
  return {};
}

std::string check_gram(int g, int r) {
  const auto ring = floerring::build_oracle(g, r);
  const swpair::SphereParams p(g, r);
  const int top = 2 * p.d();
  const QMatrix& gm = ring->gram();
  const auto& deg = ring->degrees();
  const auto& basis = ring->basis();
  for (std::size_t i = 0; i < gm.rows(); ++i)
    for (std::size_t j = 0; j < gm.cols(); ++j) {
      const int s = deg[i] + deg[j];
      if (s > top && sgn(gm(i, j)) != 0) return tag(g, r) + " nonzero entry above 2d";
      if (s == top && gm(i, j) != swpair::pair(p, basis[i], basis[j], swpair::PairingKind::kFundamental))
        return tag(g, r) + " top entry differs from fundamental pairing";
    }
  if (qlinalg::rank(gm) != gm.rows()) return tag(g, r) + " singular Gram";
  return {};
}

ExtClass random_homogeneous(int g, int maxdeg, std::mt19937& rng) {
  for (;;) {
    const int deg = std::uniform_int_distribution<int>(0, maxdeg)(rng);
    const std::vector<ExtMono> mons = extalg::monomials_of_degree(g, deg);
    if (mons.empty()) continue;
    ExtClass z(g);
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int t = 0; t < terms; ++t) {
      const ExtMono& m = mons[std::uniform_int_distribution<std::size_t>(0, mons.size() - 1)(rng)];
      int c = std::uniform_int_distribution<int>(-3, 2)(rng);
      if (c >= 0) ++c;
      z.add(m, c);
    }
    if (!z.is_zero()) return z;
  }
}

std::string check_deformation(int g, int r, int samples) {
  const auto ring = floerring::build_oracle(g, r);
  const int d = ring->params().d();
  const auto cup = symprod::ring_oracle(g, d);
  std::mt19937 rng(static_cast<unsigned>(1000 * g + 10 * (r + 10)));
  for (int s = 0; s < samples; ++s) {
    const ExtClass f1 = random_homogeneous(g, 2 * d, rng);
    const ExtClass f2 = random_homogeneous(g, 2 * d, rng);
    const floerring::Deformation def = floerring::deformation_components(*ring, f1, f2);
    if (!def.off_ladder_zero) return tag(g, r) + " off-ladder component for " + f1.to_string() + " , " + f2.to_string();
    const QVector c = cup->product(f1, f2);
    const QVector phi0 = def.phi.empty() ? QVector(c.size()) : def.phi[0];
    if (phi0 != c) return tag(g, r) + " Phi_0 differs from cup product for " + f1.to_string() + " , " + f2.to_string();
  }
  return {};
}

std::string check_b1(int g, int r) {
  const int d = d_of(g, r);
  if (d % 2 == 0) {
    const Rat c = glueadj::c_coefficient(g, r);
    if (c * glueadj::c_pairing_route(g, r) != 1) return tag(g, r) + " c routes disagree";
  }
  const std::size_t rank = glueadj::kernel_K_pairing_rank(g, r);
  if (rank != (d % 2 == 0 ? 1u : 0u)) return tag(g, r) + " K pairing rank " + std::to_string(rank);
  if (!glueadj::kernel_K_matches_I1(g, r)) return tag(g, r) + " K differs from image of I_1";
  return {};
}

std::string check_cap(int g, int r) {
  const auto um = glueadj::universal_matrix(g, r);
  const auto ring = floerring::build_oracle(g, r);
  if (!(um->matrix * ring->gram() == QMatrix::identity(ring->dimension()))) return tag(g, r) + " m*gram != I";
  return {};
}

std::string check_glue_product(int g) {
  const int r = g - 1;
  const Rat s = qlinalg::rat(7, 2), t = qlinalg::rat(-3);
  glueadj::SWTable t1{g, r, {}}, t2{g, r, {}};
  t1.values[ExtMono{}] = s;
  t2.values[ExtMono{}] = t;
  const Rat got = glueadj::glue(g, r, t1, t2);
  if (got != s * t) return tag(g, r) + " glue = " + qlinalg::to_string(got);
  return {};
}

std::string check_vanishing(int g, int r, int sample) {
  const auto ring = floerring::build_oracle(g, r);
  const int d = ring->params().d();
  std::vector<ExtMono> mons;
  for (const ExtMono& m : extalg::monomials_up_to(g, 2 * d + 2 * g + 2))
    if (m.degree() > 2 * d) mons.push_back(m);
  if (sample > 0) {
    std::mt19937 rng(static_cast<unsigned>(77 * g + r + 100));
    std::vector<ExtMono> pick;
    for (int i = 0; i < sample; ++i) pick.push_back(mons[std::uniform_int_distribution<std::size_t>(0, mons.size() - 1)(rng)]);
    mons = std::move(pick);
  }
  for (const ExtMono& m : mons)
    for (const Rat& c : ring->normal_form(ExtClass(g, m)))
      if (sgn(c) != 0) return tag(g, r) + " " + extalg::monomial_to_string(m) + " survives";
  return {};
}

std::string check_betti_triple(int g, int d) {
  const std::vector<long> b = symprod::betti(g, d);
  const long want = total(b);
  const int r = g - 1 - d;
  std::ostringstream os;
  os << "(g=" << g << ",d=" << d << ")";
  if (static_cast<long>(floerring::presentation_dimension(g, r)) != want) return os.str() + " Floer presentation";
  if (static_cast<long>(symprod::SymProdPresentation(g, d).dimension()) != want) return os.str() + " symprod presentation";
  if (static_cast<long>(floerring::build_oracle(g, r)->dimension()) != want) return os.str() + " Floer oracle";
  if (static_cast<long>(symprod::ring_oracle(g, d)->dimension()) != want) return os.str() + " symprod oracle";
  const std::vector<long> morse = symprod::morse_count(g, d);
  for (int i = 0; i <= d; ++i)
    if (morse[i] != b[i]) return os.str() + " Morse count at i=" + std::to_string(i);
  return {};
}

struct AdjCase {
  glueadj::AdjunctionQuery q;
  const char* expected;
};

std::vector<AdjCase> adjunction_table() {
  using Q = glueadj::AdjunctionQuery;
  auto mk = [](int g, int s2, int c1, int db, int bp, std::optional<int> l = {}, std::optional<int> ds = {}) {
    Q q;
    q.g = g;
    q.sigma_sq = s2;
    q.c1_dot = c1;
    q.deg_b = db;
    q.b_plus = bp;
    q.l = l;
    q.d_s = ds;
    return q;
  };
  return {
      {mk(2, 0, -2, 1, 2), "EXCLUDED (thm adjunction, deg form)"},
      {mk(3, 0, -2, 2, 2), "ALLOWED"},
      {mk(2, 1, -1, 0, 2), "ALLOWED"},
      {mk(3, 0, 4, 1, 2), "EXCLUDED (thm adjunction, deg form)"},
      {mk(3, 2, 1, 0, 2, {}, 1), "EXCLUDED (thm adjunction, dim form)"},
      {mk(4, 0, -2, 2, 2, 1), "ALLOWED"},
      {mk(4, 0, -2, 3, 2, 2), "EXCLUDED (thm adjunction, vanishing-cycle form)"},
      {mk(4, 0, -2, 3, 2, 1), "ALLOWED"},
      {mk(3, 0, 2, 1, 1), "ALLOWED (not covered)"},
      {mk(3, 0, -4, 1, 1), "EXCLUDED (thm adjunction, deg form)"},
      {mk(5, 3, -3, 1, 2, {}, 2), "EXCLUDED (thm adjunction, dim form)"},
      {mk(2, 0, -1, 0, 2, {}, 0), "ALLOWED"},
  };
}

std::string check_adjunction() {
  int i = 0;
  for (const AdjCase& c : adjunction_table()) {
    ++i;
    const std::string got = glueadj::adjunction_verdict(c.q).to_string();
    if (got != c.expected) return "query " + std::to_string(i) + ": got '" + got + "', want '" + c.expected + "'";
  }
  return {};
}

std::string over_sweep(const std::function<std::string(int, int)>& f, bool positive_only = false) {
  for (const auto& [g, r] : default_sweep()) {
    if (positive_only && r < 0) continue;
    const std::string e = f(g, r);
    if (!e.empty()) return e;
  }
  return {};
}

}  // namespace

std::vector<CheckResult> verify_params(int g, int r) {
  std::vector<CheckResult> out;
  int d = 0;
  try {
    d = d_of(g, r);
  } catch (const Error& e) {
    out.push_back({"parameters", false, e.name() + ": " + e.what()});
    return out;
  }
  out.push_back(run("dimension", [&] { return check_dimension(g, r); }));
  out.push_back(run("tilde relations annihilate", [&] { return check_tilde_relations(g, r); }));
  out.push_back(run("recursion relations annihilate", [&] { return check_recursion_relations(g, r); }));
  out.push_back(run("presentation basis", [&] { return check_presentation(g, r); }));
  out.push_back(run("recursion consistency", [&] { return check_recursion(g, r); }));
  out.push_back(run("gram structure", [&] { return check_gram(g, r); }));
  out.push_back(run("deformation", [&] { return check_deformation(g, r, g <= 4 ? 100 : 20); }));
  out.push_back(run("b1=0 coefficient and K", [&] { return check_b1(g, r); }));
  out.push_back(run("cap identity", [&] { return check_cap(g, r); }));
  if (r == g - 1 || r == -(g - 1)) out.push_back(run("glue product", [&] { return check_glue_product(g); }));
  out.push_back(run("vanishing above 2d", [&] { return check_vanishing(g, r, g <= 4 ? 0 : 500); }));
  out.push_back(run("betti triple-check", [&] { return check_betti_triple(g, d); }));
  return out;
}

CheckResult criterion(int index) {
  switch (index) {
    case 1:
      return run("criterion 1: dimension count", [] {
        const std::pair<int, int> spots[] = {{3, 1}, {4, 1}, {5, 1}};
        const std::size_t want[] = {8, 47, 244};
        for (int i = 0; i < 3; ++i)
          if (floerring::build_oracle(spots[i].first, spots[i].second)->dimension() != want[i])
            return tag(spots[i].first, spots[i].second) + " spot value";
        return over_sweep(check_dimension);
      });
    case 2:
      return run("criterion 2: relations hold", [] { return over_sweep(check_tilde_relations); });
    case 3:
      return run("criterion 3: presentation basis", [] { return over_sweep(check_presentation); });
    case 4:
      return run("criterion 4: recursion consistency", [] { return over_sweep(check_recursion, true); });
    case 5:
      return run("criterion 5: gram structure", [] { return over_sweep(check_gram, true); });
    case 6:
      return run("criterion 6: deformation property", [] {
        return over_sweep([](int g, int r) { return g <= 4 ? check_deformation(g, r, 100) : std::string(); });
      });
    case 7:
      return run("criterion 7: b1=0 coefficient", [] {
        if (glueadj::c_pairing_route(4, 1) != qlinalg::rat(-1, 3)) return std::string("(4,1) pairing route");
        if (glueadj::c_coefficient(4, 1) != -3) return std::string("(4,1) coefficient");
        return over_sweep(check_b1, true);
      });
    case 8:
      return run("criterion 8: gluing reproduction", [] {
        for (int g = 2; g <= 5; ++g) {
          const std::string e = check_glue_product(g);
          if (!e.empty()) return e;
        }
        return over_sweep(check_cap);
      });
    case 9:
      return run("criterion 9: vanishing above 2d", [] {
        return over_sweep([](int g, int r) { return check_vanishing(g, r, g <= 4 ? 0 : 500); }, true);
      });
    case 10:
      return run("criterion 10: betti triple-check", [] {
        for (int g = 2; g <= 5; ++g)
          for (int d = 0; d <= g - 2; ++d) {
            const std::string e = check_betti_triple(g, d);
            if (!e.empty()) return e;
          }
        return std::string();
      });
    case 11:
      return run("criterion 11: adjunction checker", check_adjunction);
    default:
      throw DomainError("criterion index must be 1..11");
  }
}

std::vector<CheckResult> acceptance_criteria() {
  std::vector<CheckResult> out;
  for (int i = 1; i <= 11; ++i) out.push_back(criterion(i));
  return out;
}

}  // namespace swf::verify
