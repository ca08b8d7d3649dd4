#include "swf/glueadj.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "swf/error.hpp"

namespace swf::glueadj {

using qlinalg::binom;

Rat SWTable::value(const ExtMono& m) const {
  auto it = values.find(m);
  return it == values.end() ? Rat(0) : it->second;
}

Rat SWTable::evaluate(const ExtClass& z) const {
  Rat total = 0;
  for (const auto& [m, c] : z.terms()) {
    auto it = values.find(m);
    if (it != values.end()) total += c * it->second;
  }
  return total;
}

namespace {

std::string strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_line(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

Rat parse_rational(const std::string& tok, int line) {
  Rat q;
  if (tok.empty() || q.set_str(tok, 10) != 0) bad_line(line, "bad rational '" + tok + "'");
  if (sgn(q.get_den()) == 0) bad_line(line, "zero denominator in '" + tok + "'");
  q.canonicalize();
  return q;
}

std::size_t span_rank(const std::vector<QVector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  QMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  return qlinalg::rank(m);
}

bool is_zero_vector(const QVector& v) {
  for (const Rat& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

}  // namespace

SWTable parse_table(std::string_view text) {
  SWTable t;
  bool have_header = false;
  int d = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "genus" || tok[2] != "r") bad_line(line, "expected 'genus <g> r <r>'");
      try {
        std::size_t pos = 0;
        t.g = std::stoi(tok[1], &pos);
        if (pos != tok[1].size()) throw std::invalid_argument("g");
        t.r = std::stoi(tok[3], &pos);
        if (pos != tok[3].size()) throw std::invalid_argument("r");
      } catch (const std::logic_error&) {
        bad_line(line, "genus and r must be integers");
      }
      try {
        d = swpair::SphereParams(t.g, t.r).d();
      } catch (const DomainError& e) {
        bad_line(line, e.what());
      }
      have_header = true;
      continue;
    }
    if (tok.size() != 2) bad_line(line, "expected '<monomial> <rational>'");
    ExtMono m;
    try {
      m = extalg::parse_monomial(tok[0], t.g);
    } catch (const ParseError& e) {
      bad_line(line, e.what());
    }
    if (m.degree() > 2 * d) bad_line(line, "monomial " + tok[0] + " has degree above 2d = " + std::to_string(2 * d));
    const Rat v = parse_rational(tok[1], line);
    if (!t.values.emplace(m, v).second) bad_line(line, "duplicate monomial " + tok[0]);
  }
  if (!have_header) throw ParseError("missing 'genus <g> r <r>' header");
  return t;
}

SWTable load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_table(os.str());
}

std::shared_ptr<const UniversalMatrix> universal_matrix(int g, int r) {
  const swpair::SphereParams p(g, r < 0 ? -r : r);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const UniversalMatrix>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p.g(), p.r()});
    if (it != cache.end()) return it->second;
  }
  const auto ring = floerring::build_oracle(p.g(), p.r());
  auto um = std::make_shared<UniversalMatrix>();
  um->labels = ring->labels();
  um->basis = ring->basis();
  um->matrix = ring->quotient().gram_inverse();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p.g(), p.r()), std::move(um)).first->second;
}

Rat glue(int g, int r, const SWTable& t1, const SWTable& t2) {
  if (t1.g != g || t2.g != g) throw GenusMismatch("glue: table genus differs from g = " + std::to_string(g));
  const int ar = r < 0 ? -r : r;
  if ((t1.r < 0 ? -t1.r : t1.r) != ar || (t2.r < 0 ? -t2.r : t2.r) != ar)
    throw DomainError("glue: table r differs from r = " + std::to_string(r));
  const auto um = universal_matrix(g, r);
  const std::size_t n = um->basis.size();
  QVector v1(n), v2(n);
  for (std::size_t i = 0; i < n; ++i) {
    v1[i] = t1.evaluate(um->basis[i]);
    v2[i] = t2.evaluate(um->basis[i]);
  }
  const QVector mv = um->matrix.apply(v2);
  Rat total = 0;
  for (std::size_t i = 0; i < n; ++i) total += v1[i] * mv[i];
  return total;
}

Rat h1_simple_glue(int g, int r, const Rat& s1, const Rat& s2, int insertion_degree) {
  const int d = swpair::SphereParams(g, r).d();
  if (d % 2 != 0 || insertion_degree > 0) return 0;
  Rat c(binom(g - 1, d / 2));
  if ((d / 2) & 1) c = -c;
  return c * s1 * s2;
}

Rat c_pairing_route(int g, int r) {
  const swpair::SphereParams p(g, r < 0 ? -r : r);
  const ExtClass r1 = extalg::embed_bipoly(symprod::relation_R(g, p.d(), 1), g);
  return swpair::pair(p, r1, r1);
}

Rat c_coefficient(int g, int r) {
  const int d = swpair::SphereParams(g, r).d();
  if (d % 2 != 0) throw DomainError("c_coefficient needs even d, got d = " + std::to_string(d));
  const int a = d / 2;
  Rat c(binom(g - 1, a));
  if (a & 1) c = -c;
  const Rat via_pair = c_pairing_route(g, r);
  if (via_pair * c != 1) {
    std::ostringstream os;
    os << "c_coefficient(" << g << "," << r << "): formula " << qlinalg::to_string(c) << " but <R_1,R_1> = "
       << qlinalg::to_string(via_pair);
    throw VerificationFailure(os.str());
  }
  return c;
}

std::vector<QVector> kernel_K_basis(int g, int r) {
  const auto ring = floerring::build_oracle(g, r);
  const std::size_t n = ring->dimension();
  QMatrix m(2 * g * n, n);
  for (int j = 1; j <= 2 * g; ++j) {
    const ExtClass gj = ExtClass::gamma(g, j);
    for (std::size_t i = 0; i < n; ++i) {
      const QVector c = ring->normal_form(extalg::wedge(gj, ring->basis()[i]));
      for (std::size_t t = 0; t < n; ++t) m((j - 1) * n + t, i) = c[t];
    }
  }
  return qlinalg::kernel_basis(m);
}

std::size_t kernel_K_pairing_rank(int g, int r) {
  const auto ring = floerring::build_oracle(g, r);
  const std::vector<QVector> k = kernel_K_basis(g, r);
  QMatrix pm(k.size(), k.size());
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = 0; b < k.size(); ++b) pm(a, b) = ring->quotient().pair_coords(k[a], k[b]);
  return qlinalg::rank(pm);
}

std::vector<QVector> ideal_I1_image(int g, int r) {
  const auto ring = floerring::build_oracle(g, r);
  const int d = ring->params().d();
  std::vector<BiPoly> gens{floerring::tilde_relation(g, r, 1)};
  if (d >= 1) gens.push_back(BiPoly::monomial(0, 1) * floerring::tilde_relation(g, r, 2));
  std::vector<QVector> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (const BiPoly& gen : gens) {
        QVector c = ring->normal_form(extalg::embed_bipoly(BiPoly::monomial(a, b) * gen, g));
        if (!is_zero_vector(c)) out.push_back(std::move(c));
      }
  return out;
}

bool kernel_K_matches_I1(int g, int r) {
  const std::size_t n = floerring::build_oracle(g, r)->dimension();
  const std::vector<QVector> k = kernel_K_basis(g, r);
  const std::vector<QVector> img = ideal_I1_image(g, r);
  std::vector<QVector> both = k;
  both.insert(both.end(), img.begin(), img.end());
  const std::size_t rk = span_rank(k, n);
  return rk == span_rank(img, n) && rk == span_rank(both, n);
}

SWTable table_from_element(int g, int r, const QVector& phi) {
  const auto ring = floerring::build_oracle(g, r);
  SWTable t;
  t.g = g;
  t.r = r;
  for (const auto& [m, v] : swpair::pairing_functional(ring->params(), ring->element(phi))) t.values.emplace(m, v);
  return t;
}

std::string Verdict::to_string() const {
  if (excluded) return "EXCLUDED (thm adjunction, " + form + ")";
  return covered ? "ALLOWED" : "ALLOWED (not covered)";
}

Verdict adjunction_verdict(const AdjunctionQuery& q) {
  if (q.g < 2) throw DomainError("adjunction needs g >= 2");
  if (q.sigma_sq < 0) throw DomainError("adjunction needs self-intersection >= 0");
  const int abs_c1 = q.c1_dot < 0 ? -q.c1_dot : q.c1_dot;
  if (abs_c1 + q.sigma_sq <= 0) throw DomainError("adjunction needs |c1.S| + S^2 > 0");
  if (q.deg_b < 0) throw DomainError("adjunction needs deg_b >= 0");
  // Blowing up S^2 times turns the surface into one of square zero with
  // c1 pairing c1.S - S^2; its absolute value is the quantity below.
  const int lhs = q.b_plus > 1 ? abs_c1 + q.sigma_sq : -q.c1_dot + q.sigma_sq;
  Verdict v;
  if (q.b_plus <= 1 && lhs <= 0) {
    v.covered = false;
    return v;
  }
  const int bound = 2 * q.g - 2;
  if (lhs + q.deg_b > bound) {
    v.excluded = true;
    v.form = "deg form";
  } else if (q.d_s && lhs + 2 * *q.d_s > bound) {
    v.excluded = true;
    v.form = "dim form";
  } else if (q.l && q.deg_b <= *q.l + 1 && lhs + 2 * q.deg_b > bound) {
    v.excluded = true;
    v.form = "vanishing-cycle form";
  }
  return v;
}

namespace {

// Row-reduced span of gamma_j * e_i, j <= d, for membership tests.
struct IdealSpan {
  std::vector<QVector> rows;
  std::vector<std::size_t> pivots;

  bool contains(QVector v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rat f = v[pivots[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (sgn(rows[r][c]) != 0) v[c] -= f * rows[r][c];
    }
    return is_zero_vector(v);
  }
};

std::shared_ptr<const IdealSpan> gamma_ideal(const floerring::FloerRing& ring) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const IdealSpan>> cache;
  const int g = ring.params().g();
  const std::pair<int, int> key{g, ring.params().r()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const std::size_t n = ring.dimension();
  std::vector<QVector> gens;
  for (int j = 1; j <= ring.params().d(); ++j)
    for (const ExtClass& e : ring.basis()) {
      QVector v = ring.normal_form(extalg::wedge(ExtClass::gamma(g, j), e));
      if (!is_zero_vector(v)) gens.push_back(std::move(v));
    }
  auto span = std::make_shared<IdealSpan>();
  if (!gens.empty()) {
    QMatrix m(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gens[i][j];
    const qlinalg::RrefResult red = qlinalg::rref(m);
    span->pivots = red.pivot_cols;
    for (std::size_t r = 0; r < red.rank; ++r) {
      auto row = red.reduced.row(r);
      span->rows.emplace_back(row.begin(), row.end());
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(span)).first->second;
}

}  // namespace

VanishingReport vanishing_witness(int g, int r, const ExtMono& m) {
  const auto ring = floerring::build_oracle(g, r);
  const QVector c = ring->normal_form(ExtClass(g, m));
  VanishingReport rep;
  rep.normal_form_zero = is_zero_vector(c);
  if (m.degree() > ring->params().d()) {
    rep.ideal_checked = true;
    rep.in_ideal = gamma_ideal(*ring)->contains(c);
  }
  return rep;
}

}  // namespace swf::glueadj
