#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "swf/error.hpp"
#include "swf/glueadj.hpp"

using namespace swf;
using namespace swf::glueadj;
using qlinalg::binom;
using qlinalg::rat;

namespace {

std::vector<std::pair<int, int>> sweep() {
  std::vector<std::pair<int, int>> out;
  for (int g = 2; g <= 5; ++g)
    for (int r = 1; r <= g - 1; ++r) out.emplace_back(g, r);
  return out;
}

SWTable constant_table(int g, int r, const Rat& v) {
  SWTable t{g, r, {}};
  t.values[ExtMono{}] = v;
  return t;
}

AdjunctionQuery query(int g, int s2, int c1, int db, int bp, std::optional<int> l = {}, std::optional<int> ds = {}) {
  AdjunctionQuery q;
  q.g = g;
  q.sigma_sq = s2;
  q.c1_dot = c1;
  q.deg_b = db;
  q.b_plus = bp;
  q.l = l;
  q.d_s = ds;
  return q;
}

}  // namespace

TEST_CASE("universal matrix") {
  const auto u21 = universal_matrix(2, 1);
  CHECK(u21->matrix == QMatrix::identity(1));
  CHECK(u21->labels.size() == 1);
  CHECK(universal_matrix(3, 1) == universal_matrix(3, 1));
  const auto u31 = universal_matrix(3, 1);
  CHECK(u31->matrix.rows() == 8);
  CHECK(u31->matrix.cols() == 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (u31->labels[i].degree() + u31->labels[j].degree() < 2) CHECK(sgn(u31->matrix(i, j)) == 0);
  for (auto [g, r] : sweep()) {
    const auto u = universal_matrix(g, r);
    const auto ring = floerring::build_oracle(g, r);
    CHECK(u->matrix * ring->gram() == QMatrix::identity(ring->dimension()));
    CHECK(ring->gram() * u->matrix == QMatrix::identity(ring->dimension()));
  }
}

TEST_CASE("glue") {
  for (int g = 2; g <= 5; ++g) {
    const int r = g - 1;
    CHECK(glue(g, r, constant_table(g, r, rat(5, 3)), constant_table(g, r, -2)) == rat(-10, 3));
  }
  const SWTable zero{3, 1, {}};
  SWTable some{3, 1, {}};
  some.values[extalg::parse_monomial("g1*g4", 3)] = 2;
  some.values[ExtMono{}] = rat(1, 2);
  CHECK(glue(3, 1, zero, some) == 0);
  CHECK(glue(3, 1, some, some) != 0);
  CHECK_THROWS_AS(glue(4, 1, some, some), GenusMismatch);
  CHECK_THROWS_AS(glue(3, 1, some, SWTable{3, 2, {}}), DomainError);
  CHECK(glue(3, -1, some, some) == glue(3, 1, some, some));
}

TEST_CASE("glue equals the pairing of the underlying elements") {
  for (auto [g, r] : sweep()) {
    const auto ring = floerring::build_oracle(g, r);
    const std::size_t n = ring->dimension();
    for (std::size_t i = 0; i < n; i += 1 + n / 6)
      for (std::size_t j = 0; j < n; j += 1 + n / 5) {
        QVector a(n), b(n);
        a[i] = 1;
        b[j] = rat(3, 2);
        const SWTable t1 = table_from_element(g, r, a), t2 = table_from_element(g, r, b);
        const Rat gl = glue(g, r, t1, t2);
        CHECK(gl == ring->quotient().pair_coords(b, a));
        CHECK(gl == glue(g, r, t2, t1) * ((ring->degrees()[i] % 2 && ring->degrees()[j] % 2) ? -1 : 1));
      }
  }
}

TEST_CASE("simple-type gluing") {
  CHECK(h1_simple_glue(3, 1, 5, 7) == 0);
  CHECK(h1_simple_glue(3, 2, 5, 7) == 35);
  CHECK(h1_simple_glue(5, 2, 1, 1) == -4);
  CHECK(h1_simple_glue(5, 2, 1, 1, 2) == 0);
  CHECK(h1_simple_glue(7, 2, 1, 1) == 15);  // d = 4

  for (auto [g, r] : sweep()) {
    const int d = g - 1 - r;
    const auto kb = kernel_K_basis(g, r);
    std::vector<SWTable> tables;
    for (const QVector& v : kb) tables.push_back(table_from_element(g, r, v));
    for (const SWTable& t : tables)
      for (const auto& [m, v] : t.values)
        if (sgn(v) != 0) CHECK(m.gamma_degree() == 0);
    const ExtMono mid{d / 2, 0};
    for (const SWTable& t1 : tables)
      for (const SWTable& t2 : tables) {
        const Rat gl = glue(g, r, t1, t2);
        if (d % 2) CHECK(gl == 0);
        else CHECK(gl == h1_simple_glue(g, r, t1.value(mid), t2.value(mid)));
      }
  }
}

TEST_CASE("b1=0 coefficient") {
  CHECK(c_coefficient(5, 2) == -4);
  CHECK(c_pairing_route(5, 2) == rat(-1, 4));
  CHECK(c_coefficient(3, 2) == 1);
  CHECK(c_coefficient(4, 1) == -3);
  CHECK(c_pairing_route(4, 1) == rat(-1, 3));
  CHECK_THROWS_AS(c_coefficient(3, 1), DomainError);
  for (auto [g, r] : sweep()) {
    const int a = (g - 1 - r) / 2;
    if ((g - 1 - r) % 2) continue;
    const Rat want = Rat(binom(g - 1, a)) * (a % 2 ? -1 : 1);
    CHECK(c_coefficient(g, r) == want);
    CHECK(c_coefficient(g, -r) == want);
  }
}

TEST_CASE("invariant kernel") {
  CHECK(kernel_K_basis(2, 1).size() == 1);
  CHECK(kernel_K_pairing_rank(2, 1) == 1);
  CHECK(kernel_K_pairing_rank(4, 1) == 1);
  CHECK(kernel_K_pairing_rank(3, 1) == 0);
  for (auto [g, r] : sweep()) {
    const int d = g - 1 - r;
    const auto ring = floerring::build_oracle(g, r);
    const auto kb = kernel_K_basis(g, r);
    CHECK(kb.size() == (d <= 1 ? 1u : 2u));
    for (const QVector& v : kb)
      for (int j = 1; j <= 2 * g; ++j)
        for (const Rat& c : ring->product(ExtClass::gamma(g, j), ring->element(v))) CHECK(sgn(c) == 0);
    CHECK(kernel_K_pairing_rank(g, r) == (d % 2 == 0 ? 1u : 0u));
    CHECK(kernel_K_matches_I1(g, r));
  }
}

TEST_CASE("adjunction verdicts") {
  CHECK(adjunction_verdict(query(2, 0, -2, 1, 2)).to_string() == "EXCLUDED (thm adjunction, deg form)");
  CHECK(adjunction_verdict(query(3, 0, -2, 2, 2)).to_string() == "ALLOWED");
  CHECK(adjunction_verdict(query(2, 1, -1, 0, 2)).to_string() == "ALLOWED");
  CHECK(adjunction_verdict(query(3, 0, 4, 1, 2)).to_string() == "EXCLUDED (thm adjunction, deg form)");
  // 1 + 2 + 2*1 > 4
  CHECK(adjunction_verdict(query(3, 2, 1, 0, 2, {}, 1)).to_string() == "EXCLUDED (thm adjunction, dim form)");
  CHECK(adjunction_verdict(query(3, 2, 1, 0, 2, {}, 0)).to_string() == "ALLOWED");
  // 2 + 2*3 > 6 with deg_b <= l + 1
  CHECK(adjunction_verdict(query(4, 0, -2, 3, 2, 2)).to_string() ==
        "EXCLUDED (thm adjunction, vanishing-cycle form)");
  CHECK(adjunction_verdict(query(4, 0, -2, 3, 2, 1)).to_string() == "ALLOWED");
  CHECK(adjunction_verdict(query(4, 0, -2, 2, 2, 1)).to_string() == "ALLOWED");
  // b+ = 1 only sees -c1.S
  CHECK(adjunction_verdict(query(3, 0, 2, 1, 1)).to_string() == "ALLOWED (not covered)");
  CHECK_FALSE(adjunction_verdict(query(3, 0, 2, 1, 1)).covered);
  CHECK(adjunction_verdict(query(3, 0, -4, 1, 1)).to_string() == "EXCLUDED (thm adjunction, deg form)");
  CHECK(adjunction_verdict(query(3, 0, 4, 1, 2)).form == "deg form");
  CHECK(adjunction_verdict(query(5, 3, -3, 1, 2, {}, 2)).to_string() == "EXCLUDED (thm adjunction, dim form)");
  CHECK(adjunction_verdict(query(2, 0, -1, 0, 2, {}, 0)).to_string() == "ALLOWED");

  CHECK_THROWS_AS(adjunction_verdict(query(2, 0, 0, 1, 2)), DomainError);
  CHECK_THROWS_AS(adjunction_verdict(query(1, 0, -2, 1, 2)), DomainError);
  CHECK_THROWS_AS(adjunction_verdict(query(2, -1, -2, 1, 2)), DomainError);
  CHECK_THROWS_AS(adjunction_verdict(query(2, 0, -2, -1, 2)), DomainError);

  // blow-up bookkeeping: only c1.S - S^2 and its sign matter for b+ = 1
  for (int s2 = 0; s2 <= 4; ++s2)
    for (int c1 = -6; c1 <= 6; ++c1)
      for (int db = 0; db <= 4; ++db) {
        if (std::abs(c1) + s2 <= 0) continue;
        const Verdict v = adjunction_verdict(query(3, s2, c1, db, 2));
        CHECK(v.excluded == (std::abs(c1) + s2 + db > 4));
        const Verdict w = adjunction_verdict(query(3, s2, c1, db, 1));
        if (s2 - c1 <= 0) CHECK_FALSE(w.covered);
        else CHECK(w.excluded == (s2 - c1 + db > 4));
      }
}

TEST_CASE("vanishing witnesses") {
  CHECK_FALSE(vanishing_witness(3, 1, extalg::parse_monomial("x", 3)).holds());
  CHECK(vanishing_witness(3, 1, extalg::parse_monomial("x*g1", 3)).holds());
  for (const ExtMono& m : extalg::monomials_of_degree(4, 3)) {
    const VanishingReport rep = vanishing_witness(4, 1, m);
    CHECK(rep.ideal_checked);
    CHECK(rep.in_ideal);
  }
  for (auto [g, r] : sweep()) {
    if (g > 4) continue;
    const int d = g - 1 - r;
    for (const ExtMono& m : extalg::monomials_of_degree(g, 2 * d + 1)) {
      const VanishingReport rep = vanishing_witness(g, r, m);
      CHECK(rep.holds());
      CHECK(rep.ideal_checked == (m.degree() > d));
      CHECK(rep.in_ideal);
    }
  }
}

TEST_CASE("table parsing") {
  const SWTable t = parse_table("# relative invariant\ngenus 4 r 1\n\n1 2\nx^1*g1 3/2  # trailing\ng1*g5 -1\n");
  CHECK(t.g == 4);
  CHECK(t.r == 1);
  CHECK(t.values.size() == 3);
  CHECK(t.value(ExtMono{}) == 2);
  CHECK(t.value(extalg::parse_monomial("x*g1", 4)) == rat(3, 2));
  CHECK(t.value(extalg::parse_monomial("g2", 4)) == 0);
  CHECK(t.evaluate(extalg::parse_expression("2 + g1*g5", 4)) == 3);

  CHECK_THROWS_AS(parse_table("gen 3 r 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_table("genus 3 r 1 extra\n"), ParseError);
  CHECK_THROWS_AS(parse_table("genus 3 r 1\n1 2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_table("genus 3 r 1\nx*g1 2\n"), ParseError);  // degree 3 > 2d
  CHECK_THROWS_AS(parse_table("genus 3 r 1\n1 2/0\n"), ParseError);
  CHECK_THROWS_AS(parse_table("genus 3 r 1\n1 abc\n"), ParseError);
  CHECK_THROWS_AS(parse_table("genus 3 r 3\n"), ParseError);
  CHECK_THROWS_AS(parse_table(""), ParseError);
  try {
    parse_table("genus 3 r 1\n1 2\ng7 1\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  const std::string path = "glueadj_table_tmp.txt";
  {
    std::ofstream f(path);
    f << "genus 2 r 1\n1 4\n";
  }
  CHECK(load_table(path).value(ExtMono{}) == 4);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_table("/nonexistent/table.txt"), Error);
}
