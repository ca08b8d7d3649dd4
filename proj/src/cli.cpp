#include "swf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "swf/error.hpp"
#include "swf/glueadj.hpp"
#include "swf/verify.hpp"

namespace swf::cli {

namespace {

void print_legend(std::ostream& out, const floerring::FloerRing& ring) {
  for (std::size_t i = 0; i < ring.dimension(); ++i)
    out << "e" << i << " deg=" << ring.degrees()[i] << " " << ring.labels()[i].to_string() << " "
        << ring.basis()[i].to_string() << "\n";
}

void print_matrix(std::ostream& out, const qlinalg::QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << qlinalg::to_string(m(i, j));
    out << "\n";
  }
}

void check_gd(int g, int d) {
  if (g < 2 || g > extalg::kMaxGenus) throw DomainError("g must lie in 2.." + std::to_string(extalg::kMaxGenus));
  if (d < 0 || d > g - 1) throw DomainError("d must lie in 0..g-1");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seiberg-Witten-Floer ring computations", "swf"};
  app.require_subcommand(1);
  int g = 0, d = 0, k = 0, r = 0;

  auto* betti = app.add_subcommand("betti", "Betti numbers of s^d Sigma_g");
  betti->add_option("--g", g)->required();
  betti->add_option("--d", d)->required();

  auto* sprel = app.add_subcommand("sp-relation", "relation R_k^g of H*(s^d Sigma)");
  sprel->add_option("--g", g)->required();
  sprel->add_option("--d", d)->required();
  sprel->add_option("--k", k)->required();

  std::string variant = "tilde";
  auto* frel = app.add_subcommand("floer-relations", "relations of V_r for every k");
  frel->add_option("--g", g)->required();
  frel->add_option("--r", r)->required();
  frel->add_option("--variant", variant)->check(CLI::IsMember({"tilde", "recursion"}));

  auto* fdim = app.add_subcommand("floer-dim", "oracle and presentation dimensions of V_r");
  fdim->add_option("--g", g)->required();
  fdim->add_option("--r", r)->required();

  std::string expr;
  auto* fnf = app.add_subcommand("floer-nf", "normal form of an expression in V_r");
  fnf->add_option("--g", g)->required();
  fnf->add_option("--r", r)->required();
  fnf->add_option("--expr", expr)->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix on the canonical basis");
  gram->add_option("--g", g)->required();
  gram->add_option("--r", r)->required();

  auto* um = app.add_subcommand("umatrix", "universal gluing matrix");
  um->add_option("--g", g)->required();
  um->add_option("--r", r)->required();

  std::string t1, t2;
  auto* glue = app.add_subcommand("glue", "glue two relative invariant tables");
  glue->add_option("--g", g)->required();
  glue->add_option("--r", r)->required();
  glue->add_option("--t1", t1)->required();
  glue->add_option("--t2", t2)->required();

  glueadj::AdjunctionQuery q;
  int l = 0, ds = 0;
  auto* adj = app.add_subcommand("adjunct", "adjunction inequality verdict");
  adj->add_option("--g", q.g)->required();
  adj->add_option("--sigma2", q.sigma_sq)->required();
  adj->add_option("--c1dot", q.c1_dot)->required();
  adj->add_option("--degb", q.deg_b)->required();
  adj->add_option("--bplus", q.b_plus)->required()->check(CLI::PositiveNumber);
  auto* lopt = adj->add_option("--l", l);
  auto* dsopt = adj->add_option("--ds", ds);

  bool all = false;
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  auto* vg = ver->add_option("--g", g);
  auto* vr = ver->add_option("--r", r);
  ver->add_flag("--all", all, "run the acceptance criteria over the full sweep");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (ver->parsed() && !all && (vg->count() == 0 || vr->count() == 0)) {
    err << "verify: --g and --r are required unless --all is given\n";
    return 2;
  }

  try {
    if (betti->parsed()) {
      check_gd(g, d);
      const auto b = symprod::betti(g, d);
      for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
      out << "\n";
    } else if (sprel->parsed()) {
      check_gd(g, d);
      out << symprod::relation_R(g, d, k).to_string() << "\n";
    } else if (frel->parsed()) {
      const int dd = swpair::SphereParams(g, r).d();
      for (int kk = 0; kk <= dd + 1; ++kk) {
        const BiPoly rel = variant == "tilde" ? floerring::tilde_relation(g, r, kk)
                                              : floerring::recursion_relation(g, r < 0 ? -r : r, kk);
        out << "k=" << kk << ": " << rel.to_string() << "\n";
      }
    } else if (fdim->parsed()) {
      const auto ring = floerring::build_oracle(g, r);
      out << "oracle=" << ring->dimension() << " presentation=" << floerring::presentation_dimension(g, r) << "\n";
    } else if (fnf->parsed()) {
      const auto ring = floerring::build_oracle(g, r);
      out << ring->element(ring->normal_form(extalg::parse_expression(expr, g))).to_string() << "\n";
    } else if (gram->parsed()) {
      const auto ring = floerring::build_oracle(g, r);
      print_legend(out, *ring);
      print_matrix(out, ring->gram());
    } else if (um->parsed()) {
      const auto ring = floerring::build_oracle(g, r);
      print_legend(out, *ring);
      print_matrix(out, glueadj::universal_matrix(g, r)->matrix);
    } else if (glue->parsed()) {
      const glueadj::SWTable a = glueadj::load_table(t1);
      const glueadj::SWTable b = glueadj::load_table(t2);
      out << qlinalg::to_string(glueadj::glue(g, r, a, b)) << "\n";
    } else if (adj->parsed()) {
      if (lopt->count()) q.l = l;
      if (dsopt->count()) q.d_s = ds;
      out << glueadj::adjunction_verdict(q).to_string() << "\n";
    } else if (ver->parsed()) {
      const auto results = all ? verify::acceptance_criteria() : verify::verify_params(g, r);
      bool ok = true;
      for (const auto& res : results) {
        out << res.line() << "\n";
        ok = ok && res.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const VerificationFailure& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace swf::cli
