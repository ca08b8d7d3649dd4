#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swf/floerring.hpp"

namespace swf::glueadj {

using extalg::ExtClass;
using extalg::ExtMono;
using qlinalg::QMatrix;
using qlinalg::QVector;
using qlinalg::Rat;

/// Relative invariant data: monomial -> aggregated SW value (absent = 0).
struct SWTable {
  int g = 0;
  int r = 0;
  std::map<ExtMono, Rat, extalg::ExtMonoLess> values;

  Rat value(const ExtMono& m) const;
  /// Linear extension to classes.
  Rat evaluate(const ExtClass& z) const;
};

/// Parses the `genus <g> r <r>` table format. Throws ParseError.
SWTable parse_table(std::string_view text);
SWTable load_table(const std::string& path);

struct UniversalMatrix {
  std::vector<symprod::BasisLabel> labels;
  std::vector<ExtClass> basis;
  QMatrix matrix;  // inverse Gram
};
/// Cached per (g, |r|).
std::shared_ptr<const UniversalMatrix> universal_matrix(int g, int r);

/// sum_{i,j} m_ij t1(z_i) t2(z_j).
Rat glue(int g, int r, const SWTable& t1, const SWTable& t2);

/// Closed formula for H_1-simple inputs; insertion_degree is deg z.
Rat h1_simple_glue(int g, int r, const Rat& s1, const Rat& s2, int insertion_degree = 0);

/// (-1)^a C(g-1,a) with a = d/2, checked against the pairing of R_1 with
/// itself. DomainError for odd d, VerificationFailure on disagreement.
Rat c_coefficient(int g, int r);
/// <R_1, R_1> in V_r.
Rat c_pairing_route(int g, int r);

/// Coordinates of a basis of {phi : gamma_j * phi = 0 for all j}.
std::vector<QVector> kernel_K_basis(int g, int r);
std::size_t kernel_K_pairing_rank(int g, int r);
/// Coordinates spanning the image of (tilde R_1, theta tilde R_2) in V_r.
std::vector<QVector> ideal_I1_image(int g, int r);
/// span(kernel_K_basis) == span(ideal_I1_image).
bool kernel_K_matches_I1(int g, int r);

/// Table t(m) = <phi, m> for the class with coordinates phi.
SWTable table_from_element(int g, int r, const QVector& phi);

struct AdjunctionQuery {
  int g = 2;
  int sigma_sq = 0;
  int c1_dot = 0;
  int deg_b = 0;
  int b_plus = 2;  // 1, or anything > 1
  std::optional<int> l;
  std::optional<int> d_s;
};

struct Verdict {
  bool excluded = false;
  bool covered = true;
  std::string form;  // "deg form", "dim form", "vanishing-cycle form"
  std::string to_string() const;
};

/// DomainError when |c1.S| + S^2 <= 0, S^2 < 0 or g < 2.
Verdict adjunction_verdict(const AdjunctionQuery& q);

struct VanishingReport {
  bool normal_form_zero = false;
  bool ideal_checked = false;  // degree exceeded g-1-|r|
  bool in_ideal = false;       // membership in (gamma_1..gamma_{g-1-|r|})
  bool holds() const { return normal_form_zero; }
};
VanishingReport vanishing_witness(int g, int r, const ExtMono& m);

}  // namespace swf::glueadj
