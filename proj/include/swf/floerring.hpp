#pragma once

#include <map>
#include <memory>
#include <vector>

#include "swf/bipoly.hpp"
#include "swf/symprod.hpp"
#include "swf/swpair.hpp"
#include "swf/upoly.hpp"

namespace swf::floerring {

using extalg::ExtClass;
using qlinalg::QVector;
using qlinalg::Rat;
using symprod::BasisLabel;

/// V_r = A(Sigma)/I_g on the canonical basis of H*(s^d Sigma).
class FloerRing {
 public:
  FloerRing(int g, int r);
  const swpair::SphereParams& params() const { return quotient_.params(); }
  std::size_t dimension() const { return quotient_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const std::vector<ExtClass>& basis() const { return quotient_.basis(); }
  const std::vector<int>& degrees() const { return quotient_.degrees(); }
  const qlinalg::QMatrix& gram() const { return quotient_.gram(); }
  const swpair::PairingQuotient& quotient() const { return quotient_; }

  QVector normal_form(const ExtClass& z) const { return quotient_.coords(z); }
  QVector product(const ExtClass& u, const ExtClass& v) const { return quotient_.product(u, v); }
  ExtClass element(const QVector& c) const { return quotient_.element(c); }
  QVector structure_constants(std::size_t i, std::size_t j) const;

 private:
  std::vector<BasisLabel> labels_;
  swpair::PairingQuotient quotient_;
};

/// Cached per (g, |r|); V_r and V_{-r} share one ring.
std::shared_ptr<const FloerRing> build_oracle(int g, int r);

/// Closed-form generator; 1 for k = d+1.
BiPoly tilde_relation(int g, int r, int k);

/// Sector k of the presentation: Q[eta,theta]/(eta^{d+1}, theta^{d+1})
/// modulo the images of tilde R_k and theta * tilde R_{k+1}.
class PresentationQuotient {
 public:
  PresentationQuotient(int g, int r, int k);
  int k() const { return k_; }
  const std::vector<BiMono>& basis() const { return quotient_.standard_monomials(); }
  std::size_t dimension() const { return quotient_.dimension(); }
  /// Truncates at eta^{d+1}, theta^{d+1} before reducing.
  BiPoly normal_form(const BiPoly& p) const;

 private:
  int d_;
  int k_;
  symprod::MonomialQuotient quotient_;
};

PresentationQuotient presentation_quotient(int g, int r, int k);
/// Sum over sectors of primitive dimension times sector dimension.
std::size_t presentation_dimension(int g, int r);

/// Output of the p-polynomial recursion.
struct RelationSet {
  int g = 0;
  int r = 0;
  int alpha = 0;
  std::vector<UPoly> p;                  // p_0, p_1, ...
  std::vector<std::map<int, Rat>> a;     // a[m][i]
  BiPoly relation;                       // R_0^g with corrections
};

/// Solves the constrained recursion; InconsistentRecursion unless every
/// step has exactly one solution.
RelationSet recursion_unique(int g, int r);
/// Recursion relation for sector k, taken as the genus g-k sector-0 relation.
BiPoly recursion_relation(int g, int r, int k);
/// Displayed closed form for a_{i1}.
Rat closed_form_a1(int g, int r, int i);
/// Solves the sector-k ansatz directly at genus g: coefficients of the
/// correction terms are fixed by requiring g1...gk * relation to annihilate.
BiPoly direct_sector_relation(int g, int r, int k);

struct FreeRecursion {
  bool congruences_hold = false;
  std::vector<Rat> a1;  // coefficients of p_1 read as a_{i1}
  BiPoly relation;      // R_0^g assembled from p_1
};
FreeRecursion recursion_free(int g, int r);
/// Congruences hold and the assembled relation equals tilde_relation(g,r,0).
bool recursion_free_check(int g, int r);

struct Deformation {
  std::vector<QVector> phi;  // phi[m] keeps the degree i+j+2m|r| coordinates
  bool off_ladder_zero = true;
};
/// Splits product(f1,f2) by degree; f1, f2 must be homogeneous.
Deformation deformation_components(const FloerRing& ring, const ExtClass& f1, const ExtClass& f2);

}  // namespace swf::floerring
