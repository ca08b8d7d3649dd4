#pragma once

#include <memory>
#include <string>
#include <vector>

#include "swf/bipoly.hpp"
#include "swf/extalg.hpp"
#include "swf/swpair.hpp"

namespace swf::symprod {

using extalg::ExtClass;
using qlinalg::QVector;
using qlinalg::Rat;

/// Poincare polynomial coefficients b_0..b_{2d} of s^d Sigma_g.
std::vector<long> betti(int g, int d);
/// Morse-count binomial sum C(2g,i) + C(2g,i-2) + ... for 0 <= i <= d.
std::vector<long> morse_count(int g, int d);

/// R_k^g for s^d Sigma_g; R_{d+1}^g = 1.
BiPoly relation_R(int g, int d, int k);

/// {eta^a theta^b : 2a + b <= n} in BiMonoLess order (empty for n < 0).
std::vector<BiMono> sector_monomials(int n);

/// Label (k, w, a, b) of the basis element w * x^a * theta^b, where w is the
/// w-th element of primitive_basis(g, k).
struct BasisLabel {
  int k;
  int w_index;
  int a;
  int b;
  int degree() const { return k + 2 * a + 2 * b; }
  std::string to_string() const;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct CanonicalBasis {
  std::vector<BasisLabel> labels;
  std::vector<ExtClass> elements;
};

/// Labels with 2a + b + k <= d, sorted by (degree, k, w, a descending).
CanonicalBasis canonical_basis(int g, int d);

/// Quotient of a finite span of BiMono by a subspace given by spanning
/// polynomials. Columns outside the preferred set are eliminated first, so
/// normal forms land on the preferred monomials whenever those are a
/// complement.
class MonomialQuotient {
 public:
  MonomialQuotient(std::vector<BiMono> universe, const std::vector<BiPoly>& spanning,
                   const std::vector<BiMono>& preferred);

  /// Monomials not hit by a pivot (the quotient basis actually realized).
  const std::vector<BiMono>& standard_monomials() const { return standard_; }
  std::size_t dimension() const { return standard_.size(); }
  BiPoly normal_form(const BiPoly& p) const;  // DomainError outside universe

 private:
  std::vector<BiMono> columns_;
  std::map<BiMono, std::size_t, BiMonoLess> index_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<BiMono> standard_;
};

/// Presentation of H*(s^d Sigma) sector by sector: Q[eta,theta] modulo
/// J_k = (R_k, theta R_{k+1}, theta^{g-k+1}).
class SymProdPresentation {
 public:
  SymProdPresentation(int g, int d);
  int g() const { return g_; }
  int d() const { return d_; }
  std::vector<BiMono> sector_basis(int k) const { return sector_monomials(d_ - k); }
  /// Ideal generators of sector k.
  std::vector<BiPoly> generators(int k) const;
  BiPoly sector_normal_form(int k, const BiPoly& p) const;
  /// Sum over k of dim(primitive part) times sector size.
  std::size_t dimension() const;

 private:
  int g_;
  int d_;
  // Per sector, per half-degree 0..d-k+1.
  std::vector<std::vector<MonomialQuotient>> pieces_;
};

BiPoly sector_normal_form(int g, int d, int k, const BiPoly& p);

/// H*(s^d Sigma) as A(Sigma)^{<=2d} modulo the annihilator of the
/// fundamental-class pairing, on the canonical basis.
class SymProdRing {
 public:
  SymProdRing(int g, int d);
  int g() const { return g_; }
  int d() const { return d_; }
  std::size_t dimension() const { return quotient_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const swpair::PairingQuotient& quotient() const { return quotient_; }
  QVector normal_form(const ExtClass& z) const { return quotient_.coords(z); }
  QVector product(const ExtClass& u, const ExtClass& v) const { return quotient_.product(u, v); }
  /// Coordinates of e_i * e_j.
  QVector structure_constants(std::size_t i, std::size_t j) const;

 private:
  int g_;
  int d_;
  std::vector<BasisLabel> labels_;
  swpair::PairingQuotient quotient_;
};

/// Ring oracle; DomainError when d = g-1 or out of range.
std::shared_ptr<const SymProdRing> ring_oracle(int g, int d);

}  // namespace swf::symprod
