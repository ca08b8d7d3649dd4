#pragma once

#include <map>
#include <vector>

#include "swf/extalg.hpp"
#include "swf/qlinalg.hpp"

namespace swf::swpair {

using extalg::ExtClass;
using extalg::ExtMono;
using qlinalg::QMatrix;
using qlinalg::QVector;
using qlinalg::Rat;

/// Spin^c data on Sigma x S^2: genus g and r with 1 <= |r| <= g-1.
class SphereParams {
 public:
  SphereParams(int g, int r);  // throws DomainError
  int g() const { return g_; }
  int r() const { return r_; }
  int abs_r() const { return r_ < 0 ? -r_ : r_; }
  int d() const { return g_ - 1 - abs_r(); }
  int grading_modulus() const { return 2 * abs_r(); }

 private:
  int g_;
  int r_;
};

/// Which functional is paired against: the full sum over n (Floer pairing on
/// V_r) or only n = -1 (fundamental class of s^d Sigma).
enum class PairingKind { kFloer, kFundamental };

/// SW invariant of Sigma x S^2 in the class s_r + n[Sigma] on z.
Rat sw_sphere(const SphereParams& p, int n, const ExtClass& z);

/// Reference route for sw_sphere: sum_a top_eval(omega_a ^ exp(-n theta))
/// evaluated literally through extalg. Slow; used to cross-check.
Rat sw_sphere_reference(const SphereParams& p, int n, const ExtClass& z);

/// Value of the pairing functional on a single monomial (sum over n for kFloer).
Rat functional_on_monomial(const SphereParams& p, PairingKind kind, const ExtMono& m);

/// <z1, z2>: sum over n of sw_sphere(n, z1 z2) (kFloer), or n = -1 only.
Rat pair(const SphereParams& p, const ExtClass& z1, const ExtClass& z2,
         PairingKind kind = PairingKind::kFloer);

/// Nonzero values m -> pair(z, m) over monomials m of degree <= 2d.
std::map<ExtMono, Rat, extalg::ExtMonoLess> pairing_functional(const SphereParams& p,
                                                               const ExtClass& z,
                                                               PairingKind kind = PairingKind::kFloer);

/// z pairs to zero with every monomial of degree <= 2d.
bool in_annihilator(const SphereParams& p, const ExtClass& z, PairingKind kind = PairingKind::kFloer);

/// Gram matrix; rows assembled in parallel.
QMatrix gram(const SphereParams& p, const std::vector<ExtClass>& basis,
             PairingKind kind = PairingKind::kFloer);
QMatrix gram_serial(const SphereParams& p, const std::vector<ExtClass>& basis,
                    PairingKind kind = PairingKind::kFloer);

/// Full pairing matrix over the given monomials (rows) against the given
/// monomials (columns). Used for unblocked cross-checks.
QMatrix pairing_matrix(const SphereParams& p, const std::vector<ExtMono>& rows,
                       const std::vector<ExtMono>& cols, PairingKind kind = PairingKind::kFloer);

/// Dimension of A(Sigma)^{<=2d} modulo the annihilator, i.e. the rank of
/// the monomial pairing matrix (computed block by block).
std::size_t quotient_dimension(const SphereParams& p, PairingKind kind = PairingKind::kFloer);

/// Canonical basis of the annihilator inside A(Sigma)^{<=maxdeg}
/// (maxdeg < 0 means 2d).
std::vector<ExtClass> annihilator(const SphereParams& p, int maxdeg = -1,
                                  PairingKind kind = PairingKind::kFloer);

/// A(Sigma)^{<=2d} modulo the annihilator of a pairing, presented on a
/// caller-chosen homogeneous basis. Coordinates come from inverting the
/// Gram matrix, so the basis must span the quotient (else SingularMatrix).
class PairingQuotient {
 public:
  PairingQuotient(const SphereParams& p, PairingKind kind, std::vector<ExtClass> basis);

  const SphereParams& params() const { return params_; }
  PairingKind kind() const { return kind_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<ExtClass>& basis() const { return basis_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const QMatrix& gram() const { return gram_; }
  const QMatrix& gram_inverse() const { return gram_inv_; }

  /// Coordinates of the class of z on the basis.
  QVector coords(const ExtClass& z) const;
  QVector product(const ExtClass& u, const ExtClass& v) const { return coords(extalg::wedge(u, v)); }
  ExtClass element(const QVector& coords) const;
  /// Pairing of two coordinate vectors.
  Rat pair_coords(const QVector& a, const QVector& b) const;

 private:
  SphereParams params_;
  PairingKind kind_;
  std::vector<ExtClass> basis_;
  std::vector<int> degrees_;
  QMatrix gram_;
  QMatrix gram_inv_;
  QMatrix coord_map_;  // (G^{-1})^T
};

}  // namespace swf::swpair
