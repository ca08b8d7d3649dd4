#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "swf/bipoly.hpp"
#include "swf/qlinalg.hpp"

namespace swf::extalg {

using qlinalg::Rat;

/// Gamma set as a bitmask: bit i-1 stands for gamma_i, 1 <= i <= 2g.
using GammaMask = std::uint32_t;

constexpr int kMaxGenus = 15;

/// x^xexp * gamma_{i1} ... gamma_{im} with i1 < ... < im.
struct ExtMono {
  int xexp = 0;
  GammaMask gammas = 0;

  int gamma_degree() const { return __builtin_popcount(gammas); }
  int degree() const { return 2 * xexp + gamma_degree(); }
  std::vector<int> gamma_indices() const;  // 1-based, increasing
  friend bool operator==(const ExtMono&, const ExtMono&) = default;
};

/// (degree, xexp descending, gamma sequences lexicographic).
struct ExtMonoLess {
  bool operator()(const ExtMono& l, const ExtMono& r) const;
};

/// Sign of gamma_a ^ gamma_b relative to the sorted monomial of a|b, or 0
/// when the sets overlap.
int wedge_sign(GammaMask a, GammaMask b);

/// Mask of gamma_i gamma_{g+i}.
constexpr GammaMask pair_mask(int g, int i) { return (GammaMask{1} << (i - 1)) | (GammaMask{1} << (g + i - 1)); }

/// True when the mask is a union of full symplectic pairs {i, g+i}.
bool is_paired(int g, GammaMask m);

/// For a paired mask P: sorted gamma_P = paired_sign * prod_i (gamma_i gamma_{g+i}).
int paired_sign(int g, GammaMask m);

/// Element of A(Sigma) = Q[x] (x) Lambda*(gamma_1..gamma_2g).
class ExtClass {
 public:
  using Terms = std::map<ExtMono, Rat, ExtMonoLess>;

  explicit ExtClass(int genus);
  ExtClass(int genus, const ExtMono& m, const Rat& coef = 1);
  static ExtClass one(int genus) { return ExtClass(genus, ExtMono{}); }
  static ExtClass x_power(int genus, int e) { return ExtClass(genus, ExtMono{e, 0}); }
  static ExtClass gamma(int genus, int i);

  int genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const ExtMono& m) const;
  void add(const ExtMono& m, const Rat& c);

  bool is_homogeneous() const;
  int max_degree() const;  // -1 for zero
  ExtClass homogeneous_part(int degree) const;
  ExtClass truncated(int max_degree) const;

  ExtClass& operator+=(const ExtClass& o);
  ExtClass& operator-=(const ExtClass& o);
  ExtClass& operator*=(const Rat& c);
  friend ExtClass operator+(ExtClass a, const ExtClass& b) { return a += b; }
  friend ExtClass operator-(ExtClass a, const ExtClass& b) { return a -= b; }
  friend ExtClass operator*(ExtClass a, const Rat& c) { return a *= c; }
  friend bool operator==(const ExtClass& a, const ExtClass& b) {
    return a.genus_ == b.genus_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int genus_;
  Terms terms_;
};

/// Graded-commutative product. Throws GenusMismatch.
ExtClass wedge(const ExtClass& u, const ExtClass& v);
inline ExtClass operator*(const ExtClass& u, const ExtClass& v) { return wedge(u, v); }

/// theta = sum_i gamma_i gamma_{g+i}. Throws DomainError for g < 2.
ExtClass theta_class(int g);
/// theta^k (cached per genus).
const ExtClass& theta_power(int g, int k);

/// Coefficient of the x-free top part of u on theta^g / g!.
Rat top_eval(const ExtClass& u);

/// Canonical rref basis of ker(theta^{g-k+1} : Lambda^k -> Lambda^{2g-k+2}).
const std::vector<ExtClass>& primitive_basis(int g, int k);

/// All monomials of degree <= maxdeg in ExtMonoLess order.
std::vector<ExtMono> monomials_up_to(int g, int maxdeg);
/// Monomials of exactly the given degree, same order.
std::vector<ExtMono> monomials_of_degree(int g, int degree);

/// eta -> x, theta -> theta_class(g).
ExtClass embed_bipoly(const BiPoly& p, int g);

std::string monomial_to_string(const ExtMono& m);

/// Strict monomial grammar: `1`, `x`, `x^3`, `g1`, `x^2*g1*g5`; gamma
/// indices strictly increasing and <= 2g. Throws ParseError.
ExtMono parse_monomial(std::string_view text, int g);

/// Linear combinations of products: `x - 1/3*t`, `2*x*g1*g4 + t^2`.
/// `t` expands to theta_class(g). Throws ParseError.
ExtClass parse_expression(std::string_view text, int g);

}  // namespace swf::extalg
