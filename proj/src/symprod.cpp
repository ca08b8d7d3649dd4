#include "swf/symprod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "swf/error.hpp"

namespace swf::symprod {

using qlinalg::binom;
using qlinalg::factorial;
using qlinalg::QMatrix;

std::vector<long> betti(int g, int d) {
  if (g < 1 || d < 0) throw DomainError("betti needs g >= 1 and d >= 0");
  if (d > g - 1) throw DomainError("betti: d = " + std::to_string(d) + " exceeds g-1 = " + std::to_string(g - 1));
  // [z^d] (1+zt)^{2g} / ((1-z)(1-zt^2)): pick z^j from the numerator, z^b t^{2b}
  // from the second factor and the rest from 1/(1-z).
  std::vector<long> out(2 * d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    const long c = binom(2 * g, j).get_si();
    for (int b = 0; j + b <= d; ++b) out[j + 2 * b] += c;
  }
  return out;
}

std::vector<long> morse_count(int g, int d) {
  std::vector<long> out(d + 1, 0);
  for (int i = 0; i <= d; ++i)
    for (int j = i; j >= 0; j -= 2) out[i] += binom(2 * g, j).get_si();
  return out;
}

BiPoly relation_R(int g, int d, int k) {
  if (k < 0 || k > d + 1) throw DomainError("relation_R: k outside 0..d+1");
  if (k == d + 1) return BiPoly(1);
  const int alpha = (d - k) / 2 + 1;
  BiPoly out;
  for (int i = 0; i <= alpha; ++i) {
    const qlinalg::Int num = binom(d - k - alpha + 1, i);
    if (num == 0) continue;
    Rat c = Rat(num) / Rat(binom(g - k, i) * factorial(i));
    if (i & 1) c = -c;
    out.add(BiMono{alpha - i, i}, c);
  }
  return out;
}

std::vector<BiMono> sector_monomials(int n) {
  std::vector<BiMono> out;
  for (int a = 0; 2 * a <= n; ++a)
    for (int b = 0; 2 * a + b <= n; ++b) out.push_back(BiMono{a, b});
  std::sort(out.begin(), out.end(), BiMonoLess{});
  return out;
}

std::string BasisLabel::to_string() const {
  std::ostringstream os;
  os << "(k=" << k << ",w=" << w_index << ",a=" << a << ",b=" << b << ")";
  return os.str();
}

CanonicalBasis canonical_basis(int g, int d) {
  std::vector<BasisLabel> labels;
  for (int k = 0; k <= d; ++k) {
    const std::size_t nw = extalg::primitive_basis(g, k).size();
    for (std::size_t w = 0; w < nw; ++w)
      for (int a = 0; 2 * a + k <= d; ++a)
        for (int b = 0; 2 * a + b + k <= d; ++b) labels.push_back({k, static_cast<int>(w), a, b});
  }
  std::sort(labels.begin(), labels.end(), [](const BasisLabel& l, const BasisLabel& r) {
    if (l.degree() != r.degree()) return l.degree() < r.degree();
    if (l.k != r.k) return l.k < r.k;
    if (l.w_index != r.w_index) return l.w_index < r.w_index;
    return l.a > r.a;
  });
  CanonicalBasis out;
  for (const BasisLabel& l : labels) {
    const ExtClass& w = extalg::primitive_basis(g, l.k)[l.w_index];
    out.elements.push_back(extalg::wedge(extalg::wedge(w, ExtClass::x_power(g, l.a)), extalg::theta_power(g, l.b)));
  }
  out.labels = std::move(labels);
  return out;
}

MonomialQuotient::MonomialQuotient(std::vector<BiMono> universe, const std::vector<BiPoly>& spanning,
                                   const std::vector<BiMono>& preferred) {
  std::set<BiMono, BiMonoLess> pref(preferred.begin(), preferred.end());
  for (const BiMono& m : universe)
    if (!pref.count(m)) columns_.push_back(m);
  for (const BiMono& m : universe)
    if (pref.count(m)) columns_.push_back(m);
  for (std::size_t i = 0; i < columns_.size(); ++i) index_.emplace(columns_[i], i);

  QMatrix span(spanning.size(), columns_.size());
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    for (const auto& [m, c] : spanning[r].terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) throw DomainError("spanning polynomial leaves the monomial universe");
      span(r, it->second) = c;
    }
  }
  const qlinalg::RrefResult red = qlinalg::rref(span);
  pivots_ = red.pivot_cols;
  for (std::size_t r = 0; r < red.rank; ++r) {
    auto row = red.reduced.row(r);
    rows_.emplace_back(row.begin(), row.end());
  }
  std::vector<bool> is_pivot(columns_.size(), false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  for (std::size_t c = 0; c < columns_.size(); ++c)
    if (!is_pivot[c]) standard_.push_back(columns_[c]);
  std::sort(standard_.begin(), standard_.end(), BiMonoLess{});
}

BiPoly MonomialQuotient::normal_form(const BiPoly& p) const {
  QVector v(columns_.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) throw DomainError("normal_form: monomial outside the universe");
    v[it->second] = c;
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (sgn(rows_[r][c]) != 0) v[c] -= f * rows_[r][c];
  }
  BiPoly out;
  for (std::size_t c = 0; c < v.size(); ++c) out.add(columns_[c], v[c]);
  return out;
}

namespace {

std::vector<BiMono> half_degree_monomials(int h) {
  std::vector<BiMono> out;
  for (int a = h; a >= 0; --a) out.push_back(BiMono{a, h - a});
  return out;
}

}  // namespace

SymProdPresentation::SymProdPresentation(int g, int d) : g_(g), d_(d) {
  if (g < 2 || d < 0 || d > g - 1) throw DomainError("presentation needs g >= 2 and 0 <= d <= g-1");
  for (int k = 0; k <= d; ++k) {
    const std::vector<BiPoly> gens = generators(k);
    const std::vector<BiMono> basis = sector_basis(k);
    std::vector<MonomialQuotient> per_h;
    for (int h = 0; h <= d - k + 1; ++h) {
      std::vector<BiPoly> span;
      for (const BiPoly& gen : gens) {
        const int gh = gen.min_half_degree();
        if (gh > h) continue;
        for (const BiMono& m : half_degree_monomials(h - gh))
          span.push_back(BiPoly::monomial(m.eta, m.theta) * gen);
      }
      std::vector<BiMono> pref;
      for (const BiMono& m : basis)
        if (m.half_degree() == h) pref.push_back(m);
      MonomialQuotient q(half_degree_monomials(h), span, pref);
      if (q.standard_monomials() != pref) {
        std::ostringstream os;
        os << "sector " << k << " of s^" << d << "Sigma_" << g << " at half-degree " << h
           << ": quotient basis differs from {2a+b <= d-k}";
        throw VerificationFailure(os.str());
      }
      per_h.push_back(std::move(q));
    }
    pieces_.push_back(std::move(per_h));
  }
}

std::vector<BiPoly> SymProdPresentation::generators(int k) const {
  return {relation_R(g_, d_, k), BiPoly::monomial(0, 1) * relation_R(g_, d_, k + 1),
          BiPoly::monomial(0, g_ - k + 1)};
}

BiPoly SymProdPresentation::sector_normal_form(int k, const BiPoly& p) const {
  if (k < 0 || k > d_) throw DomainError("sector index outside 0..d");
  BiPoly out;
  const int top = d_ - k + 1;
  for (int h = 0; h <= std::min(top, p.max_half_degree()); ++h) {
    const BiPoly part = p.homogeneous_part(h);
    if (!part.is_zero()) out += pieces_[k][h].normal_form(part);
  }
  return out;
}

std::size_t SymProdPresentation::dimension() const {
  std::size_t total = 0;
  for (int k = 0; k <= d_; ++k) total += extalg::primitive_basis(g_, k).size() * sector_basis(k).size();
  return total;
}

BiPoly sector_normal_form(int g, int d, int k, const BiPoly& p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SymProdPresentation>> cache;
  std::shared_ptr<const SymProdPresentation> pres;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{g, d}];
    if (!slot) slot = std::make_shared<const SymProdPresentation>(g, d);
    pres = slot;
  }
  return pres->sector_normal_form(k, p);
}

namespace {

int checked_r(int g, int d) {
  if (g < 2 || d < 0 || d > g - 1) throw DomainError("ring_oracle needs g >= 2 and 0 <= d <= g-1");
  if (d == g - 1) throw DomainError("ring_oracle unavailable for d = g-1 (needs r = g-1-d >= 1)");
  return g - 1 - d;
}

}  // namespace

SymProdRing::SymProdRing(int g, int d)
    : g_(g),
      d_(d),
      labels_(canonical_basis(g, d).labels),
      quotient_(swpair::SphereParams(g, checked_r(g, d)), swpair::PairingKind::kFundamental,
                canonical_basis(g, d).elements) {}

QVector SymProdRing::structure_constants(std::size_t i, std::size_t j) const {
  return quotient_.product(quotient_.basis().at(i), quotient_.basis().at(j));
}

std::shared_ptr<const SymProdRing> ring_oracle(int g, int d) {
  checked_r(g, d);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SymProdRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{g, d}];
  if (!slot) slot = std::make_shared<const SymProdRing>(g, d);
  return slot;
}

}  // namespace swf::symprod
