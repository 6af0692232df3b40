#pragma once

#include <algorithm>
#include <vector>

#include "hochster/linalg.hpp"
#include "hochster/simplicial_complex.hpp"
#include "hochster/smith.hpp"

namespace hochster {

// Augmented simplicial chain complex. Degree d holds the d-simplices
// (d = -1 is the empty simplex), each oriented by increasing vertex order
// and listed by increasing bitmask.
class ChainComplex {
 public:
  ChainComplex() = default;
  explicit ChainComplex(const SimplicialComplex& K);
  // faces must be downward closed; ∅ is added if absent.
  ChainComplex(int ground_size, const std::vector<VertexSet>& faces, bool verify = false);

  int ground_size() const { return m_; }
  int top_degree() const { return static_cast<int>(cells_.size()) - 2; }
  const std::vector<VertexSet>& basis(int d) const;
  int rank(int d) const { return static_cast<int>(basis(d).size()); }
  int index_of(VertexSet s) const;  // -1 if absent

  // ∂_d : C_d → C_{d-1}.
  template <class R>
  Matrix<R> boundary(const R& F, int d) const;
  // δ^d : C^d → C^{d+1} (transpose of ∂_{d+1}).
  template <class R>
  Matrix<R> coboundary(const R& F, int d) const {
    return boundary(F, d + 1).transpose();
  }

  // Throws InternalInconsistency if some ∂∘∂ is nonzero.
  void verify_boundary_squared() const;

 private:
  int m_ = 0;
  std::vector<std::vector<VertexSet>> cells_;  // cells_[d + 1]
};

struct HomologySummary {
  std::vector<int> betti;                       // betti[d + 1]
  std::vector<std::vector<mpz_class>> torsion;  // torsion[d + 1], factors > 1

  int rank(int d) const { return d + 1 < static_cast<int>(betti.size()) && d >= -1 ? betti[d + 1] : 0; }
  std::vector<mpz_class> torsion_in(int d) const {
    return d + 1 < static_cast<int>(torsion.size()) && d >= -1 ? torsion[d + 1] : std::vector<mpz_class>{};
  }
  bool has_torsion() const {
    return std::any_of(torsion.begin(), torsion.end(), [](const auto& t) { return !t.empty(); });
  }
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

HomologySummary reduced_homology(const ChainComplex& C, const Coefficients& coeff);
HomologySummary reduced_homology(const SimplicialComplex& K, const Coefficients& coeff);
// Cohomology via universal coefficients: torsion moves up one degree.
HomologySummary reduced_cohomology(const SimplicialComplex& K, const Coefficients& coeff);

template <class R>
std::vector<int> reduced_ranks(const R& F, const ChainComplex& C) {
  static_assert(R::is_field);
  const int top = C.top_degree();
  std::vector<int> bd(top + 3, 0);  // bd[d + 1] = rank ∂_d
  for (int d = 0; d <= top; ++d) bd[d + 1] = rank(F, C.boundary(F, d));
  std::vector<int> out(top + 2, 0);
  for (int d = -1; d <= top; ++d) out[d + 1] = C.rank(d) - bd[d + 1] - bd[d + 2];
  return out;
}

// Degree-d reduced cohomology basis with coordinate functional.
// Over ℤ throws TorsionUnsupported when the group has torsion.
template <class R>
QuotientBasis<R> cohomology_basis(const R& F, const ChainComplex& C, int d) {
  const int n = C.rank(d);
  const Matrix<R> A = C.coboundary(F, d);
  const Matrix<R> B = C.coboundary(F, d - 1);
  if constexpr (R::is_field)
    return field_subquotient(F, n, A, B);
  else
    return integer_subquotient(n, A, B);
}

// Degree-d reduced homology basis with coordinate functional.
template <class R>
QuotientBasis<R> homology_basis(const R& F, const ChainComplex& C, int d) {
  const int n = C.rank(d);
  const Matrix<R> A = C.boundary(F, d);
  const Matrix<R> B = C.boundary(F, d + 1);
  if constexpr (R::is_field)
    return field_subquotient(F, n, A, B);
  else
    return integer_subquotient(n, A, B);
}

// One basis per degree -1..top.
template <class R>
std::vector<QuotientBasis<R>> reduced_cohomology_basis(const R& F, const ChainComplex& C) {
  std::vector<QuotientBasis<R>> out;
  for (int d = -1; d <= C.top_degree(); ++d) out.push_back(cohomology_basis(F, C, d));
  return out;
}

template <class R>
struct FundamentalClass {
  int degree = -1;
  Vec<R> cycle;  // over the degree-`degree` simplices of the chain complex
};

// Generator of the top homology; the lexicographically smallest facet in
// its support gets coefficient +1. Throws NoFundamentalClass.
template <class R>
FundamentalClass<R> fundamental_class(const R& F, const SimplicialComplex& K);

// (−1)^{#{(s,t) : s∈σ, t∈τ, t<s}}: sign turning the juxtaposition σ⊔τ
// into the increasing-order simplex σ∪τ.
inline bool juxtaposition_negative(VertexSet sigma, VertexSet tau) { return crossing_count(sigma, tau) & 1; }

// u ∈ C^p(K_I), v ∈ C^q(K_J) on their chain complexes; result in C^{p+q+1}(target),
// where target is the chain complex of K_{I∪J}. Zero when I∩J ≠ ∅.
template <class R>
Vec<R> union_product(const R& F, const ChainComplex& CI, VertexSet I, int p, const Vec<R>& u, const ChainComplex& CJ,
                     VertexSet J, int q, const Vec<R>& v, const ChainComplex& target) {
  const int e = p + q + 1;
  Vec<R> out(target.rank(e), F.zero());
  if (I.intersects(J)) return out;
  const auto& bi = CI.basis(p);
  const auto& bj = CJ.basis(q);
  for (std::size_t a = 0; a < bi.size(); ++a) {
    if (F.is_zero(u[a])) continue;
    for (std::size_t b = 0; b < bj.size(); ++b) {
      if (F.is_zero(v[b])) continue;
      int idx = target.index_of(bi[a] | bj[b]);
      if (idx < 0) continue;
      auto term = F.mul(u[a], v[b]);
      out[idx] = juxtaposition_negative(bi[a], bj[b]) ? F.sub(out[idx], term) : F.add(out[idx], term);
    }
  }
  return out;
}

// c ∈ C_k(K_I), φ ∈ C^p(K_J) with J ⊆ I; result in C_{k-p-1}(K_{I∖J}).
// σ⊓τ = ε(σ∖τ) when τ ⊆ σ and σ∖τ ⊆ I∖J, with ε the sign sorting τ⊔(σ∖τ).
template <class R>
Vec<R> excision_product(const R& F, const ChainComplex& CI, VertexSet I, int k, const Vec<R>& c,
                        const ChainComplex& CJ, VertexSet J, int p, const Vec<R>& phi, const ChainComplex& target) {
  const int out_degree = k - p - 1;
  Vec<R> out(target.rank(out_degree), F.zero());
  if (!J.is_subset_of(I)) return out;
  const VertexSet rest = I - J;
  const auto& bs = CI.basis(k);
  const auto& bt = CJ.basis(p);
  for (std::size_t a = 0; a < bs.size(); ++a) {
    if (F.is_zero(c[a])) continue;
    const VertexSet sigma = bs[a];
    const VertexSet tau = sigma & J;  // the only τ ⊆ σ with σ∖τ ⊆ I∖J
    if (tau.size() != p + 1) continue;
    auto it = std::lower_bound(bt.begin(), bt.end(), tau, [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); });
    if (it == bt.end() || *it != tau) continue;
    const auto& coeff = phi[it - bt.begin()];
    if (F.is_zero(coeff)) continue;
    const VertexSet remainder = sigma - tau;
    if (!remainder.is_subset_of(rest)) continue;
    int idx = target.index_of(remainder);
    if (idx < 0) continue;
    auto term = F.mul(c[a], coeff);
    out[idx] = juxtaposition_negative(tau, remainder) ? F.sub(out[idx], term) : F.add(out[idx], term);
  }
  return out;
}

// Matrix of H̃_d((K_sub)_I) → H̃_d(K_I) in the bases of homology_basis().
// Throws NotSubcomplex.
template <class R>
Matrix<R> induced_map_homology(const R& F, const SimplicialComplex& K_sub, const SimplicialComplex& K, VertexSet I,
                               int d);

// ---------------------------------------------------------------------------

template <class R>
Matrix<R> ChainComplex::boundary(const R& F, int d) const {
  const auto& cols = basis(d);
  const auto& rows = basis(d - 1);
  Matrix<R> M = Matrix<R>::zeros(F, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  if (d < 0 || rows.empty()) return M;
  const auto plus = F.one(), minus = F.neg(F.one());
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    int i = 0;
    for (int v : cols[j].labels()) {
      VertexSet face = cols[j] - VertexSet::singleton(v);
      auto it = std::lower_bound(rows.begin(), rows.end(), face,
                                 [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); });
      M(static_cast<int>(it - rows.begin()), j) = (i % 2 == 0) ? plus : minus;
      ++i;
    }
  }
  return M;
}

template <class R>
FundamentalClass<R> fundamental_class(const R& F, const SimplicialComplex& K) {
  if (K.is_empty()) fail(ErrorCode::no_fundamental_class, "empty complex");
  const ChainComplex C(K);
  const int top = K.dimension();
  std::vector<Vec<R>> cycles;
  if constexpr (R::is_field) {
    cycles = kernel_basis(F, C.boundary(F, top));
  } else {
    auto basis = integer_subquotient(C.rank(top), C.boundary(F, top), Matrix<R>::zeros(F, C.rank(top), 0));
    cycles = basis.representatives;
  }
  if (cycles.size() != 1) fail(ErrorCode::no_fundamental_class, "top homology does not have rank 1");
  Vec<R> z = std::move(cycles.front());
  const auto& simplices = C.basis(top);
  int lead = -1;
  for (int i = 0; i < static_cast<int>(z.size()); ++i)
    if (!F.is_zero(z[i]) && (lead < 0 || lex_less(simplices[i], simplices[lead]))) lead = i;
  if constexpr (R::is_field) {
    const auto scale = F.inv(z[lead]);
    for (auto& x : z) x = F.mul(x, scale);
  } else {
    if (z[lead] < 0)
      for (auto& x : z) x = -x;
  }
  return FundamentalClass<R>{top, std::move(z)};
}

template <class R>
Matrix<R> induced_map_homology(const R& F, const SimplicialComplex& K_sub, const SimplicialComplex& K, VertexSet I,
                               int d) {
  for (VertexSet f : K_sub.facets())
    if (!K.contains(f)) fail(ErrorCode::not_subcomplex, f.to_string() + " is not a face of the larger complex");
  const ChainComplex Cs(full_subcomplex(K_sub, I)), C(full_subcomplex(K, I));
  const auto hs = homology_basis(F, Cs, d);
  const auto h = homology_basis(F, C, d);
  Matrix<R> M = Matrix<R>::zeros(F, h.size(), hs.size());
  const auto& small = Cs.basis(d);
  for (int j = 0; j < hs.size(); ++j) {
    Vec<R> pushed(C.rank(d), F.zero());
    for (std::size_t a = 0; a < small.size(); ++a)
      if (!F.is_zero(hs.representatives[j][a])) pushed[C.index_of(small[a])] = hs.representatives[j][a];
    const auto coords = h.coordinates(F, pushed);
    for (int i = 0; i < h.size(); ++i) M(i, j) = coords[i];
  }
  return M;
}

}  // namespace hochster
