#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hochster/graded_algebra.hpp"
#include "hochster/vertex_set.hpp"

namespace hochster {

long long binomial(int n, int k);

// (a, b, count): `count` copies of S^a × S^b.
using SphereProductTerm = std::tuple<int, int, long long>;

// Multiplicities λ(i) of S^{i+1} × S^{m1+m2-i-1}, i = 2..m1+m2-2n, in the
// connected-sum ring formula. Throws InternalInconsistency on a negative value.
std::vector<SphereProductTerm> connected_sum_sphere_terms(int m1, int m2, int n);

// Terms of Y for a stellar subdivision: f[i] = rank H^i of the link's
// moment-angle complex (f[0] = 1), m vertices, n = dim K + 1, s = |V| + |σ|.
std::vector<SphereProductTerm> stellar_sphere_terms(const std::vector<long long>& f, int m, int n, int s);

// Terms ♯_{j=1}^{m-n} C(m-n, j) S^{j+2} × S^{m+n-j-1} for K # ∂Δⁿ.
std::vector<SphereProductTerm> boundary_simplex_sum_terms(int m, int n);

// ---------------------------------------------------------------------------

// G^r(A) = (A ⊗ Λ[v_1..v_r]) / ⊕_{S ≠ [r]} A^d ⊗ v_S with Koszul signs.
template <class R>
GradedAlgebra<R> gyration_iter(const GradedAlgebra<R>& A, int r) {
  const auto top = A.top_degree();
  if (!top || A.dimension_in_degree(*top) == 0) fail(ErrorCode::no_top_degree, "algebra has no top degree");
  if (r < 0 || r > 20) fail(ErrorCode::invalid_argument, "gyration exponent out of range");
  const R& F = A.field();
  const int d = *top;
  const std::uint32_t full = (1U << r) - 1;
  GradedAlgebra<R> G(F);
  std::vector<std::vector<int>> index(A.dimension(), std::vector<int>(std::size_t{1} << r, -1));
  for (int a = 0; a < A.dimension(); ++a)
    for (std::uint32_t S = 0; S <= full; ++S) {
      if (A.degree(a) == d && S != full) continue;
      std::string label = A.basis(a).label;
      if (S != 0) label += "⊗v" + VertexSet(S).to_string();
      index[a][S] = G.add_basis(A.degree(a) + std::popcount(S), std::move(label));
    }
  // Products in order of (left index, right index) so rows fill monotonically.
  struct Entry {
    int left, right;
    SparseVec<R> value;
  };
  std::vector<std::vector<std::pair<int, SparseVec<R>>>> rows(G.dimension());
  for (int a = 0; a < A.dimension(); ++a)
    for (const auto& [b, ab] : A.row(a))
      for (std::uint32_t S = 0; S <= full; ++S) {
        const int left = index[a][S];
        if (left < 0) continue;
        const std::uint32_t free = full & ~S;
        for (std::uint32_t T = free;; T = (T - 1) & free) {
          const int right = index[b][T];
          if (right >= 0) {
            const std::uint32_t U = S | T;
            const bool negative = ((std::popcount(S) * A.degree(b)) + crossing_count(VertexSet(S), VertexSet(T))) % 2;
            SparseVec<R> value;
            for (const auto& [c, coeff] : ab) {
              const int target = index[c][U];
              if (target < 0) continue;
              value.emplace_back(target, negative ? F.neg(coeff) : coeff);
            }
            if (!value.empty()) {
              std::sort(value.begin(), value.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
              rows[left].emplace_back(right, std::move(value));
            }
          }
          if (T == 0) break;
        }
      }
  for (int i = 0; i < G.dimension(); ++i) {
    auto& row = rows[i];
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [j, v] : row) G.set_product(i, j, std::move(v));
  }
  return G;
}

template <class R>
GradedAlgebra<R> gyration(const GradedAlgebra<R>& A) {
  return gyration_iter(A, 1);
}

template <class R>
GradedAlgebra<R> direct_product(const GradedAlgebra<R>& A, const GradedAlgebra<R>& B) {
  GradedAlgebra<R> P(A.field());
  for (const auto& e : A.basis()) P.add_basis(e.degree, e.label);
  for (const auto& e : B.basis()) P.add_basis(e.degree, e.label);
  const int offset = A.dimension();
  for (int i = 0; i < A.dimension(); ++i)
    for (const auto& [j, v] : A.row(i)) P.set_product(i, j, v);
  for (int i = 0; i < B.dimension(); ++i)
    for (const auto& [j, v] : B.row(i)) {
      SparseVec<R> shifted;
      for (const auto& [k, c] : v) shifted.emplace_back(k + offset, c);
      P.set_product(i + offset, j + offset, std::move(shifted));
    }
  return P;
}

// A / (two-sided ideal generated by homogeneous elements). The quotient basis
// is the set of original basis vectors that are not pivots of the ideal.
template <class R>
GradedAlgebra<R> quotient_by_ideal(const GradedAlgebra<R>& A, const std::vector<SparseVec<R>>& generators) {
  const R& F = A.field();
  SparseEchelon<R> ideal(F);
  std::vector<SparseVec<R>> queue;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    if (!A.is_homogeneous(g)) fail(ErrorCode::not_homogeneous, "ideal generator is not homogeneous");
    if (ideal.add(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    SparseVec<R> w = std::move(queue.back());
    queue.pop_back();
    for (int e = 0; e < A.dimension(); ++e) {
      const SparseVec<R> unit{{e, F.one()}};
      for (const auto& p : {A.multiply(w, unit), A.multiply(unit, w)})
        if (!p.empty() && ideal.add(p)) queue.push_back(p);
    }
  }
  std::vector<int> new_index(A.dimension(), -1);
  GradedAlgebra<R> Q(F);
  for (int i = 0; i < A.dimension(); ++i)
    if (!ideal.is_pivot(i)) new_index[i] = Q.add_basis(A.degree(i), A.basis(i).label);
  for (int i = 0; i < A.dimension(); ++i) {
    if (new_index[i] < 0) continue;
    for (const auto& [j, v] : A.row(i)) {
      if (new_index[j] < 0) continue;
      SparseVec<R> reduced = ideal.reduce(v);
      for (auto& [k, c] : reduced) k = new_index[k];
      Q.set_product(new_index[i], new_index[j], std::move(reduced));
    }
  }
  return Q;
}

template <class R>
GradedAlgebra<R> quotient_by_top(const GradedAlgebra<R>& A) {
  const auto top = A.top_degree();
  if (!top || A.dimension_in_degree(*top) != 1)
    fail(ErrorCode::not_poincare_candidate, "top degree is not one-dimensional");
  const int t = A.elements_of_degree(*top).front();
  return quotient_by_ideal(A, {SparseVec<R>{{t, A.field().one()}}});
}

// x·y = t, y·x = (−1)^{ab} t, squares zero.
template <class R>
GradedAlgebra<R> sphere_product_ring(int a, int b, R F = R{}) {
  if (a < 1 || b < 1) fail(ErrorCode::invalid_argument, "sphere dimensions must be positive");
  GradedAlgebra<R> A(F);
  const int x = A.add_basis(a, "x"), y = A.add_basis(b, "y"), t = A.add_basis(a + b, "t");
  A.set_product(x, y, {{t, F.one()}});
  A.set_product(y, x, {{t, (a * b) % 2 ? F.neg(F.one()) : F.one()}});
  return A;
}

template <class R>
GradedAlgebra<R> connected_sum_of_sphere_products(const std::vector<SphereProductTerm>& terms, R F = R{}) {
  GradedAlgebra<R> A(F);
  std::optional<int> total;
  for (const auto& [a, b, count] : terms) {
    if (count <= 0) continue;
    if (a < 1 || b < 1) fail(ErrorCode::invalid_argument, "sphere dimensions must be positive");
    if (total && *total != a + b) fail(ErrorCode::dimension_mismatch, "sphere products of different dimensions");
    total = a + b;
  }
  if (!total) return A;
  std::vector<std::tuple<int, int, int, int>> pairs;  // x, y, a, b
  int copy = 0;
  for (const auto& [a, b, count] : terms)
    for (long long c = 0; c < count; ++c, ++copy) {
      const std::string tag = std::to_string(copy + 1);
      int x = A.add_basis(a, "x" + tag), y = A.add_basis(b, "y" + tag);
      pairs.emplace_back(x, y, a, b);
    }
  const int t = A.add_basis(*total, "t");
  for (const auto& [x, y, a, b] : pairs) {
    A.set_product(x, y, {{t, F.one()}});
    A.set_product(y, x, {{t, (a * b) % 2 ? F.neg(F.one()) : F.one()}});
  }
  return A;
}

// (A × B) / (t_A − t_B). The zero algebra is the identity.
template <class R>
GradedAlgebra<R> connected_sum_ring(const GradedAlgebra<R>& A, const GradedAlgebra<R>& B) {
  if (A.dimension() == 0) return B;
  if (B.dimension() == 0) return A;
  const auto ta = A.top_degree(), tb = B.top_degree();
  if (*ta != *tb || A.dimension_in_degree(*ta) != 1 || B.dimension_in_degree(*tb) != 1)
    fail(ErrorCode::dimension_mismatch, "connected sum needs one-dimensional tops in equal degree");
  const int ia = A.elements_of_degree(*ta).front();
  const int ib = B.elements_of_degree(*tb).front() + A.dimension();
  const R& F = A.field();
  return quotient_by_ideal(direct_product(A, B), {SparseVec<R>{{ia, F.one()}, {ib, F.neg(F.one())}}});
}

// G^{m2-n}(H1) × G^{m1-n}(H2) × H̃*(M) modulo the identification of the three tops.
template <class R>
GradedAlgebra<R> thm4_ring(const GradedAlgebra<R>& H1, const GradedAlgebra<R>& H2, int m1, int m2, int n) {
  if (n < 2 || m1 < n || m2 < n) fail(ErrorCode::invalid_argument, "need n >= 2 and m_i >= n");
  if (H1.top_degree() != std::optional<int>(m1 + n) || H2.top_degree() != std::optional<int>(m2 + n))
    fail(ErrorCode::dimension_mismatch, "input rings must have tops in degrees m_i + n");
  const R& F = H1.field();
  const GradedAlgebra<R> G1 = gyration_iter(H1, m2 - n);
  const GradedAlgebra<R> G2 = gyration_iter(H2, m1 - n);
  const GradedAlgebra<R> M = connected_sum_of_sphere_products(connected_sum_sphere_terms(m1, m2, n), F);
  const GradedAlgebra<R> P = direct_product(direct_product(G1, G2), M);
  const int top = m1 + m2;
  auto top_index = [&](int offset, const GradedAlgebra<R>& X) { return X.elements_of_degree(top).front() + offset; };
  const int z1 = top_index(0, G1), z2 = top_index(G1.dimension(), G2);
  std::vector<SparseVec<R>> gens;
  if (M.dimension() > 0) {
    const int zm = top_index(G1.dimension() + G2.dimension(), M);
    gens.push_back({{z1, F.one()}, {zm, F.neg(F.one())}});
    gens.push_back({{z2, F.one()}, {zm, F.neg(F.one())}});
  } else {
    gens.push_back({{z1, F.one()}, {z2, F.neg(F.one())}});
  }
  return quotient_by_ideal(P, gens);
}

// G(HK) # Y.
template <class R>
GradedAlgebra<R> thm5_ring(const GradedAlgebra<R>& HK, const std::vector<long long>& f, int m, int n, int s) {
  const R& F = HK.field();
  return connected_sum_ring(gyration(HK), connected_sum_of_sphere_products(stellar_sphere_terms(f, m, n, s), F));
}

// Parts given by spanning sets of homogeneous vectors.
template <class R>
bool verify_product_decomposition(const GradedAlgebra<R>& A, const std::vector<std::vector<SparseVec<R>>>& parts) {
  const R& F = A.field();
  for (const auto& part : parts)
    for (const auto& v : part)
      if (!v.empty() && !A.is_homogeneous(v)) fail(ErrorCode::not_homogeneous, "spanning vector is not homogeneous");
  SparseEchelon<R> total(F);
  int rank_sum = 0;
  std::vector<SparseEchelon<R>> spans;
  for (const auto& part : parts) {
    SparseEchelon<R> span(F);
    for (const auto& v : part) {
      span.add(v);
      total.add(v);
    }
    rank_sum += span.rank();
    spans.push_back(std::move(span));
  }
  if (total.rank() != rank_sum || total.rank() != A.dimension()) return false;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = 0; q < parts.size(); ++q)
      for (const auto& u : parts[p])
        for (const auto& v : parts[q]) {
          SparseVec<R> uv = A.multiply(u, v);
          if (p == q ? !spans[p].contains(uv) : !uv.empty()) return false;
        }
  return true;
}

// Perfect matching on fingerprint equality: result[i] = partner of F1[i] in F2.
std::optional<std::vector<int>> match_factors(const std::vector<RingFingerprint>& F1,
                                              const std::vector<RingFingerprint>& F2);

}  // namespace hochster
