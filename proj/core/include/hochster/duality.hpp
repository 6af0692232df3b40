#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hochster/hochster_ring.hpp"

namespace hochster {

struct DualityEntry {
  VertexSet I;
  int i = 0;              // cohomological degree on K_I
  int cohomology_rank = 0;
  int homology_rank = 0;  // of K_{[m]∖I} in degree dim K − i − 1
  int map_rank = -1;      // rank of φ ↦ [K]⊓φ; -1 when not computed (torsion over ℤ)
  bool torsion_match = true;
  bool pass = false;
};

struct DualityReport {
  std::vector<DualityEntry> entries;  // only (I, i) with a nonzero side
  bool overall_pass = false;
  std::string reason;  // set when the check fails before the subset sweep
};

DualityReport alexander_duality_check(const SimplicialComplex& K, const Coefficients& coeff, int jobs = 1);

struct GorensteinVerdict {
  bool value = false;
  std::optional<VertexSet> witness;  // simplex whose link is not a homology sphere
  std::string reason;
};

// Not a cone, and every link (including the link of ∅) has the reduced
// homology of a sphere of its own dimension.
GorensteinVerdict is_gorenstein_star(const SimplicialComplex& K, const Coefficients& coeff);

// Both verdicts; throws InternalInconsistency if they disagree.
bool cross_validate_gorenstein(const SimplicialComplex& K, const Coefficients& coeff, int jobs = 1);

// C(m,2) − (3m−6), asserted equal to the number of missing edges and to
// rank H³ of the moment-angle complex. Throws NotASphere, InternalInconsistency.
long long rank_h3_invariant(const SimplicialComplex& K);

struct LbcReport {
  bool applicable = false;  // closed pseudomanifold
  long long edges = 0;
  long long bound = 0;
  bool holds = false;
  bool tight = false;
};
LbcReport lbc_report(const SimplicialComplex& K);
bool lbc_check(const SimplicialComplex& K);

struct PartitionSweep {
  long long divisions = 0;
  long long both_connected_components = 0;  // H̃⁰(K_I) ≠ 0 and H̃⁰(K_J) ≠ 0
  std::optional<VertexSet> example;
};
// All divisions I ⊔ J = [m] with I, J nonempty.
PartitionSweep partition_sweep(const SimplicialComplex& K, int jobs = 1);

struct GenerationReport {
  bool degree_one_generated = true;      // verdict: every H̃¹(K_I) is spanned by H̃⁰ * H̃⁰
  std::optional<VertexSet> failing_subset;
  int failing_rank = 0;                  // rank reached by products there
  int failing_dimension = 0;
  bool h3_generated = true;              // H̃²-blocks spanned by H̃⁰ * H̃¹ products
  std::optional<VertexSet> h3_failing_subset;
};

// ---------------------------------------------------------------------------

template <class R>
GenerationReport generation_by_degree_one(const HochsterRing<R>& H) {
  static_assert(R::is_field);
  GenerationReport out;
  const auto& blocks = H.blocks();
  // Span of products into block t from blocks with reduced degrees (da, db).
  auto spanned = [&](int t, int da, int db) {
    const auto& T = blocks[t];
    EchelonBasis<R> span(H.field(), T.size);
    const std::uint64_t full = T.J.bits();
    for (std::uint64_t sub = (full - 1) & full; sub != 0 && span.rank() < T.size; sub = (sub - 1) & full) {
      const auto a = H.find_block(VertexSet(sub), da);
      const auto b = H.find_block(VertexSet(full & ~sub), db);
      if (!a || !b) continue;
      for (auto& v : H.block_products(*a, *b)) span.add(std::move(v));
    }
    return span.rank();
  };
  for (int t = 0; t < static_cast<int>(blocks.size()); ++t) {
    const auto& T = blocks[t];
    if (T.d == 1 && out.degree_one_generated) {
      const int r = spanned(t, 0, 0);
      if (r < T.size) {
        out.degree_one_generated = false;
        out.failing_subset = T.J;
        out.failing_rank = r;
        out.failing_dimension = T.size;
      }
    }
    if (T.d == 2 && out.h3_generated) {
      // Triple products of degree-one classes already lie in H̃⁰ * H̃¹.
      if (spanned(t, 0, 1) < T.size) {
        out.h3_generated = false;
        out.h3_failing_subset = T.J;
      }
    }
  }
  return out;
}

// Nondegeneracy of the pairings into the one-dimensional top, degrees 0 < i < d.
template <class R>
bool poincare_pairing_check(const HochsterRing<R>& H) {
  static_assert(R::is_field);
  const auto top = H.top_degree();
  const auto hilbert = H.hilbert();
  if (!top || hilbert.at(*top) != 1) fail(ErrorCode::not_poincare_candidate, "top degree is not one-dimensional");
  const auto& blocks = H.blocks();
  int t = -1;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (blocks[b].total_degree() == *top) t = b;
  const VertexSet full = blocks[t].J;
  for (const auto& [deg, dim] : hilbert) {
    if (deg == *top) continue;
    auto it = hilbert.find(*top - deg);
    if (it == hilbert.end() || it->second != dim) return false;
  }
  // The pairing splits into independent squares indexed by (J, full ∖ J).
  for (int a = 0; a < static_cast<int>(blocks.size()); ++a) {
    const auto& A = blocks[a];
    if (a == t) continue;
    if (!A.J.is_subset_of(full) || A.J == full) return false;
    const auto b = H.find_block(full - A.J, blocks[t].d - A.d - 1);
    if (!b || blocks[*b].size != A.size) return false;
    const auto products = H.block_products(a, *b);
    if (products.empty()) return false;
    Matrix<R> M = Matrix<R>::zeros(H.field(), A.size, A.size);
    for (int r = 0; r < A.size; ++r)
      for (int s = 0; s < A.size; ++s) M(r, s) = products[r * A.size + s][0];
    if (rank(H.field(), M) != A.size) return false;
  }
  return true;
}

// Same check on an abstract algebra via dense pairing matrices.
template <class R>
bool poincare_pairing_check(const GradedAlgebra<R>& A) {
  static_assert(R::is_field);
  const auto top = A.top_degree();
  if (!top || A.dimension_in_degree(*top) != 1)
    fail(ErrorCode::not_poincare_candidate, "top degree is not one-dimensional");
  const int t = A.elements_of_degree(*top).front();
  for (const auto& [deg, dim] : A.hilbert()) {
    if (deg == *top) continue;
    const auto left = A.elements_of_degree(deg), right = A.elements_of_degree(*top - deg);
    if (left.size() != right.size()) return false;
    Matrix<R> M = Matrix<R>::zeros(A.field(), dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int s = 0; s < dim; ++s)
        for (const auto& [k, c] : A.product(left[r], right[s]))
          if (k == t) M(r, s) = c;
    if (rank(A.field(), M) != dim) return false;
  }
  return true;
}

}  // namespace hochster
