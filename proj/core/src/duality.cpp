#include "hochster/duality.hpp"

#include "hochster/ring_constructions.hpp"
#include "hochster/sphere_decomposition.hpp"

namespace hochster {

namespace {

std::vector<VertexSet> all_subsets(int m) {
  std::vector<VertexSet> out{VertexSet{}};
  for (VertexSet s : subsets_by_popcount(m)) out.push_back(s);
  return out;
}

// Map-level comparison for one subset over a coefficient policy. Entries
// are appended for every degree where either side is nonzero.
template <class R>
void duality_for_subset(const R& F, const ChainComplex& full, const Vec<R>& fundamental, int dim,
                        const SimplicialComplex& K, VertexSet I, std::vector<DualityEntry>& out) {
  const int m = K.ground_size();
  const VertexSet rest = I.complement(m);
  const ChainComplex CI = restricted_chain_complex(K, I), CR = restricted_chain_complex(K, rest);
  for (int i = -1; i <= dim; ++i) {
    const QuotientBasis<R> co = cohomology_basis(F, CI, i);
    const QuotientBasis<R> ho = homology_basis(F, CR, dim - i - 1);
    if (co.size() == 0 && ho.size() == 0) continue;
    DualityEntry e{I, i, co.size(), ho.size(), 0, true, false};
    if (co.size() == ho.size()) {
      Matrix<R> D = Matrix<R>::zeros(F, ho.size(), co.size());
      for (int c = 0; c < co.size(); ++c) {
        const Vec<R> chain =
            excision_product(F, full, VertexSet::full(m), dim, fundamental, CI, I, i, co.representatives[c], CR);
        const Vec<R> coords = ho.coordinates(F, chain);
        for (int r = 0; r < ho.size(); ++r) D(r, c) = coords[r];
      }
      if constexpr (R::is_field) {
        e.map_rank = rank(F, D);
        e.pass = e.map_rank == co.size();
      } else {
        const SmithForm S = smith_normal_form(D);
        e.map_rank = S.rank;
        e.pass = S.rank == co.size() &&
                 std::all_of(S.invariant_factors.begin(), S.invariant_factors.end(), [](const mpz_class& f) { return f == 1; });
      }
    }
    out.push_back(std::move(e));
  }
}

template <class R>
Vec<R> fundamental_chain(const R& F, const SimplicialComplex& K) {
  if (K.is_empty()) return Vec<R>{F.one()};  // [{∅}] = ∅ in degree −1
  return fundamental_class(F, K).cycle;
}

template <class R>
DualityReport duality_over(const R& F, const SimplicialComplex& K, const Coefficients& coeff, int jobs) {
  DualityReport report;
  if (!is_pure(K)) {
    report.reason = "complex is not pure";
    return report;
  }
  Vec<R> fundamental;
  try {
    fundamental = fundamental_chain(F, K);
  } catch (const Error& e) {
    report.reason = "no fundamental class";
    return report;
  }
  const ChainComplex full(K);
  const int dim = K.dimension();
  const auto subsets = all_subsets(K.ground_size());
  std::vector<std::vector<DualityEntry>> slots(subsets.size());
  parallel_for(subsets.size(), jobs, [&](std::size_t k) {
    const VertexSet I = subsets[k];
    try {
      duality_for_subset(F, full, fundamental, dim, K, I, slots[k]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::torsion_unsupported) throw;
      // Torsion over ℤ: compare groups, the map is not evaluated.
      const auto co = reduced_cohomology(full_subcomplex(K, I), coeff);
      const auto ho = reduced_homology(full_subcomplex(K, I.complement(K.ground_size())), coeff);
      for (int i = -1; i <= dim; ++i) {
        DualityEntry entry{I, i, co.rank(i), ho.rank(dim - i - 1), -1, co.torsion_in(i) == ho.torsion_in(dim - i - 1),
                           false};
        entry.pass = entry.cohomology_rank == entry.homology_rank && entry.torsion_match;
        if (entry.cohomology_rank || entry.homology_rank || !co.torsion_in(i).empty() ||
            !ho.torsion_in(dim - i - 1).empty())
          slots[k].push_back(entry);
      }
    }
  });
  report.overall_pass = true;
  for (auto& s : slots)
    for (auto& e : s) {
      report.overall_pass = report.overall_pass && e.pass;
      report.entries.push_back(std::move(e));
    }
  return report;
}

bool is_homology_sphere_of_dim(const SimplicialComplex& L, const Coefficients& coeff) {
  const HomologySummary h = reduced_homology(L, coeff);
  const int dim = L.dimension();
  if (h.has_torsion()) return false;
  for (int d = -1; d <= dim; ++d)
    if (h.rank(d) != (d == dim ? 1 : 0)) return false;
  return true;
}

}  // namespace

DualityReport alexander_duality_check(const SimplicialComplex& K, const Coefficients& coeff, int jobs) {
  return dispatch(coeff, [&](const auto& F) { return duality_over(F, K, coeff, jobs); });
}

GorensteinVerdict is_gorenstein_star(const SimplicialComplex& K, const Coefficients& coeff) {
  GorensteinVerdict v;
  if (is_cone(K)) {
    v.reason = "complex is a cone";
    return v;
  }
  for (VertexSet sigma : K.faces())
    if (!is_homology_sphere_of_dim(link(K, sigma), coeff)) {
      v.witness = sigma;
      v.reason = "link of " + sigma.to_string() + " is not a homology sphere";
      return v;
    }
  v.value = true;
  return v;
}

bool cross_validate_gorenstein(const SimplicialComplex& K, const Coefficients& coeff, int jobs) {
  const bool stanley = is_gorenstein_star(K, coeff).value;
  const bool duality = alexander_duality_check(K, coeff, jobs).overall_pass;
  if (stanley != duality)
    fail(ErrorCode::internal_inconsistency, "link criterion and duality check disagree");
  return stanley;
}

long long rank_h3_invariant(const SimplicialComplex& K) {
  if (!is_two_sphere(K)) fail(ErrorCode::not_a_sphere, "rank_h3_invariant needs a simplicial 2-sphere");
  const long long m = K.vertex_count();
  const long long formula = binomial(static_cast<int>(m), 2) - (3 * m - 6);
  long long missing_edges = 0;
  for (VertexSet f : missing_faces(K)) missing_edges += f.size() == 2;
  // Degree-3 classes live on |J| ≤ 3 with reduced degree 2 − |J|.
  long long computed = 0;
  for (VertexSet J : subsets_by_popcount(K.ground_size())) {
    if (J.size() > 3) break;
    computed += reduced_homology(restricted_chain_complex(K, J), Coefficients::rationals()).rank(2 - J.size());
  }
  if (formula != missing_edges || formula != computed)
    fail(ErrorCode::internal_inconsistency, "degree-3 rank formula mismatch: formula " + std::to_string(formula) +
                                                ", missing edges " + std::to_string(missing_edges) + ", computed " +
                                                std::to_string(computed));
  return formula;
}

LbcReport lbc_report(const SimplicialComplex& K) {
  LbcReport r;
  r.applicable = is_closed_pseudomanifold(K);
  if (!r.applicable) return r;
  const long long m = K.vertex_count(), n = K.dimension() + 1;
  r.edges = edge_count(K);
  r.bound = m * n - binomial(static_cast<int>(n + 1), 2);
  r.holds = r.edges >= r.bound;
  r.tight = r.edges == r.bound;
  return r;
}

bool lbc_check(const SimplicialComplex& K) { return lbc_report(K).holds; }

PartitionSweep partition_sweep(const SimplicialComplex& K, int jobs) {
  const int m = K.ground_size();
  const auto subsets = subsets_by_popcount(m);
  std::vector<char> disconnected(subsets.size() + 1, 0);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < subsets.size(); ++k) index[subsets[k].bits()] = k;
  parallel_for(subsets.size(), jobs, [&](std::size_t k) {
    disconnected[k] = reduced_homology(restricted_chain_complex(K, subsets[k]), Coefficients::rationals()).rank(0) > 0;
  });
  PartitionSweep out;
  const VertexSet full = VertexSet::full(m);
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const VertexSet I = subsets[k], J = full - I;
    if (J.empty() || I.bits() > J.bits()) continue;  // each unordered division once
    ++out.divisions;
    if (disconnected[k] && disconnected[index.at(J.bits())]) {
      ++out.both_connected_components;
      if (!out.example) out.example = I;
    }
  }
  return out;
}

}  // namespace hochster
