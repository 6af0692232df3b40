#include "hochster/homology.hpp"

#include <map>

namespace hochster {

namespace {

const std::vector<VertexSet> no_cells;

bool bits_less(VertexSet a, VertexSet b) { return a.bits() < b.bits(); }

}  // namespace

ChainComplex::ChainComplex(const SimplicialComplex& K) : ChainComplex(K.ground_size(), K.faces(), true) {}

ChainComplex::ChainComplex(int ground_size, const std::vector<VertexSet>& faces, bool verify) : m_(ground_size) {
  int top = -1;
  for (VertexSet f : faces) top = std::max(top, f.size() - 1);
  cells_.assign(top + 2, {});
  for (VertexSet f : faces) cells_[f.size()].push_back(f);
  if (cells_[0].empty()) cells_[0].push_back(VertexSet{});
  for (auto& level : cells_) {
    std::sort(level.begin(), level.end(), bits_less);
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  if (verify) verify_boundary_squared();
}

const std::vector<VertexSet>& ChainComplex::basis(int d) const {
  if (d < -1 || d + 1 >= static_cast<int>(cells_.size())) return no_cells;
  return cells_[d + 1];
}

int ChainComplex::index_of(VertexSet s) const {
  const auto& level = basis(s.size() - 1);
  auto it = std::lower_bound(level.begin(), level.end(), s, bits_less);
  if (it == level.end() || *it != s) return -1;
  return static_cast<int>(it - level.begin());
}

void ChainComplex::verify_boundary_squared() const {
  for (int d = 1; d <= top_degree(); ++d) {
    for (VertexSet s : basis(d)) {
      std::map<std::uint64_t, int> acc;
      int i = 0;
      for (int v : s.labels()) {
        const VertexSet face = s - VertexSet::singleton(v);
        if (index_of(face) < 0) fail(ErrorCode::internal_inconsistency, "face set is not downward closed");
        const int outer = (i++ % 2 == 0) ? 1 : -1;
        int j = 0;
        for (int w : face.labels()) acc[(face - VertexSet::singleton(w)).bits()] += outer * ((j++ % 2 == 0) ? 1 : -1);
      }
      for (auto& [key, value] : acc)
        if (value != 0) fail(ErrorCode::internal_inconsistency, "boundary of boundary is nonzero");
    }
  }
}

HomologySummary reduced_homology(const ChainComplex& C, const Coefficients& coeff) {
  HomologySummary out;
  const int top = C.top_degree();
  out.betti.assign(top + 2, 0);
  out.torsion.assign(top + 2, {});
  if (coeff.kind == Coefficients::Kind::integers) {
    const Integers Z;
    std::vector<SmithForm> forms;  // forms[d + 1] for ∂_d, d = 0..top+1
    std::vector<int> ranks(top + 3, 0);
    std::vector<std::vector<mpz_class>> factors(top + 3);
    for (int d = 0; d <= top; ++d) {
      SmithForm S = smith_normal_form(C.boundary(Z, d));
      ranks[d + 1] = S.rank;
      factors[d + 1] = S.invariant_factors;
    }
    for (int d = -1; d <= top; ++d) {
      out.betti[d + 1] = C.rank(d) - ranks[d + 1] - ranks[d + 2];
      for (const auto& f : factors[d + 2])
        if (f > 1) out.torsion[d + 1].push_back(f);
    }
    return out;
  }
  out.betti = dispatch_field(coeff, [&](const auto& F) { return reduced_ranks(F, C); });
  return out;
}

HomologySummary reduced_homology(const SimplicialComplex& K, const Coefficients& coeff) {
  return reduced_homology(ChainComplex(K), coeff);
}

HomologySummary reduced_cohomology(const SimplicialComplex& K, const Coefficients& coeff) {
  HomologySummary h = reduced_homology(K, coeff);
  HomologySummary out = h;
  for (auto& t : out.torsion) t.clear();
  for (int d = -1; d < static_cast<int>(h.torsion.size()) - 2; ++d) out.torsion[d + 2] = h.torsion[d + 1];
  return out;
}

}  // namespace hochster
