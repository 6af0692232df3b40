#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hochster/simplicial_complex.hpp"

namespace hochster {

// Ground sets are concatenated: K2's label i becomes m1 + i.
SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2);
// Apex gets label m+1.
SimplicialComplex cone(const SimplicialComplex& K);
// The two suspension points get labels m+1 and m+2.
SimplicialComplex suspension(const SimplicialComplex& K);

// Pairs (vertex of f2, vertex of f1).
using FacetMatching = std::vector<std::pair<int, int>>;

// Order-preserving bijection f2 → f1.
FacetMatching order_preserving_matching(VertexSet f2, VertexSet f1);

// Glue K2 to K1 along f2 ≅ f1 and delete the shared facet. Vertices of
// K2 outside f2 are relabeled m1+1, m1+2, ... in ascending order.
SimplicialComplex connected_sum(const SimplicialComplex& K1, VertexSet f1, const SimplicialComplex& K2,
                                VertexSet f2, const FacetMatching& matching);
// Lexicographically smallest facets with the order-preserving matching.
SimplicialComplex connected_sum(const SimplicialComplex& K1, const SimplicialComplex& K2);

// Stellar subdivision at sigma; the new vertex is m+1. A vertex leaves K unchanged.
SimplicialComplex stellar_subdivision(const SimplicialComplex& K, VertexSet sigma);

// relabel[i-1] is the new label of i; the target ground size is new_m.
SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& relabel, int new_m);

// Restrict to the vertex set and renumber it 1..n in ascending order.
SimplicialComplex compact(const SimplicialComplex& K);

// Vertex bijection mapping facets of a onto facets of b, if one exists
// (ghost vertices ignored). Backtracking; intended for small complexes.
std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b);
inline bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace hochster
