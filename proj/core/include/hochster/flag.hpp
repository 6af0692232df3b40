#pragma once

#include <optional>
#include <vector>

#include "hochster/simplicial_complex.hpp"

namespace hochster {

// K_I is the boundary of an n-gon with n = |I| ≥ 4.
bool is_polygon_subcomplex(const SimplicialComplex& K, VertexSet I);

// Shortest induced cycle through both ends of the missing edge, verified to
// span a polygon full subcomplex. Falls back to an exhaustive subset search
// for m ≤ 20. Throws NotFound when no belt exists.
VertexSet belt_through_missing_edge(const SimplicialComplex& K, VertexSet edge);

// Every I with |I| = n and K_I the boundary of an n-gon.
std::vector<VertexSet> find_belts(const SimplicialComplex& K, int n);

// Flagness via the clique complex of the 1-skeleton; independent of missing_faces.
bool is_flag_by_cliques(const SimplicialComplex& K);

}  // namespace hochster
