#pragma once

#include <vector>

#include "hochster/simplicial_complex.hpp"

namespace hochster {

// Closed 2-pseudomanifold with χ = 2 whose vertex links are circles.
bool is_two_sphere(const SimplicialComplex& K);

// 3-cycles of the 1-skeleton that are not 2-simplices, in lexicographic order.
std::vector<VertexSet> empty_triangles(const SimplicialComplex& K);

// Split recursively along empty triangles. Factors are renumbered 1..m_i
// preserving the order of the original labels. Throws NotASphere.
std::vector<SimplicialComplex> irreducible_decomposition(const SimplicialComplex& K);

}  // namespace hochster
