#pragma once

#include <string>
#include <vector>

#include "hochster/simplicial_complex.hpp"

namespace hochster {

// Built-in complexes by expression, e.g. "O6", "polygon(5)", "B7",
// "join(T4,T4)", "cone(boundary_simplex(2))", "∂Δ3".
// Throws UnknownName (or InvalidArgument for malformed arguments).
SimplicialComplex zoo(const std::string& expression);

// Names accepted by zoo(), for help output.
std::vector<std::string> zoo_names();

// Polytope boundary given by its 2-faces as cyclically ordered vertex lists.
struct PolyhedralData {
  std::string name;
  int vertex_count = 0;
  std::vector<std::vector<int>> faces;
  bool is_simplicial = false;
};

// T4, C8, O6, D20, I12. C8 and D20 are not simplicial and are kept as data only.
PolyhedralData polyhedron(const std::string& name);

// Dual polytope of a simplicial 2-sphere: one vertex per triangle, one face per vertex.
PolyhedralData dual_polyhedron(const SimplicialComplex& K, const std::string& name);

}  // namespace hochster
