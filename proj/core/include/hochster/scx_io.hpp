#pragma once

#include <iosfwd>
#include <string>

#include "hochster/simplicial_complex.hpp"

namespace hochster {

// `.scx`: a line "m <ground_size>", then one facet per line as 1-based labels.
// '#' starts a comment; blank lines are ignored. Errors carry line numbers.
SimplicialComplex read_scx(std::istream& in);
SimplicialComplex parse_scx(const std::string& text);
SimplicialComplex load_scx(const std::string& path);

// Facets in lexicographic order.
void write_scx(std::ostream& out, const SimplicialComplex& K);
std::string to_scx(const SimplicialComplex& K);

}  // namespace hochster
