#pragma once

#include <optional>
#include <vector>

#include "hochster/linalg.hpp"

namespace hochster {

using IntMatrix = Matrix<Integers>;

struct SmithForm {
  std::vector<mpz_class> invariant_factors;  // positive, d1 | d2 | ...
  int rank = 0;
  // With transforms: U·A·V = D, U_inv = U⁻¹, V_inv = V⁻¹ (all unimodular).
  std::optional<IntMatrix> U, V, U_inv, V_inv;
};

SmithForm smith_normal_form(IntMatrix A, bool with_transforms = false);

// Diagonal matrix D of the given shape holding the invariant factors.
IntMatrix smith_diagonal(const SmithForm& S, int rows, int cols);

// (ker A)/(im B) over ℤ for A∘B = 0 on ℤ^n. Throws TorsionUnsupported if the
// quotient has torsion. The functional is dense (support = all of [n]).
QuotientBasis<Integers> integer_subquotient(int n, const IntMatrix& A, const IntMatrix& B);

}  // namespace hochster
