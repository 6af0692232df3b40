#pragma once

#include <string>

#include "hochster/graded_algebra.hpp"
#include "hochster/hochster_ring.hpp"

namespace hochster {

// {"m", "dim", "betti", "torsion", "bigraded", "checks"}; betti over `coeff`,
// pairing over ℚ. Pretty-printed with two-space indentation.
std::string complex_report_json(const SimplicialComplex& K, const Coefficients& coeff, int jobs = 1);

std::string bigraded_json(const BigradedBetti& b);
std::string fingerprint_json(const RingFingerprint& fp);

// {"basis":[{"deg","label"}], "products":[[i, j, [[k, "c"], ...]], ...]};
// coefficients are exact strings.
std::string algebra_to_json(const GradedAlgebra<Rationals>& A);
std::string algebra_to_json(const GradedAlgebra<PrimeField>& A);
std::string algebra_to_json(const GradedAlgebra<Integers>& A);
// Throws ParseError.
GradedAlgebra<Rationals> algebra_from_json(const std::string& text);

}  // namespace hochster
