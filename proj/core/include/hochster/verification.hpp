#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hochster/constructions.hpp"
#include "hochster/ring_constructions.hpp"

namespace hochster {

enum class VerifyStatus { pass, fail, skipped };
std::string to_string(VerifyStatus s);

struct Thm4Report {
  VerifyStatus status = VerifyStatus::skipped;
  std::string reason;
  int m1 = 0, m2 = 0, n = 0;
  std::vector<SphereProductTerm> sphere_terms;
  RingFingerprint direct;   // computed from the glued complex
  RingFingerprint formula;  // gyrations × sphere products modulo the tops
};

struct GluingChoice {
  VertexSet f1, f2;
  FacetMatching matching;
};

// Inputs must be Gorenstein* of equal dimension n−1 ≥ 1. Over a field.
Thm4Report verify_thm4(const SimplicialComplex& K1, const SimplicialComplex& K2,
                       const std::optional<GluingChoice>& gluing = std::nullopt,
                       const Coefficients& coeff = Coefficients::rationals(), int jobs = 1);

enum class Surrogate { none, trivial, join_pattern, induced_map_zero };
std::string to_string(Surrogate s);

struct Thm5Report {
  VerifyStatus status = VerifyStatus::skipped;
  std::string reason;
  Surrogate certified_by = Surrogate::none;
  int m = 0, n = 0, s = 0;
  std::vector<long long> f;  // ranks of H^i of the link's moment-angle complex
  std::vector<SphereProductTerm> sphere_terms;
  RingFingerprint direct;
  RingFingerprint formula;
  // Set when K is a join of two simplex boundaries and σ meets both.
  std::optional<std::vector<SphereProductTerm>> example_terms;
  std::optional<bool> example_match;
};

Thm5Report verify_thm5(const SimplicialComplex& K, VertexSet sigma,
                       const Coefficients& coeff = Coefficients::rationals(), int jobs = 1);

// Vertex sets of the factors when K is a join of simplex boundaries ∂Δ^{n_i}, n_i ≥ 1.
std::optional<std::vector<VertexSet>> boundary_join_factors(const SimplicialComplex& K);

// Connected sum of sphere products for the stellar subdivision of
// ∂Δ^{n1} * ∂Δ^{n2} at σ ∪ τ, |σ| = a < n1, |τ| = b < n2.
std::vector<SphereProductTerm> join_subdivision_terms(int n1, int n2, int a, int b);

struct BoundarySumReport {
  bool pass = false;
  RingFingerprint via_thm4;      // formula ring for K # ∂Δⁿ
  RingFingerprint via_gyration;    // G(H) # sphere products
  RingFingerprint direct;        // computed from K # ∂Δⁿ
};
// K Gorenstein* of dimension n−1 with m vertices.
BoundarySumReport verify_boundary_simplex_sum(const SimplicialComplex& K, const Coefficients& coeff = Coefficients::rationals(),
                                         int jobs = 1);

struct DecompositionReport {
  std::vector<SimplicialComplex> factors;
  std::vector<RingFingerprint> fingerprints;  // each factor's ring modulo its top class
  bool prime = false;                         // exactly one factor
};
DecompositionReport decompose_sphere(const SimplicialComplex& K, int jobs = 1);

struct CompareReport {
  DecompositionReport a, b;
  bool same_count = false;
  std::optional<std::vector<int>> matching;
  bool ring_fingerprints_equal = false;  // whole rings over ℚ
};
CompareReport compare_spheres(const SimplicialComplex& A, const SimplicialComplex& B, int jobs = 1);

}  // namespace hochster
