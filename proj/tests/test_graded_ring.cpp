#include <gtest/gtest.h>

#include <random>

#include "hochster/constructions.hpp"
#include "hochster/duality.hpp"
#include "hochster/report.hpp"
#include "hochster/verification.hpp"
#include "hochster/zoo.hpp"
#include "oracles.hpp"

using namespace hochster;

namespace {

using Alg = GradedAlgebra<Rationals>;
using Hilbert = std::map<int, int>;
using MultRank = std::map<std::pair<int, int>, int>;

Alg sphere(int n) {
  Alg A;
  A.add_basis(n, "s");
  return A;
}

Alg ring_of(const std::string& name) { return HochsterRing<Rationals>(zoo(name)).to_algebra(); }

// Trivial products with the same Hilbert function as S³×S³.
Alg trivial_s3s3() {
  Alg A;
  A.add_basis(3, "x");
  A.add_basis(3, "y");
  A.add_basis(6, "t");
  return A;
}

// Same algebra in a random degree-preserving basis.
Alg random_change_of_basis(const Alg& A, std::mt19937& rng) {
  const Rationals Q;
  const int n = A.dimension();
  std::uniform_int_distribution<int> c(-2, 2);
  Matrix<Rationals> P = Matrix<Rationals>::identity(Q, n);
  for (int s = 0; s < 3 * n; ++s) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j || A.degree(i) != A.degree(j)) continue;
    const Rational k(c(rng));
    for (int col = 0; col < n; ++col) P(i, col) = P(i, col) + k * P(j, col);
  }
  const auto Pinv = inverse(Q, P);
  // New basis f_i = Σ_k P(k, i) e_k.
  auto column = [&](const Matrix<Rationals>& M, int i) {
    SparseVec<Rationals> v;
    for (int k = 0; k < n; ++k)
      if (!M(k, i).is_zero()) v.push_back({k, M(k, i)});
    return v;
  };
  Alg B;
  for (int i = 0; i < n; ++i) B.add_basis(A.degree(i), "f");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto prod = A.multiply(column(P, i), column(P, j));
      Vec<Rationals> dense(n, Rational(0));
      for (auto& [k, x] : prod) dense[k] = x;
      auto coords = apply(Q, Pinv, dense);
      SparseVec<Rationals> out;
      for (int k = 0; k < n; ++k)
        if (!coords[k].is_zero()) out.push_back({k, coords[k]});
      B.set_product(i, j, out);
    }
  return B;
}

}  // namespace

TEST(GyrationTest, SphereShiftsUp) {
  for (int n = 2; n <= 6; ++n) {
    auto G = gyration(sphere(n));
    EXPECT_EQ(G.hilbert(), (Hilbert{{n + 1, 1}}));
  }
  EXPECT_THROW(gyration(Alg{}), Error);
}

TEST(GyrationTest, SphereProductHandCount) {
  auto G = gyration(sphere_product_ring<Rationals>(3, 3));
  EXPECT_EQ(G.hilbert(), (Hilbert{{3, 2}, {4, 2}, {7, 1}}));
  EXPECT_EQ(G.commutativity_violations(), 0);
  EXPECT_EQ(G.associativity_violations(), 0);
  EXPECT_TRUE(poincare_pairing_check(G));
}

// dim Gʳ(A) = dim A · 2ʳ − (2ʳ − 1) · dim A^d.
TEST(GyrationTest, IteratedDimensionFormula) {
  for (const auto& name : {"pentagon", "O6", "B5"}) {
    const auto A = ring_of(name);
    const int top = A.dimension_in_degree(*A.top_degree());
    for (int r = 1; r <= 4; ++r) {
      auto G = gyration_iter(A, r);
      EXPECT_EQ(G.dimension(), A.dimension() * (1 << r) - ((1 << r) - 1) * top) << name << r;
      EXPECT_EQ(*G.top_degree(), *A.top_degree() + r);
      EXPECT_EQ(G.commutativity_violations(), 0);
      EXPECT_EQ(G.associativity_violations(), 0);
    }
  }
  EXPECT_EQ(fingerprint(gyration_iter(ring_of("O6"), 0)), fingerprint(ring_of("O6")));
}

TEST(ProductQuotientTest, Examples) {
  auto A = ring_of("pentagon");
  EXPECT_EQ(fingerprint(direct_product(A, Alg{})), fingerprint(A));
  auto P = direct_product(sphere(3), sphere(3));
  EXPECT_EQ(fingerprint(P).hilbert, (Hilbert{{3, 2}}));
  EXPECT_TRUE(fingerprint(P).mult_rank.empty());
  auto S = sphere_product_ring<Rationals>(3, 3);
  auto T = quotient_by_top(S);
  EXPECT_EQ(T.hilbert(), (Hilbert{{3, 2}}));
  EXPECT_EQ(T.nonzero_products(), 0u);
  EXPECT_THROW(quotient_by_top(T), Error);
  EXPECT_THROW(quotient_by_ideal(S, {SparseVec<Rationals>{{0, Rational(1)}, {2, Rational(1)}}}), Error);
}

TEST(ProductQuotientTest, IcosahedronKeepsMiddleProducts) {
  auto Q = quotient_by_top(ring_of("I12"));
  EXPECT_GT(Q.nonzero_products(), 0u);
  EXPECT_EQ(fingerprint(Q), HochsterRing<Rationals>(zoo("I12")).fingerprint(true));
}

TEST(SphereProductTest, Rings) {
  auto S = sphere_product_ring<Rationals>(3, 3);
  EXPECT_EQ(S.hilbert(), (Hilbert{{3, 2}, {6, 1}}));
  EXPECT_EQ(S.product(0, 1), (SparseVec<Rationals>{{2, Rational(1)}}));
  EXPECT_EQ(S.product(1, 0), (SparseVec<Rationals>{{2, Rational(-1)}}));
  EXPECT_EQ(fingerprint(S), HochsterRing<Rationals>(zoo("square")).fingerprint());
  auto five = connected_sum_of_sphere_products<Rationals>({{3, 4, 5}});
  EXPECT_EQ(five.hilbert(), (Hilbert{{3, 5}, {4, 5}, {7, 1}}));
  EXPECT_EQ(fingerprint(five), HochsterRing<Rationals>(zoo("pentagon")).fingerprint());
  EXPECT_EQ(connected_sum_of_sphere_products<Rationals>({}).dimension(), 0);
  EXPECT_THROW(connected_sum_of_sphere_products<Rationals>({{3, 3, 1}, {3, 4, 1}}), Error);
}

// Hochster rings of polygons are connected sums of sphere products.
TEST(SphereProductTest, PolygonRings) {
  for (int m = 4; m <= 8; ++m) {
    std::vector<SphereProductTerm> terms;
    for (int k = 1; k <= m - 3; ++k) terms.emplace_back(k + 2, m - k, k * binomial(m - 2, k + 1));
    auto R = connected_sum_of_sphere_products<Rationals>(terms);
    EXPECT_EQ(fingerprint(R), HochsterRing<Rationals>(zoo("polygon(" + std::to_string(m) + ")")).fingerprint()) << m;
  }
}

TEST(ConnectedSumRingTest, Examples) {
  auto S = sphere_product_ring<Rationals>(3, 3);
  auto C = connected_sum_ring(S, S);
  EXPECT_EQ(C.hilbert(), (Hilbert{{3, 4}, {6, 1}}));
  EXPECT_TRUE(poincare_pairing_check(C));
  auto A = ring_of("O6");
  EXPECT_EQ(fingerprint(connected_sum_ring(A, sphere(9))), fingerprint(A));
  EXPECT_THROW(connected_sum_ring(A, sphere(8)), Error);
  auto P = ring_of("pentagon"), Q = connected_sum_of_sphere_products<Rationals>({{2, 5, 2}});
  auto R = connected_sum_of_sphere_products<Rationals>({{3, 4, 1}});
  EXPECT_EQ(fingerprint(connected_sum_ring(connected_sum_ring(P, Q), R)),
            fingerprint(connected_sum_ring(P, connected_sum_ring(Q, R))));
}

TEST(FingerprintTest, Examples) {
  auto fp = fingerprint(sphere_product_ring<Rationals>(3, 3));
  EXPECT_EQ(fp.mult_rank, (MultRank{{{3, 3}, 1}}));
  EXPECT_EQ(fp.decomposable, (Hilbert{{6, 1}}));
  EXPECT_NE(fingerprint(trivial_s3s3()), fp);
  EXPECT_TRUE(fingerprint(trivial_s3s3()).mult_rank.empty());
}

TEST(FingerprintTest, InvariantUnderChangeOfBasis) {
  std::mt19937 rng(11);
  for (const auto& name : {"pentagon", "O6", "B5", "square"}) {
    const auto A = ring_of(name);
    for (int t = 0; t < 3; ++t) EXPECT_EQ(fingerprint(random_change_of_basis(A, rng)), fingerprint(A)) << name;
  }
}

TEST(FingerprintTest, IntegerRingsReduceToRationals) {
  auto Z = HochsterRing<Integers>(zoo("B7")).to_algebra();
  EXPECT_EQ(fingerprint(Z), fingerprint(ring_of("B7")));
}

TEST(ConnectedSumFormulaTest, TrianglesGiveSquare) {
  auto H = ring_of("bd(2)");
  EXPECT_EQ(connected_sum_sphere_terms(3, 3, 2), (std::vector<SphereProductTerm>{{3, 3, 1}}));
  auto R = thm4_ring(H, H, 3, 3, 2);
  EXPECT_EQ(fingerprint(R), HochsterRing<Rationals>(zoo("square")).fingerprint());
}

TEST(ConnectedSumFormulaTest, WeightsAreBinomialDifferences) {
  // m1 = m2 = 6, n = 3: λ(i) = C(6,i) − 2·C(3,i).
  auto terms = connected_sum_sphere_terms(6, 6, 3);
  std::map<int, long long> lambda;
  for (auto [a, b, c] : terms) {
    EXPECT_EQ(a + b, 12);
    lambda[a - 1] += c;
  }
  for (int i = 2; i <= 6; ++i) EXPECT_EQ(lambda[i], binomial(6, i) - 2 * binomial(3, i)) << i;
}

TEST(ConnectedSumFormulaTest, SymmetricAndPoincare) {
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"O6", "O6"}, {"T4", "O6"}, {"B5", "T4"}}) {
    const auto K1 = zoo(a), K2 = zoo(b);
    auto R = thm4_ring(ring_of(a), ring_of(b), K1.vertex_count(), K2.vertex_count(), 3);
    const auto h = R.hilbert();
    const int top = *R.top_degree();
    for (auto [d, n] : h)
      if (d != top) EXPECT_EQ(h.count(top - d) ? h.at(top - d) : 0, n) << a << b << d;
    EXPECT_EQ(h.at(top), 1);
    EXPECT_TRUE(poincare_pairing_check(R)) << a << b;
  }
}

// The formula ring agrees with the glued complex for every small Gorenstein pair.
TEST(ConnectedSumFormulaTest, CorpusPairsMatchDirectComputation) {
  const std::vector<std::string> two_spheres = {"T4", "O6", "B5", "B7", "bipyramid(6)"};
  for (std::size_t i = 0; i < two_spheres.size(); ++i)
    for (std::size_t j = i; j < two_spheres.size(); ++j) {
      auto r = verify_thm4(zoo(two_spheres[i]), zoo(two_spheres[j]));
      EXPECT_EQ(r.status, VerifyStatus::pass) << two_spheres[i] << "#" << two_spheres[j];
    }
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"bd(2)", "bd(2)"}, {"square", "pentagon"}, {"polygon(6)", "bd(2)"}, {"bd(4)", "bd(4)"}})
    EXPECT_EQ(verify_thm4(zoo(a), zoo(b)).status, VerifyStatus::pass) << a << "#" << b;
}

TEST(ConnectedSumFormulaTest, SkipsNonGorenstein) {
  auto r = verify_thm4(zoo("torus7"), zoo("O6"));
  EXPECT_EQ(r.status, VerifyStatus::skipped);
  EXPECT_THROW(verify_thm4(zoo("O6"), zoo("pentagon")), Error);
}

TEST(StellarFormulaTest, StellarTermsCollapse) {
  // m − s = 0 leaves only j = 0.
  auto terms = stellar_sphere_terms({1, 0, 0, 1}, 5, 3, 5);
  for (auto [a, b, c] : terms) EXPECT_EQ(a + b, 5 + 3 + 1);
  EXPECT_EQ(oracle::hilbert_of_terms(terms), (Hilbert{{5, 1}, {4, 1}, {9, 1}}));
}

TEST(StellarFormulaTest, JoinOfBoundariesExample) {
  auto K = zoo("join(bd(3),bd(3))");
  auto r = verify_thm5(K, {1, 5});
  EXPECT_EQ(r.status, VerifyStatus::pass);
  EXPECT_EQ(r.certified_by, Surrogate::join_pattern);
  ASSERT_TRUE(r.example_terms && r.example_match);
  EXPECT_TRUE(*r.example_match);
  EXPECT_EQ(*r.example_terms, join_subdivision_terms(3, 3, 1, 1));
  EXPECT_EQ(fingerprint(connected_sum_of_sphere_products<Rationals>(*r.example_terms)), r.direct);
}

TEST(StellarFormulaTest, VertexIsTrivial) {
  auto r = verify_thm5(zoo("T4"), {1});
  EXPECT_EQ(r.status, VerifyStatus::pass);
  EXPECT_EQ(r.certified_by, Surrogate::trivial);
}

TEST(StellarFormulaTest, MoreSubdivisions) {
  for (auto [name, sigma] : std::vector<std::pair<const char*, VertexSet>>{
           {"bd(3)", {1, 2}}, {"bd(4)", {1, 2}}, {"bd(4)", {1, 2, 3}}, {"join(bd(2),bd(2))", {1, 4}}}) {
    auto r = verify_thm5(zoo(name), sigma);
    EXPECT_NE(r.status, VerifyStatus::fail) << name << sigma.to_string() << " " << r.reason;
  }
}

TEST(StellarFormulaTest, SkipsUncertifiedHypothesis) {
  auto r = verify_thm5(zoo("O6"), {1, 2});
  if (r.status != VerifyStatus::pass) EXPECT_EQ(r.status, VerifyStatus::skipped);
  EXPECT_EQ(verify_thm5(zoo("flag9"), {1}).status, VerifyStatus::skipped);
  EXPECT_THROW(verify_thm5(zoo("O6"), {1, 4}), Error);
}

TEST(BoundarySimplexSumTest, BoundarySimplexSums) {
  for (const auto& name : {"O6", "pentagon", "B5"}) {
    auto r = verify_boundary_simplex_sum(zoo(name));
    EXPECT_TRUE(r.pass) << name;
    EXPECT_EQ(r.via_thm4, r.direct);
  }
}

TEST(DecompositionTest, ProductParts) {
  auto X = ring_of("O6"), Y = ring_of("pentagon");
  auto P = direct_product(X, Y);
  std::vector<SparseVec<Rationals>> first, second, overlapping;
  for (int i = 0; i < X.dimension(); ++i) first.push_back({{i, Rational(1)}});
  for (int i = 0; i < Y.dimension(); ++i) second.push_back({{X.dimension() + i, Rational(1)}});
  EXPECT_TRUE(verify_product_decomposition(P, {first, second}));
  overlapping = second;
  overlapping.push_back(first.front());
  EXPECT_FALSE(verify_product_decomposition(P, {first, overlapping}));
  EXPECT_THROW(verify_product_decomposition(P, {{{{0, Rational(1)}, {X.dimension() - 1, Rational(1)}}}}), Error);
}

// Modulo the top class, the ring of K1 # K2 is the product of the three
// pieces of the formula ring, each modulo its own top.
TEST(DecompositionTest, ConnectedSumSplitsModuloTop) {
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"T4", "T4"}, {"O6", "O6"}, {"O6", "B5"}}) {
    const auto K1 = zoo(a), K2 = zoo(b);
    const int m1 = K1.vertex_count(), m2 = K2.vertex_count(), n = 3;
    std::vector<Alg> pieces{gyration_iter(ring_of(a), m2 - n), gyration_iter(ring_of(b), m1 - n),
                            connected_sum_of_sphere_products<Rationals>(connected_sum_sphere_terms(m1, m2, n))};
    Alg P;
    std::vector<std::vector<SparseVec<Rationals>>> parts;
    for (auto& piece : pieces) {
      const auto Q = quotient_by_top(piece);
      std::vector<SparseVec<Rationals>> span;
      for (int i = 0; i < Q.dimension(); ++i) span.push_back({{P.dimension() + i, Rational(1)}});
      parts.push_back(span);
      P = direct_product(P, Q);
    }
    EXPECT_TRUE(verify_product_decomposition(P, parts)) << a << "#" << b;
    const auto direct = HochsterRing<Rationals>(connected_sum(K1, K2)).fingerprint(true);
    EXPECT_EQ(fingerprint(P), direct) << a << "#" << b;
  }
}

TEST(MatchTest, Examples) {
  auto s = fingerprint(sphere_product_ring<Rationals>(3, 3));
  auto o = fingerprint(ring_of("O6"));
  EXPECT_EQ(match_factors({s, o, s}, {s, o, s}), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(match_factors({s, o}, {o, s}), (std::vector<int>{1, 0}));
  EXPECT_FALSE(match_factors({s}, {fingerprint(trivial_s3s3())}));
  EXPECT_FALSE(match_factors({s, s}, {s}));
}

TEST(MatchTest, GluingsAgree) {
  auto K1 = zoo("O6"), K2 = zoo("I12");
  auto A = connected_sum(K1, K2);
  auto B = connected_sum(K1, VertexSet({2, 3, 4}), K2, K2.facets().back(),
                         order_preserving_matching(K2.facets().back(), VertexSet({2, 3, 4})));
  auto r = compare_spheres(A, B);
  EXPECT_TRUE(r.same_count);
  ASSERT_TRUE(r.matching.has_value());
  EXPECT_TRUE(r.ring_fingerprints_equal);
}

TEST(SerializationTest, RoundTrip) {
  auto A = ring_of("pentagon");
  auto B = algebra_from_json(algebra_to_json(A));
  EXPECT_EQ(B.dimension(), A.dimension());
  EXPECT_EQ(fingerprint(B), fingerprint(A));
  for (int i = 0; i < A.dimension(); ++i)
    for (int j = 0; j < A.dimension(); ++j) EXPECT_EQ(A.product(i, j), B.product(i, j));
  EXPECT_THROW(algebra_from_json("{\"basis\": 3}"), Error);
}
