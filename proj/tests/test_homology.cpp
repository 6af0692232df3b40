#include <gtest/gtest.h>

#include <random>

#include "hochster/constructions.hpp"
#include "hochster/errors.hpp"
#include "hochster/homology.hpp"
#include "hochster/zoo.hpp"
#include "oracles.hpp"

using namespace hochster;

namespace {

SimplicialComplex rp2() {
  std::vector<VertexSet> f;
  for (auto t : std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                              {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}})
    f.push_back(VertexSet::from_labels(t));
  return SimplicialComplex::from_facets(6, f);
}

const std::vector<std::string> kCorpus = {"bd(2)", "bd(3)", "bd(4)", "square", "pentagon", "polygon(7)", "O6",
                                          "I12",   "B5",    "B7",    "flag9",  "torus7",   "cone(pentagon)"};

template <class R>
typename R::value_type pair(const R& F, const Vec<R>& cochain, const Vec<R>& chain) {
  auto s = F.zero();
  for (std::size_t i = 0; i < chain.size(); ++i) s = F.add(s, F.mul(cochain[i], chain[i]));
  return s;
}

Vec<Rationals> random_vec(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec<Rationals> v(n);
  for (auto& x : v) x = Rational(d(rng));
  return v;
}

}  // namespace

TEST(ChainComplexTest, BoundarySquaredVanishes) {
  for (const auto& name : kCorpus) {
    ChainComplex C(zoo(name));
    EXPECT_NO_THROW(C.verify_boundary_squared()) << name;
  }
  EXPECT_NO_THROW(ChainComplex(rp2()).verify_boundary_squared());
}

TEST(ChainComplexTest, AugmentationDegree) {
  ChainComplex C(zoo("square"));
  EXPECT_EQ(C.rank(-1), 1);
  EXPECT_EQ(C.rank(0), 4);
  EXPECT_EQ(C.rank(1), 4);
  EXPECT_EQ(C.top_degree(), 1);
}

TEST(HomologyTest, Examples) {
  const auto Z = Coefficients::integers();
  auto E = reduced_homology(SimplicialComplex::empty(0), Z);
  EXPECT_EQ(E.rank(-1), 1);
  EXPECT_EQ(reduced_homology(SimplicialComplex::empty(3), Z).rank(-1), 1);
  auto O = reduced_homology(zoo("O6"), Z);
  EXPECT_EQ(O.rank(2), 1);
  EXPECT_EQ(O.rank(-1) + O.rank(0) + O.rank(1), 0);
  auto F = reduced_homology(zoo("flag9"), Z);
  EXPECT_EQ(F.rank(1), 1);
  EXPECT_EQ(F.rank(0) + F.rank(2), 0);
  EXPECT_FALSE(F.has_torsion());
  auto T = reduced_homology(zoo("torus7"), Z);
  EXPECT_EQ(T.rank(1), 2);
  EXPECT_EQ(T.rank(2), 1);
  EXPECT_EQ(reduced_homology(zoo("cone(O6)"), Z).rank(2), 0);
  EXPECT_EQ(reduced_homology(zoo("bd(1)"), Z).rank(0), 1);
}

TEST(HomologyTest, TorsionOverIntegers) {
  auto H = reduced_homology(rp2(), Coefficients::integers());
  EXPECT_EQ(H.rank(1), 0);
  EXPECT_EQ(H.rank(2), 0);
  ASSERT_EQ(H.torsion_in(1).size(), 1u);
  EXPECT_EQ(H.torsion_in(1)[0], 2);
  auto C = reduced_cohomology(rp2(), Coefficients::integers());
  ASSERT_EQ(C.torsion_in(2).size(), 1u);
  EXPECT_TRUE(C.torsion_in(1).empty());
}

// Ranks over 𝔽_p = free rank + torsion factors divisible by p in degrees d and d−1.
TEST(HomologyTest, UniversalCoefficients) {
  std::vector<SimplicialComplex> corpus;
  for (const auto& n : kCorpus) corpus.push_back(zoo(n));
  corpus.push_back(rp2());
  for (const auto& K : corpus) {
    const auto Z = reduced_homology(K, Coefficients::integers());
    const auto Q = reduced_homology(K, Coefficients::rationals());
    for (int d = -1; d <= K.dimension(); ++d) EXPECT_EQ(Q.rank(d), Z.rank(d));
    for (std::uint32_t p : {2u, 3u}) {
      const auto P = reduced_homology(K, Coefficients::prime(p));
      for (int d = -1; d <= K.dimension(); ++d) {
        int extra = 0;
        for (const auto& t : Z.torsion_in(d)) extra += t % p == 0;
        for (const auto& t : Z.torsion_in(d - 1)) extra += t % p == 0;
        EXPECT_EQ(P.rank(d), Z.rank(d) + extra) << "p=" << p << " d=" << d;
      }
    }
  }
}

// Full subcomplex ranks agree with the independent mod-p oracle.
TEST(HomologyTest, MatchesOracleOnSubsets) {
  for (const char* name : {"pentagon", "O6", "B7", "flag9", "torus7"}) {
    const auto K = zoo(name);
    const auto facets = oracle::facet_labels(K);
    for (std::uint64_t J = 0; J < (std::uint64_t{1} << K.ground_size()); J += 3) {
      const auto expected = oracle::reduced_betti(facets, J);
      const auto H = reduced_homology(full_subcomplex(K, VertexSet(J)), Coefficients::rationals());
      for (int d = -1; d + 1 < static_cast<int>(expected.size()); ++d)
        EXPECT_EQ(H.rank(d), expected[d + 1]) << name << " J=" << J << " d=" << d;
    }
  }
}

TEST(CohomologyBasisTest, Examples) {
  Rationals Q;
  ChainComplex square(zoo("square"));
  EXPECT_EQ(cohomology_basis(Q, square, 1).size(), 1);
  auto two_points = full_subcomplex(zoo("square"), {1, 3});
  auto B = cohomology_basis(Q, ChainComplex(two_points), 0);
  ASSERT_EQ(B.size(), 1);
  auto P = full_subcomplex(zoo("pentagon"), {1, 3, 5});  // 1–5 is an edge
  EXPECT_EQ(cohomology_basis(Q, ChainComplex(P), 0).size(), 1);
  auto S = full_subcomplex(zoo("polygon(6)"), {1, 3, 5});
  EXPECT_EQ(cohomology_basis(Q, ChainComplex(S), 0).size(), 2);
}

TEST(CohomologyBasisTest, RepresentativesAreCocyclesWithUnitCoordinates) {
  Rationals Q;
  for (const char* name : {"torus7", "O6", "flag9"}) {
    ChainComplex C(zoo(name));
    for (int d = -1; d <= C.top_degree(); ++d) {
      auto B = cohomology_basis(Q, C, d);
      auto delta = C.coboundary(Q, d);
      for (int r = 0; r < B.size(); ++r) {
        EXPECT_TRUE(is_zero_vector(Q, apply(Q, delta, B.representatives[r])));
        auto coords = B.coordinates(Q, B.representatives[r]);
        for (int s = 0; s < B.size(); ++s) EXPECT_EQ(coords[s], Rational(r == s ? 1 : 0));
      }
    }
  }
}

TEST(CohomologyBasisTest, IntegersNeedTorsionFree) {
  Integers Z;
  ChainComplex C(rp2());
  EXPECT_THROW(cohomology_basis(Z, C, 2), Error);
  EXPECT_EQ(cohomology_basis(Z, ChainComplex(zoo("torus7")), 1).size(), 2);
}

TEST(FundamentalClassTest, Orientation) {
  Rationals Q;
  auto T = fundamental_class(Q, zoo("bd(2)"));
  ChainComplex C(zoo("bd(2)"));
  ASSERT_EQ(T.degree, 1);
  // edges 12, 13, 23 in order: ∂ = 0 forces (1, −1, 1).
  EXPECT_EQ(T.cycle, (Vec<Rationals>{Rational(1), Rational(-1), Rational(1)}));
  auto O = fundamental_class(Q, zoo("O6"));
  for (const auto& c : O.cycle) EXPECT_TRUE(c == Rational(1) || c == Rational(-1));
  ChainComplex CO(zoo("O6"));
  EXPECT_TRUE(is_zero_vector(Q, apply(Q, CO.boundary(Q, 2), O.cycle)));
  EXPECT_EQ(O.cycle.front(), Rational(1));
  EXPECT_THROW(fundamental_class(Q, zoo("cone(bd(2))")), Error);
  EXPECT_THROW(fundamental_class(Q, zoo("flag9")), Error);
  EXPECT_EQ(fundamental_class(Q, zoo("torus7")).degree, 2);
}

TEST(UnionProductTest, Examples) {
  Rationals Q;
  auto K = zoo("square");
  ChainComplex C13(full_subcomplex(K, {1, 3})), C24(full_subcomplex(K, {2, 4})), C(K);
  ChainComplex C12(full_subcomplex(K, {1, 2}));
  // σ = (1) on K_{13}, τ = (2) on K_{24}.
  Vec<Rationals> u{Rational(1), Rational(0)}, v{Rational(1), Rational(0)};
  auto w = union_product(Q, C13, {1, 3}, 0, u, C24, {2, 4}, 0, v, C);
  ASSERT_EQ(static_cast<int>(w.size()), C.rank(1));
  EXPECT_EQ(w[C.index_of({1, 2})], Rational(1));
  // σ = (1), τ = (3): {1,3} is not a face.
  Vec<Rationals> one{Rational(1)};
  ChainComplex C1(full_subcomplex(K, {1})), C3(full_subcomplex(K, {3}));
  auto zero = union_product(Q, C1, {1}, 0, one, C3, {3}, 0, one, ChainComplex(full_subcomplex(K, {1, 3})));
  EXPECT_TRUE(is_zero_vector(Q, zero));
  auto overlap = union_product(Q, C12, {1, 2}, 0, Vec<Rationals>{Rational(1), Rational(0)}, C13, {1, 3}, 0, u, C);
  EXPECT_TRUE(is_zero_vector(Q, overlap));
}

TEST(ExcisionProductTest, Sign) {
  Rationals Q;
  auto K = zoo("simplex(2)");  // vertices 1, 2, 3
  ChainComplex C(K), CJ(full_subcomplex(K, {2})), target(full_subcomplex(K, {1, 3}));
  Vec<Rationals> c(C.rank(2), Rational(1));
  auto r = excision_product(Q, C, VertexSet::full(3), 2, c, CJ, {2}, 0, Vec<Rationals>{Rational(1)}, target);
  EXPECT_EQ(r[target.index_of({1, 3})], Rational(-1));
  // τ ⊄ σ: pair the edge 13 with the vertex 2.
  Vec<Rationals> e(C.rank(1), Rational(0));
  e[C.index_of({1, 3})] = Rational(1);
  auto z = excision_product(Q, C, VertexSet::full(3), 1, e, CJ, {2}, 0, Vec<Rationals>{Rational(1)}, target);
  EXPECT_TRUE(is_zero_vector(Q, z));
}

// ψ(c ⊓ φ) = (φ ⊔ ψ)(c) at chain level.
TEST(ExcisionProductTest, AdjunctionWithUnionProduct) {
  Rationals Q;
  std::mt19937 rng(17);
  for (const char* name : {"O6", "bd(4)", "I12"}) {
    auto K = zoo(name);
    const int m = K.ground_size();
    for (int trial = 0; trial < 60; ++trial) {
      VertexSet I(rng() & VertexSet::full(m).bits());
      VertexSet J(rng() & I.bits());
      const VertexSet rest = I - J;
      ChainComplex CI(full_subcomplex(K, I)), CJ(full_subcomplex(K, J)), CR(full_subcomplex(K, rest));
      for (int k = 0; k <= CI.top_degree(); ++k)
        for (int p = -1; p < k; ++p) {
          const int q = k - p - 1;
          if (CJ.rank(p) == 0 || CR.rank(q) == 0) continue;
          auto c = random_vec(CI.rank(k), rng), phi = random_vec(CJ.rank(p), rng), psi = random_vec(CR.rank(q), rng);
          auto left = pair(Q, psi, excision_product(Q, CI, I, k, c, CJ, J, p, phi, CR));
          auto right = pair(Q, union_product(Q, CJ, J, p, phi, CR, rest, q, psi, CI), c);
          EXPECT_EQ(left, right) << name << " k=" << k << " p=" << p;
        }
    }
  }
}

// Products of cocycles are cocycles; a coboundary times a cocycle is a coboundary.
TEST(UnionProductTest, DescendsToCohomology) {
  Rationals Q;
  std::mt19937 rng(3);
  auto K = zoo("I12");
  const int m = K.ground_size();
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    VertexSet I(rng() & VertexSet::full(m).bits());
    VertexSet J(rng() & VertexSet::full(m).bits() & ~I.bits());
    if (I.empty() || J.empty()) continue;
    ChainComplex CI(full_subcomplex(K, I)), CJ(full_subcomplex(K, J)), CT(full_subcomplex(K, I | J));
    for (int p = 0; p <= CI.top_degree(); ++p)
      for (int q = 0; q <= CJ.top_degree(); ++q) {
        auto BI = cohomology_basis(Q, CI, p), BJ = cohomology_basis(Q, CJ, q);
        if (BI.size() == 0 || BJ.size() == 0) continue;
        const int e = p + q + 1;
        auto prod = union_product(Q, CI, I, p, BI.representatives[0], CJ, J, q, BJ.representatives[0], CT);
        EXPECT_TRUE(is_zero_vector(Q, apply(Q, CT.coboundary(Q, e), prod)));
        if (p >= 1 || CI.rank(p - 1) > 0) {
          auto w = random_vec(CI.rank(p - 1), rng);
          auto exact = apply(Q, CI.coboundary(Q, p - 1), w);
          auto shifted = union_product(Q, CI, I, p, exact, CJ, J, q, BJ.representatives[0], CT);
          auto coords = cohomology_basis(Q, CT, e).coordinates(Q, shifted);
          EXPECT_TRUE(is_zero_vector(Q, coords));
        }
        ++checked;
      }
  }
  EXPECT_GT(checked, 10);
}

TEST(InducedMapTest, Examples) {
  Rationals Q;
  auto K = zoo("O6");
  auto M = induced_map_homology(Q, K, K, VertexSet({1, 2, 4, 5}), 1);
  ASSERT_EQ(M.rows, 1);
  EXPECT_EQ(rank(Q, M), 1);
  // A point into a connected complex is zero on reduced H_0 (the source group is zero).
  auto point = SimplicialComplex::from_facets(6, {VertexSet{1}});
  auto Z0 = induced_map_homology(Q, point, K, VertexSet::full(6), 0);
  EXPECT_EQ(rank(Q, Z0), 0);
  // The link of 1 is the belt K_{2356}; it is nonzero there and dies in K.
  auto L = link(K, {1});
  auto Lmap = induced_map_homology(Q, L, K, VertexSet({2, 3, 5, 6}), 1);
  EXPECT_EQ(rank(Q, Lmap), 1);
  auto Lfull = induced_map_homology(Q, L, K, VertexSet::full(6), 1);
  EXPECT_EQ(rank(Q, Lfull), 0);
  EXPECT_THROW(induced_map_homology(Q, K, L, VertexSet::full(6), 1), Error);
}
