#include <gtest/gtest.h>

#include <json.hpp>

#include "hochster/constructions.hpp"
#include "hochster/duality.hpp"
#include "hochster/report.hpp"
#include "hochster/zoo.hpp"
#include "oracles.hpp"

using namespace hochster;

namespace {

const std::vector<std::string> kSpheres = {"bd(1)", "bd(2)", "bd(3)", "bd(4)", "square", "pentagon", "polygon(6)",
                                           "polygon(7)", "polygon(8)", "O6", "I12", "B5", "B7"};
const std::vector<std::string> kOthers = {"flag9", "torus7", "cone(pentagon)", "cone(O6)", "simplex(3)"};

std::map<int, int> without_zero(std::map<int, int> b) {
  b.erase(0);
  return b;
}

template <class R>
bool pairing_holds(const HochsterRing<R>& H) {
  try {
    return poincare_pairing_check(H);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_poincare_candidate);
    return false;
  }
}

}  // namespace

TEST(BigradedTest, Square) {
  auto b = bigraded_betti(zoo("square"), Coefficients::integers());
  ASSERT_EQ(b.entries.size(), 3u);
  EXPECT_EQ(b.entries[0].J, VertexSet({1, 3}));
  EXPECT_EQ(b.entries[0].d, 0);
  EXPECT_EQ(b.entries[1].J, VertexSet({2, 4}));
  EXPECT_EQ(b.entries[2].J, VertexSet({1, 2, 3, 4}));
  EXPECT_EQ(b.entries[2].d, 1);
  EXPECT_EQ(b.betti(), (std::map<int, int>{{0, 1}, {3, 2}, {6, 1}}));
  EXPECT_EQ(b.betti_vector(), (std::vector<int>{1, 0, 0, 2, 0, 0, 1}));
}

TEST(BigradedTest, PentagonAndOctahedron) {
  EXPECT_EQ(bigraded_betti(zoo("pentagon"), Coefficients::integers()).betti(),
            (std::map<int, int>{{0, 1}, {3, 5}, {4, 5}, {7, 1}}));
  // (1 + t³)³
  EXPECT_EQ(bigraded_betti(zoo("O6"), Coefficients::integers()).betti(),
            (std::map<int, int>{{0, 1}, {3, 3}, {6, 3}, {9, 1}}));
}

TEST(BigradedTest, BothIndexingsAgree) {
  for (const auto& e : bigraded_betti(zoo("I12"), Coefficients::rationals()).entries) {
    EXPECT_EQ(e.d, e.J.size() - e.tor_i() - 1);
    EXPECT_EQ(-e.tor_i() + 2 * e.J.size(), e.total_degree());
  }
}

TEST(BigradedTest, PolygonsMatchClassicalProfile) {
  for (int m = 4; m <= 9; ++m)
    EXPECT_EQ(bigraded_betti(zoo("polygon(" + std::to_string(m) + ")"), Coefficients::integers()).betti(),
              oracle::polygon_betti(m))
        << m;
}

TEST(BigradedTest, MatchesSubsetOracle) {
  for (const auto& name : {"O6", "B7", "flag9", "torus7", "polygon(7)", "cone(square)", "bd(4)"}) {
    const auto K = zoo(name);
    EXPECT_EQ(bigraded_betti(K, Coefficients::rationals()).betti(), oracle::moment_angle_betti(K)) << name;
  }
}

TEST(BigradedTest, IntegerFreeRanksMatchRationals) {
  for (const auto& name : {"torus7", "flag9", "I12"}) {
    const auto K = zoo(name);
    EXPECT_EQ(bigraded_betti(K, Coefficients::integers()).betti(), bigraded_betti(K, Coefficients::rationals()).betti());
  }
}

TEST(BigradedTest, GhostVertexContributesExteriorClass) {
  auto K = SimplicialComplex::from_facets(3, {VertexSet{1, 2}});
  auto b = bigraded_betti(K, Coefficients::rationals());
  EXPECT_EQ(b.betti(), (std::map<int, int>{{0, 1}, {1, 1}}));  // S¹ factor from the ghost vertex
}

TEST(BigradedTest, IndependentOfJobs) {
  auto K = zoo("I12");
  auto a = bigraded_betti(K, Coefficients::integers(), 1);
  auto b = bigraded_betti(K, Coefficients::integers(), 4);
  EXPECT_EQ(bigraded_json(a), bigraded_json(b));
}

TEST(StarProductTest, SquareSigns) {
  HochsterRing<Rationals> H(zoo("square"));
  const auto u = H.find_block({1, 3}, 0), v = H.find_block({2, 4}, 0), t = H.find_block({1, 2, 3, 4}, 1);
  ASSERT_TRUE(u && v && t);
  const int iu = H.blocks()[*u].offset, iv = H.blocks()[*v].offset, it = H.blocks()[*t].offset;
  auto uv = H.multiply_basis(iu, iv), vu = H.multiply_basis(iv, iu);
  ASSERT_EQ(uv.size(), 1u);
  ASSERT_EQ(vu.size(), 1u);
  EXPECT_EQ(uv[0].first, it);
  EXPECT_EQ(uv[0].second, -vu[0].second);
  EXPECT_TRUE(uv[0].second == Rational(1) || uv[0].second == Rational(-1));
  EXPECT_TRUE(H.multiply_basis(iu, iu).empty());  // overlapping supports
}

TEST(StarProductTest, FingerprintOfSquareIsSphereProduct) {
  auto fp = HochsterRing<Rationals>(zoo("square")).fingerprint();
  EXPECT_EQ(fp.hilbert, (std::map<int, int>{{3, 2}, {6, 1}}));
  EXPECT_EQ(fp.mult_rank, (std::map<std::pair<int, int>, int>{{{3, 3}, 1}}));
}

// Graded commutativity is checked exhaustively, associativity on random triples.
TEST(StarProductTest, CommutativeAndAssociative) {
  for (const auto& name : {"bd(2)", "bd(3)", "bd(4)", "square", "pentagon", "polygon(6)", "O6", "B5", "B7", "flag9",
                           "torus7"}) {
    HochsterRing<Rationals> Q(zoo(name));
    EXPECT_EQ(Q.commutativity_violations(), 0) << name;
    EXPECT_EQ(Q.associativity_violations(1000), 0) << name;
    HochsterRing<PrimeField> F(zoo(name), PrimeField{2});
    EXPECT_EQ(F.commutativity_violations(), 0) << name;
    EXPECT_EQ(F.associativity_violations(1000), 0) << name;
  }
}

// Exhaustive associativity through the structure-constant table, m ≤ 6.
TEST(StarProductTest, ExhaustiveAssociativitySmall) {
  for (const auto& name : {"square", "pentagon", "polygon(6)", "O6", "B5"}) {
    auto A = HochsterRing<Rationals>(zoo(name)).to_algebra();
    EXPECT_EQ(A.associativity_violations(), 0) << name;
    EXPECT_EQ(A.commutativity_violations(), 0) << name;
  }
}

TEST(StarProductTest, BlockFingerprintMatchesTable) {
  for (const auto& name : {"pentagon", "O6", "B7", "flag9"}) {
    HochsterRing<Rationals> H(zoo(name));
    EXPECT_EQ(H.fingerprint(), fingerprint(H.to_algebra())) << name;
    EXPECT_EQ(H.fingerprint(false, 3), H.fingerprint(false, 1)) << name;
  }
}

TEST(StarProductTest, HilbertMatchesBetti) {
  for (const auto& name : {"I12", "flag9", "B7"}) {
    HochsterRing<Rationals> H(zoo(name));
    EXPECT_EQ(H.hilbert(), without_zero(bigraded_betti(zoo(name), Coefficients::rationals()).betti()));
  }
}

TEST(StarProductTest, IntegerRingOnSpheres) {
  HochsterRing<Integers> H(zoo("O6"));
  EXPECT_EQ(H.commutativity_violations(), 0);
  EXPECT_EQ(fingerprint(H.to_algebra()), HochsterRing<Rationals>(zoo("O6")).fingerprint());
}

TEST(StarProductTest, IntegerRingRejectsTorsion) {
  std::vector<VertexSet> f;
  for (auto t : std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                              {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}})
    f.push_back(VertexSet::from_labels(t));
  EXPECT_THROW(HochsterRing<Integers>(SimplicialComplex::from_facets(6, f)), Error);
}

TEST(DualityTest, Examples) {
  auto T = alexander_duality_check(zoo("bd(3)"), Coefficients::rationals());
  EXPECT_TRUE(T.overall_pass);
  for (const auto& e : T.entries) EXPECT_EQ(e.map_rank, e.cohomology_rank);
  EXPECT_TRUE(alexander_duality_check(zoo("O6"), Coefficients::integers()).overall_pass);
  auto C = alexander_duality_check(zoo("cone(bd(2))"), Coefficients::rationals());
  EXPECT_FALSE(C.overall_pass);
  EXPECT_FALSE(C.reason.empty());
  EXPECT_FALSE(alexander_duality_check(zoo("torus7"), Coefficients::rationals()).overall_pass);
  EXPECT_FALSE(alexander_duality_check(zoo("flag9"), Coefficients::rationals()).overall_pass);
  EXPECT_TRUE(alexander_duality_check(zoo("bd(1)"), Coefficients::integers()).overall_pass);
}

// On O6, the entry for I = {1,4} pairs H̃⁰ of two points with H̃₁ of the belt K_{2356}.
TEST(DualityTest, OctahedronEntry) {
  auto R = alexander_duality_check(zoo("O6"), Coefficients::rationals());
  bool found = false;
  for (const auto& e : R.entries)
    if (e.I == VertexSet({1, 4}) && e.i == 0) {
      found = true;
      EXPECT_EQ(e.cohomology_rank, 1);
      EXPECT_EQ(e.homology_rank, 1);
      EXPECT_EQ(e.map_rank, 1);
    }
  EXPECT_TRUE(found);
}

TEST(GorensteinTest, Examples) {
  for (int n = 1; n <= 4; ++n)
    EXPECT_TRUE(is_gorenstein_star(zoo("bd(" + std::to_string(n) + ")"), Coefficients::integers()).value);
  auto c = is_gorenstein_star(zoo("cone(O6)"), Coefficients::rationals());
  EXPECT_FALSE(c.value);
  auto f = is_gorenstein_star(zoo("flag9"), Coefficients::rationals());
  EXPECT_FALSE(f.value);
  ASSERT_TRUE(f.witness.has_value());
  EXPECT_FALSE(is_gorenstein_star(zoo("torus7"), Coefficients::rationals()).value);
}

TEST(GorensteinTest, CrossValidationAgreesEverywhere) {
  for (const char* coeff : {"q", "z", "fp:2"}) {
    for (const auto& name : kSpheres)
      EXPECT_TRUE(cross_validate_gorenstein(zoo(name), Coefficients::parse(coeff))) << name << " " << coeff;
    for (const auto& name : kOthers)
      EXPECT_FALSE(cross_validate_gorenstein(zoo(name), Coefficients::parse(coeff))) << name << " " << coeff;
  }
}

TEST(PairingTest, Examples) {
  EXPECT_TRUE(poincare_pairing_check(HochsterRing<Rationals>(zoo("square"))));
  EXPECT_TRUE(poincare_pairing_check(HochsterRing<Rationals>(zoo("bd(2)"))));
  EXPECT_FALSE(pairing_holds(HochsterRing<Rationals>(zoo("flag9"))));
}

TEST(PairingTest, GorensteinIffPairing) {
  for (const auto& name : kSpheres) {
    HochsterRing<Rationals> H(zoo(name));
    EXPECT_TRUE(poincare_pairing_check(H)) << name;
    EXPECT_TRUE(poincare_pairing_check(H.to_algebra())) << name;
  }
  for (const auto& name : {"flag9", "torus7", "simplex(3)"})
    EXPECT_FALSE(pairing_holds(HochsterRing<Rationals>(zoo(name)))) << name;
}

// A cone point only adds a disc factor, so the ring of a cone is that of its base.
TEST(PairingTest, ConesInheritTheBaseRing) {
  for (const auto& name : {"pentagon", "O6"}) {
    HochsterRing<Rationals> C(zoo(std::string("cone(") + name + ")")), B(zoo(name));
    EXPECT_EQ(C.fingerprint(), B.fingerprint()) << name;
    EXPECT_TRUE(poincare_pairing_check(C)) << name;
    EXPECT_FALSE(is_gorenstein_star(zoo(std::string("cone(") + name + ")"), Coefficients::rationals()).value);
  }
}

TEST(H3Test, TripleEquality) {
  EXPECT_EQ(rank_h3_invariant(zoo("O6")), 3);
  EXPECT_EQ(rank_h3_invariant(zoo("T4")), 0);
  EXPECT_EQ(rank_h3_invariant(zoo("I12")), 36);
  for (const auto& name : {"B5", "B7", "bipyramid(8)", "connected_sum(O6,I12)"}) {
    const auto K = zoo(name);
    const long long m = K.vertex_count();
    EXPECT_EQ(rank_h3_invariant(K), m * (m - 1) / 2 - (3 * m - 6)) << name;
    EXPECT_EQ(HochsterRing<Rationals>(K).hilbert()[3], rank_h3_invariant(K)) << name;
  }
  EXPECT_THROW(rank_h3_invariant(zoo("torus7")), Error);
}

TEST(LbcTest, Examples) {
  auto o = lbc_report(zoo("O6"));
  EXPECT_TRUE(o.holds && o.tight);
  EXPECT_EQ(o.bound, 12);
  auto i = lbc_report(zoo("I12"));
  EXPECT_TRUE(i.holds && i.tight);
  EXPECT_EQ(i.edges, 30);
  EXPECT_TRUE(lbc_check(zoo("bd(4)")));
  EXPECT_FALSE(lbc_report(zoo("flag9")).applicable);
  EXPECT_FALSE(lbc_check(zoo("flag9")));
}

TEST(GenerationTest, FlagSpheresAreGenerated) {
  for (const auto& name : {"O6", "I12", "B7", "bipyramid(8)", "bd(3)"}) {
    auto r = generation_by_degree_one(HochsterRing<Rationals>(zoo(name)));
    EXPECT_TRUE(r.degree_one_generated) << name;
    EXPECT_FALSE(r.failing_subset.has_value());
  }
}

TEST(GenerationTest, NineVertexFixtureFails) {
  auto K = zoo("flag9");
  auto r = generation_by_degree_one(HochsterRing<Rationals>(K));
  EXPECT_FALSE(r.degree_one_generated);
  ASSERT_TRUE(r.failing_subset.has_value());
  EXPECT_EQ(*r.failing_subset, VertexSet::full(9));
  EXPECT_EQ(r.failing_rank, 0);
  auto sweep = partition_sweep(K);
  EXPECT_EQ(sweep.divisions, 255);  // (2⁹ − 2) / 2
  EXPECT_EQ(sweep.both_connected_components, 0);
}

TEST(ReportTest, JsonSchema) {
  auto j = nlohmann::json::parse(complex_report_json(zoo("square"), Coefficients::integers()));
  for (const char* key : {"m", "dim", "betti", "torsion", "bigraded", "checks"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["m"], 4);
  EXPECT_EQ(j["betti"], nlohmann::json({1, 0, 0, 2, 0, 0, 1}));
  EXPECT_EQ(j["bigraded"].size(), 3u);
  EXPECT_EQ(j["checks"]["gorenstein"], true);
  EXPECT_EQ(j["checks"]["flag"], true);
  EXPECT_EQ(j["checks"]["poincare_pairing"], true);
  EXPECT_EQ(complex_report_json(zoo("I12"), Coefficients::integers(), 1),
            complex_report_json(zoo("I12"), Coefficients::integers(), 3));
}
