#include <gtest/gtest.h>

#include <random>

#include "hochster/coefficients.hpp"
#include "hochster/errors.hpp"
#include "hochster/linalg.hpp"
#include "hochster/rational.hpp"
#include "hochster/smith.hpp"

using namespace hochster;

namespace {

IntMatrix int_matrix(std::vector<std::vector<long>> rows) {
  IntMatrix M = IntMatrix::zeros(Integers{}, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M(i, j) = rows[i][j];
  return M;
}

template <class R>
Matrix<R> field_matrix(const R& F, std::vector<std::vector<long long>> rows) {
  Matrix<R> M = Matrix<R>::zeros(F, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M(i, j) = F.from_int(rows[i][j]);
  return M;
}

std::vector<mpz_class> factors(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Random unimodular matrix as a product of elementary operations.
IntMatrix random_unimodular(int n, std::mt19937& rng) {
  IntMatrix U = IntMatrix::identity(Integers{}, n);
  std::uniform_int_distribution<int> idx(0, n - 1), c(-3, 3);
  for (int s = 0; s < 4 * n; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const mpz_class k = c(rng);
    for (int col = 0; col < n; ++col) U(i, col) += k * U(j, col);
  }
  return U;
}

}  // namespace

TEST(RationalTest, Arithmetic) {
  Rational a(1, 3), b(-2, 6);
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ(a * Rational(3), Rational(1));
  EXPECT_EQ((a / Rational(2, 3)).to_string(), "1/2");
  EXPECT_EQ(Rational(4, -6).to_string(), "-2/3");
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(RationalTest, OverflowPromotesToBigValues) {
  Rational x(1LL << 62);
  Rational y = x * x * x;
  EXPECT_FALSE(y.is_small());
  EXPECT_EQ(y / x / x, x);
  EXPECT_TRUE(((y - y)).is_zero());
}

TEST(PrimeFieldTest, InversesAndPrimality) {
  PrimeField F{7};
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  EXPECT_TRUE(is_prime(32003));
  EXPECT_FALSE(is_prime(32001));
  EXPECT_THROW(Coefficients::parse("fp:6"), Error);
  EXPECT_EQ(Coefficients::parse("fp:5"), Coefficients::prime(5));
  EXPECT_EQ(Coefficients::parse("q"), Coefficients::rationals());
  EXPECT_EQ(Coefficients::parse("z"), Coefficients::integers());
  EXPECT_THROW(Coefficients::parse("r"), Error);
}

TEST(SmithTest, Examples) {
  auto Z = smith_normal_form(IntMatrix::zeros(Integers{}, 3, 2));
  EXPECT_EQ(Z.rank, 0);
  EXPECT_TRUE(Z.invariant_factors.empty());
  auto D = smith_normal_form(int_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(D.invariant_factors, factors({1, 6}));
  auto I = smith_normal_form(IntMatrix::identity(Integers{}, 5));
  EXPECT_EQ(I.rank, 5);
  EXPECT_EQ(I.invariant_factors, factors({1, 1, 1, 1, 1}));
  auto T = smith_normal_form(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(T.invariant_factors, factors({2, 6, 12}));
}

TEST(SmithTest, TransformsReproduceDiagonal) {
  auto A = int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}, {1, 1, 1}});
  auto S = smith_normal_form(A, true);
  ASSERT_TRUE(S.U && S.V);
  Integers Z;
  auto D = multiply(Z, multiply(Z, *S.U, A), *S.V);
  EXPECT_EQ(D.data, smith_diagonal(S, A.rows, A.cols).data);
  EXPECT_EQ(multiply(Z, *S.U, *S.U_inv).data, IntMatrix::identity(Z, A.rows).data);
  EXPECT_EQ(multiply(Z, *S.V, *S.V_inv).data, IntMatrix::identity(Z, A.cols).data);
}

// Invariant factors do not change under unimodular pre- and post-multiplication.
TEST(SmithTest, UnimodularInvariance) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-5, 5);
  Integers Z;
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 2 + trial % 4, c = 2 + (trial / 4) % 4;
    IntMatrix A = IntMatrix::zeros(Z, r, c);
    for (auto& x : A.data) x = entry(rng);
    const auto base = smith_normal_form(A);
    for (std::size_t i = 1; i < base.invariant_factors.size(); ++i)
      EXPECT_EQ(base.invariant_factors[i] % base.invariant_factors[i - 1], 0);
    const auto moved = smith_normal_form(multiply(Z, multiply(Z, random_unimodular(r, rng), A), random_unimodular(c, rng)));
    EXPECT_EQ(moved.invariant_factors, base.invariant_factors);
  }
}

// rank over ℚ ≥ rank over 𝔽_p, with equality unless p divides an invariant factor.
TEST(SmithTest, RankAgainstPrimeFields) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  Integers Z;
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix A = IntMatrix::zeros(Z, 4, 5);
    for (auto& x : A.data) x = entry(rng) * (trial % 3 == 0 ? 2 : 1);
    const auto S = smith_normal_form(A);
    Matrix<Rationals> Q = Matrix<Rationals>::zeros(Rationals{}, 4, 5);
    for (std::size_t i = 0; i < A.data.size(); ++i) Q.data[i] = Rational(A.data[i].get_si());
    EXPECT_EQ(rank(Rationals{}, Q), S.rank);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      PrimeField F{p};
      Matrix<PrimeField> M = Matrix<PrimeField>::zeros(F, 4, 5);
      for (std::size_t i = 0; i < A.data.size(); ++i) M.data[i] = F.from_int(A.data[i].get_si());
      int divisible = 0;
      for (const auto& d : S.invariant_factors) divisible += d % p == 0;
      EXPECT_EQ(rank(F, M), S.rank - divisible);
    }
  }
}

TEST(FieldLinalgTest, RankKernelSolve) {
  Rationals Q;
  EXPECT_EQ(rank(Q, field_matrix(Q, {{1, 2}, {2, 4}})), 1);
  PrimeField F2{2};
  EXPECT_EQ(rank(F2, field_matrix(F2, {{1, 2}, {2, 4}})), 1);
  EXPECT_EQ(kernel_basis(Q, field_matrix(Q, {{1, 1, 1}})).size(), 2u);
  auto A = field_matrix(Q, {{1, 2}, {3, 4}});
  auto x = solve(Q, A, Vec<Rationals>{Rational(5), Rational(6)});
  EXPECT_EQ(apply(Q, A, x), (Vec<Rationals>{Rational(5), Rational(6)}));
  EXPECT_THROW(solve(Q, field_matrix(Q, {{1, 1}, {1, 1}}), Vec<Rationals>{Rational(0), Rational(1)}), Error);
  auto inv = inverse(Q, A);
  EXPECT_EQ(multiply(Q, A, inv).data, Matrix<Rationals>::identity(Q, 2).data);
}

TEST(FieldLinalgTest, QuotientCoordinates) {
  Rationals Q;
  // S = span(e1, e2), W = span(e1 + e2): one class, e1 ↦ 1, e2 ↦ −1.
  std::vector<Vec<Rationals>> space{{1, 0, 0}, {0, 1, 0}}, sub{{1, 1, 0}};
  auto B = quotient_coordinates(Q, 3, space, sub);
  ASSERT_EQ(B.size(), 1);
  EXPECT_EQ(B.coordinates(Q, B.representatives[0]), (Vec<Rationals>{Rational(1)}));
  EXPECT_TRUE(B.coordinates(Q, sub[0])[0].is_zero());
  const auto a = B.coordinates(Q, {1, 0, 0})[0], b = B.coordinates(Q, {0, 1, 0})[0];
  EXPECT_EQ(a + b, Rational(0));
}

TEST(IntegerSubquotientTest, TorsionRejected) {
  Integers Z;
  // ker(0) / im(2) on ℤ: ℤ/2.
  IntMatrix A = IntMatrix::zeros(Z, 0, 1), B = int_matrix({{2}});
  EXPECT_THROW(integer_subquotient(1, A, B), Error);
  auto free = integer_subquotient(2, IntMatrix::zeros(Z, 0, 2), int_matrix({{1}, {1}}));
  ASSERT_EQ(free.size(), 1);
  EXPECT_EQ(free.coordinates(Z, free.representatives[0]), (Vec<Integers>{mpz_class(1)}));
}
