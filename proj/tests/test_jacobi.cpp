#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "sk/sk.hpp"

using namespace sk;

namespace {

JacobiExpansion load(const std::string& name) {
  std::ifstream in(std::string(SK_TEST_DATA) + "/" + name);
  return read_skjf(in);
}

JacobiExpansion random_form(std::mt19937_64& rng, std::int64_t k, std::int64_t m, std::int64_t N, const DirichletCharacter& chi,
                            std::int64_t n_max) {
  JacobiExpansion phi(k, m, N, chi, n_max);
  const auto M = chi.ring_order();
  phi.for_each([&](std::int64_t n, std::int64_t r, const Scalar&) {
    std::vector<Rational> c(static_cast<std::size_t>(M));
    for (auto& x : c) x = static_cast<long>(rng() % 13) - 6;
    phi.set(n, r, Scalar::from_coords(M, c));
  });
  return phi;
}

// Sum_{d | (m,n), (d,N)=1} d V0(d,d) V0(mn/d^2) phi, truncated to n_max.
JacobiExpansion core_rhs(const JacobiExpansion& phi, std::int64_t m, std::int64_t n, std::int64_t n_max) {
  std::optional<JacobiExpansion> out;
  for (auto d : divisors_coprime_to(gcd(m, n), phi.level())) {
    auto term = v_diag(index_shift_v0(phi, m * n / (d * d)), d);
    term *= Scalar(d);
    term = term.truncated(n_max);
    if (out)
      *out += term;
    else
      out = term;
  }
  return *out;
}

}  // namespace

TEST(Jacobi, SupportAndTruncation) {
  JacobiExpansion phi(10, 1, 1, DirichletCharacter::trivial(), 3, true);
  EXPECT_EQ(phi.at(1, 5), Scalar(0));
  EXPECT_THROW(phi.at(4, 0), OutOfRegionError);
  EXPECT_THROW(phi.set(1, 3, Scalar(1)), std::invalid_argument);
  EXPECT_THROW(phi.set(1, 2, Scalar(1)), std::invalid_argument);  // cusp boundary
  EXPECT_THROW(phi.set(0, 0, Scalar(1)), std::invalid_argument);
  phi.set(1, 1, Scalar(5));
  EXPECT_EQ(phi.at(1, 1), Scalar(5));
}

TEST(Jacobi, E41KnownCoefficients) {
  auto e = builtin_form("E4_1", 3);
  EXPECT_EQ(e.at(0, 0), Scalar(1));
  EXPECT_EQ(e.at(1, 0), Scalar(126));
  EXPECT_EQ(e.at(1, 1), Scalar(56));
  EXPECT_EQ(e.at(1, 2), Scalar(1));
  EXPECT_EQ(e.at(1, -2), Scalar(1));
}

TEST(Jacobi, E61KnownCoefficients) {
  auto e = builtin_form("E6_1", 2);
  EXPECT_EQ(e.at(1, 0), Scalar(-330));
  EXPECT_EQ(e.at(1, 1), Scalar(-88));
  EXPECT_EQ(e.at(1, 2), Scalar(1));
}

TEST(Jacobi, E41MatchesE8ThetaSeries) {
  auto expected = oracle::to_jacobi(oracle::e41_theta(4), 4, 1);
  EXPECT_EQ(builtin_form("E4_1", 4), expected);
}

TEST(Jacobi, Phi10MatchesProductFormula) {
  auto expected = oracle::to_jacobi(oracle::phi10(12), 10, 1).with_cusp(true);
  EXPECT_EQ(builtin_form("phi10_1", 12), expected);
}

TEST(Jacobi, Phi12MatchesWeierstrassFormula) {
  auto expected = oracle::to_jacobi(oracle::phi12(10), 12, 1).with_cusp(true);
  auto phi = builtin_form("phi12_1", 10);
  EXPECT_EQ(phi, expected);
  EXPECT_EQ(phi.at(1, 0), Scalar(10));
  EXPECT_EQ(phi.at(1, 1), Scalar(1));
}

TEST(Jacobi, E61SatisfiesPhi10Relation) {
  // E6_1 E4 = E4_1 E6 - 144 phi10, with phi10 from its product formula
  const std::int64_t n_max = 8;
  auto lhs = mul_elliptic(builtin_form("E6_1", n_max), builtin_form("E4", n_max));
  auto phi10 = oracle::to_jacobi(oracle::phi10(n_max), 10, 1);
  auto rhs = mul_elliptic(builtin_form("E4_1", n_max), builtin_form("E6", n_max)) - Scalar(144) * phi10;
  EXPECT_EQ(lhs, rhs);
}

TEST(Jacobi, DeltaMatchesEisensteinDifference) {
  const std::int64_t n_max = 20;
  auto e4 = builtin_form("E4", n_max), e6 = builtin_form("E6", n_max);
  auto d = builtin_form("Delta", n_max);
  JacobiExpansion e4sq = mul_elliptic(e4, e4);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    Rational e4cube = 0, e6sq = 0;
    for (std::int64_t i = 0; i <= n; ++i) {
      e4cube += e4sq.at(i, 0).rational() * e4.at(n - i, 0).rational();
      e6sq += e6.at(i, 0).rational() * e6.at(n - i, 0).rational();
    }
    EXPECT_EQ(d.at(n, 0), Scalar((e4cube - e6sq) / 1728)) << n;
  }
  EXPECT_EQ(d.at(2, 0), Scalar(-24));
  EXPECT_EQ(d.at(3, 0), Scalar(252));
}

TEST(Jacobi, IndexOneFormsDependOnDiscriminant) {
  for (const auto& name : {"E4_1", "E6_1", "phi10_1", "phi12_1"}) {
    auto phi = builtin_form(name, 12);
    phi.for_each([&](std::int64_t n, std::int64_t r, const Scalar& c) {
      auto D = 4 * n - r * r;
      // (n + r + 1, r + 2) has the same discriminant
      if (n + r + 1 <= phi.n_max()) EXPECT_EQ(phi.at(n + r + 1, r + 2), c) << name << " D=" << D;
    });
  }
}

TEST(Jacobi, EisensteinCoefficientsAreIntegral) {
  for (const auto& name : {"E4_1", "E6_1"}) {
    auto phi = builtin_form(name, 40);
    phi.for_each([&](std::int64_t, std::int64_t, const Scalar& c) { EXPECT_TRUE(is_integer(c.rational())); });
  }
}

TEST(Jacobi, UnknownBuiltinThrows) { EXPECT_THROW(builtin_form("E8_1", 3), std::invalid_argument); }

TEST(Jacobi, IndexShiftIdentityAndPreconditions) {
  auto phi = builtin_form("phi10_1", 10);
  EXPECT_EQ(index_shift(phi, 1), phi);
  EXPECT_THROW(index_shift(phi, 0), std::invalid_argument);
  EXPECT_THROW(index_shift(phi.truncated(2), 3), OutOfRegionError);
  auto v2 = index_shift(phi, 2);
  EXPECT_EQ(v2.index(), 2);
  EXPECT_EQ(v2.n_max(), 5);
  // c'(1,0) = c(2,0) + 2^9 c(0,0) at l = 2 with c(0,0) = 0
  EXPECT_EQ(v2.at(1, 0), phi.at(2, 0));
  EXPECT_EQ(v2.at(2, 2), phi.at(4, 2) + Scalar(512) * phi.at(1, 1));
}

TEST(Jacobi, IndexShiftMatchesCosetOracle) {
  std::vector<JacobiExpansion> forms{builtin_form("phi10_1", 24), builtin_form("E4_1", 24), load("phi10_level4.skjf"),
                                     load("random_level4_chi4.skjf"), load("random_level5_order4.skjf")};
  for (const auto& phi : forms)
    for (std::int64_t l = 1; l <= 6; ++l)
      EXPECT_EQ(index_shift(phi, l), index_shift_oracle(phi, l)) << phi.character().spec() << " l=" << l;
}

TEST(Jacobi, IndexShiftOracleOnRandomForms) {
  std::mt19937_64 rng(101);
  std::vector<std::pair<std::int64_t, DirichletCharacter>> spaces{
      {1, DirichletCharacter::trivial()}, {3, DirichletCharacter::kronecker(-3)}, {6, DirichletCharacter::kronecker(-3)},
      {7, DirichletCharacter::parse("table:0,zeta^0/1,zeta^1/3,zeta^1/6,zeta^2/3,zeta^5/6,zeta^1/2")}};
  for (const auto& [N, chi] : spaces) {
    const std::int64_t k = chi.value(-1) == Scalar(1) ? 4 : 5;
    for (std::int64_t m : {1, 2}) {
      auto phi = random_form(rng, k, m, N, chi, 12);
      for (std::int64_t l = 1; l <= 4; ++l) EXPECT_EQ(index_shift(phi, l), index_shift_oracle(phi, l)) << N << " m=" << m << " l=" << l;
    }
  }
}

TEST(Jacobi, OperatorIdentityOnFiles) {
  for (const auto& name : {"phi10_level4.skjf", "random_level4_chi4.skjf", "random_level5_order4.skjf"}) {
    auto phi = load(name);
    for (std::int64_t m = 1; m <= 3; ++m)
      for (std::int64_t n = 1; n <= 3; ++n) {
        auto lhs = index_shift_v0(index_shift_v0(phi, n), m);
        EXPECT_EQ(lhs, core_rhs(phi, m, n, lhs.n_max())) << name << " m=" << m << " n=" << n;
      }
  }
}

TEST(Jacobi, VDiagComposes) {
  std::mt19937_64 rng(7);
  auto chi = DirichletCharacter::kronecker(-4);
  auto phi = random_form(rng, 5, 1, 4, chi, 8);
  EXPECT_EQ(v_diag(v_diag(phi, 3), 5), v_diag(phi, 15));
  EXPECT_EQ(v_diag(phi, 1), phi);
  EXPECT_THROW(v_diag(phi, 2), std::invalid_argument);
}

TEST(Jacobi, ArithmeticTruncatesToCommonRegion) {
  auto a = builtin_form("phi10_1", 10), b = builtin_form("phi10_1", 6);
  auto s = a + b;
  EXPECT_EQ(s.n_max(), 6);
  EXPECT_EQ(s.at(2, 1), Scalar(2) * b.at(2, 1));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_THROW(a + builtin_form("phi12_1", 6), std::invalid_argument);
}
