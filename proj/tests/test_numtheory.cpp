#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "sk/sk.hpp"

using namespace sk;

TEST(Arith, DivisorsAndSigma) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors_coprime_to(12, 2), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(divisor_sigma(3, 2), Integer(9));
  EXPECT_EQ(divisor_sigma(0, 12), Integer(6));
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(mod(-7, 4), 1);
}

TEST(Arith, MobiusIsMultiplicativeInverseOfOne) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += mobius(d);
    EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
  }
}

TEST(Arith, FactorizeRoundTrips) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::int64_t n = static_cast<std::int64_t>(rng() % 100000) + 1;
    std::int64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      for (int j = 0; j < e; ++j) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Arith, KroneckerMatchesEulerCriterion) {
  for (std::int64_t D = -60; D <= 60; ++D)
    for (std::int64_t n = -30; n <= 60; ++n) EXPECT_EQ(kronecker_symbol(D, n), oracle::kronecker(D, n)) << D << " " << n;
}

TEST(Arith, KroneckerIsCompletelyMultiplicativeInN) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t D = static_cast<std::int64_t>(rng() % 401) - 200;
    std::int64_t a = static_cast<std::int64_t>(rng() % 60) + 1, b = static_cast<std::int64_t>(rng() % 60) + 1;
    EXPECT_EQ(kronecker_symbol(D, a * b), kronecker_symbol(D, a) * kronecker_symbol(D, b));
  }
}

TEST(Arith, FundamentalDecomposition) {
  EXPECT_TRUE(is_fundamental_discriminant(-4));
  EXPECT_TRUE(is_fundamental_discriminant(5));
  EXPECT_FALSE(is_fundamental_discriminant(-12 * 4));
  EXPECT_TRUE(is_fundamental_discriminant(1));
  EXPECT_FALSE(is_fundamental_discriminant(-3 * 4));
  for (std::int64_t s = -400; s <= 400; ++s) {
    if (s == 0 || (mod(s, 4) != 0 && mod(s, 4) != 1)) continue;
    auto [D, f] = fundamental_decomposition(s);
    EXPECT_EQ(D * f * f, s);
    EXPECT_TRUE(D == 1 || is_fundamental_discriminant(D)) << s;
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(rpow(2, -3), make_rational(1, 8));
}

TEST(Scalar, RootsOfUnityAndConjugation) {
  auto i = Scalar::root_of_unity(1, 4);
  EXPECT_EQ(i * i, Scalar(-1));
  EXPECT_EQ(i * i.conj(), Scalar(1));
  auto w = Scalar::root_of_unity(1, 3);
  EXPECT_EQ(Scalar(1) + w + w * w, Scalar(0));
  EXPECT_EQ(Scalar::root_of_unity(2, 4), Scalar(-1));
  EXPECT_EQ(Scalar::root_of_unity(3, 6), Scalar(-1));
}

TEST(Scalar, RingAxiomsAcrossOrders) {
  std::mt19937_64 rng(42);
  auto random_scalar = [&](std::int64_t M) {
    std::vector<Rational> c(static_cast<std::size_t>(M));
    for (auto& x : c) x = make_rational(static_cast<std::int64_t>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 3) + 1);
    return Scalar::from_coords(M, c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t M1 = static_cast<std::int64_t>(rng() % 12) + 1, M2 = static_cast<std::int64_t>(rng() % 12) + 1;
    auto a = random_scalar(M1), b = random_scalar(M2), c = random_scalar(M1);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, Scalar(0));
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    auto back = (a * b).restrict_to(lcm(M1, M2));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, a * b);
    EXPECT_EQ(Scalar::parse(a.coords_string()), a);
  }
}

TEST(Scalar, RestrictRejectsValuesOutsideTheSubfield) {
  auto i = Scalar::root_of_unity(1, 4);
  EXPECT_FALSE(i.restrict_to(1).has_value());
  EXPECT_FALSE(i.restrict_to(3).has_value());
  auto s = Scalar::root_of_unity(1, 8) + Scalar::root_of_unity(7, 8);  // sqrt 2
  EXPECT_FALSE(s.restrict_to(4).has_value());
  EXPECT_EQ(*(i * i).restrict_to(1), Scalar(-1));
}

TEST(Bernoulli, ClassicalValues) {
  auto triv = DirichletCharacter::trivial();
  EXPECT_EQ(generalized_bernoulli(0, triv), Scalar(1));
  EXPECT_EQ(generalized_bernoulli(1, triv), Scalar(make_rational(1, 2)));
  EXPECT_EQ(generalized_bernoulli(2, triv), Scalar(make_rational(1, 6)));
  EXPECT_EQ(generalized_bernoulli(12, triv), Scalar(make_rational(-691, 2730)));
  EXPECT_EQ(generalized_bernoulli(1, DirichletCharacter::kronecker(-4)), Scalar(make_rational(-1, 2)));
  EXPECT_EQ(generalized_bernoulli(1, DirichletCharacter::kronecker(-3)), Scalar(make_rational(-1, 3)));
}

TEST(Bernoulli, MatchesBernoulliPolynomialOracle) {
  std::vector<DirichletCharacter> chars{DirichletCharacter::trivial(), DirichletCharacter::kronecker(-4),
                                        DirichletCharacter::kronecker(5), DirichletCharacter::kronecker(-7),
                                        DirichletCharacter::kronecker(12),
                                        DirichletCharacter::parse("table:0,zeta^0/1,zeta^1/4,zeta^3/4,zeta^1/2"),
                                        DirichletCharacter::parse("table:0,zeta^0/1,zeta^1/3,zeta^1/6,zeta^2/3,zeta^5/6,zeta^1/2")};
  for (const auto& chi : chars)
    for (std::int64_t n = 0; n <= 12; ++n) EXPECT_EQ(generalized_bernoulli(n, chi), oracle::generalized_bernoulli(n, chi)) << chi.spec() << " n=" << n;
}

TEST(Bernoulli, OddCharactersHaveVanishingEvenIndex) {
  auto chi = DirichletCharacter::kronecker(-8);
  for (std::int64_t n = 2; n <= 10; n += 2) EXPECT_TRUE(generalized_bernoulli(n, chi).is_zero());
}

TEST(Cohen, HurwitzValues) {
  EXPECT_EQ(cohen_h(1, 0), make_rational(-1, 12));
  EXPECT_EQ(cohen_h(1, 3), make_rational(1, 3));
  EXPECT_EQ(cohen_h(1, 4), make_rational(1, 2));
  EXPECT_EQ(cohen_h(1, 12), make_rational(4, 3));
  EXPECT_EQ(cohen_h(1, 1), Rational(0));
  EXPECT_EQ(cohen_h(2, 0), make_rational(1, 120));
  EXPECT_EQ(cohen_h(2, 2), Rational(0));
  EXPECT_THROW(cohen_h(0, 3), std::domain_error);
}

TEST(Cohen, MatchesReducedFormCount) {
  for (std::int64_t N = 1; N <= 200; ++N) {
    if (mod(-N, 4) != 0 && mod(-N, 4) != 1) continue;
    EXPECT_EQ(cohen_h(1, N), oracle::hurwitz_class_number(N)) << N;
  }
}

class CacheDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("skcache_test_" + std::to_string(::getpid()) + "_" +
                                                     ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheDir, PersistsAndReloads) {
  {
    CohenCache cache(dir_);
    EXPECT_EQ(cache.get(1, 12), make_rational(4, 3));
    EXPECT_EQ(cache.get(1, 12), make_rational(4, 3));
    EXPECT_EQ(cache.size(), 1u);
  }
  CohenCache again(dir_);
  EXPECT_EQ(again.size(), 1u);
  std::ifstream in(again.file());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "H 1 12 4/3");
}

TEST_F(CacheDir, RejectsConflictingDuplicates) {
  std::filesystem::create_directories(dir_);
  std::ofstream(dir_ / "cohen_h.txt") << "H 1 3 1/3\nH 1 3 1/2\n";
  EXPECT_THROW(CohenCache{dir_}, std::runtime_error);
}

TEST_F(CacheDir, RejectsMalformedRecords) {
  std::filesystem::create_directories(dir_);
  std::ofstream(dir_ / "cohen_h.txt") << "H 1 three 1/3\n";
  EXPECT_THROW(CohenCache{dir_}, std::runtime_error);
}

TEST_F(CacheDir, ConcurrentReadersAgree) {
  CohenCache cache(dir_);
  std::vector<std::thread> pool;
  std::vector<Rational> results(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      for (std::int64_t N = 0; N <= 40; ++N) results[static_cast<std::size_t>(t)] += cache.get(3, N);
    });
  for (auto& th : pool) th.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
  CohenCache reloaded(dir_);
  EXPECT_EQ(reloaded.size(), 41u);
}
