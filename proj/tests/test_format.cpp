#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "sk/sk.hpp"

using namespace sk;

namespace {

template <class T, class W, class R>
T round_trip(const T& x, W write, R read) {
  std::stringstream buf;
  write(buf, x);
  return read(buf);
}

JacobiExpansion parse_skjf(const std::string& text) {
  std::istringstream in(text);
  return read_skjf(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse_skjf(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Format, SkjfRoundTripRandom) {
  std::mt19937_64 rng(31);
  std::vector<std::pair<std::int64_t, DirichletCharacter>> spaces{
      {1, DirichletCharacter::trivial()},
      {4, DirichletCharacter::kronecker(-4)},
      {5, DirichletCharacter::parse("table:0,zeta^0/1,zeta^1/4,zeta^3/4,zeta^1/2")},
      {7, DirichletCharacter::parse("table:0,zeta^0/1,zeta^1/3,zeta^1/6,zeta^2/3,zeta^5/6,zeta^1/2")}};
  for (int trial = 0; trial < 40; ++trial) {
    const auto& [N, chi] = spaces[static_cast<std::size_t>(trial) % spaces.size()];
    std::int64_t k = chi.value(-1) == Scalar(1) ? 10 : 11;
    std::int64_t m = static_cast<std::int64_t>(rng() % 3);
    JacobiExpansion phi(k, m, N, chi, static_cast<std::int64_t>(rng() % 6));
    const auto M = chi.ring_order();
    phi.for_each([&](std::int64_t n, std::int64_t r, const Scalar&) {
      std::vector<Rational> c(static_cast<std::size_t>(M));
      for (auto& x : c) x = make_rational(static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 5) + 1);
      phi.set(n, r, Scalar::from_coords(M, c));
    });
    EXPECT_EQ(round_trip(phi, write_skjf, read_skjf), phi);
  }
}

TEST(Format, SkjfShape) {
  std::stringstream buf;
  write_skjf(buf, builtin_form("E4_1", 1));
  EXPECT_EQ(buf.str(),
            "SKJF 1\nk=4 m=1 N=1 chi=trivial nmax=1 cusp=0\n0 0 1/1\n1 -2 1/1\n1 -1 56/1\n1 0 126/1\n1 1 56/1\n1 2 1/1\n");
}

TEST(Format, SkjfErrorsCarryLineNumbers) {
  const std::string head = "SKJF 1\nk=10 m=1 N=1 chi=trivial nmax=0 cusp=0\n";
  EXPECT_EQ(error_line("SKJF 2\n"), 1u);
  EXPECT_EQ(error_line("SKJF 1\nk=10 m=1 N=1 chi=bogus nmax=0 cusp=0\n"), 2u);
  EXPECT_EQ(error_line("SKJF 1\nk=10 m=1 N=1 nmax=0 cusp=0\n"), 2u);
  EXPECT_EQ(error_line(head + "0 0 1/1\n0 0 1/1\n"), 4u);   // duplicate
  EXPECT_EQ(error_line(head + "0 1 1/1\n"), 3u);            // outside support
  EXPECT_EQ(error_line(head + "1 0 1/1\n"), 3u);            // beyond nmax
  EXPECT_EQ(error_line(head + "0 0 x\n"), 3u);              // bad value
  EXPECT_NE(error_line(head), 0u);                          // missing c(0,0)
  EXPECT_EQ(error_line(head + "0 0 1/1\n"), 0u);
}

TEST(Format, SkjfRejectsValuesOutsideTheCharacterRing) {
  const std::string text = "SKJF 1\nk=10 m=0 N=1 chi=trivial nmax=0 cusp=0\n0 0 0/1,1/1,0/1,0/1\n";
  EXPECT_THROW(parse_skjf(text), ParseError);
}

TEST(Format, SksfRoundTrip) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto F = corpus::random_supported(rng, 10 + 2 * (trial % 2), 1 + trial % 4, 1 + trial % 3);
    EXPECT_EQ(round_trip(F, write_sksf, read_sksf), F);
  }
  std::ifstream file(std::string(SK_TEST_DATA) + "/random_level5_order4.skjf");
  auto F = lift(read_skjf(file), 3);
  EXPECT_EQ(round_trip(F, write_sksf, read_sksf), F);
}

TEST(Format, SksfErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_sksf(in);
  };
  const std::string head = "SKSF 1\nk=10 N=1 chi=trivial nmax=1 mmax=1 cusp=0\n";
  EXPECT_THROW(parse(head + "0 0 0 1/1\n"), ParseError);
  EXPECT_THROW(parse(head + "2 0 1 1/1\n"), ParseError);
  EXPECT_THROW(parse(head + "1 3 1 1/1\n"), ParseError);
  EXPECT_THROW(parse(head + "1 0 0 1/1\n"), ParseError);  // incomplete
}

TEST(Format, ReportRoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto F = corpus::random_supported(rng, 10, 3, 3);
    auto report = check_classical(F);
    report.merge(check_p_relations(F, 2));
    EXPECT_EQ(round_trip(report, write_report, read_report), report);
  }
  RelationReport empty;
  empty.skipped = 5;
  std::stringstream buf;
  write_report(buf, empty);
  EXPECT_EQ(buf.str(), "VERDICT=true\nSKIPPED=5\n");
  EXPECT_EQ(round_trip(empty, write_report, read_report), empty);
}

TEST(Format, ReportWithCyclotomicValues) {
  RelationReport report;
  report.violations.push_back({"plocal", {1, 1, 1}, 2, Scalar::root_of_unity(1, 4), Scalar(make_rational(3, 2))});
  std::stringstream buf;
  write_report(buf, report);
  EXPECT_EQ(buf.str(), "VERDICT=false\nREL=plocal T=(1,1,1) l=2 L=0/1,1/1,0/1,0/1 R=3/2\nSKIPPED=0\n");
  EXPECT_EQ(read_report(buf), report);
}

TEST(Format, ReportRejectsInconsistentVerdict) {
  std::istringstream in("VERDICT=true\nREL=classical T=(1,0,1) l=1 L=1/1 R=2/1\nSKIPPED=0\n");
  EXPECT_THROW(read_report(in), ParseError);
}
