#pragma once

// Maass relations among the coefficients of a truncated degree-2 expansion.
// An instance whose terms would leave the box is skipped and counted, never
// evaluated with guessed zeros. Terms at non-integral arguments or outside X
// are zero by convention.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sk/arith.hpp"
#include "sk/siegel.hpp"

namespace sk {

struct Violation {
  std::string relation;  // classical, symmetric, plocal or singular
  HalfIntegralIndex t;
  std::int64_t l = 1;
  Scalar left;
  Scalar right;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct RelationReport {
  std::vector<Violation> violations;
  std::int64_t skipped = 0;

  bool verdict() const { return violations.empty(); }

  void sort() {
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
      return std::tie(a.relation, a.l, a.t) < std::tie(b.relation, b.l, b.t);
    });
  }

  RelationReport& merge(RelationReport other) {
    for (auto& v : other.violations) violations.push_back(std::move(v));
    skipped += other.skipped;
    sort();
    return *this;
  }

  friend bool operator==(const RelationReport&, const RelationReport&) = default;
};

namespace detail {

// Accumulates one side of a relation; goes invalid once a term leaves the box
// or lands on A(0,0,0), which is not part of the data.
class TermSum {
 public:
  explicit TermSum(const SiegelExpansion& F) : F_(F) {}

  void add(const Scalar& weight, std::int64_t n, std::int64_t r, std::int64_t m) {
    if (!valid_ || weight.is_zero()) return;
    if (n < 0 || m < 0 || 4 * n * m - r * r < 0) return;
    if ((n == 0 && r == 0 && m == 0) || !F_.in_box(n, m)) {
      valid_ = false;
      return;
    }
    sum_ += weight * F_.at(n, r, m);
  }

  bool valid() const { return valid_; }
  const Scalar& value() const { return sum_; }

 private:
  const SiegelExpansion& F_;
  Scalar sum_;
  bool valid_ = true;
};

inline Scalar twisted_power(const SiegelExpansion& F, std::int64_t d) { return F.chi_at(d) * rpow(d, F.weight() - 1); }

// Records the instance unless one side was out of region.
inline void settle(RelationReport& report, const char* id, HalfIntegralIndex t, std::int64_t l, const TermSum& lhs, const TermSum& rhs) {
  if (!lhs.valid() || !rhs.valid()) {
    ++report.skipped;
    return;
  }
  if (!(lhs.value() == rhs.value())) report.violations.push_back({id, t, l, lhs.value(), rhs.value()});
}

}  // namespace detail

// A(n,r,m) = sum_{d | (n,r,m)} d^{k-1} chi(d) A(nm/d^2, r/d, 1) for T in X*.
inline RelationReport check_classical(const SiegelExpansion& F) {
  RelationReport report;
  F.for_each([&](const HalfIntegralIndex& t, const Scalar&) {
    detail::TermSum lhs(F), rhs(F);
    lhs.add(Scalar(1), t.n, t.r, t.m);
    for (auto d : divisors(gcd(t.n, t.r, t.m))) rhs.add(detail::twisted_power(F, d), t.n * t.m / (d * d), t.r / d, 1);
    detail::settle(report, "classical", t, 1, lhs, rhs);
  });
  report.sort();
  return report;
}

// sum_{d | (n,r,l)} d^{k-1} chi(d) A(nl/d^2, r/d, m) = sum_{d | (l,r,m)} d^{k-1} chi(d) A(n, r/d, ml/d^2)
inline RelationReport check_symmetric(const SiegelExpansion& F, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("check_symmetric needs l >= 1");
  RelationReport report;
  for (std::int64_t m = 0; m <= F.m_max(); ++m)
    for (std::int64_t n = 0; n <= F.n_max(); ++n) {
      const auto R = isqrt(4 * n * m * l);
      for (std::int64_t r = -R; r <= R; ++r) {
        if (n == 0 && r == 0 && m == 0) continue;
        detail::TermSum lhs(F), rhs(F);
        for (auto d : divisors(gcd(n, r, l))) lhs.add(detail::twisted_power(F, d), n * l / (d * d), r / d, m);
        for (auto d : divisors(gcd(l, r, m))) rhs.add(detail::twisted_power(F, d), n, r / d, m * l / (d * d));
        detail::settle(report, "symmetric", {n, r, m}, l, lhs, rhs);
      }
    }
  report.sort();
  return report;
}

// A(np,r,m) + p^{k-1} chi(p) A(n/p, r/p, m) = A(n,r,pm) + p^{k-1} chi(p) A(n, r/p, m/p)
inline RelationReport check_p_relations(const SiegelExpansion& F, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("check_p_relations needs a prime, got " + std::to_string(p));
  RelationReport report;
  const Scalar w = detail::twisted_power(F, p);
  for (std::int64_t m = 0; m <= F.m_max(); ++m)
    for (std::int64_t n = 0; n <= F.n_max(); ++n) {
      const auto R = isqrt(4 * n * m * p);
      for (std::int64_t r = -R; r <= R; ++r) {
        if (n == 0 && r == 0 && m == 0) continue;
        detail::TermSum lhs(F), rhs(F);
        lhs.add(Scalar(1), n * p, r, m);
        if (n % p == 0 && r % p == 0) lhs.add(w, n / p, r / p, m);
        rhs.add(Scalar(1), n, r, p * m);
        if (r % p == 0 && m % p == 0) rhs.add(w, n, r / p, m / p);
        detail::settle(report, "plocal", {n, r, m}, p, lhs, rhs);
      }
    }
  report.sort();
  return report;
}

// A(l,0,0) = (sum_{d | l} d^{k-1} chi(d)) A(1,0,0) for 1 <= l <= n_max.
inline RelationReport check_singular_law(const SiegelExpansion& F) {
  RelationReport report;
  if (F.n_max() < 1) return report;
  const Scalar a1 = F.at(1, 0, 0);
  for (std::int64_t l = 1; l <= F.n_max(); ++l) {
    Scalar factor;
    for (auto d : divisors(l)) factor += detail::twisted_power(F, d);
    auto left = F.at(l, 0, 0);
    auto right = factor * a1;
    if (!(left == right)) report.violations.push_back({"singular", {l, 0, 0}, l, left, right});
  }
  report.sort();
  return report;
}

// Symmetric relations at every prime in primes, plus the singular law.
inline RelationReport is_maass(const SiegelExpansion& F, const std::vector<std::int64_t>& primes) {
  RelationReport report = check_singular_law(F);
  for (auto p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("is_maass: " + std::to_string(p) + " is not prime");
    report.merge(check_symmetric(F, p));
  }
  return report;
}

// Primes up to max(n_max, m_max): enough for a conclusive in-box verdict.
inline std::vector<std::int64_t> primes_in_box(const SiegelExpansion& F) {
  return primes_up_to(std::max(F.n_max(), F.m_max()));
}

}  // namespace sk
