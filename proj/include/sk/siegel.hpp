#pragma once

// Degree-2 Fourier expansions sum A(n, r, m) q1^n zeta^r q2^m over
// half-integral T = (n, r/2; r/2, m) >= 0, truncated to the box
// n <= n_max, m <= m_max, and the Saito-Kurokawa lift of index-1 Jacobi forms.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sk/character.hpp"
#include "sk/jacobi.hpp"
#include "sk/scalar.hpp"

namespace sk {

struct HalfIntegralIndex {
  std::int64_t n = 0, r = 0, m = 0;

  // T >= 0.
  bool in_x() const { return n >= 0 && m >= 0 && 4 * n * m - r * r >= 0; }
  bool in_x_star() const { return in_x() && !(n == 0 && r == 0 && m == 0); }
  bool in_x_plus() const { return n >= 0 && m >= 0 && 4 * n * m - r * r > 0; }

  friend auto operator<=>(const HalfIntegralIndex&, const HalfIntegralIndex&) = default;
};

class SiegelExpansion {
 public:
  SiegelExpansion(std::int64_t k, std::int64_t N, DirichletCharacter chi, std::int64_t n_max, std::int64_t m_max, bool cusp = false)
      : k_(k), N_(N), chi_(std::move(chi)), n_max_(n_max), m_max_(m_max), cusp_(cusp) {
    if (N < 1) throw std::invalid_argument("level must be positive");
    if (n_max < 0 || m_max < 0) throw std::invalid_argument("truncation bounds must be non-negative");
    if (N % chi_.modulus() != 0)
      throw std::invalid_argument("character modulus " + std::to_string(chi_.modulus()) + " does not divide level " + std::to_string(N));
    if (!parity_compatible(chi_, k))
      throw std::invalid_argument("character " + chi_.spec() + " violates chi(-1) = (-1)^k for k=" + std::to_string(k));
    cells_.resize(static_cast<std::size_t>((n_max + 1) * (m_max + 1)));
    for (std::int64_t m = 0; m <= m_max; ++m)
      for (std::int64_t n = 0; n <= n_max; ++n) cell(n, m).resize(static_cast<std::size_t>(2 * r_bound(n, m) + 1));
  }

  std::int64_t weight() const { return k_; }
  std::int64_t level() const { return N_; }
  const DirichletCharacter& character() const { return chi_; }
  std::int64_t n_max() const { return n_max_; }
  std::int64_t m_max() const { return m_max_; }
  bool cusp() const { return cusp_; }

  static std::int64_t r_bound(std::int64_t n, std::int64_t m) { return isqrt(4 * n * m); }

  bool in_box(std::int64_t n, std::int64_t m) const { return n >= 0 && m >= 0 && n <= n_max_ && m <= m_max_; }

  // Total inside the box: zero for T outside X. OutOfRegionError outside the box.
  Scalar at(std::int64_t n, std::int64_t r, std::int64_t m) const {
    if (n < 0 || m < 0) return Scalar(0);
    if (!in_box(n, m))
      throw OutOfRegionError("A(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + ") outside the box n<=" +
                             std::to_string(n_max_) + ", m<=" + std::to_string(m_max_));
    if (4 * n * m - r * r < 0) return Scalar(0);
    if (n == 0 && r == 0 && m == 0) throw std::logic_error("A(0,0,0) is not part of X*");
    return cell(n, m)[static_cast<std::size_t>(r + r_bound(n, m))];
  }

  Scalar at(const HalfIntegralIndex& t) const { return at(t.n, t.r, t.m); }

  void set(std::int64_t n, std::int64_t r, std::int64_t m, Scalar v) {
    HalfIntegralIndex t{n, r, m};
    if (!in_box(n, m)) throw OutOfRegionError("(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + ") outside the box");
    if (!t.in_x_star()) {
      if (v.is_zero()) return;
      throw std::invalid_argument("A(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + ") is not indexed by X*");
    }
    if (cusp_ && !t.in_x_plus() && !v.is_zero())
      throw std::invalid_argument("cusp form with nonzero singular coefficient A(" + std::to_string(n) + "," + std::to_string(r) + "," +
                                  std::to_string(m) + ")");
    cell(n, m)[static_cast<std::size_t>(r + r_bound(n, m))] = std::move(v);
  }

  // Every T in X* inside the box, ordered by (m, n, r).
  void for_each(const std::function<void(const HalfIntegralIndex&, const Scalar&)>& visit) const {
    for (std::int64_t m = 0; m <= m_max_; ++m)
      for (std::int64_t n = 0; n <= n_max_; ++n) {
        auto R = r_bound(n, m);
        for (std::int64_t r = -R; r <= R; ++r) {
          if (n == 0 && m == 0) continue;
          visit({n, r, m}, cell(n, m)[static_cast<std::size_t>(r + R)]);
        }
      }
  }

  bool is_zero() const {
    for (const auto& c : cells_)
      for (const auto& v : c)
        if (!v.is_zero()) return false;
    return true;
  }

  Scalar chi_at(std::int64_t a) const { return chi_.value_at_level(a, N_); }

  friend bool operator==(const SiegelExpansion& a, const SiegelExpansion& b) {
    return a.k_ == b.k_ && a.N_ == b.N_ && a.chi_ == b.chi_ && a.n_max_ == b.n_max_ && a.m_max_ == b.m_max_ && a.cusp_ == b.cusp_ &&
           a.cells_ == b.cells_;
  }

 private:
  std::vector<Scalar>& cell(std::int64_t n, std::int64_t m) { return cells_[static_cast<std::size_t>(m * (n_max_ + 1) + n)]; }
  const std::vector<Scalar>& cell(std::int64_t n, std::int64_t m) const {
    return cells_[static_cast<std::size_t>(m * (n_max_ + 1) + n)];
  }

  std::int64_t k_;
  std::int64_t N_;
  DirichletCharacter chi_;
  std::int64_t n_max_;
  std::int64_t m_max_;
  bool cusp_;
  std::vector<std::vector<Scalar>> cells_;
};

// A(n, r, m) with n <-> m swapped; the box is transposed as well.
inline SiegelExpansion transpose(const SiegelExpansion& F) {
  SiegelExpansion out(F.weight(), F.level(), F.character(), F.m_max(), F.n_max(), F.cusp());
  F.for_each([&](const HalfIntegralIndex& t, const Scalar& v) { out.set(t.m, t.r, t.n, v); });
  return out;
}

// F_m: (n, r) -> A(n, r, m) as a Jacobi expansion of index m.
inline JacobiExpansion fj_coefficient(const SiegelExpansion& F, std::int64_t m) {
  if (m < 0 || m > F.m_max())
    throw OutOfRegionError("Fourier-Jacobi coefficient " + std::to_string(m) + " outside 0.." + std::to_string(F.m_max()));
  JacobiExpansion out(F.weight(), m, F.level(), F.character(), F.n_max(), F.cusp());
  out.for_each([&](std::int64_t n, std::int64_t r, const Scalar&) {
    if (n == 0 && r == 0 && m == 0) return;
    out.set(n, r, F.at(n, r, m));
  });
  return out;
}

class UnsupportedEisensteinPart : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A(n, r, l) = coefficient (n, r) of V_{l,chi}(phi) for 1 <= l <= m_max and
// A(n, 0, 0) = 0; the box is n <= floor(phi.n_max / m_max).
inline SiegelExpansion lift(const JacobiExpansion& phi, std::int64_t m_max) {
  if (phi.index() != 1) throw std::invalid_argument("lift needs an index-1 Jacobi form, got index " + std::to_string(phi.index()));
  if (m_max < 1) throw std::invalid_argument("lift needs m_max >= 1");
  if (m_max > phi.n_max())
    throw OutOfRegionError("lift with m_max=" + std::to_string(m_max) + " needs n_max >= m_max, got " + std::to_string(phi.n_max()));
  if (!phi.at(0, 0).is_zero())
    throw UnsupportedEisensteinPart("lift of a form with nonzero constant term c(0,0) = " + phi.at(0, 0).to_string() +
                                    " needs the Eisenstein part, which is not supported");
  const auto n_box = phi.n_max() / m_max;
  SiegelExpansion F(phi.weight(), phi.level(), phi.character(), n_box, m_max, phi.cusp());
  for (std::int64_t l = 1; l <= m_max; ++l) {
    auto shifted = index_shift(phi, l);
    for (std::int64_t n = 0; n <= n_box; ++n) {
      auto R = SiegelExpansion::r_bound(n, l);
      for (std::int64_t r = -R; r <= R; ++r) F.set(n, r, l, shifted.at(n, r));
    }
  }
  return F;
}

}  // namespace sk
