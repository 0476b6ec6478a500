#pragma once

// Truncated Fourier expansions sum c(n, r) q^n zeta^r of Jacobi forms and the
// index-changing operators acting on them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sk/arith.hpp"
#include "sk/character.hpp"
#include "sk/hecke.hpp"
#include "sk/scalar.hpp"

namespace sk {

class OutOfRegionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Largest |r| with 4nm - r^2 >= 0.
inline std::int64_t jacobi_r_bound(std::int64_t n, std::int64_t m) { return m == 0 ? 0 : isqrt(4 * n * m); }

class JacobiExpansion {
 public:
  // All coefficients start at zero. Rejects chi(-1) != (-1)^k.
  JacobiExpansion(std::int64_t k, std::int64_t m, std::int64_t N, DirichletCharacter chi, std::int64_t n_max, bool cusp = false)
      : k_(k), m_(m), N_(N), chi_(std::move(chi)), n_max_(n_max), cusp_(cusp) {
    if (m < 0) throw std::invalid_argument("Jacobi index must be non-negative");
    if (N < 1) throw std::invalid_argument("level must be positive");
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    if (N % chi_.modulus() != 0)
      throw std::invalid_argument("character modulus " + std::to_string(chi_.modulus()) + " does not divide level " + std::to_string(N));
    if (!parity_compatible(chi_, k))
      throw std::invalid_argument("character " + chi_.spec() + " violates chi(-1) = (-1)^k for k=" + std::to_string(k));
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(2 * r_bound(n) + 1));
  }

  std::int64_t weight() const { return k_; }
  std::int64_t index() const { return m_; }
  std::int64_t level() const { return N_; }
  const DirichletCharacter& character() const { return chi_; }
  std::int64_t n_max() const { return n_max_; }
  bool cusp() const { return cusp_; }

  std::int64_t r_bound(std::int64_t n) const { return jacobi_r_bound(n, m_); }

  // 4nm - r^2 >= 0 (r = 0 only when m = 0).
  bool in_support(std::int64_t n, std::int64_t r) const { return n >= 0 && 4 * n * m_ - r * r >= 0; }

  // Where the cusp flag forbids nonzero coefficients. For index 0 the
  // flag means vanishing constant term.
  bool on_cusp_boundary(std::int64_t n, std::int64_t r) const {
    return m_ == 0 ? n == 0 : 4 * n * m_ - r * r == 0;
  }

  // Zero outside the support; OutOfRegionError beyond the truncation.
  Scalar at(std::int64_t n, std::int64_t r) const {
    if (n > n_max_) throw OutOfRegionError("c(" + std::to_string(n) + "," + std::to_string(r) + ") beyond n_max=" + std::to_string(n_max_));
    if (!in_support(n, r)) return Scalar(0);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + r_bound(n))];
  }

  void set(std::int64_t n, std::int64_t r, Scalar v) {
    if (n < 0 || n > n_max_) throw OutOfRegionError("n=" + std::to_string(n) + " outside 0.." + std::to_string(n_max_));
    if (!in_support(n, r)) {
      if (v.is_zero()) return;
      throw std::invalid_argument("c(" + std::to_string(n) + "," + std::to_string(r) + ") violates 4nm - r^2 >= 0");
    }
    if (cusp_ && on_cusp_boundary(n, r) && !v.is_zero())
      throw std::invalid_argument("cusp form with nonzero c(" + std::to_string(n) + "," + std::to_string(r) + ")");
    rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + r_bound(n))] = std::move(v);
  }

  // Visits every stored (n, r) in order n ascending, r ascending.
  void for_each(const std::function<void(std::int64_t, std::int64_t, const Scalar&)>& visit) const {
    for (std::int64_t n = 0; n <= n_max_; ++n) {
      auto R = r_bound(n);
      for (std::int64_t r = -R; r <= R; ++r) visit(n, r, rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + R)]);
    }
  }

  bool is_zero() const {
    for (const auto& row : rows_)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }

  // chi as a character mod the level.
  Scalar chi_at(std::int64_t a) const { return chi_.value_at_level(a, N_); }

  // Copy keeping n <= n_max.
  JacobiExpansion truncated(std::int64_t n_max) const {
    if (n_max > n_max_) throw OutOfRegionError("cannot extend truncation from " + std::to_string(n_max_) + " to " + std::to_string(n_max));
    JacobiExpansion out(k_, m_, N_, chi_, n_max, cusp_);
    for (std::int64_t n = 0; n <= n_max; ++n) out.rows_[static_cast<std::size_t>(n)] = rows_[static_cast<std::size_t>(n)];
    return out;
  }

  JacobiExpansion with_cusp(bool cusp) const {
    JacobiExpansion out(k_, m_, N_, chi_, n_max_, cusp);
    for_each([&](std::int64_t n, std::int64_t r, const Scalar& v) { out.set(n, r, v); });
    return out;
  }

  bool same_space(const JacobiExpansion& o) const { return k_ == o.k_ && m_ == o.m_ && N_ == o.N_ && chi_ == o.chi_; }

  JacobiExpansion& operator+=(const JacobiExpansion& o) { return combine(o, 1); }
  JacobiExpansion& operator-=(const JacobiExpansion& o) { return combine(o, -1); }

  JacobiExpansion& operator*=(const Scalar& s) {
    for (auto& row : rows_)
      for (auto& v : row) v *= s;
    return *this;
  }

  friend JacobiExpansion operator+(JacobiExpansion a, const JacobiExpansion& b) { return a += b; }
  friend JacobiExpansion operator-(JacobiExpansion a, const JacobiExpansion& b) { return a -= b; }
  friend JacobiExpansion operator*(const Scalar& s, JacobiExpansion a) { return a *= s; }

  friend bool operator==(const JacobiExpansion& a, const JacobiExpansion& b) {
    return a.same_space(b) && a.n_max_ == b.n_max_ && a.cusp_ == b.cusp_ && a.rows_ == b.rows_;
  }

 private:
  // Truncates to the smaller n_max; the cusp flag survives only if both carry it.
  JacobiExpansion& combine(const JacobiExpansion& o, int sign) {
    if (!same_space(o)) throw std::invalid_argument("adding Jacobi expansions from different spaces");
    if (o.n_max_ < n_max_) *this = truncated(o.n_max_);
    cusp_ = cusp_ && o.cusp_;
    for (std::int64_t n = 0; n <= n_max_; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      const auto& other = o.rows_[static_cast<std::size_t>(n)];
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (sign > 0)
          row[i] += other[i];
        else
          row[i] -= other[i];
      }
    }
    return *this;
  }

  std::int64_t k_;
  std::int64_t m_;
  std::int64_t N_;
  DirichletCharacter chi_;
  std::int64_t n_max_;
  bool cusp_;
  std::vector<std::vector<Scalar>> rows_;
};

namespace detail {

// c'(n, r) = scale * sum_{a | (n, r, l), gcd(a, N) = 1} chi(a) a^{k-1} c(nl/a^2, r/a).
inline JacobiExpansion index_shift_scaled(const JacobiExpansion& phi, std::int64_t l, const Rational& scale) {
  if (l < 1) throw std::invalid_argument("index shift needs l >= 1");
  if (phi.n_max() < l)
    throw OutOfRegionError("index shift by l=" + std::to_string(l) + " needs n_max >= l, got " + std::to_string(phi.n_max()));
  const auto k = phi.weight();
  const auto N = phi.level();
  std::vector<std::pair<std::int64_t, Scalar>> weights;
  for (auto a : divisors_coprime_to(l, N)) weights.emplace_back(a, phi.chi_at(a) * (rpow(a, k - 1) * scale));

  JacobiExpansion out(k, phi.index() * l, N, phi.character(), phi.n_max() / l, phi.cusp());
  for (std::int64_t n = 0; n <= out.n_max(); ++n) {
    auto R = out.r_bound(n);
    for (std::int64_t r = -R; r <= R; ++r) {
      Scalar acc;
      for (const auto& [a, w] : weights) {
        if (n % a != 0 || r % a != 0) continue;
        auto c = phi.at(n * l / (a * a), r / a);
        if (!c.is_zero()) acc += w * c;
      }
      out.set(n, r, std::move(acc));
    }
  }
  return out;
}

}  // namespace detail

// V_{l,chi}: index m -> ml, truncated to n <= floor(n_max / l).
inline JacobiExpansion index_shift(const JacobiExpansion& phi, std::int64_t l) { return detail::index_shift_scaled(phi, l, Rational(1)); }

// V^0_{l,chi} = l^{1-k} V_{l,chi}.
inline JacobiExpansion index_shift_v0(const JacobiExpansion& phi, std::int64_t l) {
  return detail::index_shift_scaled(phi, l, rpow(l, 1 - phi.weight()));
}

// V_{l,chi} evaluated as l^{k-1} sum over Gamma_0(N)\Delta_N(l) of chi(g)^{-1} phi|g
// on the representatives [a, b; 0, d]: q^n zeta^r -> e(nb/d) q^{na/d} zeta^{ra}
// with weight d^{-k}. Fractional exponents must cancel in the b-sum.
inline JacobiExpansion index_shift_oracle(const JacobiExpansion& phi, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("index shift needs l >= 1");
  if (phi.n_max() < l)
    throw OutOfRegionError("index shift by l=" + std::to_string(l) + " needs n_max >= l, got " + std::to_string(phi.n_max()));
  const auto k = phi.weight();
  const auto N = phi.level();
  // q-exponent as a reduced fraction (num, den), then zeta-exponent.
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Scalar> terms;
  for (const auto& rep : coset_representatives(N, l)) {
    const auto& g = rep.matrix;
    auto twist = char_on_delta(phi.character(), g, N).conj();  // chi(g)^{-1} for a root of unity
    Scalar factor = twist * (rpow(l, k - 1) * rpow(g.d, -k));
    phi.for_each([&](std::int64_t n, std::int64_t r, const Scalar& c) {
      if (c.is_zero()) return;
      auto num = n * g.a;
      auto den = g.d;
      auto h = gcd(num, den);
      num /= h;
      den /= h;
      terms[{num, den, r * g.a}] += factor * c * Scalar::root_of_unity(n * g.b, g.d);
    });
  }
  JacobiExpansion out(k, phi.index() * l, N, phi.character(), phi.n_max() / l, phi.cusp());
  const auto ring = phi.character().ring_order();
  for (const auto& [key, value] : terms) {
    auto [num, den, r] = key;
    if (den != 1) {
      if (!value.is_zero())
        throw std::logic_error("slash-action sum left a fractional exponent q^(" + std::to_string(num) + "/" + std::to_string(den) + ")");
      continue;
    }
    if (num > out.n_max()) continue;
    auto restricted = value.restrict_to(ring);
    if (!restricted) throw std::logic_error("slash-action coefficient outside the character's scalar ring");
    out.set(num, r, *restricted);
  }
  return out;
}

// V^0(a, a): phi(tau, z) -> chi(a) a^{-k} phi(tau, az), index m -> m a^2.
inline JacobiExpansion v_diag(const JacobiExpansion& phi, std::int64_t a) {
  if (a < 1) throw std::invalid_argument("v_diag needs a >= 1");
  if (gcd(a, phi.level()) != 1)
    throw std::invalid_argument("v_diag needs gcd(a, N) = 1, got a=" + std::to_string(a) + " N=" + std::to_string(phi.level()));
  Scalar w = phi.chi_at(a) * rpow(a, -phi.weight());
  JacobiExpansion out(phi.weight(), phi.index() * a * a, phi.level(), phi.character(), phi.n_max(), phi.cusp());
  phi.for_each([&](std::int64_t n, std::int64_t r, const Scalar& c) {
    if (!c.is_zero()) out.set(n, r * a, w * c);
  });
  return out;
}

// phi * f for an elliptic form f (index 0) at the same level with a principal
// character; weights add and the truncation is the smaller one.
inline JacobiExpansion mul_elliptic(const JacobiExpansion& phi, const JacobiExpansion& f) {
  if (f.index() != 0) throw std::invalid_argument("mul_elliptic: second factor must have index 0, got " + std::to_string(f.index()));
  if (f.level() != phi.level()) throw std::invalid_argument("mul_elliptic: level mismatch");
  if (!f.character().is_principal()) throw std::invalid_argument("mul_elliptic: elliptic factor must have a principal character");
  const auto n_max = std::min(phi.n_max(), f.n_max());
  JacobiExpansion out(phi.weight() + f.weight(), phi.index(), phi.level(), phi.character(), n_max, phi.cusp() || f.cusp());
  for (std::int64_t n = 0; n <= n_max; ++n) {
    auto R = out.r_bound(n);
    for (std::int64_t r = -R; r <= R; ++r) {
      Scalar acc;
      for (std::int64_t j = 0; j <= n; ++j) {
        auto fj = f.at(j, 0);
        if (fj.is_zero()) continue;
        auto c = phi.at(n - j, r);
        if (!c.is_zero()) acc += fj * c;
      }
      out.set(n, r, std::move(acc));
    }
  }
  return out;
}

}  // namespace sk
