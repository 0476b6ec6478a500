#pragma once

// Exact elements of Q(zeta_M). A Scalar of order M stores M rational
// coordinates in the power basis 1, zeta, ..., zeta^(M-1), always reduced
// modulo the M-th cyclotomic polynomial, so the coordinates at positions
// >= phi(M) are zero and equality is coordinate-wise. Scalars of different
// orders are combined in Q(zeta_lcm).

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sk/arith.hpp"
#include "sk/rational.hpp"

namespace sk {

namespace detail {

// Integer coefficients of Phi_M, low degree first; monic of degree phi(M).
inline const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t M) {
  static std::mutex guard;
  static std::map<std::int64_t, std::vector<std::int64_t>> table;
  {
    std::lock_guard lock(guard);
    if (auto it = table.find(M); it != table.end()) return it->second;
  }
  // x^M - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(M) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(M)] = 1;
  for (auto d : divisors(M)) {
    if (d == M) continue;
    const auto& div = cyclotomic_polynomial(d);
    auto deg_div = div.size() - 1;
    std::vector<std::int64_t> quotient(poly.size() - deg_div, 0);
    for (auto i = poly.size(); i-- > deg_div;) {
      auto c = poly[i];
      quotient[i - deg_div] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg_div; ++j) poly[i - deg_div + j] -= c * div[j];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(guard);
  return table.emplace(M, std::move(poly)).first->second;
}

inline std::int64_t euler_phi(std::int64_t M) {
  return static_cast<std::int64_t>(cyclotomic_polynomial(M).size()) - 1;
}

// Reduces an arbitrary-length polynomial in zeta_M to canonical M coordinates.
inline std::vector<Rational> reduce(std::int64_t M, const std::vector<Rational>& poly) {
  std::vector<Rational> out(static_cast<std::size_t>(M));
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] != 0) out[i % static_cast<std::size_t>(M)] += poly[i];
  const auto& phi = cyclotomic_polynomial(M);
  auto deg = phi.size() - 1;
  for (auto i = out.size(); i-- > deg;) {
    if (out[i] == 0) continue;
    Rational c = out[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) out[i - deg + j] -= c * phi[j];
  }
  return out;
}

}  // namespace detail

class Scalar {
 public:
  Scalar() : order_(1), coords_(1) {}
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(long long v) : Scalar(Rational(Integer(std::to_string(v)))) {}
  Scalar(const Integer& v) : Scalar(Rational(v)) {}
  Scalar(Rational q) : order_(1), coords_{std::move(q)} {}

  // Coordinates need not be reduced; coords.size() must equal M.
  static Scalar from_coords(std::int64_t M, const std::vector<Rational>& coords) {
    if (M < 1) throw std::domain_error("Scalar order must be positive");
    if (static_cast<std::int64_t>(coords.size()) != M)
      throw std::invalid_argument("Scalar of order " + std::to_string(M) + " needs " + std::to_string(M) +
                                  " coordinates, got " + std::to_string(coords.size()));
    Scalar s;
    s.order_ = M;
    s.coords_ = detail::reduce(M, coords);
    return s;
  }

  // e(j/M) = zeta_M^j, stored at the smallest order M / gcd(j, M).
  static Scalar root_of_unity(std::int64_t j, std::int64_t M) {
    if (M < 1) throw std::domain_error("root_of_unity: order must be positive");
    j = mod(j, M);
    auto g = gcd(j, M);
    auto order = M / g;
    auto exponent = j / g;
    if (order == 1) return Scalar(1);
    if (order == 2) return Scalar(-1);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    c[static_cast<std::size_t>(exponent)] = 1;
    return from_coords(order, c);
  }

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }

  const Rational& rational() const {
    if (!is_rational()) throw std::domain_error("Scalar is not rational: " + to_string());
    return coords_[0];
  }

  // Image in Q(zeta_L); L must be a multiple of order().
  Scalar embed(std::int64_t L) const {
    if (L == order_) return *this;
    if (L < 1 || L % order_ != 0)
      throw std::domain_error("cannot embed order " + std::to_string(order_) + " into " + std::to_string(L));
    auto step = static_cast<std::size_t>(L / order_);
    std::vector<Rational> c(static_cast<std::size_t>(L));
    for (std::size_t i = 0; i < coords_.size(); ++i) c[i * step] = coords_[i];
    return from_coords(L, c);
  }

  // The same number written in Q(zeta_M), if it lies there.
  std::optional<Scalar> restrict_to(std::int64_t M) const;

  // Complex conjugation, zeta -> zeta^(-1).
  Scalar conj() const {
    if (order_ <= 2) return *this;
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] != 0) c[(coords_.size() - i) % coords_.size()] = coords_[i];
    return from_coords(order_, c);
  }

  Scalar operator-() const {
    Scalar s = *this;
    for (auto& c : s.coords_) c = -c;
    return s;
  }

  Scalar& operator+=(const Scalar& o) {
    if (o.order_ == order_) {
      for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
      return *this;
    }
    auto L = lcm(order_, o.order_);
    Scalar a = embed(L);
    a += o.embed(L);
    return *this = std::move(a);
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    if (o.order_ != order_) {
      auto L = lcm(order_, o.order_);
      Scalar a = embed(L);
      a *= o.embed(L);
      return *this = std::move(a);
    }
    if (order_ == 1) {
      coords_[0] *= o.coords_[0];
      return *this;
    }
    std::vector<Rational> prod(2 * coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coords_.size(); ++j)
        if (o.coords_[j] != 0) prod[i + j] += coords_[i] * o.coords_[j];
    }
    coords_ = detail::reduce(order_, prod);
    return *this;
  }

  Scalar& operator*=(const Rational& q) {
    for (auto& c : coords_) c *= q;
    return *this;
  }

  Scalar& operator/=(const Rational& q) {
    if (q == 0) throw std::domain_error("Scalar division by zero");
    for (auto& c : coords_) c /= q;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }
  friend Scalar operator/(Scalar a, const Rational& q) { return a /= q; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return a.coords_ == b.coords_;
    auto L = lcm(a.order_, b.order_);
    return a.embed(L).coords_ == b.embed(L).coords_;
  }

  // Single rational when order is 1, else the M coordinates comma-joined.
  std::string to_string() const {
    if (order_ == 1) return sk::to_string(coords_[0]);
    return coords_string();
  }

  std::string coords_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += sk::to_string(coords_[i]);
    }
    return out;
  }

  // Inverse of to_string/coords_string: n comma-joined coordinates give order n.
  static Scalar parse(std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      coords.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return from_coords(static_cast<std::int64_t>(coords.size()), coords);
  }

 private:
  std::int64_t order_;
  std::vector<Rational> coords_;
};

inline std::optional<Scalar> Scalar::restrict_to(std::int64_t M) const {
  if (M < 1) throw std::domain_error("restrict_to: order must be positive");
  if (M == order_) return *this;
  if (is_rational()) return Scalar(coords_[0]).embed(M);
  if (M % order_ == 0) return embed(M);
  auto L = lcm(M, order_);
  Scalar x = embed(L);
  // Solve sum_j y_j * embed_L(zeta_M^j) = x for j < phi(M) by Gaussian elimination.
  auto rows = static_cast<std::size_t>(detail::euler_phi(L));
  auto cols = static_cast<std::size_t>(detail::euler_phi(M));
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Rational> basis(static_cast<std::size_t>(M));
    basis[j] = 1;
    auto image = from_coords(M, basis).embed(L);
    for (std::size_t i = 0; i < rows; ++i) aug[i][j] = image.coords_[i];
  }
  for (std::size_t i = 0; i < rows; ++i) aug[i][cols] = x.coords_[i];
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[rank]);
    Rational inv = 1 / aug[rank][c];
    for (auto& v : aug[rank]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  std::vector<Rational> y(static_cast<std::size_t>(M));
  for (std::size_t i = 0; i < rank; ++i) y[pivot_col[i]] = aug[i][cols];
  return from_coords(M, y);
}

}  // namespace sk
