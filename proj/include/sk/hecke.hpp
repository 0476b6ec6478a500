#pragma once

// The Hecke algebra H(Gamma_0(N), Delta_N) over Z: right-coset
// representatives of Gamma_0(N)\Delta_N(l), coset identity tests, and
// double-coset multiplication by counting products of right cosets.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sk/arith.hpp"
#include "sk/character.hpp"

namespace sk {

struct CosetRep {
  MatrixZ2 matrix;  // [a, b; 0, d] with ad = l, gcd(a, N) = 1, 0 <= b < d
  std::int64_t level = 1;

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

// T(a, d) = Gamma_0(N) [a, d] Gamma_0(N), a | d, gcd(a, N) = 1.
struct DoubleCoset {
  std::int64_t a = 1;
  std::int64_t d = 1;

  friend auto operator<=>(const DoubleCoset&, const DoubleCoset&) = default;

  std::int64_t det() const { return a * d; }
};

inline void require_double_coset(const DoubleCoset& t, std::int64_t N) {
  if (t.a < 1 || t.d < 1 || t.d % t.a != 0 || gcd(t.a, N) != 1)
    throw std::invalid_argument("T(" + std::to_string(t.a) + "," + std::to_string(t.d) + ") is not a double coset at level " +
                                std::to_string(N));
}

class HeckeElement {
 public:
  explicit HeckeElement(std::int64_t level) : level_(level) {
    if (level < 1) throw std::invalid_argument("Hecke level must be positive");
  }

  static HeckeElement basis(std::int64_t level, DoubleCoset t) {
    HeckeElement x(level);
    x.add(t, 1);
    return x;
  }

  std::int64_t level() const { return level_; }
  const std::map<DoubleCoset, std::int64_t>& terms() const { return terms_; }

  std::int64_t coefficient(DoubleCoset t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(DoubleCoset t, std::int64_t c) {
    require_double_coset(t, level_);
    auto& slot = terms_[t];
    slot += c;
    if (slot == 0) terms_.erase(t);
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    require_same_level(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }

  HeckeElement& operator*=(std::int64_t s) {
    if (s == 0) terms_.clear();
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }
  friend HeckeElement operator*(std::int64_t s, HeckeElement x) { return x *= s; }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  // "c*T(a,d) + ..." ordered by (a, d); unit coefficients are omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
      auto mag = c < 0 ? -c : c;
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "T(" + std::to_string(t.a) + "," + std::to_string(t.d) + ")";
      first = false;
    }
    return out;
  }

  void require_same_level(const HeckeElement& o) const {
    if (o.level_ != level_)
      throw std::invalid_argument("Hecke level mismatch: " + std::to_string(level_) + " vs " + std::to_string(o.level_));
  }

 private:
  std::int64_t level_;
  std::map<DoubleCoset, std::int64_t> terms_;
};

// Gamma_0(N)\Delta_N(l) as [a, b; 0, d], ad = l, gcd(a, N) = 1, 0 <= b < d;
// ordered by a ascending, then b.
inline std::vector<CosetRep> coset_representatives(std::int64_t N, std::int64_t l) {
  if (N < 1 || l < 1) throw std::invalid_argument("coset_representatives needs N, l >= 1");
  std::vector<CosetRep> out;
  for (auto a : divisors(l)) {
    if (gcd(a, N) != 1) continue;
    auto d = l / a;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({{a, b, 0, d}, N});
  }
  return out;
}

// Gamma_0(N) g1 = Gamma_0(N) g2, i.e. g1 g2^{-1} is integral with N | c.
inline bool coset_equal(const MatrixZ2& g1, const MatrixZ2& g2, std::int64_t N) {
  require_delta(g1, N);
  require_delta(g2, N);
  const auto l = g1.det();
  if (l != g2.det())
    throw std::invalid_argument("coset_equal: determinants differ (" + std::to_string(l) + " vs " + std::to_string(g2.det()) + ")");
  // g1 * adj(g2) = l * g1 g2^{-1}
  const MatrixZ2 adj{g2.d, -g2.b, -g2.c, g2.a};
  const auto p = g1 * adj;
  if (p.a % l || p.b % l || p.c % l || p.d % l) return false;
  const MatrixZ2 q{p.a / l, p.b / l, p.c / l, p.d / l};
  return q.det() == 1 && q.c % N == 0;
}

// The representative from coset_representatives(N, det g) whose coset contains g.
inline CosetRep canonicalize_coset(const MatrixZ2& g, std::int64_t N) {
  require_delta(g, N);
  for (const auto& rep : coset_representatives(N, g.det()))
    if (coset_equal(rep.matrix, g, N)) return rep;
  throw std::logic_error("no coset representative found for " + g.to_string() + " at level " + std::to_string(N));
}

// The double coset containing g: T(e, det/e) with e the gcd of the entries of g.
inline DoubleCoset double_coset_of(const MatrixZ2& g, std::int64_t N) {
  require_delta(g, N);
  auto e = gcd(gcd(g.a, g.b), gcd(g.c, g.d));
  return {e, g.det() / e};
}

// Right cosets of T(a, d) among the representatives of determinant ad.
inline std::vector<CosetRep> right_cosets(DoubleCoset t, std::int64_t N) {
  require_double_coset(t, N);
  std::vector<CosetRep> out;
  for (const auto& rep : coset_representatives(N, t.det()))
    if (double_coset_of(rep.matrix, N) == t) out.push_back(rep);
  return out;
}

// T(l) = sum of T(a, d) over ad = l, a | d, gcd(a, N) = 1.
inline HeckeElement tl_element(std::int64_t N, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("tl_element needs l >= 1");
  HeckeElement x(N);
  for (auto a : divisors(l)) {
    auto d = l / a;
    if (d % a == 0 && gcd(a, N) == 1) x.add({a, d}, 1);
  }
  return x;
}

namespace detail {

struct RepKey {
  std::int64_t a, b, d;
  friend auto operator<=>(const RepKey&, const RepKey&) = default;
};

// Product of two basis double cosets: c_gamma counts pairs (i, j) with
// Gamma alpha_i beta_j = Gamma gamma, gamma the diagonal representative.
inline HeckeElement multiply_basis(DoubleCoset x, DoubleCoset y, std::int64_t N) {
  const auto alphas = right_cosets(x, N);
  const auto betas = right_cosets(y, N);
  std::map<RepKey, std::int64_t> tally;
  for (const auto& alpha : alphas)
    for (const auto& beta : betas) {
      auto rep = canonicalize_coset(alpha.matrix * beta.matrix, N);
      ++tally[{rep.matrix.a, rep.matrix.b, rep.matrix.d}];
    }

  HeckeElement out(N);
  std::map<DoubleCoset, bool> seen;
  std::int64_t covered = 0;
  for (const auto& [key, count] : tally) {
    DoubleCoset t = double_coset_of({key.a, key.b, 0, key.d}, N);
    if (seen[t]) continue;
    seen[t] = true;
    const auto cosets = right_cosets(t, N);
    // Left-invariance: every right coset of t is hit equally often.
    auto diag = tally.find({t.a, 0, t.d});
    const std::int64_t c = diag == tally.end() ? 0 : diag->second;
    for (const auto& rep : cosets) {
      auto it = tally.find({rep.matrix.a, rep.matrix.b, rep.matrix.d});
      if ((it == tally.end() ? 0 : it->second) != c)
        throw std::logic_error("double coset product is not Gamma_0(N)-invariant at " + rep.matrix.to_string());
    }
    covered += c * static_cast<std::int64_t>(cosets.size());
    out.add(t, c);
  }
  if (covered != static_cast<std::int64_t>(alphas.size() * betas.size()))
    throw std::logic_error("double coset product lost right cosets");
  return out;
}

}  // namespace detail

inline HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) {
  x.require_same_level(y);
  HeckeElement out(x.level());
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) out += (cx * cy) * detail::multiply_basis(tx, ty, x.level());
  return out;
}

// T(d, d) o x, shifting every T(a, b) to T(da, db).
inline HeckeElement scalar_shift(std::int64_t d, const HeckeElement& x) {
  if (d < 1 || gcd(d, x.level()) != 1)
    throw std::invalid_argument("T(d,d) needs d >= 1 coprime to the level");
  HeckeElement out(x.level());
  for (const auto& [t, c] : x.terms()) out.add({d * t.a, d * t.d}, c);
  return out;
}

// sum over d | (m, n), gcd(d, N) = 1 of d T(d, d) T(mn/d^2).
inline HeckeElement theorem_rhs(std::int64_t N, std::int64_t m, std::int64_t n) {
  HeckeElement out(N);
  for (auto d : divisors_coprime_to(gcd(m, n), N)) out += d * scalar_shift(d, tl_element(N, m * n / (d * d)));
  return out;
}

// T(m) o T(n) by brute force against the closed form.
inline bool verify_theorem_identity(std::int64_t N, std::int64_t m, std::int64_t n) {
  return multiply(tl_element(N, m), tl_element(N, n)) == theorem_rhs(N, m, n);
}

}  // namespace sk
