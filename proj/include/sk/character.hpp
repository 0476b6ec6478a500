#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sk/arith.hpp"
#include "sk/scalar.hpp"

namespace sk {

struct MatrixZ2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }

  friend MatrixZ2 operator*(const MatrixZ2& x, const MatrixZ2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const MatrixZ2&, const MatrixZ2&) = default;

  std::string to_string() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) + "]";
  }
};

class DeltaMembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Empty when g lies in Delta_N, otherwise the violated condition.
inline std::optional<std::string> delta_violation(const MatrixZ2& g, std::int64_t N) {
  if (g.det() <= 0) return "det " + std::to_string(g.det()) + " is not positive";
  if (mod(g.c, N) != 0) return "lower-left entry " + std::to_string(g.c) + " is not divisible by N=" + std::to_string(N);
  if (gcd(g.a, N) != 1) return "gcd(a, N) = gcd(" + std::to_string(g.a) + ", " + std::to_string(N) + ") != 1";
  return std::nullopt;
}

inline void require_delta(const MatrixZ2& g, std::int64_t N) {
  if (auto why = delta_violation(g, N)) throw DeltaMembershipError(g.to_string() + " not in Delta_" + std::to_string(N) + ": " + *why);
}

class DirichletCharacter {
 public:
  enum class Kind { trivial, kronecker, table };

  // The character mod 1.
  static DirichletCharacter trivial() {
    DirichletCharacter chi;
    chi.kind_ = Kind::trivial;
    chi.modulus_ = 1;
    chi.angles_ = {Rational(0)};
    chi.finish();
    return chi;
  }

  // chi_D(a) = (D/a) for a fundamental discriminant D, modulus |D|.
  static DirichletCharacter kronecker(std::int64_t D) {
    if (!is_fundamental_discriminant(D))
      throw std::invalid_argument("kronecker character needs a fundamental discriminant, got " + std::to_string(D));
    DirichletCharacter chi;
    chi.kind_ = Kind::kronecker;
    chi.disc_ = D;
    chi.modulus_ = D < 0 ? -D : D;
    for (std::int64_t a = 0; a < chi.modulus_; ++a) {
      int v = kronecker_symbol(D, a);
      if (v == 0)
        chi.angles_.push_back(std::nullopt);
      else
        chi.angles_.push_back(v == 1 ? Rational(0) : make_rational(1, 2));
    }
    chi.finish();
    return chi;
  }

  // angles[a] = t means chi(a) = e(t); nullopt means chi(a) = 0. Validated.
  static DirichletCharacter from_angles(std::vector<std::optional<Rational>> angles) {
    if (angles.empty()) throw std::invalid_argument("character table is empty");
    DirichletCharacter chi;
    chi.kind_ = Kind::table;
    chi.modulus_ = static_cast<std::int64_t>(angles.size());
    for (auto& t : angles)
      if (t) t = fractional_part(*t);
    chi.angles_ = std::move(angles);
    chi.validate_table();
    chi.finish();
    return chi;
  }

  // Grammar: "trivial" | "kronecker:<D>" | "table:<v1>,...,<vN>", v = "0" | "zeta^<j>/<M>".
  static DirichletCharacter parse(std::string_view spec) {
    if (spec == "trivial") return trivial();
    if (spec.substr(0, 10) == "kronecker:") {
      std::string body(spec.substr(10));
      std::size_t used = 0;
      long long D = 0;
      try {
        D = std::stoll(body, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != body.size()) throw std::invalid_argument("malformed kronecker character '" + std::string(spec) + "'");
      return kronecker(D);
    }
    if (spec.substr(0, 6) == "table:") {
      std::vector<std::optional<Rational>> angles;
      std::string_view body = spec.substr(6);
      std::size_t start = 0;
      while (true) {
        auto comma = body.find(',', start);
        auto item = body.substr(start, comma == std::string_view::npos ? comma : comma - start);
        angles.push_back(parse_table_entry(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return from_angles(std::move(angles));
    }
    throw std::invalid_argument("unknown character specification '" + std::string(spec) + "'");
  }

  std::string spec() const {
    switch (kind_) {
      case Kind::trivial:
        return "trivial";
      case Kind::kronecker:
        return "kronecker:" + std::to_string(disc_);
      case Kind::table:
        break;
    }
    std::string out = "table:";
    for (std::size_t i = 0; i < angles_.size(); ++i) {
      if (i) out += ',';
      if (!angles_[i])
        out += "0";
      else
        out += "zeta^" + angles_[i]->get_num().get_str() + "/" + angles_[i]->get_den().get_str();
    }
    return out;
  }

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t discriminant() const { return disc_; }

  // Multiplicative order of chi.
  std::int64_t order() const { return order_; }

  // Order of the scalar ring holding the values: 1 for real characters.
  std::int64_t ring_order() const { return order_ <= 2 ? 1 : order_; }

  // chi(a mod N); zero iff gcd(a, N) > 1.
  Scalar value(std::int64_t a) const { return values_[static_cast<std::size_t>(mod(a, modulus_))]; }

  // Angle t with chi(a) = e(t), or nullopt where chi(a) = 0.
  const std::optional<Rational>& angle(std::int64_t a) const { return angles_[static_cast<std::size_t>(mod(a, modulus_))]; }

  // chi viewed as a character mod N (N a multiple of the modulus): zero when gcd(a, N) > 1.
  Scalar value_at_level(std::int64_t a, std::int64_t N) const {
    if (gcd(a, N) != 1) return Scalar(0);
    return value(a);
  }

  bool is_principal() const {
    for (const auto& t : angles_)
      if (t && *t != 0) return false;
    return true;
  }

  friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y) {
    return x.modulus_ == y.modulus_ && x.angles_ == y.angles_;
  }

 private:
  DirichletCharacter() = default;

  static Rational fractional_part(const Rational& t) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return t - Rational(q);
  }

  static std::optional<Rational> parse_table_entry(std::string_view item) {
    if (item == "0") return std::nullopt;
    if (item.substr(0, 5) != "zeta^") throw std::invalid_argument("malformed character value '" + std::string(item) + "'");
    auto body = item.substr(5);
    if (body.find('/') == std::string_view::npos) throw std::invalid_argument("malformed character value '" + std::string(item) + "'");
    return parse_rational(body);
  }

  void validate_table() const {
    const auto N = modulus_;
    for (std::int64_t a = 0; a < N; ++a) {
      bool unit = gcd(a, N) == 1;
      if (unit != angles_[static_cast<std::size_t>(a)].has_value())
        throw std::invalid_argument("character table mod " + std::to_string(N) + ": value at " + std::to_string(a) +
                                    (unit ? " must be nonzero" : " must be zero"));
    }
    if (*angles_[static_cast<std::size_t>(1 % N)] != 0)
      throw std::invalid_argument("character table: chi(1) must be 1");
    for (std::int64_t a = 0; a < N; ++a) {
      const auto& ta = angles_[static_cast<std::size_t>(a)];
      if (!ta) continue;
      for (std::int64_t b = a; b < N; ++b) {
        const auto& tb = angles_[static_cast<std::size_t>(b)];
        if (!tb) continue;
        const auto& tab = angles_[static_cast<std::size_t>((a * b) % N)];
        Rational diff = *tab - *ta - *tb;
        if (!is_integer(diff))
          throw std::invalid_argument("character table mod " + std::to_string(N) + " is not multiplicative at (" +
                                      std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }

  void finish() {
    order_ = 1;
    for (const auto& t : angles_)
      if (t) order_ = lcm(order_, static_cast<std::int64_t>(t->get_den().get_si()));
    values_.clear();
    for (const auto& t : angles_) {
      if (!t) {
        values_.emplace_back(0);
        continue;
      }
      auto M = static_cast<std::int64_t>(t->get_den().get_si());
      auto j = static_cast<std::int64_t>(t->get_num().get_si());
      auto v = Scalar::root_of_unity(j, M);
      values_.push_back(*v.restrict_to(ring_order()));
    }
  }

  Kind kind_ = Kind::trivial;
  std::int64_t modulus_ = 1;
  std::int64_t disc_ = 1;
  std::int64_t order_ = 1;
  std::vector<std::optional<Rational>> angles_;
  std::vector<Scalar> values_;
};

inline Scalar char_value(const DirichletCharacter& chi, std::int64_t a) { return chi.value(a); }

// chi(g) := conj(chi(a)) for g in Delta_N; N defaults to the modulus.
inline Scalar char_on_delta(const DirichletCharacter& chi, const MatrixZ2& g, std::int64_t N) {
  if (N % chi.modulus() != 0)
    throw std::invalid_argument("level " + std::to_string(N) + " is not a multiple of the character modulus " +
                                std::to_string(chi.modulus()));
  require_delta(g, N);
  return chi.value(g.a).conj();
}

inline Scalar char_on_delta(const DirichletCharacter& chi, const MatrixZ2& g) { return char_on_delta(chi, g, chi.modulus()); }

// chi(-1) = (-1)^k.
inline bool parity_compatible(const DirichletCharacter& chi, std::int64_t k) {
  return chi.value(-1) == Scalar(k % 2 == 0 ? 1 : -1);
}

}  // namespace sk
