#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sk {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Integer ipow(std::int64_t base, unsigned long e) {
  return ipow(Integer(static_cast<long>(base)), e);
}

// base^e for any integer e; base must be nonzero when e < 0.
inline Rational rpow(std::int64_t base, std::int64_t e) {
  if (e >= 0) return Rational(ipow(base, static_cast<unsigned long>(e)));
  if (base == 0) throw std::domain_error("0 raised to a negative power");
  Rational q{Integer(1), ipow(base, static_cast<unsigned long>(-e))};
  q.canonicalize();
  return q;
}

// Always "num/den", including den = 1.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "a/b" or "a".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num_txt = std::string(text.substr(0, slash));
  auto den_txt = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid(num_txt) || !valid(den_txt)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (num_txt[0] == '+') num_txt.erase(0, 1);
  if (den_txt[0] == '+') den_txt.erase(0, 1);
  Integer num(num_txt), den(den_txt);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q{num, den};
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace sk
