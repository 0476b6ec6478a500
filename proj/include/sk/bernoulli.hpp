#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sk/character.hpp"
#include "sk/scalar.hpp"

namespace sk {

// B_{n,chi} from  sum_{a=1..f} chi(a) t e^{at} / (e^{ft} - 1) = sum_n B_{n,chi} t^n / n!,
// f the modulus of chi, by exact power-series division. With f = 1 this
// convention gives B_1 = +1/2.
inline Scalar generalized_bernoulli(std::int64_t n, const DirichletCharacter& chi) {
  if (n < 0) throw std::domain_error("generalized_bernoulli: n must be non-negative");
  const auto f = chi.modulus();
  const auto len = static_cast<std::size_t>(n) + 1;

  std::vector<Rational> inv_fact(len + 1);
  Integer fact = 1;
  for (std::size_t j = 0; j <= len; ++j) {
    if (j) fact *= static_cast<unsigned long>(j);
    inv_fact[j] = Rational(Integer(1), fact);
  }

  // sum_a chi(a) e^{at}
  std::vector<Scalar> numer(len);
  for (std::int64_t a = 1; a <= f; ++a) {
    auto c = chi.value(a);
    if (c.is_zero()) continue;
    Integer power = 1;
    for (std::size_t j = 0; j < len; ++j) {
      numer[j] += c * (Rational(power) * inv_fact[j]);
      power *= static_cast<long>(a);
    }
  }

  // (e^{ft} - 1)/t and its reciprocal.
  std::vector<Rational> denom(len);
  Integer fpow = f;
  for (std::size_t j = 0; j < len; ++j) {
    denom[j] = Rational(fpow) * inv_fact[j + 1];
    fpow *= static_cast<long>(f);
  }
  std::vector<Rational> recip(len);
  recip[0] = 1 / denom[0];
  for (std::size_t j = 1; j < len; ++j) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= j; ++i) acc += denom[i] * recip[j - i];
    recip[j] = -acc / denom[0];
  }

  Scalar coeff;
  for (std::size_t i = 0; i < len; ++i) coeff += numer[i] * recip[len - 1 - i];
  Integer nfact = 1;
  for (std::int64_t j = 2; j <= n; ++j) nfact *= static_cast<long>(j);
  return coeff * Rational(nfact);
}

}  // namespace sk
