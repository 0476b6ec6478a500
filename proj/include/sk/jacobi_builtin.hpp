#pragma once

// Level-1 generator forms. Elliptic forms come back as index-0 expansions.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sk/arith.hpp"
#include "sk/cohen.hpp"
#include "sk/jacobi.hpp"

namespace sk {

inline const std::vector<std::string>& builtin_form_names() {
  static const std::vector<std::string> names{"E4", "E6", "Delta", "E4_1", "E6_1", "phi10_1", "phi12_1"};
  return names;
}

namespace detail {

// 1 + c * sum sigma_{k-1}(n) q^n
inline JacobiExpansion elliptic_eisenstein(std::int64_t k, std::int64_t c, std::int64_t n_max) {
  JacobiExpansion out(k, 0, 1, DirichletCharacter::trivial(), n_max);
  out.set(0, 0, Scalar(1));
  for (std::int64_t n = 1; n <= n_max; ++n) out.set(n, 0, Scalar(Rational(c * divisor_sigma(static_cast<unsigned long>(k - 1), n))));
  return out;
}

// q prod (1 - q^n)^24
inline JacobiExpansion delta_product(std::int64_t n_max) {
  std::vector<Integer> poly(static_cast<std::size_t>(n_max) + 1);
  if (n_max >= 1) poly[1] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (auto i = static_cast<std::int64_t>(poly.size()) - 1; i >= n; --i)
        poly[static_cast<std::size_t>(i)] -= poly[static_cast<std::size_t>(i - n)];
  JacobiExpansion out(12, 0, 1, DirichletCharacter::trivial(), n_max, true);
  for (std::int64_t n = 0; n <= n_max; ++n) out.set(n, 0, Scalar(poly[static_cast<std::size_t>(n)]));
  return out;
}

// c(n, r) = H(k-1, 4n - r^2) / H(k-1, 0)
inline JacobiExpansion jacobi_eisenstein(std::int64_t k, std::int64_t n_max, CohenCache* cache) {
  auto h = [&](std::int64_t r, std::int64_t N) { return cache ? cache->get(r, N) : cohen_h(r, N); };
  const Rational norm = h(k - 1, 0);
  JacobiExpansion out(k, 1, 1, DirichletCharacter::trivial(), n_max);
  out.for_each([&](std::int64_t n, std::int64_t r, const Scalar&) { out.set(n, r, Scalar(h(k - 1, 4 * n - r * r) / norm)); });
  return out;
}

}  // namespace detail

// One of builtin_form_names(); cohen_h values go through the cache when given.
inline JacobiExpansion builtin_form(std::string_view name, std::int64_t n_max, CohenCache* cache = nullptr) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (name == "E4") return detail::elliptic_eisenstein(4, 240, n_max);
  if (name == "E6") return detail::elliptic_eisenstein(6, -504, n_max);
  if (name == "Delta") return detail::delta_product(n_max);
  if (name == "E4_1") return detail::jacobi_eisenstein(4, n_max, cache);
  if (name == "E6_1") return detail::jacobi_eisenstein(6, n_max, cache);
  if (name == "phi10_1" || name == "phi12_1") {
    auto e4 = detail::elliptic_eisenstein(4, 240, n_max);
    auto e6 = detail::elliptic_eisenstein(6, -504, n_max);
    auto e41 = detail::jacobi_eisenstein(4, n_max, cache);
    auto e61 = detail::jacobi_eisenstein(6, n_max, cache);
    JacobiExpansion phi = name == "phi10_1" ? mul_elliptic(e41, e6) - mul_elliptic(e61, e4)
                                            : mul_elliptic(mul_elliptic(e41, e4), e4) - mul_elliptic(e61, e6);
    phi *= Scalar(make_rational(1, 144));
    return phi.with_cusp(true);
  }
  throw std::invalid_argument("unknown built-in form '" + std::string(name) + "'");
}

}  // namespace sk
