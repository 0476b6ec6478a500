#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "sk/arith.hpp"
#include "sk/bernoulli.hpp"
#include "sk/character.hpp"

namespace sk {

// Cohen's H(r, N). H(r, 0) = zeta(1 - 2r); for N > 0 it vanishes unless
// (-1)^r N = 0,1 mod 4, and otherwise, writing (-1)^r N = D f^2 with D
// fundamental,
//   H(r, N) = L(1 - r, chi_D) * sum_{d | f} mu(d) chi_D(d) d^{r-1} sigma_{2r-1}(f/d)
// with L(1 - r, chi_D) = -B_{r,chi_D} / r. H(1, N) is the Hurwitz class number.
inline Rational cohen_h(std::int64_t r, std::int64_t N) {
  if (r < 1) throw std::domain_error("cohen_h: r must be positive");
  if (N < 0) throw std::domain_error("cohen_h: N must be non-negative");
  if (N == 0) {
    auto b = generalized_bernoulli(2 * r, DirichletCharacter::trivial()).rational();
    return -b / Rational(2 * r);
  }
  const std::int64_t s = (r % 2 == 0) ? N : -N;
  if (mod(s, 4) != 0 && mod(s, 4) != 1) return 0;
  auto [D, f] = fundamental_decomposition(s);
  auto chi = DirichletCharacter::kronecker(D);
  Rational l_value = -generalized_bernoulli(r, chi).rational() / Rational(r);
  Integer sum = 0;
  for (auto d : divisors(f)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    int kd = kronecker_symbol(D, d);
    if (kd == 0) continue;
    sum += mu * kd * ipow(d, static_cast<unsigned long>(r - 1)) * divisor_sigma(static_cast<unsigned long>(2 * r - 1), f / d);
  }
  return l_value * Rational(sum);
}

// Memoizes cohen_h in memory and in "<dir>/cohen_h.txt", one record per line:
// "H <r> <N> <num>/<den>". The file is created on first insertion; duplicate
// records must agree. Concurrent readers share the lock, writers are exclusive.
class CohenCache {
 public:
  explicit CohenCache(std::filesystem::path dir) : dir_(std::move(dir)) { load(); }

  // $SK_CACHE_DIR, or ".skcache" when unset.
  static std::filesystem::path default_directory() {
    if (const char* env = std::getenv("SK_CACHE_DIR"); env && *env) return env;
    return ".skcache";
  }

  std::filesystem::path file() const { return dir_ / "cohen_h.txt"; }

  Rational get(std::int64_t r, std::int64_t N) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find({r, N}); it != values_.end()) return it->second;
    }
    Rational value = cohen_h(r, N);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = values_.emplace(std::pair{r, N}, value);
    if (inserted) append(r, N, value);
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

 private:
  void load() {
    std::ifstream in(file());
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::istringstream fields(line);
      std::string tag, value_txt;
      std::int64_t r = 0, N = 0;
      if (!(fields >> tag >> r >> N >> value_txt) || tag != "H")
        throw std::runtime_error(file().string() + ":" + std::to_string(lineno) + ": malformed cache record");
      auto value = parse_rational(value_txt);
      auto [it, inserted] = values_.emplace(std::pair{r, N}, value);
      if (!inserted && it->second != value)
        throw std::runtime_error(file().string() + ":" + std::to_string(lineno) + ": conflicting duplicate for H(" +
                                 std::to_string(r) + ", " + std::to_string(N) + ")");
    }
  }

  void append(std::int64_t r, std::int64_t N, const Rational& value) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(file(), std::ios::app);
    if (!out) return;  // read-only location: keep the in-memory value
    out << "H " << r << ' ' << N << ' ' << to_string(value) << '\n';
  }

  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> values_;
};

}  // namespace sk
