#pragma once

// The sk command line: gen, lift, verify, hecke, cohen. run() returns the exit
// code: 0 on success or a true verdict, 1 on a false verdict, 2 on errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sk/cohen.hpp"
#include "sk/format.hpp"
#include "sk/hecke.hpp"
#include "sk/jacobi_builtin.hpp"
#include "sk/relations.hpp"
#include "sk/siegel.hpp"

namespace sk::cli {

enum ExitCode : int { ok = 0, verdict_false = 1, failure = 2 };

// Writes to the file at path, or to out when path is empty.
template <class Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(file);
  if (!file.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

inline int cmd_gen(const std::string& name, std::int64_t n_max, const std::string& out_path, std::ostream& out) {
  CohenCache cache(CohenCache::default_directory());
  auto phi = builtin_form(name, n_max, &cache);
  emit(out_path, out, [&](std::ostream& os) { write_skjf(os, phi); });
  return ok;
}

inline int cmd_lift(const std::string& in_path, std::int64_t m_max, const std::string& out_path, std::ostream& out) {
  auto in = open_input(in_path);
  auto phi = read_skjf(in);
  auto F = lift(phi, m_max);
  emit(out_path, out, [&](std::ostream& os) { write_sksf(os, F); });
  return ok;
}

struct VerifyOptions {
  std::string mode = "all";
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> l;
};

// classical: classical relations. symmetric: at --l, or at every prime in
// the box. plocal: at --p, or at every prime in the box. all: all of these
// over the primes in the box, plus the singular law.
inline RelationReport verify_report(const SiegelExpansion& F, const VerifyOptions& opt) {
  const auto primes = primes_in_box(F);
  if (opt.mode == "classical") return check_classical(F);
  if (opt.mode == "symmetric") {
    if (opt.l) return check_symmetric(F, *opt.l);
    RelationReport report;
    for (auto p : primes) report.merge(check_symmetric(F, p));
    return report;
  }
  if (opt.mode == "plocal") {
    if (opt.p) return check_p_relations(F, *opt.p);
    RelationReport report;
    for (auto p : primes) report.merge(check_p_relations(F, p));
    return report;
  }
  if (opt.mode == "all") {
    RelationReport report = check_classical(F);
    report.merge(is_maass(F, primes));
    for (auto p : primes) report.merge(check_p_relations(F, p));
    return report;
  }
  throw std::invalid_argument("unknown verify mode '" + opt.mode + "'");
}

inline int cmd_verify(const std::string& in_path, const VerifyOptions& opt, std::ostream& out) {
  auto in = open_input(in_path);
  auto F = read_sksf(in);
  auto report = verify_report(F, opt);
  write_report(out, report);
  return report.verdict() ? ok : verdict_false;
}

// sum_{d | (m,n), (d,N) = 1} d T(d,d) T(mn/d^2), written symbolically.
inline std::string theorem_rhs_text(std::int64_t N, std::int64_t m, std::int64_t n) {
  std::string out;
  for (auto d : divisors_coprime_to(gcd(m, n), N)) {
    if (!out.empty()) out += " + ";
    const auto rest = m * n / (d * d);
    if (d == 1) {
      out += "T(" + std::to_string(rest) + ")";
      continue;
    }
    out += std::to_string(d) + "·T(" + std::to_string(d) + "," + std::to_string(d) + ")";
    if (rest > 1) out += "·T(" + std::to_string(rest) + ")";
  }
  return out;
}

inline std::string product_text(std::int64_t m, std::int64_t n) {
  return "T(" + std::to_string(m) + ")∘T(" + std::to_string(n) + ")";
}

inline int cmd_hecke(const std::string& sub, std::int64_t N, std::int64_t m, std::int64_t n, std::int64_t l, std::ostream& out) {
  if (N < 1 || m < 1 || n < 1 || l < 1) throw std::invalid_argument("hecke parameters must be positive");
  if (sub == "cosets") {
    for (const auto& rep : coset_representatives(N, l)) out << rep.matrix.to_string() << '\n';
    return ok;
  }
  if (sub == "mul") {
    auto product = multiply(tl_element(N, m), tl_element(N, n));
    out << product_text(m, n) << " = ";
    if (product == theorem_rhs(N, m, n)) out << theorem_rhs_text(N, m, n) << " = ";
    out << product.to_string() << '\n';
    return ok;
  }
  if (sub == "verify-identity") {
    auto product = multiply(tl_element(N, m), tl_element(N, n));
    auto expected = theorem_rhs(N, m, n);
    if (product == expected) {
      out << "OK: " << product_text(m, n) << " = " << theorem_rhs_text(N, m, n) << '\n';
      return ok;
    }
    out << "FAIL: " << product_text(m, n) << " = " << product.to_string() << " but " << theorem_rhs_text(N, m, n) << " = "
        << expected.to_string() << '\n';
    return verdict_false;
  }
  throw std::invalid_argument("unknown hecke subcommand '" + sub + "'");
}

inline int cmd_cohen(std::int64_t r, std::int64_t from, std::int64_t to, std::ostream& out) {
  if (from < 0 || to < from) throw std::invalid_argument("cohen needs 0 <= from <= to");
  CohenCache cache(CohenCache::default_directory());
  for (std::int64_t N = from; N <= to; ++N) out << "H(" << r << "," << N << ") = " << to_string(cache.get(r, N)) << '\n';
  return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saito-Kurokawa lifts and Maass relations with exact arithmetic", "sk"};
  app.require_subcommand(1);

  std::string name, in_path, out_path, sub, mode = "all";
  std::int64_t n_max = 0, m_max = 0, N = 1, m = 1, n = 1, l = 1, r = 1, from = 0, to = 0;
  std::optional<std::int64_t> p_opt, l_opt;

  auto* gen = app.add_subcommand("gen", "write the SKJF file of a built-in form");
  gen->add_option("name", name, "form name")->required()->check(CLI::IsMember(builtin_form_names()));
  gen->add_option("--nmax", n_max, "truncation in n")->required();
  gen->add_option("--out", out_path, "output file");

  auto* lift_cmd = app.add_subcommand("lift", "lift an index-1 SKJF file to an SKSF file");
  lift_cmd->add_option("input", in_path, "SKJF file")->required();
  lift_cmd->add_option("--mmax", m_max, "number of Fourier-Jacobi coefficients")->required();
  lift_cmd->add_option("--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "check the Maass relations of an SKSF file");
  verify->add_option("input", in_path, "SKSF file")->required();
  verify->add_option("--mode", mode, "classical, symmetric, plocal or all")->check(CLI::IsMember({"classical", "symmetric", "plocal", "all"}));
  verify->add_option("--p", p_opt, "prime for plocal");
  verify->add_option("--l", l_opt, "index for symmetric");

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra of Gamma_0(N)");
  hecke->add_option("sub", sub, "cosets, mul or verify-identity")->required()->check(CLI::IsMember({"cosets", "mul", "verify-identity"}));
  hecke->add_option("--N", N, "level");
  hecke->add_option("--m", m, "first factor T(m)");
  hecke->add_option("--n", n, "second factor T(n)");
  hecke->add_option("--l", l, "determinant for cosets");

  auto* cohen = app.add_subcommand("cohen", "print Cohen's H(r, N) for a range of N");
  cohen->add_option("--r", r, "r >= 1");
  cohen->add_option("--from", from, "first N");
  cohen->add_option("--to", to, "last N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }

  try {
    if (*gen) return cmd_gen(name, n_max, out_path, out);
    if (*lift_cmd) return cmd_lift(in_path, m_max, out_path, out);
    if (*verify) return cmd_verify(in_path, {mode, p_opt, l_opt}, out);
    if (*hecke) return cmd_hecke(sub, N, m, n, l, out);
    if (*cohen) return cmd_cohen(r, from, to, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
  return failure;
}

}  // namespace sk::cli
