#pragma once

// Line-oriented text formats: SKJF (Jacobi expansions), SKSF (degree-2
// expansions) and relation reports. Values are exact; scalars of a character
// with non-real values are written as comma-joined cyclotomic coordinates.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sk/jacobi.hpp"
#include "sk/relations.hpp"
#include "sk/siegel.hpp"

namespace sk {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string format_value(const Scalar& v, const DirichletCharacter& chi) {
  const auto M = chi.ring_order();
  if (M == 1) return v.to_string();
  auto in_ring = v.restrict_to(M);
  if (!in_ring) throw std::invalid_argument("coefficient " + v.coords_string() + " is not in the value ring of " + chi.spec());
  return in_ring->coords_string();
}

inline Scalar parse_value(const std::string& text, const DirichletCharacter& chi, std::size_t line) {
  Scalar v;
  try {
    v = Scalar::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
  auto in_ring = v.restrict_to(chi.ring_order());
  if (!in_ring) throw ParseError(line, "value '" + text + "' is not in the value ring of " + chi.spec());
  return *in_ring;
}

inline std::int64_t parse_int(const std::string& text, std::size_t line, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParseError(line, "malformed " + what + " '" + text + "'");
  return v;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line, or nullopt at end of input.
  std::optional<std::string> next() {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (text.find_first_not_of(" \t") != std::string::npos) return text;
    }
    return std::nullopt;
  }

  std::string require(const std::string& what) {
    auto text = next();
    if (!text) throw ParseError(line_ + 1, "missing " + what);
    return *text;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

inline std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// "key=value" fields; exactly the given keys, in that order.
inline std::map<std::string, std::string> parse_header(const std::string& text, const std::vector<std::string>& keys, std::size_t line) {
  auto words = split_words(text);
  if (words.size() != keys.size()) throw ParseError(line, "header needs " + std::to_string(keys.size()) + " fields, got " + std::to_string(words.size()));
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto eq = words[i].find('=');
    if (eq == std::string::npos || words[i].substr(0, eq) != keys[i])
      throw ParseError(line, "expected field '" + keys[i] + "=', got '" + words[i] + "'");
    out[keys[i]] = words[i].substr(eq + 1);
  }
  return out;
}

inline bool parse_flag(const std::string& text, std::size_t line) {
  if (text == "0") return false;
  if (text == "1") return true;
  throw ParseError(line, "cusp flag must be 0 or 1, got '" + text + "'");
}

inline DirichletCharacter parse_character(const std::string& text, std::size_t line) {
  try {
    return DirichletCharacter::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace detail

inline void write_skjf(std::ostream& out, const JacobiExpansion& phi) {
  out << "SKJF 1\n";
  out << "k=" << phi.weight() << " m=" << phi.index() << " N=" << phi.level() << " chi=" << phi.character().spec()
      << " nmax=" << phi.n_max() << " cusp=" << (phi.cusp() ? 1 : 0) << '\n';
  phi.for_each([&](std::int64_t n, std::int64_t r, const Scalar& v) {
    out << n << ' ' << r << ' ' << detail::format_value(v, phi.character()) << '\n';
  });
}

inline JacobiExpansion read_skjf(std::istream& in) {
  detail::LineReader reader(in);
  if (reader.require("SKJF header") != "SKJF 1") throw ParseError(reader.line(), "expected 'SKJF 1'");
  auto params = reader.require("parameter line");
  auto header = detail::parse_header(params, {"k", "m", "N", "chi", "nmax", "cusp"}, reader.line());
  const auto hline = reader.line();
  std::optional<JacobiExpansion> phi;
  try {
    phi.emplace(detail::parse_int(header["k"], hline, "k"), detail::parse_int(header["m"], hline, "m"),
                detail::parse_int(header["N"], hline, "N"), detail::parse_character(header["chi"], hline),
                detail::parse_int(header["nmax"], hline, "nmax"), detail::parse_flag(header["cusp"], hline));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(hline, e.what());
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  while (auto text = reader.next()) {
    auto words = detail::split_words(*text);
    if (words.size() != 3) throw ParseError(reader.line(), "expected '<n> <r> <value>'");
    auto n = detail::parse_int(words[0], reader.line(), "n");
    auto r = detail::parse_int(words[1], reader.line(), "r");
    if (n < 0 || n > phi->n_max()) throw ParseError(reader.line(), "n=" + std::to_string(n) + " outside 0.." + std::to_string(phi->n_max()));
    if (!phi->in_support(n, r)) throw ParseError(reader.line(), "(" + words[0] + "," + words[1] + ") violates 4nm - r^2 >= 0");
    if (!seen.insert({n, r}).second) throw ParseError(reader.line(), "duplicate entry for (" + words[0] + "," + words[1] + ")");
    try {
      phi->set(n, r, detail::parse_value(words[2], phi->character(), reader.line()));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(reader.line(), e.what());
    }
  }
  phi->for_each([&](std::int64_t n, std::int64_t r, const Scalar&) {
    if (!seen.count({n, r})) throw ParseError(reader.line(), "missing coefficient c(" + std::to_string(n) + "," + std::to_string(r) + ")");
  });
  return *phi;
}

inline void write_sksf(std::ostream& out, const SiegelExpansion& F) {
  out << "SKSF 1\n";
  out << "k=" << F.weight() << " N=" << F.level() << " chi=" << F.character().spec() << " nmax=" << F.n_max() << " mmax=" << F.m_max()
      << " cusp=" << (F.cusp() ? 1 : 0) << '\n';
  F.for_each([&](const HalfIntegralIndex& t, const Scalar& v) {
    out << t.n << ' ' << t.r << ' ' << t.m << ' ' << detail::format_value(v, F.character()) << '\n';
  });
}

inline SiegelExpansion read_sksf(std::istream& in) {
  detail::LineReader reader(in);
  if (reader.require("SKSF header") != "SKSF 1") throw ParseError(reader.line(), "expected 'SKSF 1'");
  auto params = reader.require("parameter line");
  auto header = detail::parse_header(params, {"k", "N", "chi", "nmax", "mmax", "cusp"}, reader.line());
  const auto hline = reader.line();
  std::optional<SiegelExpansion> F;
  try {
    F.emplace(detail::parse_int(header["k"], hline, "k"), detail::parse_int(header["N"], hline, "N"),
              detail::parse_character(header["chi"], hline), detail::parse_int(header["nmax"], hline, "nmax"),
              detail::parse_int(header["mmax"], hline, "mmax"), detail::parse_flag(header["cusp"], hline));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(hline, e.what());
  }
  std::set<HalfIntegralIndex> seen;
  while (auto text = reader.next()) {
    auto words = detail::split_words(*text);
    if (words.size() != 4) throw ParseError(reader.line(), "expected '<n> <r> <m> <value>'");
    HalfIntegralIndex t{detail::parse_int(words[0], reader.line(), "n"), detail::parse_int(words[1], reader.line(), "r"),
                        detail::parse_int(words[2], reader.line(), "m")};
    const auto where = "(" + words[0] + "," + words[1] + "," + words[2] + ")";
    if (!F->in_box(t.n, t.m)) throw ParseError(reader.line(), where + " outside the box");
    if (!t.in_x_star()) throw ParseError(reader.line(), where + " is not a nonzero T >= 0");
    if (!seen.insert(t).second) throw ParseError(reader.line(), "duplicate entry for " + where);
    try {
      F->set(t.n, t.r, t.m, detail::parse_value(words[3], F->character(), reader.line()));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(reader.line(), e.what());
    }
  }
  F->for_each([&](const HalfIntegralIndex& t, const Scalar&) {
    if (!seen.count(t))
      throw ParseError(reader.line(), "missing coefficient A(" + std::to_string(t.n) + "," + std::to_string(t.r) + "," + std::to_string(t.m) + ")");
  });
  return *F;
}

inline void write_report(std::ostream& out, const RelationReport& report) {
  out << "VERDICT=" << (report.verdict() ? "true" : "false") << '\n';
  for (const auto& v : report.violations)
    out << "REL=" << v.relation << " T=(" << v.t.n << ',' << v.t.r << ',' << v.t.m << ") l=" << v.l << " L=" << v.left.to_string()
        << " R=" << v.right.to_string() << '\n';
  out << "SKIPPED=" << report.skipped << '\n';
}

inline RelationReport read_report(std::istream& in) {
  detail::LineReader reader(in);
  auto first = reader.require("verdict line");
  if (first != "VERDICT=true" && first != "VERDICT=false") throw ParseError(reader.line(), "expected VERDICT=true|false");
  RelationReport report;
  bool done = false;
  while (auto text = reader.next()) {
    if (done) throw ParseError(reader.line(), "content after SKIPPED line");
    if (text->rfind("SKIPPED=", 0) == 0) {
      report.skipped = detail::parse_int(text->substr(8), reader.line(), "skipped count");
      done = true;
      continue;
    }
    auto words = detail::split_words(*text);
    auto field = [&](std::size_t i, const std::string& key) {
      if (i >= words.size() || words[i].rfind(key, 0) != 0) throw ParseError(reader.line(), "expected field '" + key + "'");
      return words[i].substr(key.size());
    };
    if (words.size() != 5) throw ParseError(reader.line(), "violation line needs 5 fields");
    Violation v;
    v.relation = field(0, "REL=");
    auto t = field(1, "T=");
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError(reader.line(), "malformed T field '" + t + "'");
    std::istringstream tuple(t.substr(1, t.size() - 2));
    std::string part;
    std::vector<std::int64_t> nrm;
    while (std::getline(tuple, part, ',')) nrm.push_back(detail::parse_int(part, reader.line(), "T entry"));
    if (nrm.size() != 3) throw ParseError(reader.line(), "T needs three entries");
    v.t = {nrm[0], nrm[1], nrm[2]};
    v.l = detail::parse_int(field(2, "l="), reader.line(), "l");
    try {
      v.left = Scalar::parse(field(3, "L="));
      v.right = Scalar::parse(field(4, "R="));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(reader.line(), e.what());
    }
    report.violations.push_back(std::move(v));
  }
  if (!done) throw ParseError(reader.line() + 1, "missing SKIPPED line");
  if ((first == "VERDICT=true") != report.verdict()) throw ParseError(1, "verdict disagrees with the violation list");
  return report;
}

}  // namespace sk
