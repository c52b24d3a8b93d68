#pragma once

// Plumbing behind the fpi command: the ring-spec file format, JSON and text
// reports, and the census runner.
//
// Ring-spec files are line based:
//
//   # comment
//   label = coordinate axes
//   p = 3
//   vars = x, y, z
//   ideal = x*y, x*z, y*z
//
// `ideal` may repeat; its generators accumulate. An empty or missing `ideal`
// is the zero ideal.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fpi/classify.hpp"
#include "fpi/error.hpp"
#include "fpi/groebner.hpp"
#include "fpi/poly_io.hpp"

namespace fpi {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Ring-spec files

namespace detail {

inline bool identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// [begin, end) of s with surrounding blanks removed.
inline std::pair<std::size_t, std::size_t> trimmed(std::string_view s, std::size_t begin, std::size_t end) {
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return {begin, end};
}

struct Located {
  std::string text;
  std::size_t line = 0, column = 0;
};

// Comma-separated pieces of line[begin, end), each trimmed, with positions.
inline std::vector<Located> split_commas(std::string_view line, std::size_t begin, std::size_t end, std::size_t lineno) {
  std::vector<Located> out;
  std::size_t start = begin;
  int depth = 0;
  for (std::size_t i = begin; i <= end; ++i) {
    if (i < end && line[i] == '(') ++depth;
    if (i < end && line[i] == ')') --depth;
    if (i == end || (line[i] == ',' && depth == 0)) {
      auto [a, b] = trimmed(line, start, i);
      if (a == b) throw ParseError(ErrorKind::Syntax, lineno, a + 1, "empty list entry");
      out.push_back({std::string(line.substr(a, b - a)), lineno, a + 1});
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

/// Parses a ring-spec file. Every failure is a ParseError with the line and
/// column of the offending text. With `require_homogeneous` off the ideal is
/// accepted as is (the affine Fedder path).
inline RingSpec parse_ring_spec(std::string_view text, bool require_homogeneous = true) {
  std::optional<detail::Located> p_text, label;
  std::optional<std::vector<detail::Located>> vars;
  std::vector<detail::Located> ideal;
  std::size_t lineno = 0, last_line = 1;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++lineno;
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t end = std::min(line.find('#'), line.size());
    auto [a, b] = detail::trimmed(line, 0, end);
    if (a == b) continue;
    last_line = lineno;
    std::size_t eq = line.find('=', a);
    if (eq == std::string_view::npos || eq >= b)
      throw ParseError(ErrorKind::Syntax, lineno, a + 1, "expected key = value");
    auto [ka, kb] = detail::trimmed(line, a, eq);
    std::string key(line.substr(ka, kb - ka));
    auto [va, vb] = detail::trimmed(line, eq + 1, b);
    detail::Located value{std::string(line.substr(va, vb - va)), lineno, va + 1};

    if (key == "p") {
      if (p_text) throw ParseError(ErrorKind::Syntax, lineno, ka + 1, "p given twice");
      p_text = value;
    } else if (key == "vars") {
      if (vars) throw ParseError(ErrorKind::Syntax, lineno, ka + 1, "vars given twice");
      if (va == vb) throw ParseError(ErrorKind::Syntax, lineno, va + 1, "no variables");
      vars = detail::split_commas(line, va, vb, lineno);
    } else if (key == "ideal") {
      if (va != vb)
        for (auto& g : detail::split_commas(line, va, vb, lineno)) ideal.push_back(std::move(g));
    } else if (key == "label") {
      if (label) throw ParseError(ErrorKind::Syntax, lineno, ka + 1, "label given twice");
      label = value;
    } else {
      throw ParseError(ErrorKind::Syntax, lineno, ka + 1, "unknown key '" + key + "'");
    }
  }
  if (!p_text) throw ParseError(ErrorKind::Syntax, last_line, 1, "missing p");
  if (!vars) throw ParseError(ErrorKind::Syntax, last_line, 1, "missing vars");

  std::uint64_t p = 0;
  const auto& pt = p_text->text;
  auto [ptr, ec] = std::from_chars(pt.data(), pt.data() + pt.size(), p);
  if (pt.empty() || ec != std::errc() || ptr != pt.data() + pt.size())
    throw ParseError(ec == std::errc::result_out_of_range ? ErrorKind::NonPrime : ErrorKind::Syntax, p_text->line,
                     p_text->column, "p must be a prime number, got '" + pt + "'");
  if (p >= (1ull << 31) || !is_prime(p))
    throw ParseError(ErrorKind::NonPrime, p_text->line, p_text->column, pt + " is not a prime below 2^31");
  PrimeField F(static_cast<std::uint32_t>(p));

  std::vector<std::string> names;
  for (auto& v : *vars) {
    const auto& s = v.text;
    if (!detail::identifier_start(s[0]) || !std::all_of(s.begin(), s.end(), detail::identifier_char))
      throw ParseError(ErrorKind::Syntax, v.line, v.column, "'" + s + "' is not a variable name");
    if (std::find(names.begin(), names.end(), s) != names.end())
      throw ParseError(ErrorKind::Syntax, v.line, v.column, "variable '" + s + "' repeated");
    names.push_back(s);
  }
  if (names.size() > kMaxVars - 2)
    throw ParseError(ErrorKind::Mismatch, (*vars)[0].line, (*vars)[0].column,
                     "at most " + std::to_string(kMaxVars - 2) + " variables");

  std::vector<Polynomial> gens;
  for (auto& g : ideal) {
    auto f = parse_polynomial(g.text, names, F, g.line, g.column);
    if (require_homogeneous && !f.is_homogeneous())
      throw ParseError(ErrorKind::NonHomogeneous, g.line, g.column, "generator '" + g.text + "' is not homogeneous");
    gens.push_back(std::move(f));
  }
  return RingSpec(F, std::move(names), std::move(gens), label ? label->text : std::string(), {}, require_homogeneous);
}

/// The ring-spec text of R; parse_ring_spec reads it back to the same ring.
inline std::string format_ring_spec(const RingSpec& R) {
  std::string out;
  if (!R.label().empty()) out += "label=" + R.label() + "\n";
  out += "p=" + std::to_string(R.p()) + "\n";
  out += "vars=";
  for (std::size_t i = 0; i < R.nvars(); ++i) out += (i ? "," : "") + R.vars()[i];
  out += "\nideal=";
  const auto& g = R.ideal().generators();
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + R.str(g[i]);
  return out + "\n";
}

/// F_p[x,y,z]/(g1, g2)
inline std::string ring_name(const RingSpec& R) {
  std::string out = "F_" + std::to_string(R.p()) + "[";
  for (std::size_t i = 0; i < R.nvars(); ++i) out += (i ? "," : "") + R.vars()[i];
  out += "]/(";
  const auto& g = R.ideal().generators();
  if (g.empty()) out += "0";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + R.str(g[i]);
  return out + ")";
}

// ---------------------------------------------------------------------------
// Reports

inline std::string_view to_string(Check c) {
  switch (c) {
    case Check::all: return "all";
    case Check::fpi: return "fpi";
    case Check::gorenstein: return "gorenstein";
    case Check::fpure: return "fpure";
    case Check::canonical: return "canonical";
  }
  return "all";
}

inline std::optional<Check> parse_check(std::string_view s) {
  for (Check c : {Check::all, Check::fpi, Check::gorenstein, Check::fpure, Check::canonical})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace detail {

inline Json polys(const RingSpec& R, const std::vector<Polynomial>& v) {
  Json a = Json::array();
  for (auto& f : v) a.push_back(R.str(f));
  return a;
}

inline Json poly_or_null(const RingSpec& R, const std::optional<Polynomial>& f) {
  return f ? Json(R.str(*f)) : Json(nullptr);
}

// true, false, or the string "inconclusive"
inline Json verdict_json(const std::optional<Verdict>& v) {
  if (!v) return nullptr;
  if (*v == Verdict::inconclusive) return "inconclusive";
  return *v == Verdict::yes;
}

}  // namespace detail

/// Stable key order; equal reports serialize to identical bytes.
inline Json report_json(const Report& r) {
  const auto& R = r.ring;
  Json j;
  j["schema"] = 1;
  j["ring"] = {{"label", R.label()},
               {"p", R.p()},
               {"vars", R.vars()},
               {"ideal", detail::polys(R, R.ideal().generators())}};
  j["check"] = to_string(r.check);
  j["status"] = r.inconclusive() ? "inconclusive" : "decisive";
  j["dimension"] = r.graded ? Json(r.dimension) : Json(nullptr);
  j["depth"] = r.graded ? Json(r.depth) : Json(nullptr);
  j["cohen_macaulay"] = r.graded ? Json(r.cohen_macaulay) : Json(nullptr);
  j["betti"] = r.graded ? Json(r.betti) : Json(nullptr);
  j["gorenstein"] = r.gorenstein ? Json(r.gorenstein->gorenstein) : Json(nullptr);
  j["f_pure"] = r.f_pure ? Json(r.f_pure->f_pure) : Json(nullptr);
  j["weakly_fpi"] = detail::verdict_json(r.weakly_fpi);
  j["method"] = r.method.empty() ? Json(nullptr) : Json(r.method);
  j["fpi_reason"] = r.fpi_reason.empty() ? Json(nullptr) : Json(r.fpi_reason);
  j["frobenius_dual_free"] = r.frobenius_dual_free ? Json(*r.frobenius_dual_free) : Json(nullptr);
  j["minimal_primes"] = r.minimal_primes ? Json(*r.minimal_primes) : Json(nullptr);

  Json d = Json::object();
  if (r.gorenstein)
    d["gorenstein"] = {{"nzds", detail::polys(R, r.gorenstein->nzds)},
                       {"socle_dimensions", r.gorenstein->socle_dimensions}};
  if (r.f_pure) {
    d["f_pure"] = {{"colon", detail::polys(R, r.f_pure->colon)},
                   {"witness", detail::poly_or_null(R, r.f_pure->witness)},
                   {"power", detail::poly_or_null(R, r.f_pure->power)},
                   {"power_mod_frobenius_maximal", detail::poly_or_null(R, r.f_pure->power_remainder)}};
  }
  if (r.canonical) {
    const auto& c = *r.canonical;
    d["canonical_ideal"] = {{"status", to_string(c.status)},
                            {"generators", detail::polys(R, c.generators)},
                            {"shift", c.shift},
                            {"trace", detail::polys(R, c.trace)},
                            {"nzd", detail::poly_or_null(R, c.nzd)},
                            {"quotient_check", to_string(c.quotient_check)},
                            {"trials", c.trials}};
  }
  if (r.multiplier) {
    const auto& m = *r.multiplier;
    d["multiplier"] = {{"verdict", to_string(m.verdict)},
                       {"h", detail::poly_or_null(R, m.h)},
                       {"f", detail::poly_or_null(R, m.f)},
                       {"reason", m.reason},
                       {"trials", m.trials}};
  }
  if (r.artinian) {
    const auto& a = *r.artinian;
    d["artinian"] = {{"length", a.length},
                     {"socle_dimension", a.socle_dimension},
                     {"dim_E", a.dim_E},
                     {"dim_FE", a.dim_FE},
                     {"power", a.power ? Json(*a.power) : Json(nullptr)},
                     {"injective", detail::verdict_json(a.injective)},
                     {"isomorphism", to_string(a.witness.verdict)},
                     {"reason", a.witness.reason},
                     {"trials", a.witness.trials}};
  }
  j["details"] = std::move(d);
  Json checks = Json::array();
  for (auto& c : r.cross_checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  j["cross_checks"] = std::move(checks);
  j["notes"] = r.notes;
  return j;
}

inline Json error_json(const Error& e) {
  Json err = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  return {{"schema", 1}, {"error", std::move(err)}};
}

namespace detail {

// Long witnesses are cut for the text report; JSON keeps them whole.
inline std::string brief(const RingSpec& R, const Polynomial& f, std::size_t max_chars = 160) {
  auto s = R.str(f);
  if (s.size() <= max_chars) return s;
  return s.substr(0, max_chars) + " ... (" + std::to_string(f.terms().size()) + " terms)";
}

}  // namespace detail

inline std::string report_text(const Report& r) {
  const auto& R = r.ring;
  auto str = [&](const Polynomial& f) { return detail::brief(R, f); };
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "ring           " << ring_name(R);
  if (!R.label().empty()) out << "  [" << R.label() << "]";
  out << "\n";
  if (r.graded) {
    out << "dimension      " << r.dimension << "\ndepth          " << r.depth << "\nCohen-Macaulay "
        << yn(r.cohen_macaulay) << "\nBetti numbers ";
    for (auto b : r.betti) out << " " << b;
    out << "\n";
  }
  if (r.gorenstein) out << "Gorenstein     " << yn(r.gorenstein->gorenstein) << "\n";
  if (r.f_pure) {
    out << "F-pure         " << yn(r.f_pure->f_pure);
    if (r.f_pure->witness) out << "  (witness " << str(*r.f_pure->witness) << ")";
    out << "\n";
    if (r.f_pure->power)
      out << "  f^(p-1) = " << str(*r.f_pure->power) << ", mod m^[p]: " << str(*r.f_pure->power_remainder) << "\n";
  }
  if (r.canonical) {
    out << "canonical      " << to_string(r.canonical->status);
    if (r.canonical->status == EmbeddingStatus::found) {
      out << "  ω ≅ (";
      for (std::size_t i = 0; i < r.canonical->generators.size(); ++i)
        out << (i ? ", " : "") << str(r.canonical->generators[i]);
      out << ")";
    }
    out << "\n";
  }
  if (r.weakly_fpi) {
    out << "weakly FPI     " << to_string(*r.weakly_fpi) << "  via " << r.method;
    if (!r.fpi_reason.empty()) out << ": " << r.fpi_reason;
    out << "\n";
  }
  if (r.multiplier && r.multiplier->h)
    out << "  (" << str(*r.multiplier->f) << ")·ω^[p] = (" << str(*r.multiplier->h) << ")·ω\n";
  if (r.minimal_primes) out << "minimal primes " << *r.minimal_primes << "\n";
  for (auto& c : r.cross_checks) out << "check " << c.name << ": " << c.status << " (" << c.detail << ")\n";
  for (auto& n : r.notes) out << "note: " << n << "\n";
  if (r.inconclusive()) out << "status: inconclusive\n";
  return out.str();
}

/// 0 decisive, 2 when a verdict was given up on.
inline int exit_code(const Report& r) { return r.inconclusive() ? 2 : 0; }

/// The Fedder-only report used for inhomogeneous input: no grading is
/// assumed, F-purity is tested at the origin.
inline Report affine_report(const RingSpec& R) {
  Report r;
  r.ring = R;
  r.check = Check::fpure;
  r.graded = false;
  r.f_pure = is_f_pure(R);
  r.notes.push_back("affine input: the grading is not validated; only F-purity at the origin is evaluated");
  return r;
}

struct ReportFlags {
  Check check = Check::all;
  ClassifyOptions classify{};
  bool json = true;
};

struct ReportOutput {
  std::string text;    // the serialized report, or the error object in JSON mode
  std::string error;   // human-readable error, empty on success
  int exit_code = 0;
};

/// Classifies R and serializes the result. Inhomogeneous rings (parsed with
/// the affine flag) only get the Fedder test. Errors become exit code 1.
inline ReportOutput run_report(const RingSpec& R, const ReportFlags& flags) {
  ReportOutput out;
  try {
    Report r;
    if (!R.is_homogeneous()) {
      if (flags.check != Check::fpure && flags.check != Check::all)
        throw Error(ErrorKind::NonHomogeneous, "inhomogeneous input supports only the fpure check");
      r = affine_report(R);
    } else {
      r = fpi_verdict(R, flags.classify, flags.check);
    }
    out.text = flags.json ? report_json(r).dump(2) + "\n" : report_text(r);
    out.exit_code = exit_code(r);
  } catch (const Error& e) {
    if (flags.json) out.text = error_json(e).dump(2) + "\n";
    out.error = e.what();
    out.exit_code = 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Census

enum class Family { monomial, binomial_sample };

struct CensusConfig {
  Family family = Family::monomial;
  std::size_t nvars = 3;
  unsigned max_degree = 2;  // generators have degree 2..max_degree
  std::vector<std::uint32_t> primes{2};
  std::uint64_t seed = 0;
  std::size_t samples = 20;                  // rings per prime for binomial-sample
  std::optional<std::size_t> dimension;      // keep only rows of this dimension
  std::size_t max_rows = 2000;               // enumeration stops here; output is then partial
  unsigned threads = 0;                      // 0: hardware concurrency
  ClassifyOptions classify{};
};

struct CensusRow {
  std::size_t index = 0;
  std::string ring;
  std::size_t dimension = 0;
  std::string cm, gorenstein, f_pure, fpi, minimal_primes, note;
  bool keep = true;
  bool inconclusive = false;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  bool partial = false;
  std::string partial_reason;
};

/// Per-row seed; a fixed mix so results do not depend on scheduling.
inline std::uint64_t row_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace detail {

inline std::vector<std::uint32_t> exponents(const Monomial& m) {
  std::vector<std::uint32_t> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
  return e;
}

// Sorted exponent vectors with variables permuted to the lexicographically
// least arrangement: one representative per symmetry class.
inline std::vector<Monomial> canonical_monomial_set(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<Monomial> best;
  bool first = true;
  do {
    std::vector<Monomial> img;
    for (auto& m : gens) {
      Monomial t(n);
      for (std::size_t i = 0; i < n; ++i) t.set(perm[i], m[i]);
      img.push_back(t);
    }
    std::sort(img.begin(), img.end(), [](const Monomial& a, const Monomial& b) { return exponents(a) < exponents(b); });
    auto key = [](const std::vector<Monomial>& v) {
      std::vector<std::vector<std::uint32_t>> k;
      for (auto& m : v) k.push_back(exponents(m));
      return k;
    };
    if (first || key(img) < key(best)) best = img;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<std::vector<Monomial>> monomial_family(const CensusConfig& c, bool& partial) {
  std::vector<Monomial> pool;
  for (unsigned d = 2; d <= c.max_degree; ++d)
    for (auto& m : monomials_of_degree(c.nvars, d)) pool.push_back(m);
  std::set<std::vector<std::vector<std::uint32_t>>> seen;
  std::vector<std::vector<Monomial>> out;
  std::vector<Monomial> chosen;
  // include/exclude over the pool, keeping the chosen set an antichain
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (out.size() >= c.max_rows) {
      partial = true;
      return;
    }
    if (i == pool.size()) {
      auto canon = canonical_monomial_set(chosen, c.nvars);
      std::vector<std::vector<std::uint32_t>> key;
      for (auto& m : canon) key.push_back(exponents(m));
      if (seen.insert(key).second) out.push_back(canon);
      return;
    }
    self(self, i + 1);
    bool free = std::none_of(chosen.begin(), chosen.end(),
                             [&](const Monomial& m) { return m.divides(pool[i]) || pool[i].divides(m); });
    if (free) {
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

inline std::vector<std::string> default_vars(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w"};
  return std::vector<std::string>(names, names + n);
}

}  // namespace detail

/// Rings of the family in enumeration order, one list per prime in turn.
inline std::vector<RingSpec> census_rings(const CensusConfig& c, bool& partial) {
  if (c.nvars < 1 || c.nvars > 4) throw Error(ErrorKind::Mismatch, "census variable count must be 1..4");
  auto vars = detail::default_vars(c.nvars);
  std::vector<RingSpec> out;
  partial = false;
  if (c.family == Family::monomial) {
    auto sets = detail::monomial_family(c, partial);
    for (auto p : c.primes) {
      PrimeField F(p);
      for (auto& s : sets) {
        std::vector<Polynomial> gens;
        for (auto& m : s) gens.push_back(Polynomial::monomial(F, m));
        out.emplace_back(F, vars, std::move(gens));
      }
    }
    return out;
  }
  std::mt19937_64 rng(c.seed);
  for (auto p : c.primes) {
    PrimeField F(p);
    std::set<std::string> seen;
    std::size_t attempts = 0;
    std::size_t made = 0;
    while (made < c.samples && attempts < 50 * c.samples + 50) {
      ++attempts;
      std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, c.nvars))(rng);
      std::vector<Polynomial> gens;
      for (std::size_t g = 0; g < k; ++g) {
        unsigned d = std::uniform_int_distribution<unsigned>(2, std::max(2u, c.max_degree))(rng);
        auto mons = detail::monomials_of_degree(c.nvars, d);
        std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
        auto a = mons[pick(rng)], b = mons[pick(rng)];
        if (a == b) continue;
        gens.push_back(Polynomial::monomial(F, a) - Polynomial::monomial(F, b));
      }
      if (gens.empty()) continue;
      RingSpec R(F, vars, std::move(gens));
      auto name = ring_name(R);
      if (!seen.insert(name).second) continue;
      out.push_back(std::move(R));
      ++made;
      if (out.size() >= c.max_rows) {
        partial = true;
        return out;
      }
    }
  }
  return out;
}

namespace detail {

inline std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "true" : "false";
}

inline CensusRow census_row(const RingSpec& R, std::size_t index, const CensusConfig& c) {
  CensusRow row;
  row.index = index;
  row.ring = ring_name(R);
  try {
    auto dd = dimension_depth(R);
    row.dimension = dd.dimension;
    if (c.dimension && dd.dimension != *c.dimension) {
      row.keep = false;
      return row;
    }
    row.cm = yes_no(dd.depth == dd.dimension);
    if (R.ideal().is_monomial()) row.minimal_primes = std::to_string(minimal_primes_monomial(R.ideal()).size());
    if (dd.dimension > 1) {
      row.f_pure = yes_no(is_f_pure(R).f_pure);
      row.gorenstein = row.fpi = "n/a";
      row.note = "dimension above 1 is not decided";
      return row;
    }
    ClassifyOptions opt = c.classify;
    opt.seed = row_seed(c.seed, index);
    auto r = fpi_verdict(R, opt);
    row.gorenstein = yes_no(r.gorenstein->gorenstein);
    row.f_pure = yes_no(r.f_pure->f_pure);
    row.fpi = std::string(to_string(*r.weakly_fpi));
    row.inconclusive = r.inconclusive();
    if (r.inconclusive()) row.note = r.fpi_reason;
    if (!R.ideal().is_monomial() && dd.dimension == 1) row.note = "two-primes check advisory (non-monomial)";
  } catch (const std::exception& e) {
    row.note = e.what();
    for (auto* s : {&row.cm, &row.gorenstein, &row.f_pure, &row.fpi})
      if (s->empty()) *s = "error";
    row.inconclusive = true;
  }
  return row;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// Rows are evaluated on a thread pool and reported in enumeration order.
inline CensusResult run_census(const CensusConfig& c) {
  CensusResult res;
  auto rings = census_rings(c, res.partial);
  if (res.partial) res.partial_reason = "row cap " + std::to_string(c.max_rows) + " reached";
  std::vector<CensusRow> rows(rings.size());
  std::atomic<std::size_t> next{0};
  unsigned nthreads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, std::max<std::size_t>(1, rings.size())));
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rings.size();) rows[i] = detail::census_row(rings[i], i, c);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& r : rows)
    if (r.keep) res.rows.push_back(std::move(r));
  return res;
}

inline std::string census_csv(const CensusResult& res) {
  std::string out = "ring,dim,CM,Gorenstein,F-pure,FPI,#min-primes,note\n";
  for (auto& r : res.rows) {
    out += detail::csv_field(r.ring) + "," + std::to_string(r.dimension) + "," + r.cm + "," + r.gorenstein + "," +
           r.f_pure + "," + r.fpi + "," + (r.minimal_primes.empty() ? "n/a" : r.minimal_primes) + "," +
           detail::csv_field(r.note) + "\n";
  }
  if (res.partial) out += "# partial: " + res.partial_reason + "\n";
  return out;
}

struct CensusSummary {
  std::size_t rows = 0, fpi = 0, gorenstein = 0, fpi_not_gorenstein = 0, inconclusive = 0, errors = 0;
};

inline CensusSummary summarize(const CensusResult& res) {
  CensusSummary s;
  for (auto& r : res.rows) {
    ++s.rows;
    s.fpi += r.fpi == "true";
    s.gorenstein += r.gorenstein == "true";
    s.fpi_not_gorenstein += r.fpi == "true" && r.gorenstein == "false";
    s.inconclusive += r.inconclusive;
    s.errors += r.fpi == "error";
  }
  return s;
}

}  // namespace fpi
