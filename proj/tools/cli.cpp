#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mpbern/mahler.hpp"
#include "mpbern/padic_bounds.hpp"
#include "mpbern/report_io.hpp"

namespace mpbern::cli {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& what) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError(what + ": expected an integer, got '" + std::string(text) + "' (at position " +
                     std::to_string(ptr - text.data() + 1) + ")");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// All indices of depth 1..R with entries in [lo, hi], depth-major.
std::vector<Index> index_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--index-grid: expected R:LO:HI, got '" + text + "'");
  const auto depth = parse_int(parts[0], "--index-grid depth");
  const auto lo = parse_int(parts[1], "--index-grid low");
  const auto hi = parse_int(parts[2], "--index-grid high");
  if (depth < 1 || depth > 6 || lo > hi) throw UsageError("--index-grid: need 1 <= R <= 6 and LO <= HI");
  std::vector<Index> out;
  for (std::int64_t r = 1; r <= depth; ++r) {
    std::vector<int> v(static_cast<std::size_t>(r), static_cast<int>(lo));
    while (true) {
      out.emplace_back(v);
      auto pos = static_cast<std::ptrdiff_t>(r) - 1;
      while (pos >= 0 && v[static_cast<std::size_t>(pos)] == hi) v[static_cast<std::size_t>(pos--)] = static_cast<int>(lo);
      if (pos < 0) break;
      ++v[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

std::vector<std::int64_t> expand(const IntRange& r) {
  std::vector<std::int64_t> out;
  for (auto v = r.lo; v <= r.hi; ++v) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- output

// One record per row; the column order drives csv and table output.
struct Records {
  std::vector<std::string> columns;
  std::vector<json> rows;
  std::optional<std::vector<std::string>> csv_lines;  // overrides generic csv
};

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_records(const Records& rec, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      for (const auto& row : rec.rows) out << row.dump() << '\n';
      return;
    case Format::Csv:
      if (rec.csv_lines) {
        for (const auto& line : *rec.csv_lines) out << line << '\n';
        return;
      }
      for (std::size_t c = 0; c < rec.columns.size(); ++c) out << (c ? "," : "") << rec.columns[c];
      out << '\n';
      for (const auto& row : rec.rows) {
        for (std::size_t c = 0; c < rec.columns.size(); ++c) {
          out << (c ? "," : "") << csv_escape(cell_text(row.value(rec.columns[c], json())));
        }
        out << '\n';
      }
      return;
    case Format::Table: {
      std::vector<std::size_t> width;
      for (const auto& c : rec.columns) width.push_back(c.size());
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : rec.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t c = 0; c < rec.columns.size(); ++c) {
          line.push_back(cell_text(row.value(rec.columns[c], json())));
          width[c] = std::max(width[c], line.back().size());
        }
      }
      auto emit = [&](const std::vector<std::string>& line) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
          if (c) text += "  ";
          text += line[c];
          if (c + 1 < line.size()) text.append(width[c] - line[c].size(), ' ');
        }
        out << text << '\n';
      };
      emit(rec.columns);
      for (const auto& line : cells) emit(line);
      return;
    }
  }
}

// ---------------------------------------------------------------- helpers

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? std::move(fallback) : given;
}

std::vector<Prime> primes_of(const RunConfig& c, std::vector<std::int64_t> fallback) {
  std::vector<Prime> out;
  for (auto p : or_default(c.primes, std::move(fallback))) {
    if (!is_prime(p)) throw UsageError("--prime: " + std::to_string(p) + " is not a prime");
    if (p == 2) throw UsageError("--prime: only odd primes are supported");
    out.emplace_back(p);
  }
  return out;
}

const std::vector<Index>& require_indices(const RunConfig& c) {
  if (c.indices.empty()) throw UsageError("this command needs at least one --index (or --index-grid)");
  return c.indices;
}

IntRange require_n(const RunConfig& c) {
  if (!c.n) throw UsageError("this command needs --n");
  if (c.n->lo < 0) throw UsageError("--n must be non-negative");
  return *c.n;
}

unsigned workers(const RunConfig& c) {
  if (c.jobs > 0) return c.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

json error_row(const ScanCellError& e) { return json{{"error", e.message}, {"cell", e.cell}}; }

// ---------------------------------------------------------------- commands

int cmd_compute(const RunConfig& c, std::ostream& out) {
  const auto families = or_default(c.families, {Family::B});
  const auto n = require_n(c);
  Records rec;
  rec.columns = {"index", "family", "n", "value"};
  if (c.method == MethodChoice::Both) rec.columns.insert(rec.columns.end(), {"series", "agree"});
  bool ok = true;
  for (const auto& k : require_indices(c)) {
    for (auto f : families) {
      std::vector<Rational> primary, series;
      if (c.method != MethodChoice::Series) primary = mpb_explicit_range(k, n.hi, f);
      if (c.method != MethodChoice::Explicit) series = mpb_series_range(k, n.hi, f);
      if (c.method == MethodChoice::Series) primary = series;
      for (auto i = n.lo; i <= n.hi; ++i) {
        const auto at = static_cast<std::size_t>(i);
        json row{{"index", k.to_string()}, {"family", to_string(f)}, {"n", i}, {"value", to_string(primary[at])}};
        if (c.method == MethodChoice::Both) {
          const bool agree = primary[at] == series[at];
          ok = ok && agree;
          row["series"] = to_string(series[at]);
          row["agree"] = agree;
        }
        rec.rows.push_back(std::move(row));
      }
    }
  }
  write_records(rec, format_or(c, Format::Table), out);
  return ok ? kExitOk : kExitFailure;
}

ScanSpec scan_spec(const RunConfig& c) {
  ScanSpec spec;
  spec.families = or_default(c.families, std::vector<Family>(std::begin(kAllFamilies), std::end(kAllFamilies)));
  spec.indices = require_indices(c);
  for (const auto& p : primes_of(c, {5})) spec.primes.push_back(p.value());
  spec.Ns = expand(c.N.value_or(IntRange{1, 1}));
  if (spec.Ns.front() < 1) throw UsageError("--N must be positive");
  spec.pairs = c.pairs;
  if (spec.pairs.kind == PairStrategy::Kind::Arithmetic && c.m) {
    spec.pairs.m_lo = c.m->lo;
    spec.pairs.m_hi = c.m->hi;
  }
  if (spec.pairs.m_lo < 1) throw UsageError("--m must be positive");
  spec.workers = workers(c);
  return spec;
}

json summary_row(const ScanSummaryRow& s) {
  return json{{"family", to_string(s.family)},
              {"index", s.k.to_string()},
              {"p", s.p},
              {"N", s.N},
              {"cells", s.cells},
              {"hypothesis_cells", s.hypothesis_cells},
              {"failures", s.failures},
              {"min_margin", s.min_margin ? json(*s.min_margin) : json(nullptr)}};
}

const std::vector<std::string> kReportColumns = {"kind", "family", "index", "p",        "m",   "n",
                                                 "N",    "lhs",    "rhs",   "achieved", "pass", "hypotheses_hold"};

int cmd_kummer_or_scan(const RunConfig& c, std::ostream& out, bool summary) {
  const auto result = scan(scan_spec(c));
  const auto format = format_or(c, summary && c.format != Format::Json ? Format::Csv : Format::Json);
  Records rec;
  if (summary && format != Format::Json) {
    rec.columns = {"family", "index", "p", "N", "cells", "hypothesis_cells", "failures", "min_margin"};
    std::vector<std::string> lines{csv_header_summary()};
    for (const auto& s : result.summary) {
      rec.rows.push_back(summary_row(s));
      lines.push_back(csv_row(s));
    }
    rec.csv_lines = std::move(lines);
  } else {
    rec.columns = kReportColumns;
    std::vector<std::string> lines{csv_header_reports()};
    for (const auto& r : result.reports) {
      rec.rows.push_back(r);
      lines.push_back(csv_row(r));
    }
    rec.csv_lines = std::move(lines);
  }
  write_records(rec, format, out);
  for (const auto& e : result.errors) out << error_row(e).dump() << '\n';
  return result.failures() == 0 && result.errors.empty() ? kExitOk : kExitFailure;
}

int cmd_relations(const RunConfig& c, std::ostream& out) {
  const auto n = require_n(c);
  Records rec;
  rec.columns = {"index", "variant", "n", "B_from_C", "C_from_B", "shift"};
  bool ok = true;
  for (const auto& k : require_indices(c)) {
    for (auto v : {ChainVariant::Strict, ChainVariant::Star}) {
      for (auto i = n.lo; i <= n.hi; ++i) {
        const bool b = relation_B_from_C(k, i, v);
        const bool cc = relation_C_from_B(k, i, v);
        json shift = nullptr;
        if (i >= 1) {
          const bool s = relation_shift(k, i, v);
          ok = ok && s;
          shift = s;
        }
        ok = ok && b && cc;
        rec.rows.push_back(json{{"index", k.to_string()},
                                {"variant", v == ChainVariant::Strict ? "strict" : "star"},
                                {"n", i},
                                {"B_from_C", b},
                                {"C_from_B", cc},
                                {"shift", shift}});
      }
    }
  }
  write_records(rec, format_or(c, Format::Json), out);
  return ok ? kExitOk : kExitFailure;
}

int cmd_prelemma(const RunConfig& c, std::ostream& out) {
  const auto max_mn = c.max_mn > 0 ? c.max_mn : 60;
  Records rec;
  rec.columns = {"p", "N", "max_mn", "cells", "failures", "first_failure"};
  bool ok = true;
  for (const auto& p : primes_of(c, {3, 5, 7})) {
    for (auto N : expand(c.N.value_or(IntRange{1, 2}))) {
      if (N < 1) throw UsageError("--N must be positive");
      std::size_t cells = 0, failures = 0;
      json first = nullptr;
      for (std::int64_t m = N; m <= max_mn; ++m) {
        for (std::int64_t n = m + 1; n <= max_mn; ++n) {
          if (!orders_congruent(m, n, N, p)) continue;
          ++cells;
          if (!prelemma_check(m, n, N, p)) {
            if (failures++ == 0) first = json::array({m, n});
          }
        }
      }
      ok = ok && failures == 0;
      rec.rows.push_back(json{{"p", p.value()}, {"N", N}, {"max_mn", max_mn}, {"cells", cells},
                              {"failures", failures}, {"first_failure", first}});
    }
  }
  write_records(rec, format_or(c, Format::Json), out);
  return ok ? kExitOk : kExitFailure;
}

int cmd_keylemma(const RunConfig& c, std::ostream& out) {
  if (c.j_max < 1 || c.a_max < 1) throw UsageError("--j-max and --a-max must be positive");
  Records rec;
  rec.columns = {"kind", "index", "p", "range_lo", "range_hi", "minimum", "argmin", "bound", "hypothesis_ok", "pass",
                 "tail_start", "tail_covered"};
  bool ok = true;
  for (const auto& k : require_indices(c)) {
    for (const auto& p : primes_of(c, {5, 7})) {
      for (const auto& r : {keylemma_scan(k, p, c.j_max, workers(c)), F_min_scan(k, p, c.a_max)}) {
        ok = ok && (!r.hypothesis_ok || r.pass);
        rec.rows.push_back(r);
      }
    }
  }
  write_records(rec, format_or(c, Format::Json), out);
  return ok ? kExitOk : kExitFailure;
}

int cmd_classical(const RunConfig& c, std::ostream& out) {
  const auto max_mn = c.max_mn > 0 ? c.max_mn : 40;
  Records rec;
  rec.columns = kReportColumns;
  std::vector<std::string> lines{csv_header_reports()};
  bool ok = true;
  for (const auto& p : primes_of(c, {5, 7, 11})) {
    for (auto N : expand(c.N.value_or(IntRange{1, 2}))) {
      if (N < 1) throw UsageError("--N must be positive");
      for (std::int64_t m = 2; m <= max_mn; m += 2) {
        for (std::int64_t n = m + 2; n <= max_mn; n += 2) {
          if (m < N || !orders_congruent(m, n, N, p)) continue;
          const auto r = classical_kummer(p, m, n, N);
          ok = ok && r.confirms();
          rec.rows.push_back(r);
          lines.push_back(csv_row(r));
        }
      }
    }
  }
  rec.csv_lines = std::move(lines);
  write_records(rec, format_or(c, Format::Json), out);
  return ok ? kExitOk : kExitFailure;
}

int cmd_counterexample(const RunConfig& c, std::ostream& out) {
  Records rec;
  rec.columns = kReportColumns;
  rec.columns.push_back("confirmed");
  bool ok = true;
  for (const auto& p : primes_of(c, {3, 5, 7})) {
    for (auto N : expand(c.N.value_or(IntRange{2, 2}))) {
      if (N < 2) throw UsageError("counterexample needs --N >= 2");
      const auto r = kitahara_counterexample(p, N);
      ok = ok && r.confirms();
      json row = r;
      row["confirmed"] = r.confirms();
      rec.rows.push_back(std::move(row));
    }
  }
  write_records(rec, format_or(c, Format::Json), out);
  return ok ? kExitOk : kExitFailure;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  const auto families = or_default(c.families, std::vector<Family>(std::begin(kAllFamilies), std::end(kAllFamilies)));
  const auto n = require_n(c);
  Records rec;
  rec.columns = {"index", "family", "n", "explicit", "series", "agree", "moment"};
  bool ok = true;
  for (const auto& k : require_indices(c)) {
    for (auto f : families) {
      const auto ex = mpb_explicit_range(k, n.hi, f);
      const auto se = mpb_series_range(k, n.hi, f);
      for (auto i = n.lo; i <= n.hi; ++i) {
        const auto at = static_cast<std::size_t>(i);
        const bool agree = ex[at] == se[at];
        json moment = nullptr;
        if (!is_c_family(f)) {
          const Rational expected = sign_power(i) == 1 ? ex[at] : Rational(-ex[at]);
          const bool m_ok = distribution_moment(k, i, variant_of(f)) == expected;
          ok = ok && m_ok;
          moment = m_ok;
        }
        ok = ok && agree;
        rec.rows.push_back(json{{"index", k.to_string()}, {"family", to_string(f)}, {"n", i},
                                {"explicit", to_string(ex[at])}, {"series", to_string(se[at])},
                                {"agree", agree}, {"moment", moment}});
      }
    }
  }
  write_records(rec, format_or(c, Format::Json), out);
  return ok ? kExitOk : kExitFailure;
}

std::int64_t single(const std::optional<IntRange>& r, const std::string& flag) {
  if (!r) throw UsageError("mahler needs " + flag);
  if (!r->single()) throw UsageError(flag + " must be a single value for mahler");
  return r->lo;
}

int cmd_mahler(const RunConfig& c, std::ostream& out) {
  const auto m = single(c.m, "--m");
  const auto n = single(c.n, "--n");
  const auto N = single(c.N, "--N");
  if (c.primes.size() != 1) throw UsageError("mahler needs exactly one --prime");
  const auto p = primes_of(c, {}).front();
  if (m < 1 || n < 1 || N < 1) throw UsageError("mahler needs positive --m, --n and --N");
  const auto e = mahler_expand(m, n, N, p);

  json non_integral = json::array();
  for (std::size_t j = 0; j < e.integral.size(); ++j) {
    if (!e.integral[j]) non_integral.push_back(j);
  }
  if (format_or(c, Format::Json) == Format::Json) {
    json j = e;
    j["non_integral"] = non_integral;
    if (!e.hypotheses_hold()) j["note"] = "hypotheses violated: need m, n >= N and m == n mod (p-1)p^(N-1)";
    out << j.dump() << '\n';
  } else {
    Records rec;
    rec.columns = {"j", "a_j", "integral"};
    for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
      rec.rows.push_back(json{{"j", j}, {"a_j", to_string(e.coeffs[j])}, {"integral", static_cast<bool>(e.integral[j])}});
    }
    write_records(rec, *c.format, out);
  }
  return e.hypotheses_hold() && !e.all_integral() ? kExitFailure : kExitOk;
}

}  // namespace

IntRange parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, flag);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots), flag);
    r.hi = parse_int(std::string_view(text).substr(dots + 2), flag);
  }
  if (r.lo > r.hi) throw UsageError(flag + ": empty range '" + text + "'");
  return r;
}

PairStrategy parse_pairs(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--pairs: expected KIND:ARG, got '" + text + "'");
  const auto kind = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  PairStrategy s;
  if (kind == "arithmetic") {
    s.kind = PairStrategy::Kind::Arithmetic;
    s.steps = parse_int(arg, "--pairs arithmetic");
    if (s.steps < 1) throw UsageError("--pairs arithmetic: D must be positive");
  } else if (kind == "all") {
    s.kind = PairStrategy::Kind::All;
    s.n_max = parse_int(arg, "--pairs all");
    if (s.n_max < 1) throw UsageError("--pairs all: NMAX must be positive");
  } else if (kind == "list") {
    s.kind = PairStrategy::Kind::Explicit;
    for (const auto& item : split(arg, ',')) {
      const auto dash = item.find('-', 1);
      if (dash == std::string::npos) throw UsageError("--pairs list: expected m-n, got '" + item + "'");
      const auto m = parse_int(std::string_view(item).substr(0, dash), "--pairs list");
      const auto n = parse_int(std::string_view(item).substr(dash + 1), "--pairs list");
      if (m < 1 || n < 1) throw UsageError("--pairs list: orders must be positive");
      s.pairs.emplace_back(m, n);
    }
  } else {
    throw UsageError("--pairs: unknown strategy '" + kind + "' (arithmetic, all, list)");
  }
  return s;
}

std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact multi-poly-Bernoulli numbers and their congruences", "mpbern"};
  app.set_config("--config", "", "key = value file with the same fields as the flags");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> index_text, family_text, prime_text;
  std::string index_grid_text, N_text, m_text, n_text, pairs_text, method_text = "explicit", format_text;
  RunConfig config;
  std::int64_t jobs = 1;

  app.add_option("--index", index_text, "index k1,...,kr (repeatable)")->take_all();
  app.add_option("--index-grid", index_grid_text, "every index of depth <= R with entries in LO..HI, as R:LO:HI");
  app.add_option("--family", family_text, "B, C, Bstar, Cstar (repeatable)")->take_all();
  app.add_option("--prime", prime_text, "odd prime (repeatable)")->take_all();
  app.add_option("--N", N_text, "modulus exponent, a or a..b");
  app.add_option("--m", m_text, "order m, a or a..b");
  app.add_option("--n", n_text, "order n, a or a..b");
  app.add_option("--pairs", pairs_text, "arithmetic:D, all:NMAX or list:m-n,...");
  app.add_option("--method", method_text, "explicit, series or both");
  app.add_option("--j-max", config.j_max, "keylemma scan limit");
  app.add_option("--a-max", config.a_max, "F scan limit");
  app.add_option("--max-mn", config.max_mn, "largest order for prelemma and classical");
  app.add_option("--format", format_text, "json, csv or table");
  app.add_option("--output", config.output, "write to this file instead of stdout");
  app.add_option("--jobs", jobs, "worker threads, 0 for all cores");

  auto* compute = app.add_subcommand("compute", "tabulate values");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_text;
  verify->add_option("suite", suite_text, "kummer, relations, prelemma, keylemma, classical, counterexample, oracle")
      ->required();
  auto* mahler = app.add_subcommand("mahler", "Mahler coefficients of (x^m - x^n)/p^N");
  auto* scan_cmd = app.add_subcommand("scan", "congruence grid with per-cell reports and summary");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (compute->parsed()) config.command = Command::Compute;
  if (verify->parsed()) config.command = Command::Verify;
  if (mahler->parsed()) config.command = Command::Mahler;
  if (scan_cmd->parsed()) config.command = Command::Scan;

  if (config.command == Command::Verify) {
    static const std::pair<const char*, Suite> suites[] = {
        {"kummer", Suite::Kummer},     {"relations", Suite::Relations},
        {"prelemma", Suite::Prelemma}, {"keylemma", Suite::Keylemma},
        {"classical", Suite::Classical}, {"counterexample", Suite::Counterexample},
        {"oracle", Suite::Oracle}};
    const auto it = std::find_if(std::begin(suites), std::end(suites),
                                 [&](const auto& s) { return suite_text == s.first; });
    if (it == std::end(suites)) throw UsageError("verify: unknown suite '" + suite_text + "'");
    config.suite = it->second;
  }

  for (const auto& text : index_text) {
    try {
      config.indices.push_back(Index::parse(text));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--index: ") + e.what());
    }
  }
  if (!index_grid_text.empty()) {
    const auto grid = index_grid(index_grid_text);
    config.indices.insert(config.indices.end(), grid.begin(), grid.end());
  }
  for (const auto& text : family_text) {
    const auto f = parse_family(text);
    if (!f) throw UsageError("--family: unknown family '" + text + "'");
    config.families.push_back(*f);
  }
  for (const auto& text : prime_text) config.primes.push_back(parse_int(text, "--prime"));
  if (!N_text.empty()) config.N = parse_range(N_text, "--N");
  if (!m_text.empty()) config.m = parse_range(m_text, "--m");
  if (!n_text.empty()) config.n = parse_range(n_text, "--n");
  if (!pairs_text.empty()) config.pairs = parse_pairs(pairs_text);

  if (method_text == "explicit") {
    config.method = MethodChoice::Explicit;
  } else if (method_text == "series") {
    config.method = MethodChoice::Series;
  } else if (method_text == "both") {
    config.method = MethodChoice::Both;
  } else {
    throw UsageError("--method: expected explicit, series or both, got '" + method_text + "'");
  }

  if (format_text == "json") {
    config.format = Format::Json;
  } else if (format_text == "csv") {
    config.format = Format::Csv;
  } else if (format_text == "table") {
    config.format = Format::Table;
  } else if (!format_text.empty()) {
    throw UsageError("--format: expected json, csv or table, got '" + format_text + "'");
  }

  if (jobs < 0) throw UsageError("--jobs must be non-negative");
  if (config.max_mn < 0) throw UsageError("--max-mn must be positive");
  config.jobs = static_cast<unsigned>(jobs);
  return config;
}

int run(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::Compute:
      return cmd_compute(config, out);
    case Command::Mahler:
      return cmd_mahler(config, out);
    case Command::Scan:
      return cmd_kummer_or_scan(config, out, true);
    case Command::Verify:
      break;
  }
  switch (config.suite) {
    case Suite::Kummer:
      return cmd_kummer_or_scan(config, out, false);
    case Suite::Relations:
      return cmd_relations(config, out);
    case Suite::Prelemma:
      return cmd_prelemma(config, out);
    case Suite::Keylemma:
      return cmd_keylemma(config, out);
    case Suite::Classical:
      return cmd_classical(config, out);
    case Suite::Counterexample:
      return cmd_counterexample(config, out);
    case Suite::Oracle:
      return cmd_oracle(config, out);
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_command_line(args, out);
    if (!config) return kExitOk;
    if (config->output.empty()) return run(*config, out);
    std::ofstream file(config->output);
    if (!file) throw UsageError("--output: cannot open '" + config->output + "'");
    return run(*config, file);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mpbern::cli
