#include "qlgh/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "qlgh/error.hpp"
#include "qlgh/families.hpp"
#include "qlgh/family_expr.hpp"
#include "qlgh/identities.hpp"
#include "qlgh/qseries.hpp"
#include "qlgh/render.hpp"

namespace qlgh {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr unsigned kDefaultOrder = 12;

enum class Format { text, json, latex };

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string q_text;
  std::string n_text;
  std::string format = "text";

  std::string expr;

  std::vector<std::string> tags;
  int max_index = 4;
  int max_base = 3;
  int trials = 100;
  unsigned threads = 0;
  bool referee = false;
  bool timing = false;

  std::string family;
  std::string n_range = "0..4";
  std::string m_range = "1";
  std::string s_range = "1";

  std::string gf_family = "LH";
  int m = 1;
  int s = 1;
};

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' ? std::string(v) : fallback;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Rational parse_q(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("invalid q '" + text + "': " + e.what() +
                     " (use an integer or a/b)");
  }
}

std::vector<Rational> parse_q_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_q(part));
  return out;
}

Rational single_q(const Options& o) {
  std::string text = o.q_text.empty() ? env_or("QLGH_Q", "1/2") : o.q_text;
  auto list = parse_q_list(text);
  if (list.size() != 1) throw UsageError("this command takes a single q");
  return list.front();
}

unsigned order_of(const Options& o) {
  std::string text = o.n_text.empty()
                         ? env_or("QLGH_N", std::to_string(kDefaultOrder))
                         : o.n_text;
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used == text.size() && v >= 0 && v <= 64) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("invalid truncation order '" + text + "' (0..64)");
}

Format format_of(const Options& o) {
  if (o.format == "text") return Format::text;
  if (o.format == "json") return Format::json;
  if (o.format == "latex") return Format::latex;
  throw UsageError("unknown format '" + o.format + "' (text, json, latex)");
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  auto bad = [&] {
    return UsageError(std::string("invalid ") + what + " range '" + text +
                      "' (use a or a..b)");
  };
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 6) throw bad();
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    }
    return std::stoi(s);
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = number(text);
    return {v, v};
  }
  int lo = number(text.substr(0, dots));
  int hi = number(text.substr(dots + 2));
  if (lo > hi) throw bad();
  return {lo, hi};
}

json with_header(const std::string& command) {
  json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void put_terms(json& j, const MPoly& p) { j["terms"] = to_json(p)["terms"]; }

std::string q_latex_suffix(const FamilySpec& spec, const Rational& q) {
  if (spec.kind == FamilyKind::classical_gh) return "";
  return "\\big|_{q=" + render_latex(q) + "}";
}

void check_spec(FamilySpec& spec) {
  if (spec.n < 0 || spec.n > kMaxFamilyDegree) {
    throw UsageError("degree out of range 0.." + std::to_string(kMaxFamilyDegree));
  }
  if (spec.m < 1 || spec.m > kMaxFamilyIndex || spec.s < 1 ||
      spec.s > kMaxFamilyIndex) {
    throw UsageError("index out of range 1.." + std::to_string(kMaxFamilyIndex));
  }
}

// ---- eval ------------------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
  Format fmt = format_of(o);
  FamilySpec spec = parse_family_expr(o.expr);
  Rational q = single_q(o);
  QContext ctx(q);
  MPoly p = build_family(ctx, spec);
  switch (fmt) {
    case Format::text:
      out << render_text(p) << '\n';
      break;
    case Format::json: {
      json j = with_header("eval");
      j["family"] = family_label(spec);
      j["q"] = q.to_string();
      put_terms(j, p);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::latex:
      out << family_latex(spec) << q_latex_suffix(spec, q) << " = "
          << render_latex(p) << '\n';
      break;
  }
  return kExitOk;
}

// ---- table -----------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  Format fmt = format_of(o);
  FamilyKind kind;
  try {
    kind = parse_family_name(o.family);
  } catch (const ParseError&) {
    throw UsageError("unknown family '" + o.family + "' (gh, qgh, L, LH, H)");
  }
  auto [n_lo, n_hi] = parse_range(o.n_range, "n");
  auto [m_lo, m_hi] = parse_range(o.m_range, "m");
  auto [s_lo, s_hi] = parse_range(o.s_range, "s");
  if (kind == FamilyKind::q_hermite) m_lo = m_hi = 1;
  if (kind != FamilyKind::q_lghp) s_lo = s_hi = 1;
  Rational q = single_q(o);
  QContext ctx(q);

  json rows = json::array();
  std::ostringstream body;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int s = s_lo; s <= s_hi; ++s) {
      for (int n = n_lo; n <= n_hi; ++n) {
        FamilySpec spec{kind, n, m, s};
        check_spec(spec);
        MPoly p = build_family(ctx, spec);
        switch (fmt) {
          case Format::text:
            body << family_label(spec) << " = " << render_text(p) << '\n';
            break;
          case Format::json: {
            json row;
            row["family"] = family_label(spec);
            row["n"] = n;
            if (kind != FamilyKind::q_hermite) row["m"] = m;
            if (kind == FamilyKind::q_lghp) row["s"] = s;
            put_terms(row, p);
            rows.push_back(std::move(row));
            break;
          }
          case Format::latex:
            body << family_latex(spec) << " &= " << render_latex(p) << " \\\\\n";
            break;
        }
      }
    }
  }
  switch (fmt) {
    case Format::text:
      out << "# q = " << q.to_string() << '\n' << body.str();
      break;
    case Format::json: {
      json j = with_header("table");
      j["q"] = q.to_string();
      j["rows"] = std::move(rows);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::latex:
      out << "% q = " << q.to_string() << "\n\\begin{align*}\n"
          << body.str() << "\\end{align*}\n";
      break;
  }
  return kExitOk;
}

// ---- gf-check --------------------------------------------------------------

int cmd_gf_check(const Options& o, std::ostream& out) {
  Format fmt = format_of(o);
  bool lghp;
  if (o.gf_family == "LH") {
    lghp = true;
  } else if (o.gf_family == "L") {
    lghp = false;
  } else {
    throw UsageError("gf-check supports the families L and LH");
  }
  FamilySpec probe{lghp ? FamilyKind::q_lghp : FamilyKind::q_2dlp, 0, o.m, o.s};
  check_spec(probe);
  Rational q = single_q(o);
  unsigned N = order_of(o);
  QContext ctx(q);

  TSeries product = series_eq(ctx, MPoly::variable(Var::y), 1, N) *
                    series_bessel_tricomi(ctx, o.m, 0, -MPoly::variable(Var::x),
                                          static_cast<unsigned>(o.m), N);
  if (lghp) {
    product = product * series_EQm(ctx, o.s, MPoly::variable(Var::z),
                                   static_cast<unsigned>(o.s), N);
  }
  std::string kernel = lghp ? "e_q(yt) E_{q^s}(zt^s) eps_q^m(-xt^m)"
                            : "e_q(yt) eps_q^m(-xt^m)";

  bool all = true;
  json rows = json::array();
  std::ostringstream body;
  for (unsigned n = 0; n <= N; ++n) {
    FamilySpec spec{probe.kind, static_cast<int>(n), o.m, o.s};
    MPoly expected = build_family(ctx, spec);
    MPoly got = product.coeff(n) * ctx.q_factorial(1, static_cast<int>(n));
    bool ok = got == expected;
    all = all && ok;
    switch (fmt) {
      case Format::text:
        body << "t^" << n << ": " << (ok ? "PASS" : "FAIL") << "  "
             << family_label(spec) << " = " << render_text(expected);
        if (!ok) body << "  but [n]_q! coefficient = " << render_text(got);
        body << '\n';
        break;
      case Format::json: {
        json row;
        row["n"] = n;
        row["status"] = ok ? "pass" : "fail";
        row["family"] = family_label(spec);
        put_terms(row, expected);
        if (!ok) row["coefficient"] = to_json(got)["terms"];
        rows.push_back(std::move(row));
        break;
      }
      case Format::latex:
        body << "[" << n << "]_q!\\,[t^{" << n << "}] &= " << family_latex(spec)
             << " = " << render_latex(expected)
             << (ok ? "" : " \\quad\\text{(mismatch)}") << " \\\\\n";
        break;
    }
  }
  switch (fmt) {
    case Format::text:
      out << "# " << kernel << ", q = " << q.to_string() << ", m = " << o.m;
      if (lghp) out << ", s = " << o.s;
      out << ", N = " << N << '\n'
          << body.str() << (all ? "all " : "not all ") << (N + 1)
          << " coefficients agree\n";
      break;
    case Format::json: {
      json j = with_header("gf-check");
      j["family"] = o.gf_family;
      j["q"] = q.to_string();
      j["m"] = o.m;
      if (lghp) j["s"] = o.s;
      j["N"] = N;
      j["rows"] = std::move(rows);
      j["status"] = all ? "pass" : "fail";
      out << j.dump(2) << '\n';
      break;
    }
    case Format::latex:
      out << "% " << kernel << ", q = " << q.to_string() << "\n\\begin{align*}\n"
          << body.str() << "\\end{align*}\n";
      break;
  }
  return all ? kExitOk : kExitVerifyFailed;
}

// ---- verify ----------------------------------------------------------------

std::string q_list_text(const std::vector<Rational>& qs, std::size_t requested) {
  std::ostringstream s;
  for (std::size_t i = 0; i < qs.size() && i < requested; ++i) {
    if (i > 0) s << ',';
    s << qs[i].to_string();
  }
  if (qs.size() > requested) s << " +" << (qs.size() - requested) << " more";
  return s.str();
}

int cmd_verify(const Options& o, std::ostream& out) {
  Format fmt = format_of(o);
  SuiteGrid grid;
  for (const auto& item : o.tags) {
    for (const auto& tag : split(item, ',')) {
      if (tag.empty()) continue;
      if (find_entry(tag) == nullptr) throw UsageError("unknown tag '" + tag + "'");
      grid.tags.push_back(tag);
    }
  }
  if (grid.tags.empty()) throw UsageError("--tags needs at least one tag");
  if (o.max_index < 0 || o.max_base < 1 || o.trials < 0) {
    throw UsageError("grid bounds must satisfy --max >= 0, --max-base >= 1");
  }
  grid.max_index = o.max_index;
  grid.max_base = o.max_base;
  grid.trials = o.trials;
  grid.N = order_of(o);
  std::string q_text =
      o.q_text.empty() ? env_or("QLGH_Q", "1/2,2/3,3") : o.q_text;
  grid.q_values = parse_q_list(q_text);

  std::vector<VerifyReport> reports = verify_suite(grid, o.threads);
  bool gate = true;
  bool arithmetic = false;
  std::map<std::string, std::pair<int, int>> per_tag;
  json list = json::array();
  std::ostringstream body;
  for (const auto& r : reports) {
    const CatalogEntry* e = find_entry(r.identity_case.tag);
    auto& tally = per_tag[e->tag];
    ++tally.second;
    if (r.passed()) ++tally.first;
    if (!r.passed() && !e->alternate_reading) gate = false;
    arithmetic = arithmetic || r.arithmetic_error;
    std::size_t requested = e->q_dependent ? grid.q_values.size() : 1;
    if (fmt == Format::json) {
      json j;
      j["tag"] = e->tag;
      j["params"] = r.identity_case.params;
      j["status"] = r.passed() ? "pass" : "fail";
      j["alternate_reading"] = e->alternate_reading;
      json qs = json::array();
      for (const auto& q : r.q_checked) qs.push_back(q.to_string());
      j["q_checked"] = std::move(qs);
      j["bound"] = r.bound.to_string();
      if (r.failing_q) j["failing_q"] = r.failing_q->to_string();
      j["difference"] = to_json(r.difference)["terms"];
      if (!r.cause.empty()) j["cause"] = r.cause;
      if (o.timing) j["elapsed_us"] = r.elapsed.count();
      list.push_back(std::move(j));
      continue;
    }
    std::string params = format_params(r.identity_case.params);
    std::string status = r.passed() ? "PASS" : "FAIL";
    if (fmt == Format::latex) {
      body << "\\text{" << status << "} & \\texttt{" << e->tag << "} & "
           << params << " \\\\\n";
      continue;
    }
    body << status << ' ' << e->tag;
    if (!params.empty()) body << ' ' << params;
    if (!r.cause.empty()) {
      body << " | error: " << r.cause;
    } else if (r.passed()) {
      body << " | q = " << q_list_text(r.q_checked, requested);
    } else {
      body << " | q = " << r.failing_q->to_string() << ": lhs - rhs has "
           << r.difference.size() << (r.difference.size() == 1 ? " term" : " terms");
    }
    if (e->alternate_reading) body << " (alternate reading)";
    if (o.timing) body << " [" << r.elapsed.count() << " us]";
    body << '\n';
  }

  std::vector<RefereeResult> verdicts;
  if (o.referee) {
    for (const auto& group : referee_groups()) {
      bool touched = false;
      for (const auto& tag : grid.tags) {
        touched = touched || find_entry(tag)->referee_group == group;
      }
      if (touched) verdicts.push_back(run_referee(group, grid, o.threads));
    }
  }

  switch (fmt) {
    case Format::text:
      out << body.str();
      for (const auto& [tag, t] : per_tag) {
        out << "summary " << tag << ": " << t.first << "/" << t.second
            << " pass\n";
      }
      for (const auto& v : verdicts) {
        int both = 0, neither = 0, equivalent = 0;
        for (const auto& p : v.points) {
          if (p.equivalent) {
            ++equivalent;
          } else if (p.passing.size() > 1) {
            ++both;
          } else if (p.passing.empty()) {
            ++neither;
          }
        }
        out << "referee " << v.group << ": winner "
            << (v.winner ? *v.winner : std::string("none")) << ", "
            << (v.ok ? "decided" : "undecided") << " (" << v.points.size()
            << " points, " << equivalent << " equivalent, " << neither
            << " neither, " << both << " both)\n";
      }
      break;
    case Format::json: {
      json j = with_header("verify");
      json qs = json::array();
      for (const auto& q : grid.q_values) qs.push_back(q.to_string());
      j["q_values"] = std::move(qs);
      j["reports"] = std::move(list);
      json summary = json::object();
      for (const auto& [tag, t] : per_tag) {
        summary[tag] = {{"pass", t.first}, {"total", t.second}};
      }
      j["summary"] = std::move(summary);
      if (o.referee) {
        json refs = json::array();
        for (const auto& v : verdicts) {
          json r;
          r["group"] = v.group;
          r["readings"] = v.readings;
          r["winner"] = v.winner ? json(*v.winner) : json(nullptr);
          r["ok"] = v.ok;
          refs.push_back(std::move(r));
        }
        j["referee"] = std::move(refs);
      }
      j["status"] = gate ? "pass" : "fail";
      out << j.dump(2) << '\n';
      break;
    }
    case Format::latex:
      out << "\\begin{tabular}{lll}\n" << body.str() << "\\end{tabular}\n";
      break;
  }
  if (gate) return kExitOk;
  return arithmetic ? kExitArithmetic : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Exact q-Laguerre-Gould-Hopper polynomials and identity checks",
               "qlgh"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--q", o.q_text,
                 "rational q (integer or a/b); verify takes a comma list "
                 "[env QLGH_Q]");
  app.add_option("--N", o.n_text, "series truncation order [env QLGH_N]");
  app.add_option("--format", o.format, "text, json or latex");

  auto* eval = app.add_subcommand("eval", "expand one family member");
  eval->add_option("expr", o.expr, "gh(n,m) | qgh(n,m) | L(n,m) | LH(n,m,s) | H(n)")
      ->required();

  auto* verify = app.add_subcommand("verify", "check catalog identities");
  verify->add_option("--tags", o.tags, "identity tags, comma separated")
      ->required()
      ->delimiter(',');
  verify->add_option("--max", o.max_index, "largest k, l, n, r");
  verify->add_option("--max-base", o.max_base, "largest m, s");
  verify->add_option("--trials", o.trials, "random instances per lemma");
  verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  verify->add_flag("--referee", o.referee, "compare alternative readings");
  verify->add_flag("--timing", o.timing, "report time per case");

  auto* table = app.add_subcommand("table", "family members over a grid");
  table->add_option("--family", o.family, "gh, qgh, L, LH or H")->required();
  table->add_option("--n", o.n_range, "degree range a..b");
  table->add_option("--m", o.m_range, "m range a..b");
  table->add_option("--s", o.s_range, "s range a..b");

  auto* gf = app.add_subcommand("gf-check",
                                "generating function against the family, "
                                "coefficient by coefficient");
  gf->add_option("--family", o.gf_family, "L or LH");
  gf->add_option("--m", o.m, "m");
  gf->add_option("--s", o.s, "s");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (gf->parsed()) return cmd_gf_check(o, out);
  } catch (const ParseError& e) {
    err << caret_diagnostic(o.expr, e);
    return kExitUsage;
  } catch (const VanishingFactorError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArithmetic;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qlgh
