// Acceptance run: one line per criterion, exit status 0 only if all hold.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qlgh/cli.hpp"
#include "qlgh/error.hpp"
#include "qlgh/families.hpp"
#include "qlgh/identities.hpp"

using namespace qlgh;

namespace {

const std::vector<Rational> kQs = {Rational(1, 2), Rational(2, 3), Rational(3)};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
};

struct Tally {
  long total = 0;
  long passed = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  bool ok() const { return total > 0 && passed == total; }
  std::string summary() const {
    std::string s = std::to_string(passed) + "/" + std::to_string(total);
    if (!first_failure.empty()) s += ", first failure " + first_failure;
    return s;
  }
};

std::string describe(const VerifyReport& r) {
  std::string s = r.identity_case.tag;
  std::string p = format_params(r.identity_case.params);
  if (!p.empty()) s += " " + p;
  if (r.failing_q) s += " at q=" + r.failing_q->to_string();
  if (!r.cause.empty()) s += " (" + r.cause + ")";
  return s;
}

// A pass only counts when the checked points cover the certification
// requirement: at least three, and more than the instance's q-degree range.
bool certified(const VerifyReport& r, bool q_dependent) {
  if (!r.passed()) return false;
  if (!q_dependent) return !r.q_checked.empty();
  long certifying = 0;
  for (const auto& q : r.q_checked) {
    if (!q.is_zero() && q != Rational(-1)) ++certifying;
  }
  return certifying >= std::max<long>(3, r.bound.points_needed());
}

Tally run_tags(const std::vector<std::string>& tags, SuiteGrid grid) {
  grid.tags = tags;
  Tally t;
  for (const auto& r : verify_suite(grid)) {
    t.add(certified(r, find_entry(r.identity_case.tag)->q_dependent), describe(r));
  }
  return t;
}

std::map<std::string, Tally> run_tags_by_tag(const std::vector<std::string>& tags,
                                             SuiteGrid grid) {
  grid.tags = tags;
  std::map<std::string, Tally> out;
  for (const auto& r : verify_suite(grid)) {
    out[r.identity_case.tag].add(
        certified(r, find_entry(r.identity_case.tag)->q_dependent), describe(r));
  }
  return out;
}

void per_tag(Outcome& o, const std::vector<std::string>& tags,
             const std::map<std::string, Tally>& tallies) {
  for (const auto& tag : tags) {
    const Tally& t = tallies.at(tag);
    o.ok = o.ok && t.ok();
    o.detail << " " << tag << " " << t.passed << "/" << t.total << ";";
  }
}

SuiteGrid desk_grid() {
  SuiteGrid g;
  g.max_index = 4;
  g.max_base = 3;
  g.q_values = kQs;
  return g;
}

Outcome criterion1() {
  Outcome o;
  Tally laguerre, lghp_a, lghp_b;
  for (const auto& q : kQs) {
    QContext ctx(q);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 0; n <= 8; ++n) {
        std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " q=" + q.to_string();
        laguerre.add(q_2dlp_operational(ctx, n, m) == q_2dlp(ctx, n, m), at);
        for (int s = 1; s <= 3; ++s) {
          MPoly explicit_sum = q_lghp(ctx, n, m, s);
          std::string ats = at + " s=" + std::to_string(s);
          lghp_a.add(q_lghp_operational_a(ctx, n, m, s) == explicit_sum, ats);
          lghp_b.add(q_lghp_operational_b(ctx, n, m, s) == explicit_sum, ats);
        }
      }
    }
  }
  o.ok = laguerre.ok() && lghp_a.ok() && lghp_b.ok();
  o.detail << "L operator form " << laguerre.summary() << "; LH operator on G "
           << lghp_a.summary() << "; LH operator on L " << lghp_b.summary();
  return o;
}

Outcome criterion2() {
  Outcome o;
  SuiteGrid g = desk_grid();
  g.N = 10;
  std::vector<std::string> tags{"GF-2.17", "GF-3.6"};
  o.detail << "N=10, m,s<=3, q in {1/2,2/3,3}:";
  per_tag(o, tags, run_tags_by_tag(tags, g));
  return o;
}

Outcome criterion3() {
  Outcome o;
  Tally t;
  for (const auto& q : kQs) {
    QContext ctx(q);
    for (int m = 1; m <= 3; ++m) {
      for (int s = 1; s <= 3; ++s) {
        for (int n = 0; n <= 10; ++n) {
          MPoly reduced = substitute(q_lghp(ctx, n, m, s), {{Var::z, MPoly()}});
          t.add(reduced == q_2dlp(ctx, n, m),
                "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " s=" + std::to_string(s) + " q=" + q.to_string());
        }
      }
    }
  }
  o.ok = t.ok();
  o.detail << "LH(x,y,0) = L(x,y), n<=10, m,s<=3: " << t.summary();
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<std::string> tags{"T3.1-3.12", "E3.25", "T3.2-3.26"};
  o.detail << "k,l,n,r<=4, m,s<=3, certified q sets:";
  per_tag(o, tags, run_tags_by_tag(tags, desk_grid()));
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<std::string> tags;
  for (int i = 1; i <= 21; ++i) tags.push_back("C4." + std::to_string(i));
  auto tallies = run_tags_by_tag(tags, desk_grid());
  per_tag(o, tags, tallies);
  o.detail << " coherence:";
  for (const auto& q : kQs) {
    for (const auto& c : coherence_checks(q, 4, 3)) {
      o.ok = o.ok && c.ok();
      o.detail << " [" << c.name << " at q=" << q.to_string() << " " << c.agreeing
               << "/" << c.points << "]";
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::string> tags{"L4.22", "L4.23", "L4.24", "L4.25", "L4.26",
                                "L4.27", "L4.28", "L4.29", "L4.30", "L4.31"};
  per_tag(o, tags, run_tags_by_tag(tags, desk_grid()));
  CoherenceResult routes = classical_route_agreement(4, 3);
  o.ok = o.ok && routes.ok();
  o.detail << " routes agree " << routes.agreeing << "/" << routes.points;
  return o;
}

Outcome criterion7() {
  Outcome o;
  SuiteGrid g = desk_grid();
  g.N = 10;
  Tally jhc = run_tags({"R2.12"}, g);
  g.N = 8;
  Tally mixed = run_tags({"R2.11"}, g);
  o.ok = jhc.ok() && mixed.ok();
  o.detail << "e_q E_q rules to N=10: " << jhc.summary()
           << "; mixed rule to N=8, m<=3: " << mixed.summary();
  return o;
}

Outcome criterion8() {
  Outcome o;
  SuiteGrid g = desk_grid();
  g.max_index = 20;
  Tally binom = run_tags({"H3.24"}, g);
  g = desk_grid();
  g.trials = 100;
  Tally random = run_tags({"H3.10", "H3.14", "H3.22"}, g);
  o.ok = binom.ok() && random.ok();
  o.detail << "exponent lemma l<=20: " << binom.summary()
           << "; reindexing and JHC series lemmas, 100 random arrays each: "
           << random.summary();
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const auto& group : referee_groups()) {
    RefereeResult r = run_referee(group, desk_grid());
    int neither = 0, both = 0, equivalent = 0;
    for (const auto& p : r.points) {
      if (p.equivalent) {
        ++equivalent;
      } else if (p.passing.empty()) {
        ++neither;
      } else if (p.passing.size() > 1) {
        ++both;
      }
    }
    o.ok = o.ok && r.ok;
    o.detail << " [" << group << ": winner " << (r.winner ? *r.winner : "none")
             << ", " << r.points.size() << " points, " << neither << " neither, "
             << both << " both, " << equivalent << " indistinguishable]";
  }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli_code(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  if (out != nullptr) *out = o.str();
  return code;
}

Outcome criterion10() {
  Outcome o;
  Tally golden;
  std::ifstream cases(std::string(QLGH_GOLDEN_DIR) + "/cases.txt");
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string file;
    in >> file;
    std::vector<std::string> args;
    for (std::string w; in >> w;) args.push_back(w);
    std::string expected = slurp(std::string(QLGH_GOLDEN_DIR) + "/" + file);
    std::string first, second;
    int c1 = cli_code(args, &first);
    int c2 = cli_code(args, &second);
    golden.add(!expected.empty() && c1 == kExitOk && c2 == kExitOk &&
                   first == expected && second == expected,
               file);
  }
  struct Expectation {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Expectation> expectations = {
      {{"eval", "--q", "1/2", "LH(2,2,2)"}, kExitOk},
      {{"--help"}, kExitOk},
      {{"verify", "--tags", "H3.24", "--max", "20"}, kExitOk},
      {{"verify", "--tags", "C4.16", "--max", "2", "--max-base", "1"},
       kExitVerifyFailed},
      {{"gf-check", "--family", "L", "--N", "0"}, kExitOk},
      {{"verify", "--tags", ""}, kExitUsage},
      {{"verify", "--tags", "Z0.0"}, kExitUsage},
      {{"eval", "LH(1,2"}, kExitUsage},
      {{"eval", "--q", "0.5", "L(1,1)"}, kExitUsage},
      {{"nonsense"}, kExitUsage},
      {{"eval", "--q", "-1", "L(3,1)"}, kExitArithmetic},
  };
  Tally codes;
  for (const auto& e : expectations) {
    std::string joined;
    for (const auto& a : e.args) joined += (joined.empty() ? "" : " ") + a;
    codes.add(cli_code(e.args) == e.code, "'" + joined + "'");
  }
  o.ok = golden.ok() && codes.ok();
  o.detail << "golden files " << golden.summary() << "; exit codes "
           << codes.summary();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"operational forms equal the explicit sums", criterion1},
      {"generating functions", criterion2},
      {"z = 0 reduction", criterion3},
      {"connection formulas", criterion4},
      {"particular-case catalog and specialisation coherence", criterion5},
      {"classical limits by both routes", criterion6},
      {"exponential kernel rules", criterion7},
      {"helper lemmas", criterion8},
      {"typo referee", criterion9},
      {"CLI golden output and exit codes", criterion10},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "aborted: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (!o.ok) ++failures;
    std::cout << "criterion " << index << ": " << (o.ok ? "PASS" : "FAIL") << " | "
              << c.name << " | " << o.detail.str() << " | " << std::fixed
              << std::setprecision(1) << secs << " s" << std::endl;
  }
  std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
