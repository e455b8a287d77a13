#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qlgh/families.hpp"
#include "qlgh/mpoly.hpp"
#include "qlgh/qbound.hpp"
#include "qlgh/qcontext.hpp"
#include "qlgh/rational.hpp"

namespace qlgh {

/// A polynomial together with a uniform q-degree bound for its coefficients.
struct Expansion {
  MPoly poly;
  QDegreeBound bound;

  Expansion& operator+=(const Expansion& o);
  friend Expansion operator*(const Expansion& a, const Expansion& b);
};

/// A scalar that depends on q, with its bound.
struct QScalar {
  Rational value;
  QDegreeBound bound = QDegreeBound::one();

  friend QScalar operator*(const QScalar& a, const QScalar& b) {
    return {a.value * b.value, a.bound * b.bound};
  }
  friend Expansion operator*(const QScalar& c, const Expansion& e) {
    if (c.value.is_zero()) return {};
    return {e.poly * c.value, c.bound * e.bound};
  }
};

struct IdentitySides {
  Expansion lhs;
  Expansion rhs;
};

using IdentityParams = std::map<std::string, int>;

/// Everything a side builder may use: the context for one q, its family
/// table, and the series truncation order.
struct BuildContext {
  const QContext& ctx;
  const FamilyCache& families;
  unsigned N;
};

/// Where the values of a parameter come from when a grid is enumerated.
enum class ParamSource {
  index,  // 0..max_index
  base,   // 1..max_base
  trial,  // 0..trials-1
  route,  // 1 = classical constructors, 2 = q-sums at q = 1
  rule,   // 1..2
};

struct ParamSpec {
  std::string name;
  ParamSource source;
};

struct CatalogEntry {
  std::string tag;
  std::string equation;
  std::vector<ParamSpec> params;
  /// False for identities with no q in them (classical limits, integer and
  /// reindexing lemmas); those are evaluated once, at q = 1.
  bool q_dependent = true;
  /// True when the identity involves a truncated series in t.
  bool uses_series = false;
  /// Ambiguity group shared by the alternative readings of one formula.
  std::string referee_group;
  /// True for a reading kept only for the referee (`:literal`, ...).
  bool alternate_reading = false;
  std::function<IdentitySides(const BuildContext&, const IdentityParams&)>
      build;
};

/// Every identity, in display order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& tag);

struct IdentityCase {
  std::string tag;
  IdentityParams params;
  /// Points requested by the caller. Certification may add more.
  std::vector<Rational> q_values;
  unsigned N = 12;
};

enum class VerifyStatus { pass, fail };

struct VerifyReport {
  IdentityCase identity_case;
  VerifyStatus status = VerifyStatus::fail;
  /// lhs - rhs at `failing_q`; the zero polynomial on a pass.
  MPoly difference;
  std::optional<Rational> failing_q;
  /// Every q at which both sides were built and compared, in order.
  std::vector<Rational> q_checked;
  QDegreeBound bound;
  /// Error text when a side could not be built.
  std::string cause;
  bool arithmetic_error = false;
  std::chrono::microseconds elapsed{0};

  bool passed() const { return status == VerifyStatus::pass; }
};

/// Contexts and family tables for several q values, shared across cases and
/// threads.
class ContextPool {
 public:
  struct Entry {
    explicit Entry(const Rational& q) : ctx(q), families(ctx) {}
    QContext ctx;
    FamilyCache families;
  };

  const Entry& get(const Rational& q);

 private:
  std::mutex mutex_;
  std::map<Rational, std::unique_ptr<Entry>> entries_;
};

std::vector<Rational> default_q_values();

/// Extra evaluation points after `used`: positive rationals in Calkin-Wilf
/// order, skipping 1 and anything already in `used`.
std::vector<Rational> certification_points(const std::vector<Rational>& used,
                                           std::size_t count);

/// Builds both sides of one instance at one q.
IdentitySides build_sides(const IdentityCase& c, const Rational& q,
                          ContextPool& pool);

/// Checks the instance at every requested q and then at further points until
/// the number of agreeing points exceeds the q-degree bound of the
/// difference, which makes a pass an identity in q. Stops at the first
/// disagreeing point.
VerifyReport verify(const IdentityCase& c, ContextPool& pool);
VerifyReport verify(const IdentityCase& c);

struct SuiteGrid {
  std::vector<std::string> tags;
  int max_index = 4;
  int max_base = 3;
  int trials = 100;
  unsigned N = 12;
  std::vector<Rational> q_values = default_q_values();
};

/// Parameter points of one tag on the grid, in enumeration order.
std::vector<IdentityParams> grid_points(const CatalogEntry& entry,
                                        const SuiteGrid& grid);

/// Runs every tag of the grid (all catalog tags when `tags` is empty) over
/// its parameter points, concurrently. The result is ordered by tag (grid
/// order) and then by parameter point, whatever the scheduling.
std::vector<VerifyReport> verify_suite(const SuiteGrid& grid,
                                       unsigned threads = 0);

std::string format_params(const IdentityParams& p);

/// Outcome of comparing the readings of one ambiguous formula.
struct RefereePoint {
  IdentityParams params;
  std::vector<std::string> passing;
  /// Both readings build the same sides here, so they cannot disagree.
  bool equivalent = false;
};

struct RefereeResult {
  std::string group;
  std::vector<std::string> readings;
  std::vector<RefereePoint> points;
  /// The reading that wins every discriminating point, if any.
  std::optional<std::string> winner;
  /// Exactly one reading passes at every discriminating point, and
  /// equivalent points pass.
  bool ok = false;
};

std::vector<std::string> referee_groups();
RefereeResult run_referee(const std::string& group, const SuiteGrid& grid,
                          unsigned threads = 0);

struct CoherenceResult {
  std::string name;
  int points = 0;
  int agreeing = 0;
  bool ok() const { return points > 0 && points == agreeing; }
};

/// Checks that the specialised formulas are exactly the specialisations of
/// the general ones: C4.2 and C4.3 from C4.1 (l = 0, k = 0), C4.13 from
/// T3.1-3.12 at z = 0, C4.14 from T3.2-3.26 at z = Z = zeta = U = 0.
std::vector<CoherenceResult> coherence_checks(const Rational& q,
                                              int max_index, int max_base);

/// For every classical-limit tag and grid point, both routes must build the
/// same polynomials.
CoherenceResult classical_route_agreement(int max_index, int max_base);

}  // namespace qlgh
