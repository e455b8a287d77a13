#include <algorithm>
#include <sstream>

#include "qlgh/error.hpp"
#include "qlgh/identities.hpp"

namespace qlgh {

const ContextPool::Entry& ContextPool::get(const Rational& q) {
  std::lock_guard lock(mutex_);
  auto& slot = entries_[q];
  if (!slot) slot = std::make_unique<Entry>(q);
  return *slot;
}

std::vector<Rational> default_q_values() {
  return {Rational(1, 2), Rational(2, 3), Rational(3)};
}

std::vector<Rational> certification_points(const std::vector<Rational>& used,
                                           std::size_t count) {
  std::vector<Rational> out;
  Rational cw(1);
  while (out.size() < count) {
    // Calkin-Wilf successor: 1 / (2 floor(x) - x + 1).
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), cw.raw().get_num_mpz_t(),
               cw.raw().get_den_mpz_t());
    cw = (Rational(mpq_class(fl)) * Rational(2) - cw + Rational(1)).inverse();
    if (cw.is_one()) continue;
    if (std::find(used.begin(), used.end(), cw) != used.end()) continue;
    if (std::find(out.begin(), out.end(), cw) != out.end()) continue;
    out.push_back(cw);
  }
  return out;
}

IdentitySides build_sides(const IdentityCase& c, const Rational& q,
                          ContextPool& pool) {
  const CatalogEntry* entry = find_entry(c.tag);
  if (entry == nullptr) throw DomainError("unknown identity tag: " + c.tag);
  const ContextPool::Entry& e = pool.get(q);
  BuildContext b{e.ctx, e.families, c.N};
  return entry->build(b, c.params);
}

namespace {

bool certifies(const Rational& q) {
  return !q.is_zero() && q != Rational(-1);
}

}  // namespace

VerifyReport verify(const IdentityCase& c, ContextPool& pool) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.identity_case = c;
  const CatalogEntry* entry = find_entry(c.tag);
  if (entry == nullptr) throw DomainError("unknown identity tag: " + c.tag);

  std::vector<Rational> qs;
  if (!entry->q_dependent) {
    qs.push_back(Rational(1));
  } else {
    for (const auto& q : c.q_values.empty() ? default_q_values() : c.q_values) {
      if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    }
  }

  bool failed = false;
  try {
    long needed = 0;
    long certified = 0;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      IdentitySides sides = build_sides(c, qs[i], pool);
      if (i == 0) {
        report.bound = join(sides.lhs.bound, sides.rhs.bound);
        needed = std::max<long>(3, report.bound.points_needed());
      }
      report.q_checked.push_back(qs[i]);
      MPoly diff = sides.lhs.poly - sides.rhs.poly;
      if (!diff.is_zero()) {
        report.difference = std::move(diff);
        report.failing_q = qs[i];
        failed = true;
        break;
      }
      if (certifies(qs[i])) ++certified;
      if (entry->q_dependent && i + 1 == qs.size() && certified < needed) {
        auto extra = certification_points(
            qs, static_cast<std::size_t>(needed - certified));
        qs.insert(qs.end(), extra.begin(), extra.end());
      }
    }
  } catch (const VanishingFactorError& e) {
    report.cause = e.what();
    report.arithmetic_error = true;
    failed = true;
  } catch (const Error& e) {
    report.cause = e.what();
    failed = true;
  }
  report.status = failed ? VerifyStatus::fail : VerifyStatus::pass;
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

VerifyReport verify(const IdentityCase& c) {
  ContextPool pool;
  return verify(c, pool);
}

std::string format_params(const IdentityParams& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : p) {
    if (!first) out << ' ';
    first = false;
    out << name << '=' << value;
  }
  return out.str();
}

}  // namespace qlgh
