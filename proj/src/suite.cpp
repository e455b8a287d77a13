#include <atomic>
#include <thread>

#include "qlgh/error.hpp"
#include "qlgh/identities.hpp"

namespace qlgh {

std::vector<IdentityParams> grid_points(const CatalogEntry& entry,
                                        const SuiteGrid& grid) {
  std::vector<IdentityParams> points{IdentityParams{}};
  for (const auto& spec : entry.params) {
    int lo = 0, hi = -1;
    switch (spec.source) {
      case ParamSource::index:
        lo = 0, hi = grid.max_index;
        break;
      case ParamSource::base:
        lo = 1, hi = grid.max_base;
        break;
      case ParamSource::trial:
        lo = 0, hi = grid.trials - 1;
        break;
      case ParamSource::route:
      case ParamSource::rule:
        lo = 1, hi = 2;
        break;
    }
    std::vector<IdentityParams> next;
    for (const auto& p : points) {
      for (int value = lo; value <= hi; ++value) {
        IdentityParams q = p;
        q[spec.name] = value;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

namespace {

std::vector<const CatalogEntry*> selected_entries(const SuiteGrid& grid) {
  std::vector<const CatalogEntry*> out;
  if (grid.tags.empty()) {
    for (const auto& e : catalog()) out.push_back(&e);
    return out;
  }
  for (const auto& tag : grid.tags) {
    const CatalogEntry* e = find_entry(tag);
    if (e == nullptr) throw DomainError("unknown identity tag: " + tag);
    out.push_back(e);
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

bool same_sides(const IdentitySides& a, const IdentitySides& b) {
  return a.lhs.poly == b.lhs.poly && a.rhs.poly == b.rhs.poly;
}

}  // namespace

std::vector<VerifyReport> verify_suite(const SuiteGrid& grid,
                                       unsigned threads) {
  std::vector<IdentityCase> cases;
  for (const CatalogEntry* e : selected_entries(grid)) {
    for (auto& p : grid_points(*e, grid)) {
      cases.push_back({e->tag, std::move(p), grid.q_values, grid.N});
    }
  }
  std::vector<VerifyReport> reports(cases.size());
  ContextPool pool;
  parallel_for(cases.size(), threads,
               [&](std::size_t i) { reports[i] = verify(cases[i], pool); });
  return reports;
}

std::vector<std::string> referee_groups() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) {
    if (e.referee_group.empty()) continue;
    if (std::find(out.begin(), out.end(), e.referee_group) == out.end()) {
      out.push_back(e.referee_group);
    }
  }
  return out;
}

RefereeResult run_referee(const std::string& group, const SuiteGrid& grid,
                          unsigned threads) {
  RefereeResult result;
  result.group = group;
  for (const auto& e : catalog()) {
    if (e.referee_group == group) result.readings.push_back(e.tag);
  }
  if (result.readings.size() < 2) {
    throw DomainError("unknown referee group: " + group);
  }
  SuiteGrid g = grid;
  g.tags = result.readings;
  std::vector<VerifyReport> reports = verify_suite(g, threads);
  std::size_t per = reports.size() / result.readings.size();

  const CatalogEntry* first = find_entry(result.readings.front());
  Rational q = first->q_dependent && !grid.q_values.empty() ? grid.q_values[0]
                                                            : Rational(1);
  ContextPool pool;
  std::map<std::string, int> wins;
  int discriminating = 0;
  result.ok = true;
  for (std::size_t i = 0; i < per; ++i) {
    RefereePoint point;
    point.params = reports[i].identity_case.params;
    for (std::size_t r = 0; r < result.readings.size(); ++r) {
      if (reports[r * per + i].passed()) {
        point.passing.push_back(result.readings[r]);
      }
    }
    try {
      IdentitySides base = build_sides(reports[i].identity_case, q, pool);
      point.equivalent = true;
      for (std::size_t r = 1; r < result.readings.size(); ++r) {
        if (!same_sides(base,
                        build_sides(reports[r * per + i].identity_case, q, pool))) {
          point.equivalent = false;
        }
      }
    } catch (const Error&) {
      point.equivalent = false;
    }
    if (point.equivalent) {
      if (point.passing.size() != result.readings.size()) result.ok = false;
    } else {
      ++discriminating;
      if (point.passing.size() == 1) {
        ++wins[point.passing.front()];
      } else {
        result.ok = false;
      }
    }
    result.points.push_back(std::move(point));
  }
  for (const auto& [tag, count] : wins) {
    if (count == discriminating) result.winner = tag;
  }
  if (discriminating > 0 && !result.winner) result.ok = false;
  return result;
}

namespace {

IdentitySides sides_of(const std::string& tag, IdentityParams params,
                       const Rational& q, ContextPool& pool) {
  return build_sides({tag, std::move(params), {q}, 12}, q, pool);
}

IdentitySides zeroed(IdentitySides s, std::initializer_list<Var> vars) {
  std::map<Var, MPoly> zero;
  for (Var v : vars) zero[v] = MPoly();
  s.lhs.poly = substitute(s.lhs.poly, zero);
  s.rhs.poly = substitute(s.rhs.poly, zero);
  return s;
}

}  // namespace

std::vector<CoherenceResult> coherence_checks(const Rational& q,
                                              int max_index, int max_base) {
  ContextPool pool;
  CoherenceResult c2{"C4.2 from C4.1 at l = 0"};
  CoherenceResult c3{"C4.3 from C4.1 at k = 0"};
  CoherenceResult c13{"C4.13 from T3.1-3.12 at z = 0"};
  CoherenceResult c14{"C4.14 from T3.2-3.26 at z = Z = zeta = U = 0"};
  auto tally = [](CoherenceResult& r, bool same) {
    ++r.points;
    if (same) ++r.agreeing;
  };
  for (int m = 1; m <= max_base; ++m) {
    for (int k = 0; k <= max_index; ++k) {
      tally(c2, same_sides(sides_of("C4.1", {{"k", k}, {"l", 0}, {"m", m}}, q, pool),
                           sides_of("C4.2", {{"k", k}, {"m", m}}, q, pool)));
      tally(c3, same_sides(sides_of("C4.1", {{"k", 0}, {"l", k}, {"m", m}}, q, pool),
                           sides_of("C4.3", {{"l", k}, {"m", m}}, q, pool)));
    }
    for (int s = 1; s <= max_base; ++s) {
      for (int k = 0; k <= max_index; ++k) {
        for (int l = 0; l <= max_index; ++l) {
          auto general = sides_of("T3.1-3.12",
                                  {{"k", k}, {"l", l}, {"m", m}, {"s", s}}, q, pool);
          tally(c13, same_sides(zeroed(general, {Var::z}),
                                sides_of("C4.13", {{"k", k}, {"l", l}, {"m", m}},
                                         q, pool)));
          auto product = sides_of("T3.2-3.26",
                                  {{"n", k}, {"r", l}, {"m", m}, {"s", s}}, q, pool);
          tally(c14,
                same_sides(zeroed(product, {Var::z, Var::Z, Var::zeta, Var::U}),
                           sides_of("C4.14", {{"n", k}, {"r", l}, {"m", m}}, q,
                                    pool)));
        }
      }
    }
  }
  return {c2, c3, c13, c14};
}

CoherenceResult classical_route_agreement(int max_index, int max_base) {
  CoherenceResult result{"classical constructors agree with q-sums at q = 1"};
  SuiteGrid grid;
  grid.max_index = max_index;
  grid.max_base = max_base;
  ContextPool pool;
  for (const auto& e : catalog()) {
    if (e.tag.rfind("L4.", 0) != 0) continue;
    for (auto p : grid_points(e, grid)) {
      if (p.at("route") != 1) continue;
      IdentitySides classical = sides_of(e.tag, p, Rational(1), pool);
      p["route"] = 2;
      IdentitySides q_sums = sides_of(e.tag, p, Rational(1), pool);
      ++result.points;
      if (same_sides(classical, q_sums)) ++result.agreeing;
    }
  }
  return result;
}

}  // namespace qlgh
