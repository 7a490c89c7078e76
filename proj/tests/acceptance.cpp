// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "oracle.hpp"
#include "test_util.hpp"
#include "xratio/dual_geometry.hpp"
#include "xratio/energy.hpp"
#include "xratio/expander.hpp"
#include "xratio/experiments.hpp"
#include "xratio/mobius.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace xratio;

namespace {

struct Context {
  std::vector<GrowthRecord> ap_f, ap_g, ap_h;
  std::vector<GrowthRecord> rnd_f, rnd_g, rnd_h;
  std::vector<InputSet> c2_sets; // the subsets exercised by criterion 2
};

Context ctx;

bool check(std::ostringstream &log, bool ok, const std::string &what) {
  if (!ok)
    log << " [" << what << " failed]";
  return ok;
}

// ---- criterion 1 ------------------------------------------------------

bool criterion1(std::ostringstream &log) {
  std::mt19937_64 rng(2026);
  bool ok = true;
  int det_pos = 0, det_neg = 0;

  int done = 0;
  while (done < 1000) {
    auto q = testutil::random_distinct(rng, 4, 25);
    auto t = testutil::random_mobius(rng, 12);
    std::array<ExtRational, 4> img;
    bool finite = true;
    for (int j = 0; j < 4; ++j) {
      img[j] = t.apply(q[j]);
      finite = finite && img[j].is_finite();
    }
    if (!finite)
      continue;
    ok &= check(log,
                cross_ratio(q[0], q[1], q[2], q[3]) ==
                    cross_ratio(img[0], img[1], img[2], img[3]),
                "invariance");
    ++done;
  }

  for (int i = 0; i < 1000; ++i) {
    auto aq = testutil::random_distinct(rng, 4, 6);
    auto bq = testutil::random_distinct(rng, 4, 6);
    bool related = quadruple_related({aq[0], aq[1], aq[2], aq[3]},
                                     {bq[0], bq[1], bq[2], bq[3]});
    bool equal_x = cross_ratio(aq[0], aq[1], aq[2], aq[3]) ==
                   cross_ratio(bq[0], bq[1], bq[2], bq[3]);
    ok &= check(log, related == equal_x, "related-vs-cross-ratio");
    if (related) {
      auto w = solve_triple({aq[0], aq[1], aq[2]}, {bq[0], bq[1], bq[2]});
      (w.determinant() > 0 ? det_pos : det_neg)++;
    }
  }
  log << " witness det signs +" << det_pos << "/-" << det_neg;
  return ok;
}

// ---- criterion 2 ------------------------------------------------------

bool criterion2(std::ostringstream &log) {
  const std::vector<long long> universe = {0, 1, 2, 4, 7, 11, 16};
  bool ok = true;
  int checked = 0;
  for (unsigned mask = 0; mask < (1u << universe.size()); ++mask) {
    std::vector<ExtRational> vals;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask & (1u << i))
        vals.emplace_back(universe[i]);
    if (vals.size() < 4)
      continue;
    auto A = InputSet::from_values(vals);
    ctx.c2_sets.push_back(A);
    ok &= check(log, energy_direct(1, A) == energy_dual(1, A), "order 1");
    ok &= check(log, energy_direct(2, A) == energy_dual(2, A), "order 2");
    if (A.size() == 5 || A.size() == 6)
      ok &= check(log, energy_direct(3, A) == energy_dual(3, A), "order 3");
    // order-1 variant with 0 removed
    if (A.contains_zero() && A.size() >= 5) {
      std::vector<ExtRational> nz;
      for (const auto &e : A)
        if (!e.is_zero())
          nz.push_back(e);
      auto B = InputSet::from_values(nz);
      ok &= check(log, energy_direct(1, B) == energy_dual(1, B),
                  "order 1 sans 0");
    }
    ++checked;
  }
  log << " " << checked << " subsets";
  return ok;
}

// ---- criterion 3 ------------------------------------------------------

bool criterion3(std::ostringstream &log) {
  bool ok = true;
  for (auto vals : {std::vector<long long>{0, 1, 2, 3, 4},
                    std::vector<long long>{-2, -1, 0, 1, 3}}) {
    std::vector<ExtRational> v(vals.begin(), vals.end());
    auto rep = verify_planes_lemma(InputSet::from_values(v));
    ok &= check(log, rep.triples_are_points, "property 1 (generic triples)");
    ok &= check(log, rep.colinear_only_in_quadric,
                "property 1 (colinear triples confined to the quadric)");
    ok &= check(log, rep.labels_injective, "property 2");
    ok &= check(log, rep.lines_distinct, "property 3");
    ok &= check(log, rep.degree_bounded, "property 4");
    log << " [n=" << rep.set_size << ": " << rep.triples_checked << " triples ("
        << rep.degenerate_triples << " same-row/column), max degree "
        << rep.max_point_degree << "]";
  }
  return ok;
}

// ---- criterion 4 ------------------------------------------------------

bool criterion4(std::ostringstream &log) {
  std::mt19937_64 rng(2027);
  bool ok = true;
  for (int i = 0; i < 500; ++i) {
    auto src = testutil::random_distinct(rng, 3, 20);
    auto dst = testutil::random_distinct(rng, 3, 20);
    auto ti = triple_intersection(plane_for(src[0], dst[0]),
                                  plane_for(src[1], dst[1]),
                                  plane_for(src[2], dst[2]));
    bool point = ti.type == IntersectionType::Point;
    ok &= check(log, point, "intersection is a point");
    if (point) {
      auto t = solve_triple({src[0], src[1], src[2]}, {dst[0], dst[1], dst[2]});
      ok &= check(log, *ti.point == embed(t), "witness equality");
    }
  }
  return ok;
}

// ---- criterion 5 ------------------------------------------------------

bool criterion5(std::ostringstream &log) {
  FamilySpec ap;
  ap.kind = FamilyKind::Ap;
  ctx.ap_g = scan('g', ap, {16, 24, 32, 48, 64});
  ctx.ap_f = scan('f', ap, {16, 32, 64, 128, 256});

  auto fit_g = fit_exponent(ctx.ap_g, FitModel::PowerOverLog);
  auto fit_f = fit_exponent(ctx.ap_f, FitModel::PowerOverLog);
  double eg = 1.0 + fit_g.delta;
  double ef = 1.0 + fit_f.delta;
  log << " g exponent " << eg << ", f exponent " << ef;
  bool ok = check(log, eg >= 2.6 && eg <= 3.2, "g exponent in [2.6,3.2]");
  ok &= check(log, ef >= 2.6 && ef <= 3.2, "f exponent in [2.6,3.2]");
  if (!ok) {
    // Diagnosis, not a pass: the image counts themselves are correct (they
    // match an independent brute-force enumeration), but at sizes 16..256
    // the power-over-log model's slope necessarily exceeds the pure-power
    // slope by d(log log n)/d(log n) ~ 0.25-0.30, so a bracket centered on
    // 3 cannot hold for this model at desk scale. The pure-power fit of
    // the same data is reported for reference.
    double pg = 1.0 + fit_exponent(ctx.ap_g, FitModel::PurePower).delta;
    double pf = 1.0 + fit_exponent(ctx.ap_f, FitModel::PurePower).delta;
    log << " [pure-power fits for reference: g " << pg << ", f " << pf
        << "; bracket is attainable only under the pure-power model at"
           " these sizes]";
  }
  return ok;
}

// ---- criterion 6 ------------------------------------------------------

double floor_ratio(const GrowthRecord &r, char fn) {
  double n = double(r.n);
  double c = double(r.image_count);
  switch (fn) {
  case 'f': return c * std::log(n) / (n * n);
  case 'g': return c / (n * n);
  default: return c * std::log(n) / (n * n * n * n);
  }
}

bool floors_hold(std::ostringstream &log, const std::vector<GrowthRecord> &recs,
                 char fn, const std::string &tag) {
  if (recs.size() < 2)
    return check(log, false, tag + " scan missing");
  double base = floor_ratio(recs.front(), fn);
  double min_ratio = base;
  for (const auto &r : recs)
    min_ratio = std::min(min_ratio, floor_ratio(r, fn));
  bool ok = min_ratio >= 0.5 * base;
  if (!ok)
    log << " [" << tag << ": min " << min_ratio << " < half of " << base << "]";
  return ok;
}

bool criterion6(std::ostringstream &log) {
  FamilySpec ap;
  ap.kind = FamilyKind::Ap;
  FamilySpec rnd;
  rnd.kind = FamilyKind::RandomInt;
  rnd.seed = 2028;

  ctx.ap_h = scan('h', ap, {8, 12, 16, 24, 32});
  ctx.rnd_f = scan('f', rnd, {16, 32, 64, 128, 256});
  ctx.rnd_g = scan('g', rnd, {16, 24, 32, 48, 64});
  ctx.rnd_h = scan('h', rnd, {8, 12, 16, 24, 32});

  bool ok = true;
  ok &= floors_hold(log, ctx.ap_f, 'f', "ap f");
  ok &= floors_hold(log, ctx.ap_g, 'g', "ap g");
  ok &= floors_hold(log, ctx.ap_h, 'h', "ap h");
  ok &= floors_hold(log, ctx.rnd_f, 'f', "random f");
  ok &= floors_hold(log, ctx.rnd_g, 'g', "random g");
  ok &= floors_hold(log, ctx.rnd_h, 'h', "random h");
  return ok;
}

// ---- criterion 7 ------------------------------------------------------

bool criterion7(std::ostringstream &log) {
  bool ok = true;
  auto A = InputSet::from_integers({1, 2, 3});
  auto values = image_f_values(A);
  std::vector<ExtRational> expected = {
      ExtRational::make(1, 3),  ExtRational::make(-1, 4),
      ExtRational::make(-4, 3), ExtRational(-4),
      ExtRational::make(-3, 4), ExtRational(3)};
  std::sort(expected.begin(), expected.end());
  ok &= check(log, values == expected, "f({1,2,3}) value set");
  ok &= check(log, image_f(A).image_count == 6, "|f({1,2,3})| = 6");

  auto G = InputSet::from_integers({0, 1, 2, 3});
  ok &= check(log, image_g(G).image_count == 6, "|g({0,1,2,3})| = 6");

  // independent naive oracle
  ok &= check(log, oracle::naive_f(oracle::ints({1, 2, 3})).size() == 6,
              "oracle f count");
  ok &= check(log, oracle::naive_g(oracle::ints({0, 1, 2, 3})).size() == 6,
              "oracle g count");
  return ok;
}

// ---- criterion 8 ------------------------------------------------------

bool criterion8(std::ostringstream &log) {
  bool ok = true;
  // criterion-2 subsets, all orders that ran there
  for (const auto &A : ctx.c2_sets) {
    for (int order : {1, 2}) {
      auto rep = cauchy_schwarz_report(order, A);
      ok &= check(log, rep.image_count >= rep.lower_bound, "c2 pivot");
    }
    if (A.size() == 5 || A.size() == 6) {
      auto rep = cauchy_schwarz_report(3, A);
      ok &= check(log, rep.image_count >= rep.lower_bound, "c2 pivot order 3");
    }
  }
  // criterion-5 AP sets: order 1 for the f scan, order 2 for the g scan
  FamilySpec ap;
  ap.kind = FamilyKind::Ap;
  for (std::size_t n : {16, 32, 64, 128, 256}) {
    ap.n = n;
    auto rep = cauchy_schwarz_report(1, generate(ap), /*cap=*/n);
    ok &= check(log, rep.image_count >= rep.lower_bound, "c5 f pivot");
  }
  for (std::size_t n : {16, 24, 32, 48, 64}) {
    ap.n = n;
    auto rep = cauchy_schwarz_report(2, generate(ap), /*cap=*/n);
    ok &= check(log, rep.image_count >= rep.lower_bound, "c5 g pivot");
  }
  return ok;
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<bool(std::ostringstream &)> run;
};

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "cross-ratio invariance, 2x1000 seeded trials", 10, criterion1},
      {2, "energy direct = dual on the 7-element universe", 120, criterion2},
      {3, "planes-lemma exhaustive verification", 60, criterion3},
      {4, "intersection point = embedded solve_triple, 500 trials", 30,
       criterion4},
      {5, "AP growth exponents for g and f in [2.6, 3.2]", 300, criterion5},
      {6, "theorem floors never drop below half the initial ratio", 300,
       criterion6},
      {7, "exact small-case values vs naive oracle", 1, criterion7},
      {8, "Cauchy-Schwarz pivot on criteria 2/5 sets", 300, criterion8},
  };

  int failures = 0;
  for (auto &c : criteria) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception &e) {
      log << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (secs > c.budget_s) {
      ok = false;
      log << " [over budget " << c.budget_s << " s]";
    }
    std::printf("criterion %d: %s  (%.2f s)  %s%s\n", c.id,
                ok ? "PASS" : "FAIL", secs, c.name.c_str(), log.str().c_str());
    if (!ok)
      ++failures;
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
