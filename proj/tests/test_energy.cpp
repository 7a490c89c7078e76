#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "test_util.hpp"
#include "xratio/energy.hpp"
#include "xratio/errors.hpp"
#include "xratio/expander.hpp"
#include "xratio/mobius.hpp"

#include <random>

using namespace xratio;

TEST_CASE("order must be 1, 2 or 3") {
  auto A = InputSet::from_integers({1, 2, 3});
  CHECK_THROWS_AS(energy_direct(0, A), std::invalid_argument);
  CHECK_THROWS_AS(energy_dual(4, A), std::invalid_argument);
}

TEST_CASE("small exact values") {
  CHECK(energy_direct(2, InputSet::from_integers({1, 2, 3})) == 0);
  CHECK(energy_direct(1, InputSet::from_integers({1, 2, 3})) == 6);
  CHECK(energy_direct(1, InputSet::from_integers({1, 2})) == 0);
}

TEST_CASE("direct energies match the naive oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    auto vals = testutil::random_distinct(rng, 5 + trial % 2, 10);
    auto A = InputSet::from_values(vals);
    std::vector<oracle::Frac> ov;
    for (const auto &v : vals)
      ov.push_back({v.num(), v.den()});
    CHECK(energy_direct(1, A) == oracle::naive_energy(ov, 1));
    CHECK(energy_direct(2, A) == oracle::naive_energy(ov, 2));
    CHECK(energy_direct(3, A) == oracle::naive_energy(ov, 3));
  }
}

TEST_CASE("direct and dual methods agree exactly") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 5; ++trial) {
    auto A = testutil::random_set(rng, 5 + trial % 2, 9);
    CHECK(energy_direct(1, A) == energy_dual(1, A));
    CHECK(energy_direct(2, A) == energy_dual(2, A));
    if (A.size() == 5)
      CHECK(energy_direct(3, A) == energy_dual(3, A));
  }
  // and on a set containing 0, which exercises the order-1 skip rules
  auto B = InputSet::from_integers({0, 1, 2, 4, 7});
  CHECK(energy_direct(1, B) == energy_dual(1, B));
  CHECK(energy_direct(2, B) == energy_dual(2, B));
  CHECK(energy_direct(3, B) == energy_dual(3, B));
}

TEST_CASE("an AP feeds long translation orbits to the dual tally") {
  // x -> x+1 on {1..6} matches the five pairs (1,2)...(5,6)
  auto A = InputSet::from_integers({1, 2, 3, 4, 5, 6});
  Mobius shift(1, 1, 0, 1);
  std::size_t n = 0;
  for (const auto &a : A)
    if (A.contains(shift.apply(a)))
      ++n;
  CHECK(n == 5);
  // N(t) <= |A| for any transformation: t is a function
  std::mt19937_64 rng(79);
  for (int i = 0; i < 50; ++i) {
    auto t = testutil::random_mobius(rng);
    std::size_t cnt = 0;
    for (const auto &a : A) {
      auto img = t.apply(a);
      if (img.is_finite() && A.contains(img))
        ++cnt;
    }
    CHECK(cnt <= A.size());
  }
}

TEST_CASE("energy is monotone under adding an element") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 4; ++trial) {
    auto vals = testutil::random_distinct(rng, 6, 10);
    std::vector<ExtRational> smaller(vals.begin(), vals.end() - 1);
    auto A = InputSet::from_values(smaller);
    auto B = InputSet::from_values(vals);
    for (int order = 1; order <= 3; ++order)
      CHECK(energy_direct(order, A) <= energy_direct(order, B));
  }
}

TEST_CASE("histogram conservation: tuple counts have closed forms") {
  auto falling = [](std::uint64_t n, int len) {
    std::uint64_t r = 1;
    for (int i = 0; i < len; ++i)
      r *= n - std::uint64_t(i);
    return r;
  };
  std::mt19937_64 rng(89);
  auto A = testutil::random_set(rng, 7, 40);
  std::uint64_t n = A.size();
  std::uint64_t nz = n - (A.contains_zero() ? 1 : 0);
  CHECK(cauchy_schwarz_report(1, A).tuple_count == falling(nz, 3));
  CHECK(cauchy_schwarz_report(2, A).tuple_count == falling(n, 4));
  CHECK(cauchy_schwarz_report(3, A).tuple_count == falling(n, 5));
}

TEST_CASE("cauchy-schwarz pivot") {
  auto A = InputSet::from_integers({1, 2, 3});
  auto rep = cauchy_schwarz_report(1, A);
  CHECK(rep.tuple_count == 6);
  CHECK(rep.energy == 6);
  CHECK(rep.lower_bound == 6);
  CHECK(rep.image_count == 6); // tight: flat histogram

  // AP {1..10}: histogram is not flat, the inequality is strict
  std::vector<ExtRational> ap;
  for (long long i = 1; i <= 10; ++i)
    ap.emplace_back(i);
  auto rep10 = cauchy_schwarz_report(1, InputSet::from_values(ap));
  CHECK(rep10.image_count > rep10.lower_bound);

  std::mt19937_64 rng(97);
  for (int i = 0; i < 5; ++i) {
    auto B = testutil::random_set(rng, 6, 25);
    for (int order = 1; order <= 3; ++order) {
      auto r = cauchy_schwarz_report(order, B);
      CHECK(r.image_count >= r.lower_bound);
    }
  }
}

TEST_CASE("image counts agree between expander and energy histograms") {
  std::mt19937_64 rng(101);
  auto A = testutil::random_set(rng, 6, 20);
  CHECK(cauchy_schwarz_report(1, A).image_count == image_f(A).image_count);
  CHECK(cauchy_schwarz_report(2, A).image_count == image_g(A).image_count);
  CHECK(cauchy_schwarz_report(3, A).image_count == image_h(A).image_count);
}

TEST_CASE("caps are enforced and overridable") {
  std::vector<ExtRational> big;
  for (long long i = 1; i <= 17; ++i)
    big.emplace_back(i);
  auto A = InputSet::from_values(big);
  CHECK_THROWS_AS(energy_direct(3, A), CapExceeded);
  CHECK_THROWS_AS(energy_dual(2, A), CapExceeded);
  CHECK(energy_direct(1, A) > 0); // within the order-1 cap
  CHECK(energy_dual(1, InputSet::from_integers({1, 2, 3, 4})) ==
        energy_direct(1, InputSet::from_integers({1, 2, 3, 4})));
}
