// Copyright 2026 The PeerRank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Correlation and test-statistic checks against hand-derived values and
// independently computed oracles (quadratic-time ranks, long-double direct
// Pearson, numerically integrated t tails).

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "prs/rng.hpp"
#include "prs/stats.hpp"
#include "test_util.hpp"

namespace {

using namespace prs;
using stats::fractional_ranks;
using stats::group_mean_compare;
using stats::pearson;
using stats::spearman;
using stats::student_t_two_sided_p;

std::vector<double> random_vector(Rng& rng, std::size_t n, bool with_ties) {
  std::vector<double> v(n);
  for (double& x : v) {
    // A coarse grid forces duplicates; a fine one makes them unlikely.
    x = with_ties ? static_cast<double>(rng.below(8))
                  : testutil::dyadic(rng.below(1025)) + 8.0 * rng.uniform01();
  }
  return v;
}

bool constant(const std::vector<double>& v) {
  for (double x : v) {
    if (x != v.front()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("spearman on hand-derived examples") {
  CHECK(spearman(std::vector{1.0, 2.0, 3.0}, std::vector{10.0, 20.0, 30.0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spearman(std::vector{1.0, 2.0, 3.0}, std::vector{30.0, 20.0, 10.0}) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  // d = (0, 1, -1): 1 - 6*2/(3*8) = 0.5.
  CHECK(spearman(std::vector{1.0, 2.0, 3.0}, std::vector{1.0, 3.0, 2.0}) ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("pearson on hand-derived examples") {
  const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  std::vector<double> y;
  for (double v : x) y.push_back(2.0 * v + 1.0);
  CHECK(pearson(x, y) == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> neg;
  for (double v : x) neg.push_back(-v);
  CHECK(pearson(x, neg) == doctest::Approx(-1.0).epsilon(1e-12));
  // Covariance 3, variances 5 and 2: r = 3/sqrt(10).
  CHECK(pearson(x, std::vector{0.0, 1.0, 1.0, 2.0}) ==
        doctest::Approx(0.9486832980505138).epsilon(1e-9));
}

TEST_CASE("degenerate and malformed inputs are rejected") {
  const std::vector<double> ok{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(pearson(ok, std::vector{1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(pearson(std::vector{1.0}, std::vector{2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pearson(ok, std::vector{5.0, 5.0, 5.0}), std::domain_error);
  CHECK_THROWS_AS(spearman(ok, std::vector{5.0, 5.0, 5.0}), std::domain_error);
  const double nan = std::nan("");
  CHECK_THROWS_AS(pearson(ok, std::vector{1.0, nan, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(group_mean_compare(std::vector{1.0}, ok),
                  std::invalid_argument);
}

TEST_CASE("spearman of a vector with itself is 1") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(split_mix64(0x5EA0 + i));
    const auto x = random_vector(rng, 3 + rng.below(40), false);
    CHECK(spearman(x, x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("spearman is invariant under strictly increasing transforms") {
  std::size_t exercised = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(split_mix64(0x51AC + i));
    const auto x = random_vector(rng, 3 + rng.below(40), true);
    const auto y = random_vector(rng, x.size(), true);
    if (constant(x) || constant(y)) continue;  // degenerate draw
    std::vector<double> fx;
    for (double v : x) fx.push_back(std::exp(0.5 * v) - 3.0);
    std::vector<double> gy;
    for (double v : y) gy.push_back(v * v * v + 2.0 * v);  // odd, increasing
    if (fractional_ranks(x) == fractional_ranks(fx) &&
        fractional_ranks(y) == fractional_ranks(gy)) {
      CHECK(spearman(x, y) == spearman(fx, gy));  // identical ranks: bitwise
      ++exercised;
    } else {
      FAIL("transform altered ranks");
    }
  }
  CHECK(exercised >= 40);
}

TEST_CASE("correlations are symmetric and bounded") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(split_mix64(0xB0D + i));
    const auto x = random_vector(rng, 3 + rng.below(40), false);
    const auto y = random_vector(rng, x.size(), false);
    const double p = pearson(x, y);
    const double s = spearman(x, y);
    CHECK(p == pearson(y, x));
    CHECK(s == spearman(y, x));
    CHECK(p >= -1.0);
    CHECK(p <= 1.0);
    CHECK(s >= -1.0);
    CHECK(s <= 1.0);
  }
}

TEST_CASE("pearson is invariant under positive affine transforms") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(split_mix64(0xAFF + i));
    const auto x = random_vector(rng, 3 + rng.below(40), false);
    const auto y = random_vector(rng, x.size(), false);
    std::vector<double> xt, yt;
    const double ax = 0.25 + rng.uniform01() * 3.0;
    const double bx = rng.uniform01() * 10.0 - 5.0;
    const double ay = 0.25 + rng.uniform01() * 3.0;
    const double by = rng.uniform01() * 10.0 - 5.0;
    for (double v : x) xt.push_back(ax * v + bx);
    for (double v : y) yt.push_back(ay * v + by);
    CHECK(pearson(xt, yt) == doctest::Approx(pearson(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("fractional ranks match the quadratic average-rank oracle") {
  // Also the tie-handling acceptance check: 100 random tied vectors.
  std::size_t exercised = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(split_mix64(0x71E5 + i));
    const auto x = random_vector(rng, 4 + rng.below(60), true);
    CHECK(fractional_ranks(x) == testutil::naive_average_ranks(x));
    const auto y = random_vector(rng, x.size(), true);
    if (constant(x) || constant(y)) continue;
    CHECK(spearman(x, y) ==
          doctest::Approx(testutil::naive_pearson(
                              testutil::naive_average_ranks(x),
                              testutil::naive_average_ranks(y)))
              .epsilon(1e-12));
    ++exercised;
  }
  CHECK(exercised >= 90);
}

TEST_CASE("welch comparison against the integration oracle") {
  const std::vector<double> a{12.1, 14.3, 13.5, 12.8, 13.9};
  const std::vector<double> b{15.2, 14.8, 16.1, 15.5};
  const auto r = group_mean_compare(a, b);
  CHECK(r.mean_a == doctest::Approx(13.32).epsilon(1e-12));
  CHECK(r.mean_b == doctest::Approx(15.4).epsilon(1e-12));
  CHECK(r.statistic == doctest::Approx(-4.342767991428476).epsilon(1e-9));
  CHECK(r.df == doctest::Approx(6.716711509105484).epsilon(1e-9));
  CHECK(r.p_value == doctest::Approx(0.003730567484667201).epsilon(1e-9));
}

TEST_CASE("t tail probabilities match numeric integration") {
  CHECK(student_t_two_sided_p(1.0, 5.0) ==
        doctest::Approx(0.3632174676491365).epsilon(1e-9));
  CHECK(student_t_two_sided_p(2.5, 12.0) ==
        doctest::Approx(0.027915399571323957).epsilon(1e-9));
  CHECK(student_t_two_sided_p(0.5, 3.7) ==
        doctest::Approx(0.6453356333199454).epsilon(1e-9));
  CHECK(student_t_two_sided_p(0.0, 7.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(student_t_two_sided_p(std::numeric_limits<double>::infinity(), 7.0) ==
        0.0);
  CHECK_THROWS_AS(student_t_two_sided_p(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("welch edge cases") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto same = group_mean_compare(v, v);
  CHECK(same.statistic == 0.0);
  CHECK(same.p_value == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> lo, hi;
  for (int i = 0; i < 8; ++i) {
    lo.push_back(0.1 * i);
    hi.push_back(100.0 + 0.1 * i);
  }
  CHECK(group_mean_compare(lo, hi).p_value < 1e-6);

  const std::vector<double> c1{2.0, 2.0, 2.0};
  const std::vector<double> c2{3.0, 3.0};
  const auto flat_equal = group_mean_compare(c1, c1);
  CHECK(flat_equal.p_value == 1.0);
  CHECK(flat_equal.statistic == 0.0);
  const auto flat_diff = group_mean_compare(c1, c2);
  CHECK(flat_diff.p_value == 0.0);
  CHECK(std::isinf(flat_diff.statistic));
  CHECK(flat_diff.statistic < 0.0);
}

TEST_CASE("welch p-value is invariant under swapping the groups") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(split_mix64(0x3A9 + i));
    const auto a = random_vector(rng, 2 + rng.below(20), false);
    const auto b = random_vector(rng, 2 + rng.below(20), false);
    const auto ab = group_mean_compare(a, b);
    const auto ba = group_mean_compare(b, a);
    CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));
    CHECK(ab.statistic == doctest::Approx(-ba.statistic).epsilon(1e-12));
    CHECK(ab.mean_a == ba.mean_b);
    CHECK(ab.df == doctest::Approx(ba.df).epsilon(1e-12));
  }
}

}  // TEST_SUITE
