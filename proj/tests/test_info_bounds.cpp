// Copyright 2026 The btl-bounds Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "btlb/errors.hpp"
#include "btlb/graph_design.hpp"
#include "btlb/info_bounds.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace btlb;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2Pi = 1.8378770664093455;

PriorHyperParams uniform_prior(std::size_t k, double a, double b) {
  PriorHyperParams p;
  p.a.assign(k, a);
  p.b.assign(k, b);
  return p;
}

ComparisonBudget uniform_complete(std::size_t k, long long per_edge) {
  ComparisonBudget b;
  b.n = MatI(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) b.n(i, j) = per_edge;
  return b;
}

}  // namespace

TEST_CASE("unit ball volumes") {
  CHECK(log_unit_ball_volume({NormFamily::kL2, 2.0, 2}) ==
        doctest::Approx(std::log(kPi)).epsilon(1e-13));
  CHECK(log_unit_ball_volume({NormFamily::kL1, 1.0, 2}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
  CHECK(log_unit_ball_volume({NormFamily::kL2, 2.0, 3}) ==
        doctest::Approx(std::log(4.0 * kPi / 3.0)).epsilon(1e-13));
}

TEST_CASE("exponent with empty budget") {
  std::size_t k = 4;
  double a = 3.0, b = 7.0;
  ComparisonBudget empty;
  empty.n = MatI(k, k);
  double expected = -0.5 * kLn2Pi + std::log(b) - digamma(a) +
                    0.5 * std::log(a);
  CHECK(e_btl(empty, uniform_prior(k, a, b)) ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("exponent on the uniform complete graph against a direct sum") {
  // k=10, a=5, b=49, total n=900 so every node load is 90.
  std::size_t k = 10;
  ComparisonBudget b = uniform_complete(k, 20);  // node load 0.5*9*20 = 90
  CHECK(b.node_load(0) == doctest::Approx(90.0));
  double expected =
      -0.5 * kLn2Pi + std::log(49.0) - oracles::asymptotic_digamma(5.0) +
      0.5 * std::log(5.0 + 90.0);
  CHECK(e_btl(b, uniform_prior(k, 5.0, 49.0)) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("exponent is additive in ln b") {
  std::size_t k = 5;
  ComparisonBudget b = uniform_complete(k, 3);
  double e1 = e_btl(b, uniform_prior(k, 4.0, 9.0));
  double e2 = e_btl(b, uniform_prior(k, 4.0, 18.0));
  CHECK(e2 - e1 == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("it_lower_bound log-domain value at k=100") {
  BoundSpec spec{NormFamily::kL2, 2.0, 100};
  double lnv = 50.0 * std::log(kPi) - log_gamma(51.0);
  double expected = std::exp(std::log(100.0) - std::log(2.0) - 1.0 -
                             0.02 * (lnv + log_gamma(51.0)));
  CHECK(it_lower_bound(0.0, spec) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("it_lower_bound monotone and exponential in the exponent") {
  BoundSpec spec{NormFamily::kL2, 2.0, 10};
  double b0 = it_lower_bound(0.3, spec);
  double b1 = it_lower_bound(0.7, spec);
  CHECK(b1 < b0);
  CHECK(b1 / b0 == doctest::Approx(std::exp(-2.0 * 0.4)).epsilon(1e-12));
}

TEST_CASE("cor1 closed forms") {
  // L2sq, k=10, a=5, b=49, n=1000.
  double expected = std::exp(-2.0 * (std::log(49.0) - digamma(5.0)) - 1.0) *
                    10.0 / 1000.5;
  CHECK(cor1_bound(1000, 10, 5.0, 49.0, Cor1Kind::kL2Squared) ==
        doctest::Approx(expected).epsilon(1e-12));
  // L2sq decays as k/n for large n.
  double r1 = cor1_bound(100000, 10, 5.0, 49.0, Cor1Kind::kL2Squared);
  double r2 = cor1_bound(200000, 10, 5.0, 49.0, Cor1Kind::kL2Squared);
  CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(1e-4));
  // L1 form.
  double l1 = cor1_bound(1000, 10, 5.0, 49.0, Cor1Kind::kL1);
  double l1_expected = std::sqrt(kPi / 2.0) *
                       std::exp(-(std::log(49.0) - digamma(5.0) + 1.0)) *
                       10.0 / std::sqrt(1000.5);
  CHECK(l1 == doctest::Approx(l1_expected).epsilon(1e-12));
}

TEST_CASE("cor1 sits below the full bound (Jensen direction)") {
  for (std::size_t k : {std::size_t{10}, std::size_t{100}}) {
    double a = 5.0, b = a * k - 1.0;
    BoundSpec spec{NormFamily::kL2, 2.0, k};
    for (long long n : {10000LL, 100000LL, 1000000LL}) {
      Topology topo{TopologyKind::kComplete, k, std::nullopt, std::nullopt};
      ComparisonBudget budget = build_budget(topo, n);
      double full = it_lower_bound(e_btl(budget, uniform_prior(k, a, b)), spec);
      double relaxed = cor1_bound(n, k, a, b, Cor1Kind::kL2Squared);
      CHECK(relaxed <= full * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("home win expectation anchors the paper's f values") {
  CHECK(home_expectation_fij(1, 0, 2.0, 2.0, ThetaDist::point(10.0)) ==
        doctest::Approx(0.87).epsilon(0.006));
  CHECK(home_expectation_fij(1, 0, 2.0, 2.0, ThetaDist::point(100.0)) ==
        doctest::Approx(0.98).epsilon(0.006));
}

TEST_CASE("equal shapes at theta=1 give F_ij = n_ij / 2") {
  double f = home_expectation_fij(3, 4, 5.0, 5.0, ThetaDist::point(1.0));
  CHECK(f == doctest::Approx(3.5).epsilon(1e-10));
}

TEST_CASE("swap identity: the two conditional win rates sum to one") {
  for (double theta : {1.5, 4.0, 20.0}) {
    for (auto [ai, aj] : {std::pair{2.0, 2.0}, std::pair{5.0, 3.0}}) {
      double q_ij = home_win_expectation(ai, aj, ThetaDist::point(theta));
      // E[Lj/(Lj + Theta Li)] computed directly with swapped shapes and the
      // advantage on the other side must complement q_ij.
      double c = std::exp(log_gamma(ai + aj) - log_gamma(ai) - log_gamma(aj));
      double other = integrate(
          [&](double x) {
            // x = Li/(Li+Lj) ~ Beta(ai, aj); Lj/(Lj + theta Li).
            return (1.0 - x) / (1.0 - x + theta * x) * c *
                   std::pow(x, ai - 1.0) * std::pow(1.0 - x, aj - 1.0);
          },
          0.0, 1.0);
      CHECK(q_ij + other == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("home win expectation matches Monte Carlo") {
  for (auto [ai, aj, theta] :
       {std::tuple{2.0, 2.0, 10.0}, std::tuple{5.0, 3.0, 2.0}}) {
    double quad = home_win_expectation(ai, aj, ThetaDist::point(theta));
    auto mc = oracles::mc_gamma_pair(
        ai, aj, 1.0,
        [theta](double x, double y) { return theta * x / (theta * x + y); },
        1000000, 2024);
    CHECK(std::abs(quad - mc.mean) <= 4.0 * mc.se);
  }
}

TEST_CASE("mixture thetas average the point expectations") {
  ThetaDist mix{{{2.0, 0.25}, {10.0, 0.75}}};
  double q = home_win_expectation(3.0, 4.0, mix);
  double q2 = home_win_expectation(3.0, 4.0, ThetaDist::point(2.0));
  double q10 = home_win_expectation(3.0, 4.0, ThetaDist::point(10.0));
  CHECK(q == doctest::Approx(0.25 * q2 + 0.75 * q10).epsilon(1e-12));
}

TEST_CASE("f closed form anchors and agreement with the rational form") {
  CHECK(f_closed_form(2.0, 10.0) == doctest::Approx(0.87).epsilon(0.006));
  CHECK(f_closed_form(2.0, 100.0) == doctest::Approx(0.98).epsilon(0.006));
  for (double theta : {1.001, 2.0, 5.0, 50.0}) {
    double via_2f1 = f_closed_form(2.0, theta);
    double via_rational = f_reference_a2(theta);
    CHECK(via_2f1 == doctest::Approx(via_rational).epsilon(1e-8));
  }
  // Limit toward 1 from above.
  CHECK(f_closed_form(2.0, 1.0 + 1e-6) == doctest::Approx(0.5).epsilon(1e-3));
  CHECK_THROWS_AS(f_closed_form(2.0, 0.9), DomainError);
  CHECK_THROWS_AS(f_closed_form(2.3, 5.0), DomainError);
}

TEST_CASE("f closed form equals the quadrature route") {
  for (double theta : {1.5, 10.0, 100.0}) {
    double via_quad = home_win_expectation(2.0, 2.0, ThetaDist::point(theta));
    CHECK(f_closed_form(2.0, theta) ==
          doctest::Approx(via_quad).epsilon(1e-7));
  }
}

TEST_CASE("e_ha equals e_btl for symmetric home budgets") {
  Rng rng(55);
  std::uniform_int_distribution<long long> cnt(0, 20);
  for (int t = 0; t < 100; ++t) {
    std::size_t k = 3 + t % 4;
    HomeBudget hb;
    hb.nh = MatI(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        long long c = cnt(rng);
        hb.nh(i, j) = c;
        hb.nh(j, i) = c;
      }
    double a = 2.0 + (t % 3);
    PriorHyperParams prior = uniform_prior(k, a, a * k - 1.0);
    double ha = e_ha(hb, prior, ThetaDist::point(2.5));
    double base = e_btl(hb.induced_budget(), prior);
    CHECK(std::abs(ha - base) <= 1e-12);
  }
}

TEST_CASE("e_ha at theta=1 equals e_btl for asymmetric budgets") {
  HomeBudget hb;
  hb.nh = MatI(3, 3);
  hb.nh(0, 1) = 9;
  hb.nh(1, 2) = 4;
  hb.nh(2, 0) = 6;
  PriorHyperParams prior = uniform_prior(3, 2.0, 5.0);
  double ha = e_ha(hb, prior, ThetaDist::point(1.0));
  double base = e_btl(hb.induced_budget(), prior);
  CHECK(ha == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("e_ha rejects non-uniform rates") {
  HomeBudget hb;
  hb.nh = MatI(2, 2);
  hb.nh(0, 1) = 3;
  PriorHyperParams prior;
  prior.a = {2.0, 2.0};
  prior.b = {3.0, 4.0};
  CHECK_THROWS_AS(e_ha(hb, prior, ThetaDist::point(2.0)), DomainError);
}

TEST_CASE("ha bound rises with theta for one-sided home budgets") {
  // All games hosted by the lower-indexed item; more advantage means more
  // information, a larger exponent, and a smaller bound.
  std::size_t k = 10;
  PriorHyperParams prior = uniform_prior(k, 2.0, 2.0 * k - 1.0);
  Topology complete{TopologyKind::kComplete, k, std::nullopt, std::nullopt};
  ComparisonBudget budget = build_budget(complete, 900);
  HomeBudget hb;
  hb.nh = MatI(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) hb.nh(i, j) = budget.n(i, j);
  double prev = e_ha(hb, prior, ThetaDist::point(1.0 + 1e-9));
  CHECK(prev == doctest::Approx(e_btl(budget, prior)).epsilon(1e-6));
  for (double theta : {1.5, 2.0, 5.0, 20.0, 100.0}) {
    double cur = e_ha(hb, prior, ThetaDist::point(theta));
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("water-filling shape: equal loads maximize the exponent") {
  // Mean-preserving spreads of the node loads lower the exponent by strict
  // concavity of ln.
  std::size_t k = 4;
  PriorHyperParams prior = uniform_prior(k, 5.0, 19.0);
  auto with_loads = [&](std::vector<long long> loads) {
    ComparisonBudget b = realize_node_loads(loads);
    return e_btl(b, prior);
  };
  double even = with_loads({10, 10, 10, 10});
  double spread1 = with_loads({12, 8, 10, 10});
  double spread2 = with_loads({16, 4, 10, 10});
  CHECK(even > spread1);
  CHECK(spread1 > spread2);
}
