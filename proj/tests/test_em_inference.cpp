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
#include <algorithm>
#include <cmath>

#include "btlb/em_inference.hpp"
#include "btlb/errors.hpp"
#include "doctest.h"

using namespace btlb;

namespace {

PriorHyperParams uniform_prior(std::size_t k, double a, double b) {
  PriorHyperParams p;
  p.a.assign(k, a);
  p.b.assign(k, b);
  return p;
}

ComparisonBudget pair_budget(long long n12) {
  ComparisonBudget b;
  b.n = MatI(2, 2);
  b.n(0, 1) = n12;
  b.n(1, 0) = n12;
  return b;
}

ComparisonOutcome pair_outcome(long long w12, long long w21) {
  ComparisonOutcome o;
  o.w = MatI(2, 2);
  o.w(0, 1) = w12;
  o.w(1, 0) = w21;
  return o;
}

}  // namespace

TEST_CASE("posterior_params reduces to the prior without data") {
  PriorHyperParams p = uniform_prior(3, 2.0, 5.0);
  ComparisonOutcome o;
  o.w = MatI(3, 3);
  LatentTimes lt;
  lt.z = MatD(3, 3);
  PosteriorParams post = posterior_params(p, o, lt);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(post.shape[i] == doctest::Approx(2.0));
    CHECK(post.rate[i] == doctest::Approx(5.0));
  }
}

TEST_CASE("posterior_params direct substitution") {
  PriorHyperParams p = uniform_prior(2, 1.0, 1.0);
  ComparisonOutcome o = pair_outcome(3, 2);
  LatentTimes lt;
  lt.z = MatD(2, 2);
  lt.z(0, 1) = 4.0;
  lt.z(1, 0) = 4.0;
  PosteriorParams post = posterior_params(p, o, lt);
  CHECK(post.shape[0] == doctest::Approx(4.0));
  CHECK(post.rate[0] == doctest::Approx(5.0));
  CHECK(post.shape[1] == doctest::Approx(3.0));
  CHECK(post.rate[1] == doctest::Approx(5.0));
}

TEST_CASE("posterior density is a normalized reweighting of the joint") {
  // p(lambda | W, Z) must be proportional to the Gamma-form joint in lambda;
  // ratios of the posterior density at random points must match ratios of
  // the conditional-likelihood-times-prior form.
  PriorHyperParams p = uniform_prior(2, 2.0, 3.0);
  ComparisonOutcome o = pair_outcome(4, 1);
  LatentTimes lt;
  lt.z = MatD(2, 2);
  lt.z(0, 1) = 2.5;
  lt.z(1, 0) = 2.5;
  PosteriorParams post = posterior_params(p, o, lt);
  auto log_post = [&](double l1, double l2) {
    return (post.shape[0] - 1.0) * std::log(l1) - post.rate[0] * l1 +
           (post.shape[1] - 1.0) * std::log(l2) - post.rate[1] * l2;
  };
  // Joint over (W, Z, lambda) keeping only lambda-dependent factors:
  // lambda_i^{w_i} e^{-lambda_i z_i} prior_i(lambda_i).
  auto log_joint_lambda = [&](double l1, double l2) {
    return 4.0 * std::log(l1) - 2.5 * l1 + (2.0 - 1.0) * std::log(l1) -
           3.0 * l1 + 1.0 * std::log(l2) - 2.5 * l2 +
           (2.0 - 1.0) * std::log(l2) - 3.0 * l2;
  };
  Rng rng(21);
  std::uniform_real_distribution<double> uni(0.05, 3.0);
  double ref = log_post(1.0, 1.0) - log_joint_lambda(1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    double l1 = uni(rng), l2 = uni(rng);
    double diff = log_post(l1, l2) - log_joint_lambda(l1, l2);
    CHECK(diff == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("em_fit symmetry fixed point") {
  PriorHyperParams p = uniform_prior(2, 3.0, 4.0);
  ComparisonBudget b = pair_budget(10);
  ComparisonOutcome o = pair_outcome(5, 5);
  EmTrace tr = em_fit(p, o, b);
  CHECK(tr.converged);
  CHECK(tr.estimate().lambda[0] ==
        doctest::Approx(tr.estimate().lambda[1]).epsilon(1e-9));
}

TEST_CASE("em_fit with no data returns the prior mode immediately") {
  PriorHyperParams p = uniform_prior(3, 4.0, 2.0);
  ComparisonBudget b;
  b.n = MatI(3, 3);
  ComparisonOutcome o;
  o.w = MatI(3, 3);
  EmTrace tr = em_fit(p, o, b);
  CHECK(tr.converged);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(tr.estimate().lambda[i] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("em_fit matches grid-search MAP on lopsided k=2 data") {
  PriorHyperParams p = uniform_prior(2, 1.0, 2.0);
  long long n = 8;
  ComparisonBudget b = pair_budget(n);
  ComparisonOutcome o = pair_outcome(n, 0);
  // posterior-mode requires a_i + w_i > 1; item 1 has w=0, a=1, so use the
  // posterior-mean kind for this boundary instance.
  EmConfig cfg;
  cfg.estimator_kind = EstimatorKind::kPosteriorMean;
  EmTrace tr = em_fit(p, o, b, cfg);
  CHECK(tr.converged);

  // The mean-kind fixed point maximizes a shifted objective; instead verify
  // the mode kind against a dense grid search on a nondegenerate instance.
  PriorHyperParams p2 = uniform_prior(2, 2.0, 3.0);
  ComparisonOutcome o2 = pair_outcome(6, 2);
  EmTrace tr2 = em_fit(p2, o2, b);
  // Coarse-to-fine dense grid search of the log joint.
  double best_l1 = 1.0, best_l2 = 1.0;
  double lo1 = 0.01, hi1 = 4.0, lo2 = 0.01, hi2 = 4.0;
  for (int stage = 0; stage < 4; ++stage) {
    double best = -1e300;
    double s1 = (hi1 - lo1) / 200.0, s2 = (hi2 - lo2) / 200.0;
    for (int i = 0; i <= 200; ++i)
      for (int j = 0; j <= 200; ++j) {
        SkillVector s{{lo1 + i * s1, lo2 + j * s2}};
        double lp = log_joint(s, o2, b, p2);
        if (lp > best) {
          best = lp;
          best_l1 = s.lambda[0];
          best_l2 = s.lambda[1];
        }
      }
    lo1 = best_l1 - 2 * s1; hi1 = best_l1 + 2 * s1;
    lo2 = best_l2 - 2 * s2; hi2 = best_l2 + 2 * s2;
  }
  CHECK(tr2.estimate().lambda[0] == doctest::Approx(best_l1).epsilon(1e-4));
  CHECK(tr2.estimate().lambda[1] == doctest::Approx(best_l2).epsilon(1e-4));
}

TEST_CASE("em monotonicity of the log joint") {
  PriorHyperParams p = uniform_prior(4, 3.0, 5.0);
  ComparisonBudget b;
  b.n = MatI(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      b.n(i, j) = 6;
      b.n(j, i) = 6;
    }
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    SkillVector s = sample_skills(p, rng);
    ComparisonOutcome o = sample_outcome(s, b, rng);
    EmTrace tr = em_fit(p, o, b);
    double prev = -1e300;
    for (const SkillVector& it : tr.iterates) {
      double lp = log_joint(it, o, b, p);
      CHECK(lp >= prev - 1e-9 * std::abs(prev));
      prev = lp;
    }
  }
}

TEST_CASE("update map is scale covariant in the rate") {
  PriorHyperParams p = uniform_prior(2, 3.0, 4.0);
  ComparisonBudget b = pair_budget(12);
  ComparisonOutcome o = pair_outcome(8, 4);
  double c = 2.5;
  PriorHyperParams pc = p;
  for (double& bi : pc.b) bi *= c;
  EmConfig one_step;
  one_step.max_iters = 1;
  one_step.rel_change_tol = 1e-300;
  SkillVector init{{0.9, 0.6}};
  SkillVector init_c{{0.9 / c, 0.6 / c}};
  EmTrace t1 = em_fit(p, o, b, one_step, init);
  EmTrace t2 = em_fit(pc, o, b, one_step, init_c);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(t2.iterates.back().lambda[i] ==
          doctest::Approx(t1.iterates.back().lambda[i] / c).epsilon(1e-12));
}

TEST_CASE("permutation equivariance") {
  PriorHyperParams p;
  p.a = {3.0, 4.0, 5.0};
  p.b = {6.0, 6.0, 6.0};
  ComparisonBudget b;
  b.n = MatI(3, 3);
  b.n(0, 1) = 5; b.n(1, 0) = 5;
  b.n(1, 2) = 7; b.n(2, 1) = 7;
  ComparisonOutcome o;
  o.w = MatI(3, 3);
  o.w(0, 1) = 4; o.w(1, 0) = 1;
  o.w(1, 2) = 2; o.w(2, 1) = 5;
  EmTrace base = em_fit(p, o, b);

  // Apply the cyclic permutation 0->1->2->0 to every input.
  std::size_t perm[3] = {1, 2, 0};
  PriorHyperParams pp;
  pp.a.resize(3);
  pp.b.resize(3);
  ComparisonBudget bp;
  bp.n = MatI(3, 3);
  ComparisonOutcome op;
  op.w = MatI(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    pp.a[perm[i]] = p.a[i];
    pp.b[perm[i]] = p.b[i];
    for (std::size_t j = 0; j < 3; ++j) {
      bp.n(perm[i], perm[j]) = b.n(i, j);
      op.w(perm[i], perm[j]) = o.w(i, j);
    }
  }
  EmTrace permuted = em_fit(pp, op, bp);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(permuted.estimate().lambda[perm[i]] ==
          doctest::Approx(base.estimate().lambda[i]).epsilon(1e-10));
}

TEST_CASE("posterior-mode shape precondition") {
  PriorHyperParams p = uniform_prior(2, 1.0, 1.0);
  ComparisonBudget b = pair_budget(4);
  ComparisonOutcome o = pair_outcome(4, 0);  // item 1: a + w = 1, not > 1
  CHECK_THROWS_AS(em_fit(p, o, b), DomainError);
}

TEST_CASE("mse basics") {
  CHECK(mse(SkillVector{{1.0, 2.0}}, SkillVector{{1.0, 2.0}}) == 0.0);
  CHECK(mse(SkillVector{{1.0, 2.0}}, SkillVector{{2.0, 2.0}}) == 1.0);
  CHECK(mse(SkillVector{{1.0, 2.0, 3.0}}, SkillVector{{0.0, 0.0, 0.0}}) ==
        14.0);
  CHECK_THROWS_AS(mse(SkillVector{{1.0}}, SkillVector{{1.0, 2.0}}),
                  DomainError);
}
