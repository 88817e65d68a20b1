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

#include "btlb/em_inference.hpp"

#include <cmath>

#include "btlb/errors.hpp"
#include "btlb/special_fn.hpp"

namespace btlb {

PosteriorParams posterior_params(const PriorHyperParams& prior,
                                 const ComparisonOutcome& outcome,
                                 const LatentTimes& latent) {
  std::size_t k = prior.k();
  if (outcome.k() != k || latent.z.rows() != k)
    throw DomainError("posterior_params: dimension mismatch");
  PosteriorParams post;
  post.shape.resize(k);
  post.rate.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    post.shape[i] = prior.a[i] + static_cast<double>(outcome.win_count(i));
    post.rate[i] = prior.b[i] + latent.node_time(i);
  }
  return post;
}

double log_joint(const SkillVector& skills, const ComparisonOutcome& outcome,
                 const ComparisonBudget& budget,
                 const PriorHyperParams& prior) {
  std::size_t k = prior.k();
  if (skills.k() != k || outcome.k() != k || budget.k() != k)
    throw DomainError("log_joint: dimension mismatch");
  double lp = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double li = skills.lambda[i];
    lp += prior.a[i] * std::log(prior.b[i]) - log_gamma(prior.a[i]) +
          (prior.a[i] - 1.0) * std::log(li) - prior.b[i] * li;
    for (std::size_t j = i + 1; j < k; ++j) {
      long long nij = budget.n(i, j);
      if (nij == 0) continue;
      double lj = skills.lambda[j];
      double lij = std::log(li + lj);
      lp += outcome.w(i, j) * (std::log(li) - lij) +
            outcome.w(j, i) * (std::log(lj) - lij);
      lp += log_gamma(static_cast<double>(nij) + 1.0) -
            log_gamma(static_cast<double>(outcome.w(i, j)) + 1.0) -
            log_gamma(static_cast<double>(outcome.w(j, i)) + 1.0);
    }
  }
  return lp;
}

EmTrace em_fit(const PriorHyperParams& prior, const ComparisonOutcome& outcome,
               const ComparisonBudget& budget, const EmConfig& cfg,
               const SkillVector& init) {
  prior.validate();
  budget.validate();
  init.validate();
  std::size_t k = prior.k();
  if (outcome.k() != k || budget.k() != k || init.k() != k)
    throw DomainError("em_fit: dimension mismatch");
  if (cfg.max_iters < 1 || !(cfg.rel_change_tol > 0.0))
    throw DomainError("em_fit: invalid config");

  bool mode = cfg.estimator_kind == EstimatorKind::kPosteriorMode;
  VecD numerator(k);
  for (std::size_t i = 0; i < k; ++i) {
    double aw = prior.a[i] + static_cast<double>(outcome.win_count(i));
    numerator[i] = mode ? aw - 1.0 : aw;
    if (mode && !(aw > 1.0))
      throw DomainError("em_fit: posterior-mode needs a_i + w_i > 1");
  }

  EmTrace trace;
  trace.iterates.push_back(init);
  double prev_lp = mode ? log_joint(init, outcome, budget, prior) : 0.0;
  for (int t = 0; t < cfg.max_iters; ++t) {
    const VecD& cur = trace.iterates.back().lambda;
    SkillVector next;
    next.lambda.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      double denom = prior.b[i];
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i || budget.n(i, j) == 0) continue;
        denom += static_cast<double>(budget.n(i, j)) / (cur[i] + cur[j]);
      }
      next.lambda[i] = numerator[i] / denom;
      if (!std::isfinite(next.lambda[i]) || !(next.lambda[i] > 0.0))
        throw NonConvergenceError("em_fit: non-finite iterate");
    }
    trace.iterations_used = t + 1;
    if (mode) {
      double lp = log_joint(next, outcome, budget, prior);
      if (lp < prev_lp - 1e-9 * (1.0 + std::abs(prev_lp)))
        throw NonConvergenceError("em_fit: log-posterior decreased");
      prev_lp = lp;
    }
    double max_rel = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      max_rel = std::max(max_rel,
                         std::abs(next.lambda[i] - cur[i]) / cur[i]);
    trace.iterates.push_back(next);
    if (max_rel < cfg.rel_change_tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

EmTrace em_fit(const PriorHyperParams& prior, const ComparisonOutcome& outcome,
               const ComparisonBudget& budget, const EmConfig& cfg) {
  SkillVector init;
  init.lambda.resize(prior.k());
  for (std::size_t i = 0; i < prior.k(); ++i)
    init.lambda[i] = prior.a[i] / prior.b[i];
  return em_fit(prior, outcome, budget, cfg, init);
}

double mse(const SkillVector& true_skills, const SkillVector& estimate) {
  if (true_skills.k() != estimate.k())
    throw DomainError("mse: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < true_skills.k(); ++i) {
    double d = true_skills.lambda[i] - estimate.lambda[i];
    s += d * d;
  }
  return s;
}

}  // namespace btlb
