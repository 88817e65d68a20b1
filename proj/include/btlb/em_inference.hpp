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

#ifndef BTLB_EM_INFERENCE_HPP
#define BTLB_EM_INFERENCE_HPP

#include <vector>

#include "btlb/model_core.hpp"

namespace btlb {

enum class EstimatorKind { kPosteriorMode, kPosteriorMean };

struct EmConfig {
  int max_iters = 10000;
  double rel_change_tol = 1e-9;
  EstimatorKind estimator_kind = EstimatorKind::kPosteriorMode;
};

struct EmTrace {
  std::vector<SkillVector> iterates;
  bool converged = false;
  int iterations_used = 0;

  const SkillVector& estimate() const { return iterates.back(); }
};

/// Per-item Gamma posterior given outcome and latent times:
/// (a_i + w_i, b_i + z_i).
struct PosteriorParams {
  VecD shape;
  VecD rate;
};

PosteriorParams posterior_params(const PriorHyperParams& prior,
                                 const ComparisonOutcome& outcome,
                                 const LatentTimes& latent);

/// Unnormalized log joint density log p(lambda, W): binomial likelihood over
/// pairs plus the Gamma prior, including constant terms.
double log_joint(const SkillVector& skills, const ComparisonOutcome& outcome,
                 const ComparisonBudget& budget, const PriorHyperParams& prior);

EmTrace em_fit(const PriorHyperParams& prior, const ComparisonOutcome& outcome,
               const ComparisonBudget& budget, const EmConfig& cfg,
               const SkillVector& init);

/// Convenience overload: prior-mean initialization.
EmTrace em_fit(const PriorHyperParams& prior, const ComparisonOutcome& outcome,
               const ComparisonBudget& budget, const EmConfig& cfg = EmConfig{});

/// Squared L2 distance between skill vectors.
double mse(const SkillVector& true_skills, const SkillVector& estimate);

}  // namespace btlb

#endif  // BTLB_EM_INFERENCE_HPP
