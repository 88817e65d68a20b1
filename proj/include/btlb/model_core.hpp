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

#ifndef BTLB_MODEL_CORE_HPP
#define BTLB_MODEL_CORE_HPP

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "btlb/matrix.hpp"

namespace btlb {

using Rng = std::mt19937_64;

/// Per-item Gamma prior: skill_i ~ Gamma(shape a[i], rate b[i]).
struct PriorHyperParams {
  VecD a;
  VecD b;

  std::size_t k() const { return a.size(); }
  void validate() const;
};

/// Symmetric nonnegative comparison-count matrix with zero diagonal.
struct ComparisonBudget {
  MatI n;

  std::size_t k() const { return n.rows(); }
  long long total() const;
  /// Half row sum: the per-item comparison load.
  double node_load(std::size_t i) const;
  void validate() const;
};

/// Directed home-game counts; nh(i,j) games with i at home against j.
struct HomeBudget {
  MatI nh;

  std::size_t k() const { return nh.rows(); }
  /// n_ij = nh_ij + nh_ji, symmetric by construction.
  ComparisonBudget induced_budget() const;
  void validate() const;
};

struct SkillVector {
  VecD lambda;

  std::size_t k() const { return lambda.size(); }
  void validate() const;
};

/// Win counts; w(i,j) + w(j,i) = n(i,j) against the generating budget.
struct ComparisonOutcome {
  MatI w;

  std::size_t k() const { return w.rows(); }
  long long win_count(std::size_t i) const;
};

/// Latent total comparison times; symmetric, zero where n_ij = 0.
struct LatentTimes {
  MatD z;

  double node_time(std::size_t i) const;
};

/// Home-field advantage parameter: point mass or finite discrete mixture.
struct ThetaDist {
  std::vector<std::pair<double, double>> atoms;  // (theta, probability)

  static ThetaDist point(double theta) { return ThetaDist{{{theta, 1.0}}}; }
  void validate() const;
};

/// Directed win counts under home-field advantage theta.
struct HomeOutcome {
  MatI wh;
  double theta = 1.0;
};

SkillVector sample_skills(const PriorHyperParams& prior, Rng& rng);

ComparisonOutcome sample_outcome(const SkillVector& skills,
                                 const ComparisonBudget& budget, Rng& rng);

LatentTimes sample_latent(const SkillVector& skills,
                          const ComparisonBudget& budget, Rng& rng);

HomeOutcome sample_home_outcome(const SkillVector& skills,
                                const HomeBudget& home_budget, double theta,
                                Rng& rng);

}  // namespace btlb

#endif  // BTLB_MODEL_CORE_HPP
