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

#include "btlb/model_core.hpp"

#include <cmath>

#include "btlb/errors.hpp"

namespace btlb {

void PriorHyperParams::validate() const {
  if (a.size() != b.size() || a.size() < 2)
    throw DomainError("prior: need len(a) = len(b) = k >= 2");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] > 0.0) || !(b[i] > 0.0))
      throw DomainError("prior: shapes and rates must be positive");
}

long long ComparisonBudget::total() const {
  long long t = 0;
  for (std::size_t i = 0; i < k(); ++i)
    for (std::size_t j = i + 1; j < k(); ++j) t += n(i, j);
  return t;
}

double ComparisonBudget::node_load(std::size_t i) const {
  long long s = 0;
  for (std::size_t j = 0; j < k(); ++j)
    if (j != i) s += n(i, j);
  return 0.5 * static_cast<double>(s);
}

void ComparisonBudget::validate() const {
  if (!n.is_square() || n.rows() < 2)
    throw DomainError("budget: must be square with k >= 2");
  for (std::size_t i = 0; i < k(); ++i) {
    if (n(i, i) != 0) throw DomainError("budget: diagonal must be zero");
    for (std::size_t j = 0; j < k(); ++j) {
      if (n(i, j) < 0) throw DomainError("budget: entries must be >= 0");
      if (n(i, j) != n(j, i)) throw DomainError("budget: must be symmetric");
    }
  }
}

ComparisonBudget HomeBudget::induced_budget() const {
  ComparisonBudget b;
  b.n = MatI(k(), k());
  for (std::size_t i = 0; i < k(); ++i)
    for (std::size_t j = 0; j < k(); ++j)
      if (i != j) b.n(i, j) = nh(i, j) + nh(j, i);
  return b;
}

void HomeBudget::validate() const {
  if (!nh.is_square() || nh.rows() < 2)
    throw DomainError("home budget: must be square with k >= 2");
  for (std::size_t i = 0; i < k(); ++i) {
    if (nh(i, i) != 0) throw DomainError("home budget: diagonal must be zero");
    for (std::size_t j = 0; j < k(); ++j)
      if (nh(i, j) < 0) throw DomainError("home budget: entries must be >= 0");
  }
}

void SkillVector::validate() const {
  for (double v : lambda)
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("skills: must be positive and finite");
}

long long ComparisonOutcome::win_count(std::size_t i) const {
  long long s = 0;
  for (std::size_t j = 0; j < k(); ++j)
    if (j != i) s += w(i, j);
  return s;
}

double LatentTimes::node_time(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < z.cols(); ++j)
    if (j != i) s += z(i, j);
  return s;
}

void ThetaDist::validate() const {
  if (atoms.empty()) throw DomainError("theta: empty distribution");
  double total = 0.0;
  for (auto [t, p] : atoms) {
    if (!(t > 0.0)) throw DomainError("theta: support must be positive");
    if (!(p >= 0.0)) throw DomainError("theta: probabilities must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw DomainError("theta: probabilities must sum to 1");
}

SkillVector sample_skills(const PriorHyperParams& prior, Rng& rng) {
  prior.validate();
  SkillVector s;
  s.lambda.resize(prior.k());
  for (std::size_t i = 0; i < prior.k(); ++i) {
    // std::gamma_distribution uses (shape, scale); rate b -> scale 1/b.
    std::gamma_distribution<double> g(prior.a[i], 1.0 / prior.b[i]);
    s.lambda[i] = g(rng);
  }
  return s;
}

ComparisonOutcome sample_outcome(const SkillVector& skills,
                                 const ComparisonBudget& budget, Rng& rng) {
  skills.validate();
  budget.validate();
  std::size_t k = budget.k();
  ComparisonOutcome out;
  out.w = MatI(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      long long nij = budget.n(i, j);
      if (nij == 0) continue;
      double p = skills.lambda[i] / (skills.lambda[i] + skills.lambda[j]);
      std::binomial_distribution<long long> bin(nij, p);
      long long wij = bin(rng);
      out.w(i, j) = wij;
      out.w(j, i) = nij - wij;
    }
  return out;
}

LatentTimes sample_latent(const SkillVector& skills,
                          const ComparisonBudget& budget, Rng& rng) {
  skills.validate();
  budget.validate();
  std::size_t k = budget.k();
  LatentTimes lt;
  lt.z = MatD(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      long long nij = budget.n(i, j);
      if (nij == 0) continue;
      double rate = skills.lambda[i] + skills.lambda[j];
      std::gamma_distribution<double> g(static_cast<double>(nij), 1.0 / rate);
      double zij = g(rng);
      lt.z(i, j) = zij;
      lt.z(j, i) = zij;
    }
  return lt;
}

HomeOutcome sample_home_outcome(const SkillVector& skills,
                                const HomeBudget& home_budget, double theta,
                                Rng& rng) {
  skills.validate();
  home_budget.validate();
  if (!(theta > 0.0)) throw DomainError("sample_home_outcome: theta must be > 0");
  std::size_t k = home_budget.k();
  HomeOutcome out;
  out.wh = MatI(k, k);
  out.theta = theta;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      long long nij = home_budget.nh(i, j);
      if (nij == 0) continue;
      double q = theta * skills.lambda[i] /
                 (theta * skills.lambda[i] + skills.lambda[j]);
      std::binomial_distribution<long long> bin(nij, q);
      out.wh(i, j) = bin(rng);
    }
  return out;
}

}  // namespace btlb
