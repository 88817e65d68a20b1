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

#include "btlb/info_bounds.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "btlb/errors.hpp"

namespace btlb {

namespace {

constexpr double kLn2Pi = 1.8378770664093454835606594728112;
constexpr double kPi = 3.141592653589793238462643383279503;

}  // namespace

void BoundSpec::validate() const {
  if (!(r >= 1.0)) throw DomainError("BoundSpec: r must be >= 1");
  if (k < 2) throw DomainError("BoundSpec: k must be >= 2");
}

double log_unit_ball_volume(const BoundSpec& spec) {
  spec.validate();
  double kd = static_cast<double>(spec.k);
  switch (spec.norm) {
    case NormFamily::kL2:
      return 0.5 * kd * std::log(kPi) - log_gamma(0.5 * kd + 1.0);
    case NormFamily::kL1:
      return kd * std::log(2.0) - log_gamma(kd + 1.0);
  }
  throw DomainError("log_unit_ball_volume: unsupported norm");
}

double e_btl(const ComparisonBudget& budget, const PriorHyperParams& prior) {
  prior.validate();
  budget.validate();
  std::size_t k = prior.k();
  if (budget.k() != k) throw DomainError("e_btl: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    sum += -0.5 * kLn2Pi + std::log(prior.b[i]) - digamma(prior.a[i]) +
           0.5 * std::log(prior.a[i] + budget.node_load(i));
  return sum / static_cast<double>(k);
}

double log_it_lower_bound(double e_exponent, const BoundSpec& spec) {
  spec.validate();
  if (!std::isfinite(e_exponent))
    throw DomainError("it_lower_bound: exponent must be finite");
  double kd = static_cast<double>(spec.k);
  return std::log(kd) - std::log(spec.r) - 1.0 -
         (spec.r / kd) *
             (log_unit_ball_volume(spec) + log_gamma(1.0 + kd / spec.r)) -
         spec.r * e_exponent;
}

double it_lower_bound(double e_exponent, const BoundSpec& spec) {
  return std::exp(log_it_lower_bound(e_exponent, spec));
}

double cor1_bound(long long n, std::size_t k, double a, double b,
                  Cor1Kind which) {
  if (n < 0 || k < 2 || !(a > 0.0) || !(b > 0.0))
    throw DomainError("cor1_bound: invalid parameters");
  double kd = static_cast<double>(k);
  double load = a / kd + static_cast<double>(n);
  double core = std::log(b) - digamma(a);
  switch (which) {
    case Cor1Kind::kL1:
      return std::sqrt(kPi / 2.0) * std::exp(-(core + 1.0)) * kd /
             std::sqrt(load);
    case Cor1Kind::kL2Squared:
      return std::exp(-2.0 * core - 1.0) * kd / load;
  }
  throw DomainError("cor1_bound: unsupported kind");
}

namespace {

// E[theta X/(theta X + Y)] at a single theta, by Beta quadrature over the
// ratio X/(X+Y) ~ Beta(a_i, a_j).
double home_win_point(double a_i, double a_j, double theta,
                      const QuadratureSpec& spec) {
  double logc = log_gamma(a_i + a_j) - log_gamma(a_i) - log_gamma(a_j);
  double c = std::exp(logc);
  auto integrand = [=](double x) {
    double num = theta * x;
    return num / (num + 1.0 - x) * c * std::pow(x, a_i - 1.0) *
           std::pow(1.0 - x, a_j - 1.0);
  };
  return integrate(integrand, 0.0, 1.0, spec);
}

}  // namespace

double home_win_expectation(double a_i, double a_j, const ThetaDist& theta,
                            const QuadratureSpec& spec) {
  if (!(a_i > 0.0) || !(a_j > 0.0))
    throw DomainError("home_win_expectation: shapes must be positive");
  theta.validate();
  double q = 0.0;
  for (auto [t, p] : theta.atoms) q += p * home_win_point(a_i, a_j, t, spec);
  return q;
}

double home_expectation_fij(long long nh_ij, long long nh_ji, double a_i,
                            double a_j, const ThetaDist& theta,
                            const QuadratureSpec& spec) {
  if (nh_ij < 0 || nh_ji < 0)
    throw DomainError("home_expectation_fij: counts must be >= 0");
  double q_ij = home_win_expectation(a_i, a_j, theta, spec);
  // E[Li/(Li + Theta Lj)] = 1 - E[Theta Lj/(Theta Lj + Li)].
  double q_ji = home_win_expectation(a_j, a_i, theta, spec);
  return static_cast<double>(nh_ij) * q_ij +
         static_cast<double>(nh_ji) * (1.0 - q_ji);
}

double f_closed_form(double a, double theta) {
  if (!(a > 0.0)) throw DomainError("f_closed_form: a must be > 0");
  if (!(theta > 1.0)) throw DomainError("f_closed_form: theta must be > 1");
  double two_a = 2.0 * a;
  if (std::abs(two_a - std::round(two_a)) > 1e-9)
    throw DomainError("f_closed_form: 2a must be an integer");
  // (-1 + 1/theta)^{-2a}: the base is negative; its sign (-1)^{2a} cancels
  // the (-1)^{2a} carried by the negative-argument incomplete beta.
  long long n2a = std::llround(two_a);
  double sign = (n2a % 2 == 0) ? 1.0 : -1.0;
  double pow_term = sign * std::pow(1.0 - 1.0 / theta, -two_a);
  double ib = incomplete_beta(1.0 - theta, two_a, 1.0 - a);
  return a * pow_term * std::pow(theta, -a) * ib;
}

double f_reference_a2(double theta) {
  if (!(theta > 1.0)) throw DomainError("f_reference_a2: theta must be > 1");
  double u = theta - 1.0;
  if (u < 0.25) {
    // f(2, 1+u) = (1+u) sum_{n>=4} 6 (-1)^n u^{n-4} / (n(n-1)); the rational
    // form below loses ~10 digits to cancellation for theta near 1.
    double sum = 0.0;
    double up = 1.0;
    for (int n = 4; n < 80; ++n) {
      double term = 6.0 * up / (static_cast<double>(n) * (n - 1.0));
      sum += (n % 2 == 0) ? term : -term;
      up *= u;
      if (up < 1e-19) break;
    }
    return (1.0 + u) * sum;
  }
  double num = 2.0 + 3.0 * theta - 6.0 * theta * theta +
               theta * theta * theta + 6.0 * theta * std::log(theta);
  double den = u * u * u * u;
  return theta * num / den;
}

double e_ha(const HomeBudget& home_budget, const PriorHyperParams& prior,
            const ThetaDist& theta, const QuadratureSpec& spec) {
  prior.validate();
  home_budget.validate();
  theta.validate();
  std::size_t k = prior.k();
  if (home_budget.k() != k) throw DomainError("e_ha: dimension mismatch");
  for (std::size_t i = 1; i < k; ++i)
    if (prior.b[i] != prior.b[0])
      throw DomainError("e_ha: requires a uniform rate b");

  // Cache the single-game expectations per shape pair.
  std::map<std::pair<double, double>, double> q_cache;
  auto q = [&](double ai, double aj) {
    auto key = std::make_pair(ai, aj);
    auto it = q_cache.find(key);
    if (it != q_cache.end()) return it->second;
    double v = home_win_expectation(ai, aj, theta, spec);
    q_cache.emplace(key, v);
    return v;
  };

  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double f_i = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      f_i += static_cast<double>(home_budget.nh(i, j)) *
                 q(prior.a[i], prior.a[j]) +
             static_cast<double>(home_budget.nh(j, i)) *
                 (1.0 - q(prior.a[j], prior.a[i]));
    }
    sum += -0.5 * kLn2Pi + std::log(prior.b[i]) - digamma(prior.a[i]) +
           0.5 * std::log(prior.a[i] + f_i);
  }
  return sum / static_cast<double>(k);
}

}  // namespace btlb
