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

#ifndef BTLB_INFO_BOUNDS_HPP
#define BTLB_INFO_BOUNDS_HPP

#include "btlb/model_core.hpp"
#include "btlb/special_fn.hpp"

namespace btlb {

enum class NormFamily { kL1, kL2 };

/// Distortion descriptor for the information-theoretic bound: the norm whose
/// unit-ball volume enters, the distortion exponent r, and the dimension k.
struct BoundSpec {
  NormFamily norm = NormFamily::kL2;
  double r = 2.0;
  std::size_t k = 2;

  void validate() const;
};

/// ln V_k of the unit ball of the chosen norm in dimension k.
double log_unit_ball_volume(const BoundSpec& spec);

/// Exponent E = (1/k) sum_i [ -ln(2 pi)/2 + ln b_i - psi(a_i)
///                            + ln(a_i + n_i)/2 ] with n_i the node loads.
double e_btl(const ComparisonBudget& budget, const PriorHyperParams& prior);

/// exp[ ln k - ln r - 1 - (r/k)(ln V_k + ln Gamma(1 + k/r)) - r E ],
/// evaluated fully in the log domain.
double it_lower_bound(double e_exponent, const BoundSpec& spec);
double log_it_lower_bound(double e_exponent, const BoundSpec& spec);

enum class Cor1Kind { kL1, kL2Squared };

/// Jensen-relaxed closed forms of the bound for uniform priors and uniform
/// node loads (total budget n).
double cor1_bound(long long n, std::size_t k, double a, double b,
                  Cor1Kind which);

/// E[theta X/(theta X + Y)] for X ~ Gamma(a_i, b), Y ~ Gamma(a_j, b) and
/// theta drawn from a finite discrete distribution, via Beta quadrature.
double home_win_expectation(double a_i, double a_j, const ThetaDist& theta,
                            const QuadratureSpec& spec = QuadratureSpec{});

/// F_ij = nh_ij E[Theta Li/(Theta Li + Lj)] + nh_ji E[Li/(Li + Theta Lj)].
double home_expectation_fij(long long nh_ij, long long nh_ji, double a_i,
                            double a_j, const ThetaDist& theta,
                            const QuadratureSpec& spec = QuadratureSpec{});

/// f(a, theta) = a (-1+1/theta)^{-2a} theta^{-a} B[1-theta, 2a, 1-a],
/// the closed-form single-game home-win expectation at equal shapes a.
/// Requires 2a to be a (numerical) integer so the negative-argument
/// incomplete beta has a well-defined sign.
double f_closed_form(double a, double theta);

/// Reference rational form of f(2, theta); switches to an exact power
/// series in (theta - 1) near 1 where the rational form cancels
/// catastrophically.
double f_reference_a2(double theta);

/// E_HA exponent: like e_btl but with node loads replaced by
/// sum_j F_ij. Requires all b_i equal.
double e_ha(const HomeBudget& home_budget, const PriorHyperParams& prior,
            const ThetaDist& theta,
            const QuadratureSpec& spec = QuadratureSpec{});

}  // namespace btlb

#endif  // BTLB_INFO_BOUNDS_HPP
