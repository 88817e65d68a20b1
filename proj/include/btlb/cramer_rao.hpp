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

#ifndef BTLB_CRAMER_RAO_HPP
#define BTLB_CRAMER_RAO_HPP

#include "btlb/model_core.hpp"
#include "btlb/special_fn.hpp"

namespace btlb {

enum class FisherKind { kBim, kHim };

/// Symmetric information matrix; k x k for the skill-only (BIM) case, or
/// (k+1) x (k+1) with a trailing theta row/column for the home-field (HIM)
/// case.
struct FisherMatrix {
  MatD m;
  FisherKind kind = FisherKind::kBim;

  std::size_t dim() const { return m.rows(); }
  void validate() const;
};

/// In-place lower Cholesky factor of an SPD matrix.
MatD cholesky(const MatD& a);
/// Solve L L^T x = rhs given the lower factor.
VecD cholesky_solve(const MatD& l, const VecD& rhs);
/// Trace of the inverse via one factorization and d unit-vector solves.
double trace_inverse(const MatD& a);
/// Explicit inverse; only supported for d <= 50 (oracle/test use).
MatD explicit_inverse(const MatD& a);

/// T1 = E[Lambda_i^{-2}] = b^2 / ((a_i - 1)(a_i - 2)), a_i > 2.
double t1(double a_i, double b);
/// T2 = E[Lambda_j / (Lambda_i (Lambda_i + Lambda_j)^2)]
///    = b^2 a_j / ((a_i - 1)(a_i + a_j - 1)(a_i + a_j - 2)), a_i > 2.
double t2(double a_i, double a_j, double b);
/// T3 = E[(Lambda_i + Lambda_j)^{-2}] = b^2 / ((a_i+a_j-1)(a_i+a_j-2)).
double t3(double a_i, double a_j, double b);

/// Bayesian information matrix: [I]_ii = (a_i-1) T1 + sum_j n_ij T2(a_i,a_j),
/// [I]_ij = -n_ij T3.
FisherMatrix bim(const ComparisonBudget& budget, const PriorHyperParams& prior);

/// Trace of the inverse of an SPD Fisher matrix.
double bcrb_trace(const FisherMatrix& fim);

/// mu(t_i, t_j, theta) = E[Li^{t_i} Lj^{t_j} / (theta Li + Lj)] for
/// Li ~ Gamma(a_i, b), Lj ~ Gamma(a_j, b); Beta-quadrature engine.
double mu(double a_i, double a_j, double b, double t_i, double t_j,
          double theta, const QuadratureSpec& spec = QuadratureSpec{});

/// Hypergeometric closed form of mu, valid when a_j + t_j is a positive
/// integer; validation path for the quadrature engine.
double mu_closed_form(double a_i, double a_j, double b, double t_i, double t_j,
                      double theta);

/// nu(theta) = E[1/(theta Li + Lj)^2] via the integration-by-parts recursion
/// (a_j - 1) mu(0,-1,theta) - b mu(0,0,theta); requires a_j > 1.
double nu(double a_i, double a_j, double b, double theta,
          const QuadratureSpec& spec = QuadratureSpec{});

/// Shifted second-order expectation E[Li^{t_i} Lj^{t_j}/(theta Li + Lj)^2]
/// by direct quadrature; the building block of the HIM entries.
double nu_shifted(double a_i, double a_j, double b, double t_i, double t_j,
                  double theta, const QuadratureSpec& spec = QuadratureSpec{});

/// Hybrid information matrix for the home-field model: (k+1) x (k+1) with
/// skill block, theta column, and theta scalar; theta deterministic.
FisherMatrix him(const HomeBudget& home_budget, const PriorHyperParams& prior,
                 double theta, const QuadratureSpec& spec = QuadratureSpec{});

struct HcrbResult {
  double full_trace;   // trace of the inverse over all k+1 parameters
  double skill_trace;  // trace of the skill sub-block of the inverse
};

HcrbResult hcrb_trace(const FisherMatrix& fim);

}  // namespace btlb

#endif  // BTLB_CRAMER_RAO_HPP
