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

#ifndef BTLB_SPECIAL_FN_HPP
#define BTLB_SPECIAL_FN_HPP

#include <functional>

namespace btlb {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
};

/// ln Gamma(x) for x > 0. Relative error <= 1e-12 on [1e-3, 1e6].
double log_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0. Absolute error <= 1e-10 on
/// [1e-3, 1e6].
double digamma(double x);

/// Gauss hypergeometric 2F1(a,b;c;z) for real z < 1.
///
/// Direct power series on z in (-1/2, 1); the Pfaff transformation
/// 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a,c-b;c;z/(z-1)) for z <= -1/2, which maps
/// the argument into (1/3, 1).
double hyp2f1(double a, double b, double c, double z);

/// Incomplete beta B[z,x,y] via the representation
/// (z^x / x) * 2F1(x, 1-y; x+1; z).
///
/// For z < 0 the prefactor z^x needs x to be a (numerical) integer so the
/// sign is well defined; otherwise a domain error is raised.
double incomplete_beta(double z, double x, double y);

/// Adaptive Gauss-Kronrod (G7,K15) quadrature of f over [lo, hi] by interval
/// bisection, largest-error-first. Throws ToleranceError (carrying the best
/// estimate) if the subdivision budget runs out before the tolerance is met.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec = QuadratureSpec{});

}  // namespace btlb

#endif  // BTLB_SPECIAL_FN_HPP
