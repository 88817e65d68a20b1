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

#ifndef BTLB_ERRORS_HPP
#define BTLB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btlb {

/// Bad function arguments or model parameters outside the supported domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or iteration failed to converge within its term/iteration budget.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its subdivision budget; carries the best
/// estimate and the achieved error bound.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate(estimate), error_bound(error_bound) {}
  double estimate;
  double error_bound;
};

/// Cholesky factorization hit a non-positive pivot.
class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(const std::string& what, std::size_t pivot)
      : std::runtime_error(what), pivot(pivot) {}
  std::size_t pivot;
};

/// Requested allocation/realization has no feasible solution.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace btlb

#endif  // BTLB_ERRORS_HPP
