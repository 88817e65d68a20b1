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

#include "btlb/special_fn.hpp"

#include <cmath>
#include <cstdlib>
#include <queue>
#include <vector>

#include "btlb/errors.hpp"

namespace btlb {

namespace {

constexpr double kLn2Pi = 1.8378770664093454835606594728112;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: x must be > 0");
  double xm1 = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (xm1 + i);
  double base = xm1 + 7.5;
  return 0.5 * kLn2Pi + (xm1 + 0.5) * std::log(base) - base + std::log(sum);
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: x must be > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  // Asymptotic series with Bernoulli-number coefficients.
  double series = -inv2 * (1.0 / 12.0 -
                  inv2 * (1.0 / 120.0 -
                  inv2 * (1.0 / 252.0 -
                  inv2 * (1.0 / 240.0 -
                  inv2 * (1.0 / 132.0 -
                  inv2 * (691.0 / 32760.0))))));
  return acc + std::log(x) - 0.5 * inv + series;
}

namespace {

double hyp2f1_series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  constexpr int kMaxTerms = 200000;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum) && n > 3) return sum;
    if (!std::isfinite(sum))
      throw NonConvergenceError("hyp2f1: series diverged");
  }
  throw NonConvergenceError("hyp2f1: series did not converge");
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::abs(v - std::round(v)) < 1e-12;
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw DomainError("hyp2f1: c must not be a nonpositive integer");
  if (z >= 1.0) throw DomainError("hyp2f1: requires z < 1");
  if (z > -0.5) return hyp2f1_series(a, b, c, z);
  // Pfaff transformation; maps z <= -1/2 to z/(z-1) in (1/3, 1).
  double zp = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, zp);
}

double incomplete_beta(double z, double x, double y) {
  if (x == 0.0) throw DomainError("incomplete_beta: x must be nonzero");
  if (z == 0.0) return 0.0;
  double prefactor;
  if (z > 0.0) {
    prefactor = std::pow(z, x) / x;
  } else {
    // z^x for z < 0 is real only when x is an integer.
    double xr = std::round(x);
    if (std::abs(x - xr) > 1e-9)
      throw DomainError("incomplete_beta: z < 0 requires integer x");
    double sign = (std::llabs(static_cast<long long>(xr)) % 2 == 0) ? 1.0 : -1.0;
    prefactor = sign * std::pow(-z, x) / x;
  }
  return prefactor * hyp2f1(x, 1.0 - y, x + 1.0, z);
}

namespace {

// Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1], positive half.
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Segment {
  double lo, hi, value, error;
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
  double half = 0.5 * (hi - lo);
  double mid = 0.5 * (hi + lo);
  double fk = 0.0;
  double fg = 0.0;
  for (int i = 0; i < 8; ++i) {
    double x = half * kKronrodNodes[i];
    double fv = (i == 7) ? f(mid) : f(mid - x) + f(mid + x);
    fk += kKronrodWeights[i] * fv;
    if (i % 2 == 1) fg += kGaussWeights[i / 2] * fv;
  }
  double value = fk * half;
  double error = std::abs((fk - fg) * half);
  return {lo, hi, value, error};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) ||
      spec.max_subdivisions < 1)
    throw DomainError("integrate: invalid QuadratureSpec");
  auto cmp = [](const Segment& a, const Segment& b) {
    return a.error < b.error;
  };
  std::priority_queue<Segment, std::vector<Segment>, decltype(cmp)> heap(cmp);
  Segment whole = gk15(f, lo, hi);
  double total = whole.value;
  double total_err = whole.error;
  heap.push(whole);
  for (int iter = 0; iter < spec.max_subdivisions; ++iter) {
    if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
      return total;
    Segment worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gk15(f, worst.lo, mid);
    Segment right = gk15(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
    return total;
  throw ToleranceError("integrate: tolerance not met", total, total_err);
}

}  // namespace btlb
