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

#include "btlb/cramer_rao.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "btlb/errors.hpp"

namespace btlb {

void FisherMatrix::validate() const {
  if (!m.is_square()) throw DomainError("FisherMatrix: must be square");
  double max_abs = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      max_abs = std::max(max_abs, std::abs(m(i, j)));
  if (!m.is_symmetric(1e-12 * (1.0 + max_abs)))
    throw DomainError("FisherMatrix: not symmetric");
}

MatD cholesky(const MatD& a) {
  if (!a.is_square()) throw DomainError("cholesky: matrix must be square");
  std::size_t d = a.rows();
  MatD l(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    double diag = a(j, j);
    for (std::size_t p = 0; p < j; ++p) diag -= l(j, p) * l(j, p);
    if (!(diag > 0.0))
      throw NotPositiveDefiniteError("cholesky: non-positive pivot", j);
    l(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < d; ++i) {
      double v = a(i, j);
      for (std::size_t p = 0; p < j; ++p) v -= l(i, p) * l(j, p);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

VecD cholesky_solve(const MatD& l, const VecD& rhs) {
  std::size_t d = l.rows();
  if (rhs.size() != d) throw DomainError("cholesky_solve: dimension mismatch");
  VecD y(d);
  for (std::size_t i = 0; i < d; ++i) {
    double v = rhs[i];
    for (std::size_t p = 0; p < i; ++p) v -= l(i, p) * y[p];
    y[i] = v / l(i, i);
  }
  VecD x(d);
  for (std::size_t ii = d; ii-- > 0;) {
    double v = y[ii];
    for (std::size_t p = ii + 1; p < d; ++p) v -= l(p, ii) * x[p];
    x[ii] = v / l(ii, ii);
  }
  return x;
}

double trace_inverse(const MatD& a) {
  MatD l = cholesky(a);
  std::size_t d = a.rows();
  double tr = 0.0;
  VecD e(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    e[i] = 1.0;
    tr += cholesky_solve(l, e)[i];
    e[i] = 0.0;
  }
  return tr;
}

MatD explicit_inverse(const MatD& a) {
  if (a.rows() > 50)
    throw DomainError("explicit_inverse: only supported for d <= 50");
  MatD l = cholesky(a);
  std::size_t d = a.rows();
  MatD inv(d, d);
  VecD e(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    e[j] = 1.0;
    VecD col = cholesky_solve(l, e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < d; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double t1(double a_i, double b) {
  if (!(a_i > 2.0)) throw DomainError("t1: requires a_i > 2");
  return b * b / ((a_i - 1.0) * (a_i - 2.0));
}

double t2(double a_i, double a_j, double b) {
  if (!(a_i > 2.0)) throw DomainError("t2: requires a_i > 2");
  if (!(a_j > 0.0)) throw DomainError("t2: requires a_j > 0");
  double s = a_i + a_j;
  return b * b * a_j / ((a_i - 1.0) * (s - 1.0) * (s - 2.0));
}

double t3(double a_i, double a_j, double b) {
  if (!(a_i + a_j > 2.0)) throw DomainError("t3: requires a_i + a_j > 2");
  double s = a_i + a_j;
  return b * b / ((s - 1.0) * (s - 2.0));
}

FisherMatrix bim(const ComparisonBudget& budget,
                 const PriorHyperParams& prior) {
  prior.validate();
  budget.validate();
  std::size_t k = prior.k();
  if (budget.k() != k) throw DomainError("bim: dimension mismatch");
  FisherMatrix f;
  f.kind = FisherKind::kBim;
  f.m = MatD(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    double diag = (prior.a[i] - 1.0) * t1(prior.a[i], prior.b[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      double nij = static_cast<double>(budget.n(i, j));
      diag += nij * t2(prior.a[i], prior.a[j], prior.b[i]);
      f.m(i, j) = -nij * t3(prior.a[i], prior.a[j], prior.b[i]);
    }
    f.m(i, i) = diag;
  }
  f.validate();
  return f;
}

double bcrb_trace(const FisherMatrix& fim) {
  fim.validate();
  return trace_inverse(fim.m);
}

namespace {

// General moment E[X^s Y^t / (theta X + Y)^m] for X ~ Gamma(a_i, b),
// Y ~ Gamma(a_j, b), reduced to a 1-D Beta-type integral over X/(X+Y).
double gamma_ratio_moment(double a_i, double a_j, double b, double s, double t,
                          int m, double theta, const QuadratureSpec& spec) {
  if (!(a_i + s > 0.0) || !(a_j + t > 0.0))
    throw DomainError("gamma_ratio_moment: shifted shapes must be positive");
  if (!(a_i + a_j + s + t - m > 0.0))
    throw DomainError("gamma_ratio_moment: total moment order too negative");
  if (!(theta > 0.0) || !(b > 0.0))
    throw DomainError("gamma_ratio_moment: theta and b must be positive");
  double logc = log_gamma(a_i + a_j + s + t - m) - log_gamma(a_i) -
                log_gamma(a_j) + (m - s - t) * std::log(b);
  double c = std::exp(logc);
  double pi_ = a_i + s - 1.0;
  double pj = a_j + t - 1.0;
  auto integrand = [=](double x) {
    return std::pow(x, pi_) * std::pow(1.0 - x, pj) /
           std::pow(theta * x + 1.0 - x, static_cast<double>(m));
  };
  return c * integrate(integrand, 0.0, 1.0, spec);
}

}  // namespace

double mu(double a_i, double a_j, double b, double t_i, double t_j,
          double theta, const QuadratureSpec& spec) {
  return gamma_ratio_moment(a_i, a_j, b, t_i, t_j, 1, theta, spec);
}

double mu_closed_form(double a_i, double a_j, double b, double t_i, double t_j,
                      double theta) {
  double api = a_i + t_i;
  double apj = a_j + t_j;
  if (!(api > 0.0)) throw DomainError("mu_closed_form: a_i + t_i must be > 0");
  if (!(apj > 0.5) || std::abs(apj - std::round(apj)) > 1e-9)
    throw DomainError("mu_closed_form: a_j + t_j must be a positive integer");
  if (!(theta > 0.0)) throw DomainError("mu_closed_form: theta must be > 0");
  long long napj = std::llround(apj);
  double sp = api + apj - 1.0;
  double z = (theta - 1.0) / theta;
  double bracket = std::exp(log_gamma(sp) - sp * std::log(theta)) / sp *
                   hyp2f1(sp, sp, sp + 1.0, z);
  double fact = 1.0;  // (k'-1)! running value
  for (long long kp = 1; kp < napj; ++kp) {
    if (kp > 1) fact *= static_cast<double>(kp - 1);
    double sign = (kp % 2 == 0) ? 1.0 : -1.0;
    bracket += sign * std::pow(theta, -static_cast<double>(kp)) * fact *
               std::exp(log_gamma(sp - static_cast<double>(kp)));
  }
  double outer_sign = ((napj - 1) % 2 == 0) ? 1.0 : -1.0;
  double log_pref = (apj - 1.0) * std::log(theta) - log_gamma(a_i) -
                    log_gamma(a_j) - (t_i + t_j - 1.0) * std::log(b);
  return outer_sign * std::exp(log_pref) * bracket;
}

double nu(double a_i, double a_j, double b, double theta,
          const QuadratureSpec& spec) {
  if (!(a_j > 1.0)) throw DomainError("nu: requires a_j > 1");
  return (a_j - 1.0) * mu(a_i, a_j, b, 0.0, -1.0, theta, spec) -
         b * mu(a_i, a_j, b, 0.0, 0.0, theta, spec);
}

double nu_shifted(double a_i, double a_j, double b, double t_i, double t_j,
                  double theta, const QuadratureSpec& spec) {
  return gamma_ratio_moment(a_i, a_j, b, t_i, t_j, 2, theta, spec);
}

FisherMatrix him(const HomeBudget& home_budget, const PriorHyperParams& prior,
                 double theta, const QuadratureSpec& spec) {
  prior.validate();
  home_budget.validate();
  if (!(theta > 0.0)) throw DomainError("him: theta must be > 0");
  std::size_t k = prior.k();
  if (home_budget.k() != k) throw DomainError("him: dimension mismatch");
  double b = prior.b[0];
  for (std::size_t i = 1; i < k; ++i)
    if (prior.b[i] != b) throw DomainError("him: requires a uniform rate b");
  for (std::size_t i = 0; i < k; ++i)
    if (!(prior.a[i] > 2.0)) throw DomainError("him: requires all a_i > 2");

  // Memoize the quadrature moments; uniform priors reuse a handful of values.
  std::map<std::tuple<double, double, double, double, int>, double> cache;
  auto moment = [&](double ai, double aj, double s, double t, int m) {
    auto key = std::make_tuple(ai, aj, s, t, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double v = gamma_ratio_moment(ai, aj, b, s, t, m, theta, spec);
    cache.emplace(key, v);
    return v;
  };

  FisherMatrix f;
  f.kind = FisherKind::kHim;
  f.m = MatD(k + 1, k + 1);
  double h_theta = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double diag = (prior.a[i] - 1.0) * t1(prior.a[i], b);
    double cross = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      double nh_ij = static_cast<double>(home_budget.nh(i, j));
      double nh_ji = static_cast<double>(home_budget.nh(j, i));
      double ai = prior.a[i];
      double aj = prior.a[j];
      // E[Lj/(Li (theta Li + Lj)^2)] and the j-at-home mirror.
      diag += theta * (nh_ij * moment(ai, aj, -1.0, 1.0, 2) +
                       nh_ji * moment(aj, ai, 1.0, -1.0, 2));
      f.m(i, j) = -theta * (nh_ij * moment(ai, aj, 0.0, 0.0, 2) +
                            nh_ji * moment(aj, ai, 0.0, 0.0, 2));
      cross += nh_ij * moment(ai, aj, 0.0, 1.0, 2) -
               nh_ji * moment(aj, ai, 1.0, 0.0, 2);
      h_theta += nh_ij * (moment(ai, aj, 1.0, 0.0, 1) / theta -
                          moment(ai, aj, 2.0, 0.0, 2));
    }
    f.m(i, i) = diag;
    f.m(i, k) = cross;
    f.m(k, i) = cross;
  }
  f.m(k, k) = h_theta;
  f.validate();
  return f;
}

HcrbResult hcrb_trace(const FisherMatrix& fim) {
  fim.validate();
  if (fim.kind != FisherKind::kHim || fim.dim() < 2)
    throw DomainError("hcrb_trace: expects a HIM");
  MatD l = cholesky(fim.m);
  std::size_t d = fim.dim();
  HcrbResult res{0.0, 0.0};
  VecD e(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    e[i] = 1.0;
    double inv_ii = cholesky_solve(l, e)[i];
    e[i] = 0.0;
    res.full_trace += inv_ii;
    if (i + 1 < d) res.skill_trace += inv_ii;
  }
  return res;
}

}  // namespace btlb
