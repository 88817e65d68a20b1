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

#include "btlb/graph_design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "btlb/errors.hpp"

namespace btlb {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::vector<Edge> random_tree_edges(std::size_t k, Rng& rng) {
  // Uniform labeled tree via a random Prufer sequence.
  if (k == 2) return {{0, 1}};
  std::vector<std::size_t> prufer(k - 2);
  std::uniform_int_distribution<std::size_t> uni(0, k - 1);
  for (auto& v : prufer) v = uni(rng);
  std::vector<std::size_t> degree(k, 1);
  for (auto v : prufer) ++degree[v];
  std::vector<Edge> edges;
  edges.reserve(k - 1);
  // Min-leaf scan; k is small so the quadratic pass is fine.
  std::vector<bool> used(k, false);
  for (auto v : prufer) {
    for (std::size_t leaf = 0; leaf < k; ++leaf) {
      if (!used[leaf] && degree[leaf] == 1) {
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        used[leaf] = true;
        --degree[v];
        break;
      }
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < k; ++i)
    if (!used[i] && degree[i] == 1) rest.push_back(i);
  edges.emplace_back(rest[0], rest[1]);
  return edges;
}

}  // namespace

std::vector<Edge> Topology::edges() const {
  if (k < 2) throw DomainError("Topology: k must be >= 2");
  std::vector<Edge> e;
  switch (kind) {
    case TopologyKind::kComplete:
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(i, j);
      return e;
    case TopologyKind::kCycle:
      for (std::size_t i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, k - 1);
      return e;
    case TopologyKind::kStar:
      for (std::size_t j = 1; j < k; ++j) e.emplace_back(0, j);
      return e;
    case TopologyKind::kChain:
      for (std::size_t i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
      return e;
    case TopologyKind::kRandomTree: {
      Rng rng(seed.value_or(0));
      return random_tree_edges(k, rng);
    }
    case TopologyKind::kErdosRenyi: {
      if (!p || !(*p >= 0.0) || !(*p <= 1.0))
        throw DomainError("Topology: Erdos-Renyi needs p in [0,1]");
      Rng rng(seed.value_or(0));
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          if (uni(rng) < *p) e.emplace_back(i, j);
      return e;
    }
  }
  throw DomainError("Topology: unknown kind");
}

namespace {

ComparisonBudget spread_over_edges(std::size_t k, const std::vector<Edge>& edges,
                                   long long total_n) {
  ComparisonBudget b;
  b.n = MatI(k, k);
  if (edges.empty()) return b;
  long long ec = static_cast<long long>(edges.size());
  long long base = total_n / ec;
  long long rem = total_n % ec;
  for (long long idx = 0; idx < ec; ++idx) {
    long long w = base + (idx < rem ? 1 : 0);
    auto [i, j] = edges[idx];
    b.n(i, j) += w;
    b.n(j, i) += w;
  }
  return b;
}

}  // namespace

ComparisonBudget build_budget(const Topology& topo, long long total_n) {
  auto edges = topo.edges();
  long long ec = static_cast<long long>(edges.size());
  if (total_n < ec)
    throw InfeasibleError("build_budget: need total_n >= edge count");
  if (topo.kind == TopologyKind::kStar) {
    // Extremal star weighting: unit spokes, residual mass on edge (0,1).
    ComparisonBudget b;
    b.n = MatI(topo.k, topo.k);
    for (std::size_t j = 1; j < topo.k; ++j) {
      b.n(0, j) = 1;
      b.n(j, 0) = 1;
    }
    long long residual = total_n - static_cast<long long>(topo.k - 2);
    b.n(0, 1) = residual;
    b.n(1, 0) = residual;
    return b;
  }
  return spread_over_edges(topo.k, edges, total_n);
}

std::vector<long long> water_fill(const VecD& a, long long total_n) {
  std::size_t k = a.size();
  if (k == 0) throw DomainError("water_fill: empty shape vector");
  if (total_n < 0) throw DomainError("water_fill: total_n must be >= 0");
  std::vector<long long> out(k, 0);
  if (total_n == 0) return out;

  // Find the water level mu with sum_i (mu - a_i)^+ = total_n by
  // sort-and-scan over the ascending a_i.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
  double target = static_cast<double>(total_n);
  double mu = 0.0;
  double prefix = 0.0;  // sum of the m smallest a_i
  std::size_t active = k;
  for (std::size_t m = 1; m <= k; ++m) {
    prefix += a[order[m - 1]];
    double cand = (target + prefix) / static_cast<double>(m);
    bool below_next = (m == k) || (cand <= a[order[m]]);
    if (cand >= a[order[m - 1]] && below_next) {
      mu = cand;
      active = m;
      break;
    }
  }

  // Integerize by largest remainder, ties broken by lowest index.
  std::vector<double> real_alloc(k, 0.0);
  for (std::size_t m = 0; m < active; ++m)
    real_alloc[order[m]] = mu - a[order[m]];
  long long floor_sum = 0;
  std::vector<std::pair<double, std::size_t>> rema;
  for (std::size_t i = 0; i < k; ++i) {
    long long f = static_cast<long long>(std::floor(real_alloc[i]));
    out[i] = f;
    floor_sum += f;
    rema.emplace_back(real_alloc[i] - static_cast<double>(f), i);
  }
  std::sort(rema.begin(), rema.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  long long leftovers = total_n - floor_sum;
  for (long long t = 0; t < leftovers; ++t) ++out[rema[t % k].second];
  return out;
}

ComparisonBudget realize_node_loads(const std::vector<long long>& loads) {
  std::size_t k = loads.size();
  if (k < 2) throw DomainError("realize_node_loads: need k >= 2");
  long long total = 0;
  long long max_load = 0;
  for (long long v : loads) {
    if (v < 0) throw DomainError("realize_node_loads: loads must be >= 0");
    total += v;
    max_load = std::max(max_load, v);
  }
  if (max_load > total - max_load)
    throw InfeasibleError(
        "realize_node_loads: one load exceeds the sum of the others");

  ComparisonBudget b;
  b.n = MatI(k, k);
  // A unit edge adds 1/2 to each endpoint's load, so work in doubled
  // residuals where one edge unit consumes 1 at each endpoint.
  std::vector<long long> residual(k);
  for (std::size_t i = 0; i < k; ++i) residual[i] = 2 * loads[i];
  while (true) {
    // Pick the two largest residuals (lowest index on ties).
    std::size_t first = k, second = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (residual[i] == 0) continue;
      if (first == k || residual[i] > residual[first]) {
        second = first;
        first = i;
      } else if (second == k || residual[i] > residual[second]) {
        second = i;
      }
    }
    if (first == k) break;
    if (second == k)
      throw InfeasibleError("realize_node_loads: odd residual left over");
    b.n(first, second) += 1;
    b.n(second, first) += 1;
    --residual[first];
    --residual[second];
  }
  return b;
}

ComparisonBudget er_graph_budget(std::size_t k, double p, long long per_edge,
                                 Rng& rng) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw DomainError("er_graph_budget: p must be in [0,1]");
  if (per_edge < 1) throw DomainError("er_graph_budget: per_edge must be >= 1");
  ComparisonBudget b;
  b.n = MatI(k, k);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (uni(rng) < p) {
        b.n(i, j) = per_edge;
        b.n(j, i) = per_edge;
      }
  return b;
}

ComparisonBudget er_budget_fixed_total(std::size_t k, double p,
                                       long long total_n, Rng& rng) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw DomainError("er_budget_fixed_total: p must be in [0,1]");
  if (total_n < 0)
    throw DomainError("er_budget_fixed_total: total_n must be >= 0");
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (uni(rng) < p) edges.emplace_back(i, j);
  return spread_over_edges(k, edges, total_n);
}

}  // namespace btlb
