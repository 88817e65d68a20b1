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

#ifndef BTLB_GRAPH_DESIGN_HPP
#define BTLB_GRAPH_DESIGN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "btlb/model_core.hpp"

namespace btlb {

enum class TopologyKind {
  kComplete,
  kCycle,
  kStar,
  kChain,
  kRandomTree,
  kErdosRenyi
};

struct Topology {
  TopologyKind kind = TopologyKind::kComplete;
  std::size_t k = 2;
  std::optional<double> p;          // Erdos-Renyi edge probability
  std::optional<std::uint64_t> seed;  // random kinds

  /// Unordered edge list of the topology; random kinds draw from `seed`.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

/// Distributes total_n over the topology's edges. Complete/cycle/chain/
/// random-tree/ER edges get an as-equal-as-possible split with the remainder
/// on the lowest-index edges; the star gets unit spokes with the residual
/// mass on edge (0,1).
ComparisonBudget build_budget(const Topology& topo, long long total_n);

/// Water-filling node loads n_i = (mu - a_i)^+ integerized by
/// largest-remainder so that sum n_i = total_n.
std::vector<long long> water_fill(const VecD& a, long long total_n);

/// Greedy realization of node loads as a symmetric budget matrix with
/// node_load(i) = loads[i]. Loads are half row sums, so a unit edge adds
/// half a load unit at each endpoint; realization works in doubled
/// residuals, repeatedly joining the two largest.
ComparisonBudget realize_node_loads(const std::vector<long long>& loads);

/// Each unordered pair present independently with probability p; present
/// edges get weight per_edge.
ComparisonBudget er_graph_budget(std::size_t k, double p, long long per_edge,
                                 Rng& rng);

/// Fixed-total variant: total_n divided equally over the realized edges
/// (remainder on lowest-index edges). An edgeless draw returns the zero
/// budget.
ComparisonBudget er_budget_fixed_total(std::size_t k, double p,
                                       long long total_n, Rng& rng);

}  // namespace btlb

#endif  // BTLB_GRAPH_DESIGN_HPP
