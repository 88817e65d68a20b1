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

#ifndef BTLB_EXPERIMENT_HPP
#define BTLB_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "btlb/graph_design.hpp"
#include "btlb/model_core.hpp"

namespace btlb {

/// One experiment run; fields unused by a given experiment are ignored.
struct ExperimentConfig {
  std::string experiment;  // mse-vs-bounds, topology-it, topology-bcrb,
                           // phase-transition, ha-it, ha-hcrb, simulate,
                           // em-fit, it-bound, bcrb, hcrb
  std::size_t k = 10;
  double a = 5.0;
  double b = -1.0;  // < 0 means the b = a*k - 1 convention
  std::vector<long long> n_grid;
  std::vector<Topology> topologies;
  std::vector<double> theta_grid;
  std::vector<double> pn_grid;       // normalized ER edge probabilities
  std::vector<std::size_t> k_list;   // phase-transition sweep
  long long fixed_n = 1000;
  double alpha = 1.0;  // home split: nh_ij = round(alpha n_ij) for i < j
  int trials = 200;
  std::uint64_t seed = 12345;
  int threads = 1;
  std::string out_path;

  double rate() const { return b > 0.0 ? b : a * static_cast<double>(k) - 1.0; }
  void validate() const;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
  void write(const std::string& path) const;
};

/// Formats a double with 17 significant digits ('%.17g').
std::string csv_double(double v);

/// Fills defaults for the given experiment name and parses the JSON config
/// text (empty text keeps defaults). Throws ConfigError on malformed input.
ExperimentConfig parse_config(const std::string& experiment,
                              const std::string& json_text);

/// Deterministic per-trial RNG stream: seed mixed with stream indices.
Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

std::string topology_name(const Topology& t);

/// Splits a symmetric budget into a home budget: nh_ij = round(alpha n_ij)
/// for i < j, the rest of n_ij on the (j, i) side.
HomeBudget split_home_budget(const ComparisonBudget& budget, double alpha);

CsvTable run_simulate(const ExperimentConfig& cfg);
CsvTable run_em_fit(const ExperimentConfig& cfg);
CsvTable run_it_bound(const ExperimentConfig& cfg);
CsvTable run_bcrb(const ExperimentConfig& cfg);
CsvTable run_hcrb(const ExperimentConfig& cfg);
CsvTable run_mse_vs_bounds(const ExperimentConfig& cfg);
CsvTable run_topology_sweep(const ExperimentConfig& cfg);
CsvTable run_phase_transition(const ExperimentConfig& cfg);
CsvTable run_ha_sweeps(const ExperimentConfig& cfg);

CsvTable run_experiment(const ExperimentConfig& cfg);

/// Minimal gnuplot script plotting every numeric column against the first
/// sweep column of the CSV at csv_path.
std::string plot_script(const CsvTable& table, const std::string& csv_path);

}  // namespace btlb

#endif  // BTLB_EXPERIMENT_HPP
