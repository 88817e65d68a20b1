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

#include "btlb/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "btlb/cramer_rao.hpp"
#include "btlb/em_inference.hpp"
#include "btlb/errors.hpp"
#include "btlb/info_bounds.hpp"
#include "json.hpp"

namespace btlb {

void ExperimentConfig::validate() const {
  if (k < 2) throw ConfigError("config: k must be >= 2");
  if (!(a > 0.0)) throw ConfigError("config: a must be > 0");
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  if (threads < 1) throw ConfigError("config: threads must be >= 1");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] <= n_grid[i - 1])
      throw ConfigError("config: n_grid must be strictly ascending");
}

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < header.size(); ++c)
    os << (c ? "," : "") << header[c];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << row[c];
    os << "\n";
  }
  return os.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file: " + path);
  f << to_string();
}

namespace {

using nlohmann::json;

TopologyKind topology_kind_from_string(const std::string& s) {
  if (s == "complete") return TopologyKind::kComplete;
  if (s == "cycle") return TopologyKind::kCycle;
  if (s == "star") return TopologyKind::kStar;
  if (s == "chain") return TopologyKind::kChain;
  if (s == "random_tree") return TopologyKind::kRandomTree;
  if (s == "erdos_renyi") return TopologyKind::kErdosRenyi;
  throw ConfigError("config: unknown topology kind: " + s);
}

Topology topology_from_json(const json& j, std::size_t default_k,
                            std::uint64_t default_seed) {
  Topology t;
  t.k = default_k;
  if (j.is_string()) {
    t.kind = topology_kind_from_string(j.get<std::string>());
  } else if (j.is_object()) {
    for (auto& [key, val] : j.items()) {
      if (key == "kind")
        t.kind = topology_kind_from_string(val.get<std::string>());
      else if (key == "k")
        t.k = val.get<std::size_t>();
      else if (key == "p")
        t.p = val.get<double>();
      else if (key == "seed")
        t.seed = val.get<std::uint64_t>();
      else
        throw ConfigError("config: unknown topology key: " + key);
    }
  } else {
    throw ConfigError("config: topology must be a string or object");
  }
  if ((t.kind == TopologyKind::kRandomTree ||
       t.kind == TopologyKind::kErdosRenyi) &&
      !t.seed)
    t.seed = default_seed;
  return t;
}

void apply_defaults(ExperimentConfig& cfg) {
  const std::string& e = cfg.experiment;
  Topology complete{TopologyKind::kComplete, cfg.k, std::nullopt, std::nullopt};
  if (e == "mse-vs-bounds") {
    cfg.n_grid = {100, 316, 1000, 3162, 10000};
    cfg.topologies = {complete};
  } else if (e == "it-bound" || e == "bcrb") {
    cfg.n_grid = {100, 1000, 10000};
    cfg.topologies = {complete};
  } else if (e == "topology-sweep") {
    cfg.n_grid = {100, 316, 1000, 3162, 10000};
    cfg.topologies = {
        complete,
        {TopologyKind::kChain, cfg.k, std::nullopt, std::nullopt},
        {TopologyKind::kCycle, cfg.k, std::nullopt, std::nullopt},
        {TopologyKind::kRandomTree, cfg.k, std::nullopt, cfg.seed},
        {TopologyKind::kStar, cfg.k, std::nullopt, std::nullopt}};
  } else if (e == "phase-transition") {
    cfg.k_list = {50};
    cfg.fixed_n = 5000;
    cfg.trials = 20;
    for (int i = 2; i <= 20; ++i) cfg.pn_grid.push_back(0.1 * i);
  } else if (e == "ha-it") {
    cfg.a = 2.0;
    cfg.theta_grid = {1.001, 1.25, 1.5, 2, 3, 5, 10, 20, 50, 100};
    cfg.topologies = {complete};
  } else if (e == "ha-hcrb" || e == "hcrb") {
    cfg.experiment = (e == "hcrb") ? "hcrb" : "ha-hcrb";
    cfg.theta_grid = {1, 1.5, 2, 3, 5, 10};
    cfg.topologies = {complete};
  } else if (e == "simulate" || e == "em-fit") {
    cfg.topologies = {complete};
  } else {
    throw ConfigError("config: unknown experiment: " + e);
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& experiment,
                              const std::string& json_text) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  apply_defaults(cfg);
  if (json_text.empty()) {
    cfg.validate();
    return cfg;
  }
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("config: invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ConfigError("config: root must be an object");
  try {
    // k first so dependent defaults (topologies, b) see it.
    if (j.contains("k")) cfg.k = j["k"].get<std::size_t>();
    for (auto& [key, val] : j.items()) {
      if (key == "k") {
      } else if (key == "experiment") {
        if (val.get<std::string>() != cfg.experiment)
          cfg.experiment = val.get<std::string>();
      } else if (key == "a") {
        cfg.a = val.get<double>();
      } else if (key == "b") {
        if (val.is_string() && val.get<std::string>() == "ak-1")
          cfg.b = -1.0;
        else
          cfg.b = val.get<double>();
      } else if (key == "n_grid") {
        cfg.n_grid = val.get<std::vector<long long>>();
      } else if (key == "n") {
        cfg.fixed_n = val.get<long long>();
      } else if (key == "theta_grid") {
        cfg.theta_grid = val.get<std::vector<double>>();
      } else if (key == "pn_grid") {
        cfg.pn_grid = val.get<std::vector<double>>();
      } else if (key == "k_list") {
        cfg.k_list = val.get<std::vector<std::size_t>>();
      } else if (key == "alpha") {
        cfg.alpha = val.get<double>();
      } else if (key == "trials") {
        cfg.trials = val.get<int>();
      } else if (key == "seed") {
        cfg.seed = val.get<std::uint64_t>();
      } else if (key == "threads") {
        cfg.threads = val.get<int>();
      } else if (key == "out") {
        cfg.out_path = val.get<std::string>();
      } else if (key == "topology") {
        cfg.topologies = {topology_from_json(val, cfg.k, cfg.seed)};
      } else if (key == "topologies") {
        if (!val.is_array()) throw ConfigError("config: topologies: array");
        cfg.topologies.clear();
        for (const auto& tj : val)
          cfg.topologies.push_back(topology_from_json(tj, cfg.k, cfg.seed));
      } else {
        throw ConfigError("config: unknown key: " + key);
      }
    }
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("config: bad value type: ") + ex.what());
  }
  // Re-derive k-dependent topology dimensions when only k was overridden.
  for (auto& t : cfg.topologies)
    if (t.k != cfg.k && !j.contains("topology") && !j.contains("topologies"))
      t.k = cfg.k;
  cfg.validate();
  return cfg;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ (stream + 0x51ED270B7A4DD9CBULL));
  s = splitmix64(s ^ (trial + 0xAEF17502108EF2D9ULL));
  return Rng(s);
}

std::string topology_name(const Topology& t) {
  switch (t.kind) {
    case TopologyKind::kComplete: return "complete";
    case TopologyKind::kCycle: return "cycle";
    case TopologyKind::kStar: return "star";
    case TopologyKind::kChain: return "chain";
    case TopologyKind::kRandomTree: return "random_tree";
    case TopologyKind::kErdosRenyi: return "erdos_renyi";
  }
  return "unknown";
}

HomeBudget split_home_budget(const ComparisonBudget& budget, double alpha) {
  if (!(alpha >= 0.0) || !(alpha <= 1.0))
    throw ConfigError("split_home_budget: alpha must be in [0,1]");
  budget.validate();
  std::size_t k = budget.k();
  HomeBudget hb;
  hb.nh = MatI(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      long long nij = budget.n(i, j);
      long long home = std::llround(alpha * static_cast<double>(nij));
      hb.nh(i, j) = home;
      hb.nh(j, i) = nij - home;
    }
  return hb;
}

namespace {

PriorHyperParams uniform_prior(std::size_t k, double a, double b) {
  PriorHyperParams p;
  p.a.assign(k, a);
  p.b.assign(k, b);
  return p;
}

/// Runs per_trial(t) for t in [0, trials) over `threads` workers with a
/// strided split; each trial writes only its own slot, so the schedule
/// cannot change results.
void parallel_trials(int trials, int threads,
                     const std::function<void(int)>& per_trial) {
  threads = std::min(threads, trials);
  if (threads <= 1) {
    for (int t = 0; t < trials; ++t) per_trial(t);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < threads; ++w)
    workers.emplace_back([&, w] {
      try {
        for (int t = w; t < trials; t += threads) per_trial(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  for (auto& th : workers) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct MeanCi {
  double mean;
  double ci95;
};

MeanCi mean_ci(const VecD& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  double mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  double var = xs.size() > 1 ? ss / static_cast<double>(xs.size() - 1) : 0.0;
  double ci = 1.96 * std::sqrt(var / static_cast<double>(xs.size()));
  return {mean, ci};
}

const Topology& single_topology(const ExperimentConfig& cfg) {
  if (cfg.topologies.size() != 1)
    throw ConfigError(cfg.experiment + ": expects exactly one topology");
  return cfg.topologies.front();
}

std::vector<std::string> param_prefix(const ExperimentConfig& cfg,
                                      const std::string& topo) {
  return {cfg.experiment,
          std::to_string(cfg.k),
          csv_double(cfg.a),
          csv_double(cfg.rate()),
          topo,
          std::to_string(cfg.seed)};
}

const std::vector<std::string> kParamHeader = {"experiment", "k", "a", "b",
                                               "topology",   "seed"};

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

CsvTable run_simulate(const ExperimentConfig& cfg) {
  const Topology& topo = single_topology(cfg);
  ComparisonBudget budget = build_budget(topo, cfg.fixed_n);
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  Rng rng = trial_rng(cfg.seed, 0, 0);
  SkillVector skills = sample_skills(prior, rng);
  ComparisonOutcome outcome = sample_outcome(skills, budget, rng);

  CsvTable t;
  t.header = concat(kParamHeader, {"n", "record", "i", "j", "value"});
  auto prefix = param_prefix(cfg, topology_name(topo));
  auto push = [&](const std::string& record, std::size_t i, std::size_t j,
                  const std::string& value) {
    t.rows.push_back(concat(prefix, {std::to_string(cfg.fixed_n), record,
                                     std::to_string(i), std::to_string(j),
                                     value}));
  };
  for (std::size_t i = 0; i < cfg.k; ++i)
    push("skill", i, i, csv_double(skills.lambda[i]));
  for (std::size_t i = 0; i < cfg.k; ++i)
    for (std::size_t j = i + 1; j < cfg.k; ++j)
      if (budget.n(i, j) != 0) push("budget", i, j,
                                    std::to_string(budget.n(i, j)));
  for (std::size_t i = 0; i < cfg.k; ++i)
    for (std::size_t j = 0; j < cfg.k; ++j)
      if (i != j && budget.n(i, j) != 0)
        push("outcome", i, j, std::to_string(outcome.w(i, j)));
  return t;
}

CsvTable run_em_fit(const ExperimentConfig& cfg) {
  const Topology& topo = single_topology(cfg);
  ComparisonBudget budget = build_budget(topo, cfg.fixed_n);
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  Rng rng = trial_rng(cfg.seed, 0, 0);
  SkillVector skills = sample_skills(prior, rng);
  ComparisonOutcome outcome = sample_outcome(skills, budget, rng);
  EmTrace trace = em_fit(prior, outcome, budget);

  CsvTable t;
  t.header = concat(kParamHeader, {"n", "record", "i", "value"});
  auto prefix = param_prefix(cfg, topology_name(topo));
  auto push = [&](const std::string& record, std::size_t i,
                  const std::string& value) {
    t.rows.push_back(concat(prefix, {std::to_string(cfg.fixed_n), record,
                                     std::to_string(i), value}));
  };
  for (std::size_t i = 0; i < cfg.k; ++i)
    push("skill_true", i, csv_double(skills.lambda[i]));
  for (std::size_t i = 0; i < cfg.k; ++i)
    push("skill_est", i, csv_double(trace.estimate().lambda[i]));
  push("iterations", 0, std::to_string(trace.iterations_used));
  push("converged", 0, trace.converged ? "1" : "0");
  push("mse", 0, csv_double(mse(skills, trace.estimate())));
  return t;
}

CsvTable run_it_bound(const ExperimentConfig& cfg) {
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  CsvTable t;
  t.header = concat(kParamHeader,
                    {"n", "e_btl", "log_it_l2_r2", "it_l2_r2", "it_l1_r1",
                     "cor1_l1", "cor1_l2sq"});
  BoundSpec l2{NormFamily::kL2, 2.0, cfg.k};
  BoundSpec l1{NormFamily::kL1, 1.0, cfg.k};
  for (const Topology& topo : cfg.topologies) {
    auto prefix = param_prefix(cfg, topology_name(topo));
    for (long long n : cfg.n_grid) {
      ComparisonBudget budget = build_budget(topo, n);
      double e = e_btl(budget, prior);
      t.rows.push_back(concat(
          prefix,
          {std::to_string(n), csv_double(e),
           csv_double(log_it_lower_bound(e, l2)),
           csv_double(it_lower_bound(e, l2)),
           csv_double(it_lower_bound(e, l1)),
           csv_double(cor1_bound(n, cfg.k, cfg.a, cfg.rate(), Cor1Kind::kL1)),
           csv_double(
               cor1_bound(n, cfg.k, cfg.a, cfg.rate(), Cor1Kind::kL2Squared))}));
    }
  }
  return t;
}

CsvTable run_bcrb(const ExperimentConfig& cfg) {
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  CsvTable t;
  t.header = concat(kParamHeader, {"n", "bcrb"});
  for (const Topology& topo : cfg.topologies) {
    auto prefix = param_prefix(cfg, topology_name(topo));
    for (long long n : cfg.n_grid) {
      ComparisonBudget budget = build_budget(topo, n);
      t.rows.push_back(
          concat(prefix, {std::to_string(n),
                          csv_double(bcrb_trace(bim(budget, prior)))}));
    }
  }
  return t;
}

CsvTable run_hcrb(const ExperimentConfig& cfg) {
  const Topology& topo = single_topology(cfg);
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  ComparisonBudget budget = build_budget(topo, cfg.fixed_n);
  HomeBudget hb = split_home_budget(budget, cfg.alpha);
  CsvTable t;
  t.header = concat(kParamHeader, {"n", "alpha", "theta", "hcrb_full",
                                   "hcrb_skill", "bcrb"});
  auto prefix = param_prefix(cfg, topology_name(topo));
  double bcrb = bcrb_trace(bim(budget, prior));
  for (double theta : cfg.theta_grid) {
    HcrbResult res = hcrb_trace(him(hb, prior, theta));
    t.rows.push_back(concat(
        prefix, {std::to_string(cfg.fixed_n), csv_double(cfg.alpha),
                 csv_double(theta), csv_double(res.full_trace),
                 csv_double(res.skill_trace), csv_double(bcrb)}));
  }
  return t;
}

CsvTable run_mse_vs_bounds(const ExperimentConfig& cfg) {
  const Topology& topo = single_topology(cfg);
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  BoundSpec l2{NormFamily::kL2, 2.0, cfg.k};
  CsvTable t;
  t.header = concat(kParamHeader, {"n", "trials", "em_mse", "em_ci95",
                                   "it_bound", "cor1_l2sq", "bcrb"});
  auto prefix = param_prefix(cfg, topology_name(topo));
  for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
    long long n = cfg.n_grid[ni];
    ComparisonBudget budget = build_budget(topo, n);
    double it = it_lower_bound(e_btl(budget, prior), l2);
    double cor1 = cor1_bound(n, cfg.k, cfg.a, cfg.rate(), Cor1Kind::kL2Squared);
    double bc = bcrb_trace(bim(budget, prior));
    VecD errs(cfg.trials);
    parallel_trials(cfg.trials, cfg.threads, [&](int trial) {
      Rng rng = trial_rng(cfg.seed, ni, static_cast<std::uint64_t>(trial));
      SkillVector skills = sample_skills(prior, rng);
      ComparisonOutcome outcome = sample_outcome(skills, budget, rng);
      EmTrace trace = em_fit(prior, outcome, budget);
      errs[trial] = mse(skills, trace.estimate());
    });
    MeanCi mc = mean_ci(errs);
    t.rows.push_back(concat(
        prefix, {std::to_string(n), std::to_string(cfg.trials),
                 csv_double(mc.mean), csv_double(mc.ci95), csv_double(it),
                 csv_double(cor1), csv_double(bc)}));
  }
  return t;
}

CsvTable run_topology_sweep(const ExperimentConfig& cfg) {
  if (cfg.topologies.size() < 2)
    throw ConfigError("topology-sweep: needs at least two topologies");
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  BoundSpec l2{NormFamily::kL2, 2.0, cfg.k};
  CsvTable t;
  t.header = concat(kParamHeader, {"n", "e_btl", "it_bound", "bcrb"});
  for (const Topology& topo : cfg.topologies) {
    auto prefix = param_prefix(cfg, topology_name(topo));
    for (long long n : cfg.n_grid) {
      ComparisonBudget budget = build_budget(topo, n);
      double e = e_btl(budget, prior);
      t.rows.push_back(
          concat(prefix, {std::to_string(n), csv_double(e),
                          csv_double(it_lower_bound(e, l2)),
                          csv_double(bcrb_trace(bim(budget, prior)))}));
    }
  }
  return t;
}

CsvTable run_phase_transition(const ExperimentConfig& cfg) {
  if (cfg.k_list.empty() || cfg.pn_grid.empty())
    throw ConfigError("phase-transition: needs k_list and pn_grid");
  CsvTable t;
  t.header = {"experiment", "k",  "a",       "b",    "seed",
              "n",          "pn", "p",       "trials", "it_bound",
              "bcrb"};
  for (std::size_t ki = 0; ki < cfg.k_list.size(); ++ki) {
    std::size_t k = cfg.k_list[ki];
    double b = cfg.b > 0.0 ? cfg.b : cfg.a * static_cast<double>(k) - 1.0;
    PriorHyperParams prior = uniform_prior(k, cfg.a, b);
    BoundSpec l2{NormFamily::kL2, 2.0, k};
    for (std::size_t pi = 0; pi < cfg.pn_grid.size(); ++pi) {
      double pn = cfg.pn_grid[pi];
      double p = std::min(1.0, pn * std::log(static_cast<double>(k)) /
                                   static_cast<double>(k));
      VecD its(cfg.trials), bcs(cfg.trials);
      std::uint64_t stream = ki * 1000 + pi;
      parallel_trials(cfg.trials, cfg.threads, [&](int s) {
        Rng rng = trial_rng(cfg.seed, stream, static_cast<std::uint64_t>(s));
        ComparisonBudget budget =
            er_budget_fixed_total(k, p, cfg.fixed_n, rng);
        its[s] = it_lower_bound(e_btl(budget, prior), l2);
        bcs[s] = bcrb_trace(bim(budget, prior));
      });
      t.rows.push_back({cfg.experiment, std::to_string(k), csv_double(cfg.a),
                        csv_double(b), std::to_string(cfg.seed),
                        std::to_string(cfg.fixed_n), csv_double(pn),
                        csv_double(p), std::to_string(cfg.trials),
                        csv_double(mean_ci(its).mean),
                        csv_double(mean_ci(bcs).mean)});
    }
  }
  return t;
}

CsvTable run_ha_sweeps(const ExperimentConfig& cfg) {
  if (cfg.theta_grid.empty())
    throw ConfigError("ha sweep: needs a theta_grid");
  const Topology& topo = single_topology(cfg);
  PriorHyperParams prior = uniform_prior(cfg.k, cfg.a, cfg.rate());
  ComparisonBudget budget = build_budget(topo, cfg.fixed_n);
  HomeBudget hb = split_home_budget(budget, cfg.alpha);
  auto prefix = param_prefix(cfg, topology_name(topo));
  CsvTable t;
  if (cfg.experiment == "ha-hcrb") {
    t.header = concat(kParamHeader, {"n", "alpha", "theta", "hcrb_full",
                                     "hcrb_skill", "bcrb"});
    double bc = bcrb_trace(bim(budget, prior));
    for (double theta : cfg.theta_grid) {
      HcrbResult res = hcrb_trace(him(hb, prior, theta));
      t.rows.push_back(concat(
          prefix, {std::to_string(cfg.fixed_n), csv_double(cfg.alpha),
                   csv_double(theta), csv_double(res.full_trace),
                   csv_double(res.skill_trace), csv_double(bc)}));
    }
    return t;
  }
  // Information-theoretic path.
  BoundSpec l2{NormFamily::kL2, 2.0, cfg.k};
  t.header = concat(kParamHeader, {"n", "alpha", "theta", "e_ha",
                                   "it_ha_bound", "it_btl_bound"});
  double base = it_lower_bound(e_btl(budget, prior), l2);
  for (double theta : cfg.theta_grid) {
    double e = e_ha(hb, prior, ThetaDist::point(theta));
    t.rows.push_back(concat(
        prefix, {std::to_string(cfg.fixed_n), csv_double(cfg.alpha),
                 csv_double(theta), csv_double(e),
                 csv_double(it_lower_bound(e, l2)), csv_double(base)}));
  }
  return t;
}

CsvTable run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::string& e = cfg.experiment;
  if (e == "simulate") return run_simulate(cfg);
  if (e == "em-fit") return run_em_fit(cfg);
  if (e == "it-bound") return run_it_bound(cfg);
  if (e == "bcrb") return run_bcrb(cfg);
  if (e == "hcrb") return run_hcrb(cfg);
  if (e == "mse-vs-bounds") return run_mse_vs_bounds(cfg);
  if (e == "topology-sweep") return run_topology_sweep(cfg);
  if (e == "phase-transition") return run_phase_transition(cfg);
  if (e == "ha-it" || e == "ha-hcrb") return run_ha_sweeps(cfg);
  throw ConfigError("unknown experiment: " + e);
}

std::string plot_script(const CsvTable& table, const std::string& csv_path) {
  // x axis: the first of n / theta / pn present in the header; y: every
  // column after it.
  std::size_t x_col = 0;
  for (std::size_t c = 0; c < table.header.size(); ++c)
    if (table.header[c] == "n" || table.header[c] == "theta" ||
        table.header[c] == "pn") {
      x_col = c;
      break;
    }
  std::ostringstream os;
  os << "set datafile separator ','\n";
  os << "set key outside\n";
  os << "set logscale y\n";
  if (!table.header.empty() && table.header[x_col] == "n")
    os << "set logscale x\n";
  os << "plot ";
  bool first = true;
  for (std::size_t c = x_col + 1; c < table.header.size(); ++c) {
    if (!first) os << ", \\\n     ";
    os << "'" << csv_path << "' skip 1 using " << (x_col + 1) << ":" << (c + 1)
       << " with linespoints title '" << table.header[c] << "'";
    first = false;
  }
  os << "\n";
  return os.str();
}

}  // namespace btlb
