// Copyright 2026 The rsdmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsdmap/optimizer.hpp"

#include <charconv>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace rsdmap {

namespace {

constexpr double kWeightedMargin = 1e-9;
constexpr std::size_t kMaxCachedViews = std::size_t{1} << 17;

std::unique_ptr<SubsystemSampler> make_sampler(const RSDConfig& cfg) {
  if (cfg.sampler == SamplerKind::Uniform) return std::make_unique<UniformSampler>();
  return std::make_unique<HammingSampler>(cfg.epsilon);
}

std::string view_key(const SubsystemView& view) {
  std::string key;
  key.reserve(view.entries().size() * 24 + 8);
  const auto width = static_cast<std::uint64_t>(view.width());
  key.append(reinterpret_cast<const char*>(&width), sizeof width);
  for (const auto& e : view.entries()) {
    key.append(reinterpret_cast<const char*>(&e.x), sizeof e.x);
    key.append(reinterpret_cast<const char*>(&e.z), sizeof e.z);
    key.append(reinterpret_cast<const char*>(&e.count), sizeof e.count);
    key.append(reinterpret_cast<const char*>(&e.abs_coeff_sum), sizeof e.abs_coeff_sum);
  }
  return key;
}

bool strictly_better(double after, double before, CostKind kind) {
  if (kind == CostKind::PW) return after < before;
  return after < before - kWeightedMargin;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % n;
  }
}

SamplerKind parse_sampler(std::string_view name) {
  if (name == "uniform") return SamplerKind::Uniform;
  if (name == "hamming") return SamplerKind::Hamming;
  throw std::invalid_argument("unknown sampler '" + std::string(name) + "'");
}

std::string sampler_name(SamplerKind kind) {
  return kind == SamplerKind::Uniform ? "uniform" : "hamming";
}

std::vector<std::size_t> UniformSampler::sample(const QubitHamiltonian& h, std::size_t k,
                                                Rng& rng) {
  const std::size_t n = h.n_qubits();
  if (k > n) throw std::invalid_argument("subsystem width exceeds qubit count");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

HammingSampler::HammingSampler(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("Hamming sampler needs epsilon > 0");
}

std::vector<std::size_t> HammingSampler::sample(const QubitHamiltonian& h, std::size_t k,
                                                Rng& rng) {
  const std::size_t n = h.n_qubits();
  if (k > n) throw std::invalid_argument("subsystem width exceeds qubit count");
  if (!profile_ || profile_->size() != n) profile_ = hamming_profile(h);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<double>((*profile_)[i]) + epsilon_;
  std::vector<std::size_t> picked;
  picked.reserve(k);
  for (std::size_t draw = 0; draw < k; ++draw) {
    double total = 0.0;
    for (double v : w) total += v;
    const double target = rng.uniform() * total;
    double acc = 0.0;
    std::size_t choice = n;
    std::size_t last_available = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] <= 0.0) continue;
      last_available = i;
      acc += w[i];
      if (target < acc) {
        choice = i;
        break;
      }
    }
    if (choice == n) choice = last_available;  // rounding at the top end
    picked.push_back(choice);
    w[choice] = 0.0;
  }
  return picked;
}

std::vector<double> hamming_probabilities(std::span<const std::size_t> profile,
                                          double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be non-negative");
  double total = epsilon * static_cast<double>(profile.size());
  for (auto h : profile) total += static_cast<double>(h);
  if (!(total > 0.0)) throw std::invalid_argument("all sampling weights are zero");
  std::vector<double> p;
  p.reserve(profile.size());
  for (auto h : profile) p.push_back((static_cast<double>(h) + epsilon) / total);
  return p;
}

void validate(const RSDConfig& cfg, std::size_t n_qubits) {
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (cfg.width > n_qubits) {
    throw std::invalid_argument("width " + std::to_string(cfg.width) + " exceeds " +
                                std::to_string(n_qubits) + " qubits");
  }
  validate(SolverConfig{cfg.width, cfg.depth, cfg.cost, cfg.threads, false});
  if (cfg.sampler == SamplerKind::Hamming && !(cfg.epsilon > 0.0)) {
    throw std::invalid_argument("Hamming sampler needs epsilon > 0");
  }
}

RSDResult rsd_optimize(const QubitHamiltonian& h0, const RSDConfig& cfg) {
  validate(cfg, h0.n_qubits());
  auto sampler = make_sampler(cfg);
  return rsd_optimize(h0, cfg, *sampler);
}

RSDResult rsd_optimize(const QubitHamiltonian& h0, const RSDConfig& cfg,
                       SubsystemSampler& sampler) {
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (cfg.width > h0.n_qubits()) throw std::invalid_argument("width exceeds qubit count");
  const SolverConfig solver{cfg.width, cfg.depth, cfg.cost, cfg.threads,
                            cfg.transposition_table};
  validate(solver);

  RSDResult result{h0, {}, {}, 0, 0};
  result.trajectory.reserve(cfg.iterations);
  Rng rng(cfg.seed);
  sampler.invalidate();
  std::unordered_map<std::string, SolveResult> cache;
  double current = cost(result.hamiltonian, cfg.cost);
  std::size_t rejections_in_a_row = 0;

  for (std::size_t t = 1; t <= cfg.iterations; ++t) {
    TrajectoryRecord rec;
    rec.iteration = t;
    rec.cost_before = current;
    rec.cost_after = current;
    rec.indices = sampler.sample(result.hamiltonian, cfg.width, rng);

    const SubsystemView view = restrict_to(result.hamiltonian, rec.indices);
    SolveResult solved;
    if (cfg.memoize) {
      std::string key = view_key(view);
      if (auto it = cache.find(key); it != cache.end()) {
        solved = it->second;
        ++result.cache_hits;
      } else {
        solved = dfs_search(view, solver);
        result.solver_nodes += solved.nodes;
        if (cache.size() >= kMaxCachedViews) cache.clear();
        cache.emplace(std::move(key), solved);
      }
    } else {
      solved = dfs_search(view, solver);
      result.solver_nodes += solved.nodes;
    }

    if (!solved.gates.empty()) {
      GateSequence global = to_global(rec.indices, solved.gates);
      QubitHamiltonian candidate = conjugate_hamiltonian(global, result.hamiltonian);
      const double candidate_cost = cost(candidate, cfg.cost);
      if (strictly_better(candidate_cost, current, cfg.cost)) {
        result.hamiltonian = std::move(candidate);
        result.gates.insert(result.gates.end(), global.begin(), global.end());
        current = candidate_cost;
        rec.accepted = true;
        rec.cost_after = current;
        rec.gate_count = global.size();
        sampler.invalidate();
      }
    }
    rejections_in_a_row = rec.accepted ? 0 : rejections_in_a_row + 1;
    result.trajectory.push_back(std::move(rec));
    if (cfg.patience && rejections_in_a_row >= *cfg.patience) break;
  }
  return result;
}

double percentage_reduction(double optimized, double reference) {
  if (!(reference > 0.0)) {
    throw std::invalid_argument("reference Pauli weight must be positive");
  }
  return 1.0 - optimized / reference;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_trajectory_csv(std::span<const TrajectoryRecord> records) {
  std::string out = "iter,cost_before,cost_after,accepted,gate_count,indices\n";
  for (const auto& r : records) {
    out += std::to_string(r.iteration);
    out += ',';
    out += format_number(r.cost_before);
    out += ',';
    out += format_number(r.cost_after);
    out += r.accepted ? ",1," : ",0,";
    out += std::to_string(r.gate_count);
    out += ',';
    for (std::size_t i = 0; i < r.indices.size(); ++i) {
      if (i) out += ';';
      out += std::to_string(r.indices[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace rsdmap
