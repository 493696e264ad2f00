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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rsdmap/clifford.hpp"
#include "rsdmap/pauli.hpp"
#include "rsdmap/subsystem.hpp"

namespace rsdmap {

/// Seeded 64-bit generator (mt19937_64) with distribution code that does
/// not depend on the standard library implementation, so draws are
/// reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

enum class SamplerKind { Uniform, Hamming };

SamplerKind parse_sampler(std::string_view name);  // uniform|hamming
std::string sampler_name(SamplerKind kind);

/// Chooses the subsystem for each iteration. Implementations may cache
/// statistics of the Hamiltonian between calls; invalidate() is called
/// whenever the optimizer accepts a step.
class SubsystemSampler {
 public:
  virtual ~SubsystemSampler() = default;
  virtual std::vector<std::size_t> sample(const QubitHamiltonian& h, std::size_t k,
                                          Rng& rng) = 0;
  virtual void invalidate() {}
};

/// Every k-subset equally likely (partial Fisher-Yates); indices are
/// returned in draw order.
class UniformSampler final : public SubsystemSampler {
 public:
  std::vector<std::size_t> sample(const QubitHamiltonian& h, std::size_t k,
                                  Rng& rng) override;
};

/// Draws k qubits one at a time without replacement, each with probability
/// proportional to h_i + epsilon among the qubits still available, where
/// h_i counts the terms acting non-trivially on qubit i.
class HammingSampler final : public SubsystemSampler {
 public:
  explicit HammingSampler(double epsilon);
  std::vector<std::size_t> sample(const QubitHamiltonian& h, std::size_t k,
                                  Rng& rng) override;
  void invalidate() override { profile_.reset(); }

 private:
  double epsilon_;
  std::optional<std::vector<std::size_t>> profile_;
};

/// P_i = (h_i + eps) / (sum h + n eps). Throws std::invalid_argument when
/// the denominator is zero or eps is negative.
std::vector<double> hamming_probabilities(std::span<const std::size_t> profile,
                                          double epsilon);

struct RSDConfig {
  std::size_t iterations = 1000;
  std::size_t width = 4;
  std::size_t depth = 4;
  CostKind cost = CostKind::PW;
  SamplerKind sampler = SamplerKind::Hamming;
  double epsilon = 1e-3;
  std::uint64_t seed = 0;
  /// Stop after this many consecutive rejected iterations.
  std::optional<std::size_t> patience;
  std::size_t threads = 1;
  /// Reuse solver results for restricted views seen before. The solver is
  /// a pure function of the view, so this never changes the output.
  bool memoize = true;
  bool transposition_table = false;
};

/// Throws std::invalid_argument for T = 0, width > n_qubits, solver caps
/// or a non-positive Hamming epsilon.
void validate(const RSDConfig& cfg, std::size_t n_qubits);

struct TrajectoryRecord {
  std::size_t iteration = 0;  // 1-based
  double cost_before = 0.0;
  double cost_after = 0.0;
  bool accepted = false;
  std::size_t gate_count = 0;
  std::vector<std::size_t> indices;
};

struct RSDResult {
  QubitHamiltonian hamiltonian;
  GateSequence gates;  // global indices, conjugation order
  std::vector<TrajectoryRecord> trajectory;
  std::uint64_t solver_nodes = 0;
  std::uint64_t cache_hits = 0;
};

/// Randomized subsystem descent. Each iteration samples k qubits, solves
/// the restricted problem exhaustively and keeps the result only if the
/// global cost strictly decreases (wPW needs a 1e-9 margin).
RSDResult rsd_optimize(const QubitHamiltonian& h0, const RSDConfig& cfg);
/// Same with a caller-supplied sampler (cfg.sampler and cfg.epsilon unused).
RSDResult rsd_optimize(const QubitHamiltonian& h0, const RSDConfig& cfg,
                       SubsystemSampler& sampler);

/// 1 - optimized / reference. Throws std::invalid_argument if reference
/// is not positive.
double percentage_reduction(double optimized, double reference);

/// Header `iter,cost_before,cost_after,accepted,gate_count,indices`;
/// indices joined by ';'.
std::string format_trajectory_csv(std::span<const TrajectoryRecord> records);

/// Shortest decimal text that round-trips the double.
std::string format_number(double v);

}  // namespace rsdmap
