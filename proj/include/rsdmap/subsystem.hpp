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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rsdmap/clifford.hpp"
#include "rsdmap/pauli.hpp"

namespace rsdmap {

/// Largest subsystem a view can hold (local words are packed in 32 bits).
inline constexpr std::size_t kMaxViewWidth = 32;
/// Resource caps for the exhaustive solver.
inline constexpr std::size_t kMaxSolverWidth = 12;
inline constexpr std::size_t kMaxSolverDepth = 8;

/// Aggregate of all global terms sharing one restricted word. Bit i of x/z
/// is local qubit i, i.e. global qubit indices[i].
struct ViewEntry {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  std::int64_t count = 0;
  double abs_coeff_sum = 0.0;

  friend bool operator==(const ViewEntry&, const ViewEntry&) = default;
};

/// The columns of a Hamiltonian selected by a list of qubit indices, with
/// identical restrictions merged. Every global term lands in exactly one
/// entry; parent_links()[term] is that entry.
class SubsystemView {
 public:
  std::size_t width() const { return width_; }
  std::span<const ViewEntry> entries() const { return entries_; }
  std::span<const std::uint32_t> parent_links() const { return parent_links_; }

  std::int64_t total_count() const;
  /// Restricted cost: sum over entries of weight(word) * count (PW) or
  /// weight(word) * abs_coeff_sum (wPW).
  double cost(CostKind kind) const;

 private:
  friend SubsystemView restrict_to(const QubitHamiltonian&, std::span<const std::size_t>);
  std::size_t width_ = 0;
  std::vector<ViewEntry> entries_;  // sorted by local letter string
  std::vector<std::uint32_t> parent_links_;
};

/// Throws std::invalid_argument for duplicate indices or more than
/// kMaxViewWidth of them, std::out_of_range for an index >= n_qubits.
SubsystemView restrict_to(const QubitHamiltonian& h, std::span<const std::size_t> indices);

struct SolverConfig {
  std::size_t width = 4;
  std::size_t depth = 4;  // maximum number of gates
  CostKind cost = CostKind::PW;
  /// Worker threads for the top-level branches; the result does not depend
  /// on this value.
  std::size_t threads = 1;
  /// Skip states already expanded with at least as much remaining depth.
  bool transposition_table = false;
};

/// Throws std::invalid_argument when width or depth break the caps.
void validate(const SolverConfig& cfg);

struct SolveResult {
  GateSequence gates;  // local qubit indices
  double cost_before = 0.0;
  double cost_after = 0.0;
  std::uint64_t nodes = 0;  // search nodes evaluated
};

/// Gate alphabet on `width` qubits in enumeration order: every H by qubit,
/// every S by qubit, then every CNOT by (control, target).
std::vector<CliffordGate> solver_alphabet(std::size_t width);

/// Exhaustive depth-first search over gate sequences of length <= depth.
/// Returns the sequence minimising the restricted cost; ties go to the
/// shorter sequence, then to the earlier one in enumeration order. The
/// sequence is empty unless it strictly lowers the cost.
SolveResult dfs_search(const SubsystemView& view, const SolverConfig& cfg);

/// Maps local gate indices through `indices` to global qubits.
GateSequence to_global(std::span<const std::size_t> indices, const GateSequence& local);

/// conjugate_hamiltonian of the index-translated sequence.
QubitHamiltonian apply_to_global(const QubitHamiltonian& h,
                                 std::span<const std::size_t> indices,
                                 const GateSequence& local);

}  // namespace rsdmap
