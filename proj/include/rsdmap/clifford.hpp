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
#include <iosfwd>
#include <string>
#include <vector>

#include "rsdmap/pauli.hpp"

namespace rsdmap {

enum class GateKind : std::uint8_t { H, S, CNOT };

/// One Clifford generator. For H and S only `a` is meaningful; for CNOT `a`
/// is the control and `b` the target.
struct CliffordGate {
  GateKind kind = GateKind::H;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  static CliffordGate h(std::uint32_t q) { return {GateKind::H, q, 0}; }
  static CliffordGate s(std::uint32_t q) { return {GateKind::S, q, 0}; }
  static CliffordGate cnot(std::uint32_t control, std::uint32_t target) {
    return {GateKind::CNOT, control, target};
  }

  /// Largest qubit index touched.
  std::uint32_t max_qubit() const;
  std::string str() const;

  friend bool operator==(const CliffordGate&, const CliffordGate&) = default;
};

/// Gates in conjugation order: H -> U^dag H U with U = g[0] g[1] ... g[m-1],
/// so g[0] is applied to the operator first.
using GateSequence = std::vector<CliffordGate>;

/// Throws std::out_of_range if the gate does not fit n_qubits, and
/// std::invalid_argument for a CNOT whose control equals its target.
void validate_gate(const CliffordGate& g, std::size_t n_qubits);

/// In-place g^dag p g. Returns true when the conjugation flips the sign.
/// Does not validate indices.
bool conjugate_in_place(const CliffordGate& g, PauliString& p);

struct SignedPauli {
  PauliString pauli;
  int sign = 1;  // +1 or -1

  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

SignedPauli conjugate_pauli(const CliffordGate& g, const PauliString& p);

/// Conjugates every term by the whole sequence. Term count is preserved.
QubitHamiltonian conjugate_hamiltonian(const GateSequence& seq,
                                       const QubitHamiltonian& h);

/// Sequence V with V^dag (U^dag P U) V == P for the given U.
GateSequence inverse(const GateSequence& seq);

/// One gate per line: "H q", "S q", "CNOT control target".
std::string format_gate_log(const GateSequence& seq);
GateSequence parse_gate_log(std::istream& in);

}  // namespace rsdmap
