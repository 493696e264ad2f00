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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsdmap {

/// Single-qubit Pauli letter. The numeric value is the lexicographic rank
/// used for deterministic term ordering (I < X < Y < Z).
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// An n-qubit Pauli word in symplectic form.
///
/// Qubit q lives at bit (q % 64) of limb (q / 64) in both the x and z
/// bitvectors. Letters: (x,z) = (0,0) I, (1,0) X, (1,1) Y, (0,1) Z.
/// Bits past n_qubits are always zero.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  /// Parses a word over {I,X,Y,Z}; qubit 0 is the leftmost character.
  static PauliString from_string(std::string_view letters);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t num_limbs() const { return xs_.size(); }

  bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1u; }
  bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1u; }
  Pauli letter(std::size_t q) const;
  void set(std::size_t q, Pauli p);
  void set_bits(std::size_t q, bool x, bool z);

  std::span<std::uint64_t> x_limbs() { return xs_; }
  std::span<std::uint64_t> z_limbs() { return zs_; }
  std::span<const std::uint64_t> x_limbs() const { return xs_; }
  std::span<const std::uint64_t> z_limbs() const { return zs_; }

  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
};

/// Strict lexicographic order on the letter strings (qubit 0 first).
bool lex_less(const PauliString& a, const PauliString& b);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};

/// A Pauli word with a power of i in front: i^phase * pauli.
struct PhasedPauli {
  PauliString pauli;
  std::uint8_t phase = 0;  // in {0,1,2,3}

  friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

/// Number of non-identity letters.
std::size_t weight(const PauliString& p);

/// Matrix product a*b as a phased word. Throws std::invalid_argument on a
/// qubit-count mismatch.
PhasedPauli pauli_product(const PauliString& a, const PauliString& b);
PhasedPauli pauli_product(const PhasedPauli& a, const PhasedPauli& b);

/// True iff the two words anticommute (odd symplectic inner product).
bool anticommutes(const PauliString& a, const PauliString& b);

/// Absolute pruning threshold applied to real Hamiltonian coefficients.
inline constexpr double kPruneTolerance = 1e-12;

struct PauliTerm {
  PauliString pauli;
  double coeff = 0.0;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Sparse real combination of Pauli words on a fixed number of qubits.
///
/// Terms are kept sorted lexicographically by letter string, contain no
/// duplicates, and no coefficient below kPruneTolerance in magnitude.
/// Instances are immutable once built.
class QubitHamiltonian {
 public:
  explicit QubitHamiltonian(std::size_t n_qubits = 0) : n_qubits_(n_qubits) {}

  /// Sums duplicate words, prunes small coefficients and sorts.
  static QubitHamiltonian from_terms(std::size_t n_qubits,
                                     std::vector<PauliTerm> terms);

  /// For inputs known to hold distinct words (e.g. the image of a
  /// bijection). Throws std::logic_error if a duplicate is found.
  static QubitHamiltonian from_unique_terms(std::size_t n_qubits,
                                            std::vector<PauliTerm> terms);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::span<const PauliTerm> terms() const { return terms_; }

  std::optional<double> coefficient(const PauliString& p) const;

  friend bool operator==(const QubitHamiltonian&,
                         const QubitHamiltonian&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

enum class CostKind { PW, WPW };

std::size_t total_pauli_weight(const QubitHamiltonian& h);
double weighted_pauli_weight(const QubitHamiltonian& h);
/// PW / #terms, or 0 for an empty Hamiltonian.
double average_pauli_weight(const QubitHamiltonian& h);
double cost(const QubitHamiltonian& h, CostKind kind);

/// Entry q counts the terms acting non-trivially on qubit q.
std::vector<std::size_t> hamming_profile(const QubitHamiltonian& h);

}  // namespace rsdmap
