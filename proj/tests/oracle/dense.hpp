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

// Dense-matrix reference implementations used to check the bit-level code.
// Everything here works on explicit 2^n x 2^n complex matrices built from
// first principles, so it shares no logic with the library under test.
//
// Basis convention: qubit (or mode) q is bit n-1-q of the basis index, so
// the leftmost letter of a Pauli word is the most significant tensor factor.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rsdmap/clifford.hpp"
#include "rsdmap/fermion.hpp"
#include "rsdmap/pauli.hpp"

namespace rsdmap::oracle {

using Matrix = Eigen::MatrixXcd;

/// Kronecker product of single-qubit matrices for a word over {I,X,Y,Z}.
Matrix pauli_matrix(const std::string& word);

Matrix hamiltonian_matrix(const QubitHamiltonian& h);

/// Unitary of a single gate acting on n qubits, built from its action on
/// computational basis states.
Matrix gate_matrix(const CliffordGate& g, std::size_t n);

/// Product of the gates, with the first gate of the sequence applied first
/// in the conjugation U^dagger H U.
Matrix sequence_matrix(const GateSequence& seq, std::size_t n);

/// Annihilation operator of mode j on the Fock space of n modes.
Matrix annihilation(std::size_t j, std::size_t n);

Matrix fermion_matrix(const FermionOperator& f);

/// Majorana operator m_k on the Fock space: m_{2j} = a_j + a_j^dagger,
/// m_{2j+1} = i (a_j^dagger - a_j).
Matrix majorana(std::size_t k, std::size_t n);

Matrix majorana_sum_matrix(std::span<const MajoranaMonomial> monomials, std::size_t n);

/// Sorted eigenvalues of a Hermitian matrix.
Eigen::VectorXd spectrum(const Matrix& m);

double max_abs_diff(const Matrix& a, const Matrix& b);

/// All 4^n words over {I,X,Y,Z} in lexicographic order.
std::vector<std::string> all_words(std::size_t n);

/// The word Q with U^dagger P U = +-Q, found by trace overlap.
std::string conjugated_word(const Matrix& u, const std::string& word);

/// A Pauli word paired with its cost weight (1 for PW, |c| for wPW).
using WeightedWord = std::pair<std::string, double>;

/// Minimum of sum w * weight(U^dagger P U) over every sequence of at most
/// depth gates from {H, S, CNOT} on n qubits, by plain enumeration.
double brute_force_min_cost(const std::vector<WeightedWord>& words, std::size_t n,
                            std::size_t depth);

}  // namespace rsdmap::oracle
