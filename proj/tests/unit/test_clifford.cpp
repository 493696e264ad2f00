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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "dense.hpp"
#include "rsdmap/clifford.hpp"
#include "rsdmap/errors.hpp"

namespace rsdmap {
namespace {

PauliString P(const std::string& s) { return PauliString::from_string(s); }

// Checks U^dagger P U = sign * Q against dense matrices.
void expect_matches_oracle(const CliffordGate& g, const std::string& word) {
  const std::size_t n = word.size();
  const auto got = conjugate_pauli(g, P(word));
  const auto u = oracle::gate_matrix(g, n);
  const oracle::Matrix lhs = u.adjoint() * oracle::pauli_matrix(word) * u;
  const oracle::Matrix rhs = double(got.sign) * oracle::pauli_matrix(got.pauli.str());
  EXPECT_LT(oracle::max_abs_diff(lhs, rhs), 1e-12) << g.str() << " on " << word;
}

TEST(Conjugation, SingleQubitRules) {
  EXPECT_EQ(conjugate_pauli(CliffordGate::h(0), P("X")), (SignedPauli{P("Z"), 1}));
  EXPECT_EQ(conjugate_pauli(CliffordGate::h(0), P("Z")), (SignedPauli{P("X"), 1}));
  EXPECT_EQ(conjugate_pauli(CliffordGate::h(0), P("Y")), (SignedPauli{P("Y"), -1}));
  EXPECT_EQ(conjugate_pauli(CliffordGate::s(0), P("X")), (SignedPauli{P("Y"), -1}));
  EXPECT_EQ(conjugate_pauli(CliffordGate::s(0), P("Y")), (SignedPauli{P("X"), 1}));
  EXPECT_EQ(conjugate_pauli(CliffordGate::s(0), P("Z")), (SignedPauli{P("Z"), 1}));
}

TEST(Conjugation, CnotReducesWeight) {
  const auto g = CliffordGate::cnot(0, 1);
  EXPECT_EQ(conjugate_pauli(g, P("XX")).pauli, P("XI"));
  EXPECT_EQ(conjugate_pauli(g, P("ZZ")).pauli, P("IZ"));
  EXPECT_EQ(conjugate_pauli(g, P("II")), (SignedPauli{P("II"), 1}));
}

TEST(Conjugation, AllGatesAllWordsMatchOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<CliffordGate> gates;
    for (std::uint32_t q = 0; q < n; ++q) {
      gates.push_back(CliffordGate::h(q));
      gates.push_back(CliffordGate::s(q));
      for (std::uint32_t t = 0; t < n; ++t) {
        if (t != q) gates.push_back(CliffordGate::cnot(q, t));
      }
    }
    for (const auto& g : gates) {
      for (const auto& w : oracle::all_words(n)) expect_matches_oracle(g, w);
    }
  }
}

TEST(Conjugation, WideStringsAcrossLimbs) {
  PauliString p(100);
  p.set(63, Pauli::X);
  p.set(64, Pauli::Z);
  auto r = conjugate_pauli(CliffordGate::cnot(63, 64), p);
  // X_c Z_t: x_t ^= x_c gives Y on 64, z_c ^= z_t gives Y on 63.
  EXPECT_EQ(r.pauli.letter(63), Pauli::Y);
  EXPECT_EQ(r.pauli.letter(64), Pauli::Y);
  EXPECT_EQ(weight(r.pauli), 2u);
}

TEST(ConjugateHamiltonian, Examples) {
  const auto h = QubitHamiltonian::from_terms(2, {{P("XI"), 1.0}});
  EXPECT_EQ(conjugate_hamiltonian({}, h), h);
  EXPECT_EQ(conjugate_hamiltonian({CliffordGate::h(0)}, h),
            QubitHamiltonian::from_terms(2, {{P("ZI"), 1.0}}));
  EXPECT_EQ(conjugate_hamiltonian({CliffordGate::s(0), CliffordGate::s(0)}, h),
            QubitHamiltonian::from_terms(2, {{P("XI"), -1.0}}));
}

TEST(ConjugateHamiltonian, RandomSequencesMatchOracle) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<PauliTerm> terms;
    const auto words = oracle::all_words(n);
    for (int t = 0; t < 5; ++t) {
      terms.push_back({P(words[gen() % words.size()]),
                       std::uniform_real_distribution<double>(-1, 1)(gen)});
    }
    const auto h = QubitHamiltonian::from_terms(n, terms);
    GateSequence seq;
    for (int g = 0; g < 6; ++g) {
      const std::uint32_t a = gen() % n;
      const int kind = n > 1 ? gen() % 3 : gen() % 2;
      if (kind == 0) seq.push_back(CliffordGate::h(a));
      if (kind == 1) seq.push_back(CliffordGate::s(a));
      if (kind == 2) seq.push_back(CliffordGate::cnot(a, (a + 1 + gen() % (n - 1)) % n));
    }
    const auto u = oracle::sequence_matrix(seq, n);
    const oracle::Matrix expected = u.adjoint() * oracle::hamiltonian_matrix(h) * u;
    const auto got = oracle::hamiltonian_matrix(conjugate_hamiltonian(seq, h));
    EXPECT_LT(oracle::max_abs_diff(expected, got), 1e-10);
  }
}

TEST(Inverse, UndoesConjugation) {
  const GateSequence seq{CliffordGate::h(0), CliffordGate::s(1), CliffordGate::cnot(1, 2),
                         CliffordGate::s(0), CliffordGate::cnot(0, 1)};
  const auto h = QubitHamiltonian::from_terms(
      3, {{P("XYZ"), 0.3}, {P("ZZI"), -1.2}, {P("IYX"), 0.7}});
  const auto forward = conjugate_hamiltonian(seq, h);
  EXPECT_EQ(conjugate_hamiltonian(inverse(seq), forward), h);
  const auto inv = inverse({CliffordGate::s(2)});
  EXPECT_EQ(inv.size(), 3u);
}

TEST(Validate, RejectsBadGates) {
  EXPECT_THROW(validate_gate(CliffordGate::h(3), 3), std::out_of_range);
  EXPECT_THROW(validate_gate(CliffordGate::cnot(1, 1), 3), std::invalid_argument);
  EXPECT_NO_THROW(validate_gate(CliffordGate::cnot(2, 0), 3));
}

TEST(GateLog, RoundTrip) {
  const GateSequence seq{CliffordGate::h(0), CliffordGate::s(5), CliffordGate::cnot(3, 1)};
  const auto text = format_gate_log(seq);
  EXPECT_EQ(text, "H 0\nS 5\nCNOT 3 1\n");
  std::istringstream in(text);
  EXPECT_EQ(parse_gate_log(in), seq);
  std::istringstream bad("CNOT 1 1\n");
  EXPECT_THROW(parse_gate_log(bad), InputFormatError);
  std::istringstream junk("T 0\n");
  EXPECT_THROW(parse_gate_log(junk), InputFormatError);
}

}  // namespace
}  // namespace rsdmap
