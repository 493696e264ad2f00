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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "dense.hpp"
#include "rsdmap/mappers.hpp"
#include "rsdmap/models.hpp"
#include "rsdmap/subsystem.hpp"

namespace rsdmap {
namespace {

PauliString P(const std::string& s) { return PauliString::from_string(s); }

QubitHamiltonian random_hamiltonian(std::mt19937& gen, std::size_t n, int terms) {
  static constexpr char kLetters[] = "IXYZ";
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<PauliTerm> out;
  for (int t = 0; t < terms; ++t) {
    std::string w;
    for (std::size_t q = 0; q < n; ++q) w += kLetters[gen() % 4];
    out.push_back({P(w), coeff(gen)});
  }
  return QubitHamiltonian::from_terms(n, out);
}

std::vector<std::size_t> random_indices(std::mt19937& gen, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), gen);
  all.resize(k);
  return all;
}

// Restriction done letter by letter on the printed words, one entry per term.
std::vector<oracle::WeightedWord> project(const QubitHamiltonian& h,
                                          const std::vector<std::size_t>& idx, CostKind kind) {
  std::vector<oracle::WeightedWord> out;
  for (const auto& t : h.terms()) {
    const auto full = t.pauli.str();
    std::string w;
    for (auto q : idx) w += full[q];
    out.emplace_back(w, kind == CostKind::PW ? 1.0 : std::abs(t.coeff));
  }
  return out;
}

double view_cost_after(const SubsystemView& view, const GateSequence& gates, CostKind kind) {
  double total = 0.0;
  for (const auto& e : view.entries()) {
    PauliString p(view.width());
    for (std::size_t q = 0; q < view.width(); ++q) {
      p.set_bits(q, (e.x >> q) & 1u, (e.z >> q) & 1u);
    }
    for (const auto& g : gates) conjugate_in_place(g, p);
    total += double(weight(p)) * (kind == CostKind::PW ? double(e.count) : e.abs_coeff_sum);
  }
  return total;
}

TEST(Restrict, AggregatesIdenticalRestrictions) {
  const auto h = QubitHamiltonian::from_terms(3, {{P("ZZI"), 1.0}, {P("ZZX"), 1.0}});
  const std::size_t idx[] = {0, 1};
  const auto v = restrict_to(h, idx);
  ASSERT_EQ(v.entries().size(), 1u);
  EXPECT_EQ(v.entries()[0].count, 2);
  EXPECT_DOUBLE_EQ(v.entries()[0].abs_coeff_sum, 2.0);
  EXPECT_DOUBLE_EQ(v.cost(CostKind::PW), 4.0);
  EXPECT_EQ(v.total_count(), 2);
  EXPECT_EQ(v.parent_links().size(), 2u);
}

TEST(Restrict, TrivialOnSubsystem) {
  const auto h = QubitHamiltonian::from_terms(3, {{P("XII"), 1.0}});
  const std::size_t idx[] = {1, 2};
  const auto v = restrict_to(h, idx);
  ASSERT_EQ(v.entries().size(), 1u);
  EXPECT_EQ(v.entries()[0].x, 0u);
  EXPECT_EQ(v.entries()[0].z, 0u);
  EXPECT_DOUBLE_EQ(v.cost(CostKind::PW), 0.0);
}

TEST(Restrict, ColumnCountsAddUp) {
  const auto h = map_operator(jordan_wigner(4), build_chain_hopping(4, 1));
  const std::size_t left[] = {0, 1};
  const std::size_t right[] = {2, 3};
  EXPECT_DOUBLE_EQ(restrict_to(h, left).cost(CostKind::PW),
                   double(total_pauli_weight(h)) - restrict_to(h, right).cost(CostKind::PW));
}

TEST(Restrict, Errors) {
  const auto h = QubitHamiltonian::from_terms(3, {{P("XII"), 1.0}});
  const std::size_t dup[] = {1, 1};
  const std::size_t out[] = {0, 3};
  EXPECT_THROW(restrict_to(h, dup), std::invalid_argument);
  EXPECT_THROW(restrict_to(h, out), std::out_of_range);
}

TEST(Solver, ReducesXX) {
  const auto h = QubitHamiltonian::from_terms(2, {{P("XX"), 1.0}});
  const std::size_t idx[] = {0, 1};
  for (std::size_t d = 1; d <= 3; ++d) {
    SolverConfig cfg{.width = 2, .depth = d};
    const auto r = dfs_search(restrict_to(h, idx), cfg);
    EXPECT_DOUBLE_EQ(r.cost_before, 2.0);
    EXPECT_DOUBLE_EQ(r.cost_after, 1.0);
    EXPECT_EQ(r.gates.size(), 1u);
    EXPECT_EQ(r.gates[0], CliffordGate::cnot(0, 1));
  }
}

TEST(Solver, ReducesZZWithFirstCnotInOrder) {
  const auto h = QubitHamiltonian::from_terms(2, {{P("ZZ"), 1.0}});
  const std::size_t idx[] = {0, 1};
  const auto r = dfs_search(restrict_to(h, idx), SolverConfig{.width = 2, .depth = 1});
  EXPECT_DOUBLE_EQ(r.cost_after, 1.0);
  ASSERT_EQ(r.gates.size(), 1u);
  EXPECT_EQ(r.gates[0], CliffordGate::cnot(0, 1));
}

TEST(Solver, IdentityViewNeedsNoGates) {
  const auto h = QubitHamiltonian::from_terms(3, {{P("IIX"), 1.0}});
  const std::size_t idx[] = {0, 1};
  const auto r = dfs_search(restrict_to(h, idx), SolverConfig{.width = 2, .depth = 3});
  EXPECT_TRUE(r.gates.empty());
  EXPECT_DOUBLE_EQ(r.cost_after, 0.0);
}

TEST(Solver, AlphabetOrder) {
  const auto a = solver_alphabet(3);
  ASSERT_EQ(a.size(), 3u + 3u + 6u);
  EXPECT_EQ(a[0], CliffordGate::h(0));
  EXPECT_EQ(a[3], CliffordGate::s(0));
  EXPECT_EQ(a[6], CliffordGate::cnot(0, 1));
  EXPECT_EQ(a[7], CliffordGate::cnot(0, 2));
  EXPECT_EQ(a[8], CliffordGate::cnot(1, 0));
  EXPECT_EQ(a[11], CliffordGate::cnot(2, 1));
}

TEST(Solver, MatchesBruteForce) {
  std::mt19937 gen(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = trial % 4 == 3 ? 3 : 2;
    const std::size_t d = k == 3 ? 2 : 1 + trial % 3;
    const std::size_t n = k + gen() % 3;
    const auto kind = trial % 2 ? CostKind::WPW : CostKind::PW;
    const auto h = random_hamiltonian(gen, n, 2 + int(gen() % 6));
    const auto idx = random_indices(gen, n, k);
    const auto view = restrict_to(h, idx);
    const SolverConfig cfg{.width = k, .depth = d, .cost = kind};
    const auto r = dfs_search(view, cfg);
    const double expected = oracle::brute_force_min_cost(project(h, idx, kind), k, d);
    EXPECT_NEAR(r.cost_after, expected, 1e-9) << "trial " << trial;
    EXPECT_LE(r.gates.size(), d);
    EXPECT_NEAR(view_cost_after(view, r.gates, kind), r.cost_after, 1e-9);
    if (r.cost_after < r.cost_before) {
      EXPECT_FALSE(r.gates.empty());
    } else {
      EXPECT_TRUE(r.gates.empty());
    }
  }
}

TEST(Solver, OptionsDoNotChangeTheResult) {
  std::mt19937 gen(777);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_hamiltonian(gen, 4, 12);
    const std::size_t idx[] = {0, 1, 2, 3};
    const auto view = restrict_to(h, idx);
    const SolverConfig base{.width = 4, .depth = 3};
    const auto r1 = dfs_search(view, base);
    SolverConfig threaded = base;
    threaded.threads = 3;
    const auto r2 = dfs_search(view, threaded);
    EXPECT_EQ(r1.gates, r2.gates);
    EXPECT_EQ(r1.cost_after, r2.cost_after);
    SolverConfig tt = base;
    tt.transposition_table = true;
    const auto r3 = dfs_search(view, tt);
    EXPECT_EQ(r1.cost_after, r3.cost_after);
  }
}

TEST(Solver, ConfigValidation) {
  EXPECT_THROW(validate(SolverConfig{.width = 0}), std::invalid_argument);
  EXPECT_THROW(validate(SolverConfig{.width = kMaxSolverWidth + 1}), std::invalid_argument);
  EXPECT_THROW(validate(SolverConfig{.width = 2, .depth = kMaxSolverDepth + 1}),
               std::invalid_argument);
  EXPECT_NO_THROW(validate(SolverConfig{.width = 2, .depth = 0}));
  const auto h = QubitHamiltonian::from_terms(2, {{P("XX"), 1.0}});
  const std::size_t idx[] = {0, 1};
  EXPECT_TRUE(dfs_search(restrict_to(h, idx), SolverConfig{.width = 2, .depth = 0}).gates.empty());
}

TEST(ToGlobal, MapsIndicesAndPreservesOtherColumns) {
  const std::size_t idx[] = {0, 1};
  const GateSequence local{CliffordGate::cnot(0, 1)};
  const auto h = QubitHamiltonian::from_terms(2, {{P("XX"), 1.0}});
  const auto out = apply_to_global(h, idx, local);
  EXPECT_EQ(total_pauli_weight(out), 1u);
  EXPECT_TRUE(out.coefficient(P("XI")).has_value());
  const auto h3 = QubitHamiltonian::from_terms(3, {{P("XXZ"), 1.0}});
  const auto out3 = apply_to_global(h3, idx, local);
  EXPECT_TRUE(out3.coefficient(P("XIZ")).has_value());
  EXPECT_EQ(apply_to_global(h3, idx, {}), h3);
  const std::size_t scattered[] = {4, 1};
  EXPECT_EQ(to_global(scattered, local), (GateSequence{CliffordGate::cnot(4, 1)}));
  EXPECT_THROW(to_global(scattered, {CliffordGate::h(2)}), std::out_of_range);
}

}  // namespace
}  // namespace rsdmap
