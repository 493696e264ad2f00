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

#include <gtest/gtest.h>

#include "dense.hpp"
#include "rsdmap/errors.hpp"
#include "rsdmap/io.hpp"
#include "rsdmap/mappers.hpp"
#include "rsdmap/models.hpp"

namespace rsdmap {
namespace {

PauliString P(const std::string& s) { return PauliString::from_string(s); }

constexpr MapperKind kAll[] = {MapperKind::JordanWigner, MapperKind::BravyiKitaev,
                               MapperKind::TernaryTree};

FermionOperator random_hermitian(std::mt19937& gen, std::size_t n, int terms) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  FermionOperator f(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<LadderOp> ops(1 + gen() % 4);
    for (auto& op : ops) op = {static_cast<std::uint32_t>(gen() % n), bool(gen() % 2)};
    const Complex c{coeff(gen), coeff(gen)};
    std::vector<LadderOp> adj(ops.rbegin(), ops.rend());
    for (auto& op : adj) op.dagger = !op.dagger;
    f.add_term(c, ops);
    f.add_term(std::conj(c), adj);
  }
  return f;
}

TEST(JordanWigner, Images) {
  const auto one = jordan_wigner(1);
  ASSERT_EQ(one.images.size(), 2u);
  EXPECT_EQ(one.images[0].pauli, P("X"));
  EXPECT_EQ(one.images[1].pauli, P("Y"));
  const auto two = jordan_wigner(2);
  EXPECT_EQ(two.images[2].pauli, P("ZX"));
  EXPECT_EQ(two.images[3].pauli, P("ZY"));
  EXPECT_EQ(two.images[2].phase, 0);
}

TEST(BravyiKitaev, SmallCases) {
  const auto one = bravyi_kitaev(1);
  EXPECT_EQ(one.images[0].pauli, P("X"));
  EXPECT_EQ(one.images[1].pauli, P("Y"));
  const auto four = bravyi_kitaev(4);
  std::size_t total = 0, max = 0;
  for (const auto& im : four.images) {
    total += weight(im.pauli);
    max = std::max(max, weight(im.pauli));
  }
  EXPECT_LE(max, 3u);
  EXPECT_LE(double(total) / 8.0, double(max));
}

TEST(TernaryTree, SmallCases) {
  const auto one = ternary_tree(1);
  ASSERT_EQ(one.images.size(), 2u);
  EXPECT_EQ(one.images[0].pauli, P("X"));
  EXPECT_EQ(one.images[1].pauli, P("Y"));
  for (const auto& im : ternary_tree(13).images) EXPECT_LE(weight(im.pauli), 3u);
}

TEST(Mappers, ValidForAllSizes) {
  for (auto kind : kAll) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const auto t = make_mapping(kind, n);
      EXPECT_EQ(t.images.size(), 2 * n);
      EXPECT_TRUE(t.is_valid()) << mapper_name(kind) << " n=" << n;
    }
  }
}

TEST(Mappers, ImagesMatchDenseMajoranaAlgebra) {
  for (auto kind : kAll) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto t = make_mapping(kind, n);
      for (std::size_t i = 0; i < 2 * n; ++i) {
        const Complex ph = std::pow(Complex{0.0, 1.0}, t.images[i].phase);
        const oracle::Matrix mi = ph * oracle::pauli_matrix(t.images[i].pauli.str());
        EXPECT_LT(oracle::max_abs_diff(mi, mi.adjoint()), 1e-12);
        for (std::size_t j = 0; j < i; ++j) {
          const Complex pj = std::pow(Complex{0.0, 1.0}, t.images[j].phase);
          const oracle::Matrix mj = pj * oracle::pauli_matrix(t.images[j].pauli.str());
          EXPECT_LT((mi * mj + mj * mi).cwiseAbs().maxCoeff(), 1e-12);
        }
      }
    }
  }
}

TEST(IsValid, DetectsBrokenTables) {
  auto t = jordan_wigner(2);
  t.images[3] = t.images[2];
  EXPECT_FALSE(t.is_valid());
  auto u = jordan_wigner(2);
  u.images[0].phase = 1;
  EXPECT_FALSE(u.is_valid());
}

TEST(ParseMapper, Names) {
  EXPECT_EQ(parse_mapper("jw"), MapperKind::JordanWigner);
  EXPECT_EQ(parse_mapper("bk"), MapperKind::BravyiKitaev);
  EXPECT_EQ(parse_mapper("ternary"), MapperKind::TernaryTree);
  EXPECT_THROW(parse_mapper("parity"), std::invalid_argument);
}

TEST(ApplyMapping, NumberOperator) {
  FermionOperator f(1);
  f.add_term(1.0, {{0, true}, {0, false}});
  const auto h = map_operator(jordan_wigner(1), f);
  EXPECT_EQ(h, QubitHamiltonian::from_terms(1, {{P("I"), 0.5}, {P("Z"), -0.5}}));
}

TEST(ApplyMapping, TwoSiteHopping) {
  const auto h = map_operator(jordan_wigner(2), build_chain_hopping(2, 1));
  EXPECT_EQ(h, QubitHamiltonian::from_terms(2, {{P("XX"), 0.5}, {P("YY"), 0.5}}));
}

TEST(ApplyMapping, EmptyAndErrors) {
  EXPECT_TRUE(apply_mapping(jordan_wigner(3), {}).empty());
  const std::vector<MajoranaMonomial> bad{{1.0, {0, 7}}};
  EXPECT_THROW(apply_mapping(jordan_wigner(2), bad), std::out_of_range);
  FermionOperator f(1);
  f.add_term(1.0, {{0, false}});
  EXPECT_THROW(map_operator(jordan_wigner(1), f), NumericIntegrityError);
  EXPECT_THROW(map_operator(jordan_wigner(2), FermionOperator(3)), std::invalid_argument);
}

TEST(ApplyMapping, JordanWignerEqualsFockMatrix) {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto f = random_hermitian(gen, n, 3);
    const auto h = map_operator(jordan_wigner(n), f);
    EXPECT_LT(oracle::max_abs_diff(oracle::hamiltonian_matrix(h), oracle::fermion_matrix(f)),
              1e-10);
  }
}

TEST(ApplyMapping, AllMappersPreserveSpectrum) {
  std::mt19937 gen(37);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto f = random_hermitian(gen, n, 3);
    const auto ref = oracle::spectrum(oracle::fermion_matrix(f));
    for (auto kind : kAll) {
      const auto h = map_operator(make_mapping(kind, n), f);
      const auto got = oracle::spectrum(oracle::hamiltonian_matrix(h));
      EXPECT_LT((got - ref).cwiseAbs().maxCoeff(), 1e-9) << mapper_name(kind);
    }
  }
}

TEST(ApplyMapping, ChainBaseline) {
  const auto h = map_operator(jordan_wigner(20), build_chain_hopping(20, 1));
  EXPECT_EQ(h.size(), 38u);
  EXPECT_EQ(total_pauli_weight(h), 76u);
  EXPECT_DOUBLE_EQ(average_pauli_weight(h), 2.0);
}

TEST(H2Fixture, JordanWignerMetricsAndGroundState) {
  const auto f = load_fermion_file(RSDMAP_TEST_DATA_DIR "/h2_sto3g.json");
  EXPECT_EQ(f.n_modes(), 4u);
  const auto jw = map_operator(jordan_wigner(4), f);
  EXPECT_EQ(jw.size(), 15u);
  EXPECT_EQ(total_pauli_weight(jw), 32u);
  EXPECT_NEAR(weighted_pauli_weight(jw), 3.355, 1e-3);
  for (auto kind : kAll) {
    const auto h = map_operator(make_mapping(kind, 4), f);
    const auto e = oracle::spectrum(oracle::hamiltonian_matrix(h));
    EXPECT_NEAR(e(0), -1.1373060357534004, 1e-6) << mapper_name(kind);
  }
}

}  // namespace
}  // namespace rsdmap
