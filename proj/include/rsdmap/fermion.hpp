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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace rsdmap {

using Complex = std::complex<double>;

struct LadderOp {
  std::uint32_t mode = 0;
  bool dagger = false;  // creation operator when true

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

struct FermionTerm {
  Complex coeff;
  std::vector<LadderOp> ops;  // product in written (left-to-right) order

  friend bool operator==(const FermionTerm&, const FermionTerm&) = default;
};

/// Sum of ladder-operator monomials over a fixed number of modes.
/// Hermiticity is not enforced; the model builders emit Hermitian sums.
class FermionOperator {
 public:
  explicit FermionOperator(std::size_t n_modes = 0) : n_modes_(n_modes) {}

  /// Throws std::out_of_range if any mode index is >= n_modes.
  void add_term(Complex coeff, std::vector<LadderOp> ops);

  std::size_t n_modes() const { return n_modes_; }
  std::span<const FermionTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const FermionOperator&, const FermionOperator&) = default;

 private:
  std::size_t n_modes_;
  std::vector<FermionTerm> terms_;
};

/// coefficient * m_{i0} m_{i1} ...; canonical form has strictly increasing
/// indices.
struct MajoranaMonomial {
  Complex coeff;
  std::vector<std::uint32_t> indices;
};

/// Result of reordering a Majorana product into canonical form.
struct OrderedProduct {
  int sign = 1;
  std::vector<std::uint32_t> indices;
};

/// Sorts a product of Majoranas using {m_i, m_j} = 2 delta_ij: every swap
/// of distinct neighbours flips the sign and m_i m_i collapses to I.
OrderedProduct normal_order(std::span<const std::uint32_t> indices);

/// Drop threshold for combined Majorana coefficients.
inline constexpr double kMajoranaDropTolerance = 1e-12;

/// Expands every ladder operator via a_j = (m_2j + i m_2j+1)/2 and
/// a_j^dag = (m_2j - i m_2j+1)/2, normal-orders and combines like
/// monomials. Output is sorted by index list (shorter first, then
/// lexicographic).
std::vector<MajoranaMonomial> to_majorana(const FermionOperator& f);

/// Self-test of the reordering rules on every index pair that occurs in
/// the given monomials: m_i m_j + m_j m_i must reduce to 2 delta_ij I.
bool anticommutation_check(std::span<const MajoranaMonomial> monomials);

}  // namespace rsdmap
