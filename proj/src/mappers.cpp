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

#include "rsdmap/mappers.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "rsdmap/errors.hpp"

namespace rsdmap {

namespace {

PhasedPauli hermitian_word(PauliString p) { return PhasedPauli{std::move(p), 0}; }

// Rank of the 2n images over GF(2), each as a (x|z) row vector.
std::size_t symplectic_rank(const std::vector<PhasedPauli>& images) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& img : images) {
    std::vector<std::uint64_t> row(img.pauli.x_limbs().begin(), img.pauli.x_limbs().end());
    row.insert(row.end(), img.pauli.z_limbs().begin(), img.pauli.z_limbs().end());
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  const std::size_t bits = rows.empty() ? 0 : rows.front().size() * 64;
  for (std::size_t col = 0; col < bits && rank < rows.size(); ++col) {
    const std::size_t limb = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][limb] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][limb] & mask)) {
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool MappingTable::is_valid() const {
  if (images.size() != 2 * n_modes) return false;
  for (const auto& img : images) {
    if (img.pauli.n_qubits() != n_modes) return false;
    // i^phase P is Hermitian with square +I only for a real phase; a word
    // with Y letters squares to +I regardless.
    if (img.phase % 2 != 0) return false;
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (!anticommutes(images[i].pauli, images[j].pauli)) return false;
    }
  }
  return symplectic_rank(images) == images.size();
}

MapperKind parse_mapper(std::string_view name) {
  if (name == "jw") return MapperKind::JordanWigner;
  if (name == "bk") return MapperKind::BravyiKitaev;
  if (name == "ternary") return MapperKind::TernaryTree;
  throw std::invalid_argument("unknown mapper '" + std::string(name) +
                              "' (expected jw, bk or ternary)");
}

std::string mapper_name(MapperKind kind) {
  switch (kind) {
    case MapperKind::JordanWigner:
      return "jw";
    case MapperKind::BravyiKitaev:
      return "bk";
    case MapperKind::TernaryTree:
      return "ternary";
  }
  return {};
}

MappingTable jordan_wigner(std::size_t n_modes) {
  MappingTable t{n_modes, {}};
  t.images.reserve(2 * n_modes);
  for (std::size_t i = 0; i < n_modes; ++i) {
    PauliString even(n_modes);
    for (std::size_t k = 0; k < i; ++k) even.set(k, Pauli::Z);
    PauliString odd = even;
    even.set(i, Pauli::X);
    odd.set(i, Pauli::Y);
    t.images.push_back(hermitian_word(std::move(even)));
    t.images.push_back(hermitian_word(std::move(odd)));
  }
  return t;
}

MappingTable bravyi_kitaev(std::size_t n_modes) {
  // Qubit j (1-based position p = j + 1) stores the parity of modes
  // [p - lowbit(p), j].
  auto lowbit = [](std::size_t v) { return v & (~v + 1); };
  MappingTable t{n_modes, {}};
  t.images.reserve(2 * n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) {
    const std::size_t p = j + 1;
    std::set<std::size_t> update, parity, flip;
    for (std::size_t q = p + lowbit(p); q <= n_modes; q += lowbit(q)) update.insert(q - 1);
    for (std::size_t q = j; q > 0; q -= lowbit(q)) parity.insert(q - 1);
    for (std::size_t q = j; q > p - lowbit(p); q -= lowbit(q)) flip.insert(q - 1);

    PauliString even(n_modes), odd(n_modes);
    for (std::size_t q : update) {
      even.set(q, Pauli::X);
      odd.set(q, Pauli::X);
    }
    for (std::size_t q : parity) {
      even.set(q, Pauli::Z);
      if (!flip.contains(q)) odd.set(q, Pauli::Z);
    }
    even.set(j, Pauli::X);
    odd.set(j, Pauli::Y);
    t.images.push_back(hermitian_word(std::move(even)));
    t.images.push_back(hermitian_word(std::move(odd)));
  }
  return t;
}

MappingTable ternary_tree(std::size_t n_modes) {
  struct Leaf {
    std::size_t slot;
    PauliString word;
    bool all_z;
  };
  std::vector<Leaf> leaves;
  constexpr Pauli kBranch[] = {Pauli::X, Pauli::Y, Pauli::Z};
  // Depth-first walk carrying the word accumulated along the path.
  auto walk = [&](auto&& self, std::size_t node, PauliString word, bool all_z) -> void {
    for (std::size_t l = 0; l < 3; ++l) {
      PauliString next = word;
      next.set(node, kBranch[l]);
      const std::size_t child = 3 * node + 1 + l;
      const bool z_path = all_z && l == 2;
      if (child < n_modes) {
        self(self, child, std::move(next), z_path);
      } else {
        leaves.push_back({child, std::move(next), z_path});
      }
    }
  };
  if (n_modes > 0) walk(walk, 0, PauliString(n_modes), true);
  std::erase_if(leaves, [](const Leaf& l) { return l.all_z; });
  std::sort(leaves.begin(), leaves.end(),
            [](const Leaf& a, const Leaf& b) { return a.slot < b.slot; });
  MappingTable t{n_modes, {}};
  t.images.reserve(leaves.size());
  for (auto& leaf : leaves) t.images.push_back(hermitian_word(std::move(leaf.word)));
  return t;
}

MappingTable make_mapping(MapperKind kind, std::size_t n_modes) {
  switch (kind) {
    case MapperKind::JordanWigner:
      return jordan_wigner(n_modes);
    case MapperKind::BravyiKitaev:
      return bravyi_kitaev(n_modes);
    case MapperKind::TernaryTree:
      return ternary_tree(n_modes);
  }
  throw std::invalid_argument("unknown mapper kind");
}

QubitHamiltonian apply_mapping(const MappingTable& table,
                               std::span<const MajoranaMonomial> monomials) {
  static const Complex kPhase[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::size_t n = table.n_modes;
  std::unordered_map<PauliString, Complex, PauliStringHash> acc;
  for (const auto& m : monomials) {
    PhasedPauli product{PauliString(n), 0};
    for (std::uint32_t idx : m.indices) {
      if (idx >= table.images.size()) {
        throw std::out_of_range("Majorana index " + std::to_string(idx) +
                                " out of range for " + std::to_string(n) + " modes");
      }
      product = pauli_product(product, table.images[idx]);
    }
    acc[std::move(product.pauli)] += m.coeff * kPhase[product.phase];
  }
  std::vector<PauliTerm> terms;
  terms.reserve(acc.size());
  double worst_imag = 0.0;
  for (auto& [pauli, c] : acc) {
    worst_imag = std::max(worst_imag, std::abs(c.imag()));
    if (std::abs(c.real()) >= kPruneTolerance) terms.push_back({pauli, c.real()});
  }
  if (!(worst_imag < kImaginaryTolerance)) {
    throw NumericIntegrityError("mapped operator has imaginary coefficient residue " +
                                std::to_string(worst_imag) +
                                " (input is not Hermitian?)");
  }
  return QubitHamiltonian::from_unique_terms(n, std::move(terms));
}

QubitHamiltonian map_operator(const MappingTable& table, const FermionOperator& f) {
  if (f.n_modes() != table.n_modes) {
    throw std::invalid_argument("operator has " + std::to_string(f.n_modes()) +
                                " modes but the mapping covers " +
                                std::to_string(table.n_modes));
  }
  const auto monomials = to_majorana(f);
  return apply_mapping(table, monomials);
}

}  // namespace rsdmap
