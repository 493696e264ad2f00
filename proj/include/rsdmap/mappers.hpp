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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsdmap/fermion.hpp"
#include "rsdmap/pauli.hpp"

namespace rsdmap {

/// Images of the 2n Majorana operators on n qubits; images[k] is the image
/// of m_k.
struct MappingTable {
  std::size_t n_modes = 0;
  std::vector<PhasedPauli> images;

  /// Every pair anticommutes, every image is Hermitian and squares to +I,
  /// and the images are independent as symplectic vectors.
  bool is_valid() const;
};

enum class MapperKind { JordanWigner, BravyiKitaev, TernaryTree };

/// Accepts the CLI names "jw", "bk", "ternary".
MapperKind parse_mapper(std::string_view name);
std::string mapper_name(MapperKind kind);

MappingTable jordan_wigner(std::size_t n_modes);

/// Fenwick-tree (binary indexed) construction valid for any n_modes.
MappingTable bravyi_kitaev(std::size_t n_modes);

/// Balanced ternary tree with qubits labelled breadth-first (children of
/// node i are 3i+1, 3i+2, 3i+3 along X, Y, Z). Of the 2n+1 root-to-leaf
/// words the all-Z path is dropped; the rest are assigned to m_0, m_1, ...
/// in breadth-first order of their terminal slots.
MappingTable ternary_tree(std::size_t n_modes);

MappingTable make_mapping(MapperKind kind, std::size_t n_modes);

/// Imaginary parts above this threshold make apply_mapping fail.
inline constexpr double kImaginaryTolerance = 1e-9;

/// Replaces each Majorana by its image and multiplies out. Throws
/// std::out_of_range for indices >= 2 * n_modes and NumericIntegrityError
/// if a combined coefficient keeps an imaginary part.
QubitHamiltonian apply_mapping(const MappingTable& table,
                               std::span<const MajoranaMonomial> monomials);

/// Convenience: to_majorana followed by apply_mapping.
QubitHamiltonian map_operator(const MappingTable& table, const FermionOperator& f);

}  // namespace rsdmap
