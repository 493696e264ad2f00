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
#include <string>
#include <string_view>

#include "rsdmap/fermion.hpp"

namespace rsdmap {

enum class Boundary { Open, Periodic };

enum class ModelKind { ChainHopping, AllToAll, GridHopping, Hubbard };

/// Parameters of one benchmark lattice model. `sites` is the chain length
/// or the grid side length.
struct LatticeSpec {
  ModelKind kind = ModelKind::ChainHopping;
  std::size_t sites = 2;
  std::size_t range = 1;  // chain hopping only
  double t_hop = 1.0;     // Hubbard only
  double u_int = 4.0;     // Hubbard only
  Boundary boundary = Boundary::Open;
};

ModelKind parse_model(std::string_view name);  // chain|alltoall|grid|hubbard
std::string model_name(ModelKind kind);
Boundary parse_boundary(std::string_view name);  // open|periodic
std::string boundary_name(Boundary b);

/// sum over ordered pairs 0 < |i-j| <= r of a_i^dag a_j, coefficient 1.
/// Periodic boundaries connect i to (i + d) mod N for d = 1..r, once per
/// (site, distance). Throws std::invalid_argument unless N >= 2 and
/// 1 <= r <= N-1.
FermionOperator build_chain_hopping(std::size_t n_sites, std::size_t range,
                                    Boundary boundary = Boundary::Open);

/// Chain hopping with r = N - 1.
FermionOperator build_all_to_all(std::size_t n_sites);

/// Nearest-neighbour hopping on an N x N grid, sites in row-major order.
/// Periodic boundaries add the right/down neighbour of every site, so a
/// side of 2 counts each wrap pair separately.
FermionOperator build_grid_hopping(std::size_t side, Boundary boundary = Boundary::Open);

/// Fermi-Hubbard model on an N x N grid. Mode = 2 * site + spin.
/// -t on every directed hop of both spins, then U n_up n_down per site.
FermionOperator build_hubbard(std::size_t side, double t_hop, double u_int,
                              Boundary boundary = Boundary::Open);

FermionOperator build_model(const LatticeSpec& spec);

}  // namespace rsdmap
