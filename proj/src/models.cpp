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

#include "rsdmap/models.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rsdmap {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::vector<Edge> grid_edges(std::size_t side, Boundary boundary) {
  std::vector<Edge> edges;
  auto site = [side](std::size_t row, std::size_t col) { return row * side + col; };
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) {
      if (col + 1 < side) {
        edges.emplace_back(site(row, col), site(row, col + 1));
      } else if (boundary == Boundary::Periodic) {
        edges.emplace_back(site(row, col), site(row, 0));
      }
      if (row + 1 < side) {
        edges.emplace_back(site(row, col), site(row + 1, col));
      } else if (boundary == Boundary::Periodic) {
        edges.emplace_back(site(row, col), site(0, col));
      }
    }
  }
  return edges;
}

LadderOp create(std::size_t mode) { return {static_cast<std::uint32_t>(mode), true}; }
LadderOp annihilate(std::size_t mode) { return {static_cast<std::uint32_t>(mode), false}; }

void require_side(std::size_t side) {
  if (side < 2) throw std::invalid_argument("grid side length must be at least 2");
}

}  // namespace

ModelKind parse_model(std::string_view name) {
  if (name == "chain") return ModelKind::ChainHopping;
  if (name == "alltoall") return ModelKind::AllToAll;
  if (name == "grid") return ModelKind::GridHopping;
  if (name == "hubbard") return ModelKind::Hubbard;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::ChainHopping:
      return "chain";
    case ModelKind::AllToAll:
      return "alltoall";
    case ModelKind::GridHopping:
      return "grid";
    case ModelKind::Hubbard:
      return "hubbard";
  }
  return {};
}

Boundary parse_boundary(std::string_view name) {
  if (name == "open") return Boundary::Open;
  if (name == "periodic") return Boundary::Periodic;
  throw std::invalid_argument("unknown boundary '" + std::string(name) + "'");
}

std::string boundary_name(Boundary b) { return b == Boundary::Open ? "open" : "periodic"; }

FermionOperator build_chain_hopping(std::size_t n_sites, std::size_t range,
                                    Boundary boundary) {
  if (n_sites < 2) throw std::invalid_argument("chain needs at least 2 sites");
  if (range < 1 || range > n_sites - 1) {
    throw std::invalid_argument("hopping range " + std::to_string(range) +
                                " outside [1, " + std::to_string(n_sites - 1) + "]");
  }
  FermionOperator f(n_sites);
  if (boundary == Boundary::Open) {
    for (std::size_t i = 0; i < n_sites; ++i) {
      for (std::size_t j = 0; j < n_sites; ++j) {
        const std::size_t dist = i > j ? i - j : j - i;
        if (dist > 0 && dist <= range) f.add_term(1.0, {create(i), annihilate(j)});
      }
    }
  } else {
    for (std::size_t i = 0; i < n_sites; ++i) {
      for (std::size_t d = 1; d <= range; ++d) {
        const std::size_t j = (i + d) % n_sites;
        f.add_term(1.0, {create(i), annihilate(j)});
        f.add_term(1.0, {create(j), annihilate(i)});
      }
    }
  }
  return f;
}

FermionOperator build_all_to_all(std::size_t n_sites) {
  if (n_sites < 2) throw std::invalid_argument("chain needs at least 2 sites");
  return build_chain_hopping(n_sites, n_sites - 1);
}

FermionOperator build_grid_hopping(std::size_t side, Boundary boundary) {
  require_side(side);
  FermionOperator f(side * side);
  for (const auto& [i, j] : grid_edges(side, boundary)) {
    f.add_term(1.0, {create(i), annihilate(j)});
    f.add_term(1.0, {create(j), annihilate(i)});
  }
  return f;
}

FermionOperator build_hubbard(std::size_t side, double t_hop, double u_int,
                              Boundary boundary) {
  require_side(side);
  if (!std::isfinite(t_hop) || !std::isfinite(u_int)) {
    throw std::invalid_argument("Hubbard parameters must be finite");
  }
  const std::size_t n_sites = side * side;
  FermionOperator f(2 * n_sites);
  for (const auto& [i, j] : grid_edges(side, boundary)) {
    for (std::size_t spin = 0; spin < 2; ++spin) {
      const std::size_t a = 2 * i + spin;
      const std::size_t b = 2 * j + spin;
      f.add_term(-t_hop, {create(a), annihilate(b)});
      f.add_term(-t_hop, {create(b), annihilate(a)});
    }
  }
  if (u_int != 0.0) {
    for (std::size_t s = 0; s < n_sites; ++s) {
      const std::size_t up = 2 * s, down = 2 * s + 1;
      f.add_term(u_int, {create(up), annihilate(up), create(down), annihilate(down)});
    }
  }
  return f;
}

FermionOperator build_model(const LatticeSpec& spec) {
  switch (spec.kind) {
    case ModelKind::ChainHopping:
      return build_chain_hopping(spec.sites, spec.range, spec.boundary);
    case ModelKind::AllToAll:
      if (spec.sites < 2) throw std::invalid_argument("chain needs at least 2 sites");
      return build_chain_hopping(spec.sites, spec.sites - 1, spec.boundary);
    case ModelKind::GridHopping:
      return build_grid_hopping(spec.sites, spec.boundary);
    case ModelKind::Hubbard:
      return build_hubbard(spec.sites, spec.t_hop, spec.u_int, spec.boundary);
  }
  throw std::invalid_argument("unknown model kind");
}

}  // namespace rsdmap
