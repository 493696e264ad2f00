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

#include "rsdmap/fermion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace rsdmap {

void FermionOperator::add_term(Complex coeff, std::vector<LadderOp> ops) {
  for (const auto& op : ops) {
    if (op.mode >= n_modes_) {
      throw std::out_of_range("mode " + std::to_string(op.mode) +
                              " out of range for " + std::to_string(n_modes_) +
                              " modes");
    }
  }
  terms_.push_back({coeff, std::move(ops)});
}

OrderedProduct normal_order(std::span<const std::uint32_t> indices) {
  OrderedProduct out;
  out.indices.assign(indices.begin(), indices.end());
  auto& v = out.indices;
  // Insertion sort; equal neighbours commute so they are never counted.
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      out.sign = -out.sign;
    }
  }
  std::vector<std::uint32_t> reduced;
  reduced.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    if (i + 1 < v.size() && v[i] == v[i + 1]) {
      i += 2;
    } else {
      reduced.push_back(v[i]);
      ++i;
    }
  }
  v = std::move(reduced);
  return out;
}

namespace {

struct IndexOrder {
  bool operator()(const std::vector<std::uint32_t>& a,
                  const std::vector<std::uint32_t>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

std::vector<MajoranaMonomial> to_majorana(const FermionOperator& f) {
  const Complex i_unit(0.0, 1.0);
  std::map<std::vector<std::uint32_t>, Complex, IndexOrder> combined;
  std::vector<MajoranaMonomial> partial;
  std::vector<MajoranaMonomial> next;
  for (const auto& term : f.terms()) {
    partial.assign(1, MajoranaMonomial{term.coeff, {}});
    for (const auto& op : term.ops) {
      const Complex second = op.dagger ? -0.5 * i_unit : 0.5 * i_unit;
      next.clear();
      next.reserve(partial.size() * 2);
      for (const auto& m : partial) {
        auto even = m;
        even.coeff *= 0.5;
        even.indices.push_back(2 * op.mode);
        next.push_back(std::move(even));
        auto odd = m;
        odd.coeff *= second;
        odd.indices.push_back(2 * op.mode + 1);
        next.push_back(std::move(odd));
      }
      partial.swap(next);
    }
    for (const auto& m : partial) {
      auto ordered = normal_order(m.indices);
      combined[std::move(ordered.indices)] += m.coeff * static_cast<double>(ordered.sign);
    }
  }
  std::vector<MajoranaMonomial> out;
  out.reserve(combined.size());
  for (auto& [indices, coeff] : combined) {
    if (std::abs(coeff) < kMajoranaDropTolerance) continue;
    out.push_back({coeff, indices});
  }
  return out;
}

bool anticommutation_check(std::span<const MajoranaMonomial> monomials) {
  std::set<std::uint32_t> seen;
  for (const auto& m : monomials) seen.insert(m.indices.begin(), m.indices.end());
  for (std::uint32_t i : seen) {
    for (std::uint32_t j : seen) {
      const std::uint32_t ij[] = {i, j};
      const std::uint32_t ji[] = {j, i};
      const auto a = normal_order(ij);
      const auto b = normal_order(ji);
      if (i == j) {
        if (!a.indices.empty() || !b.indices.empty() || a.sign + b.sign != 2) {
          return false;
        }
      } else if (a.indices != b.indices || a.sign + b.sign != 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rsdmap
