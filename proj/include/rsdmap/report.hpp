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

#include "rsdmap/pauli.hpp"

namespace rsdmap {

struct Metrics {
  std::size_t terms = 0;
  std::size_t pw = 0;
  double wpw = 0.0;
  double avg_pw = 0.0;  // pw / terms, 0 when empty
};

Metrics compute_metrics(const QubitHamiltonian& h);

/// Percentage reductions of `candidate` relative to `reference`:
/// 1 - PW(candidate)/PW(reference), and the same for wPW.
struct Comparison {
  double pr = 0.0;
  double pr_weighted = 0.0;
};

/// Throws InputFormatError when the qubit counts differ and
/// std::invalid_argument when a reference weight is zero.
Comparison compare(const QubitHamiltonian& candidate, const QubitHamiltonian& reference);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view data);

/// {"terms": .., "pw": .., "wpw": .., "avg_pw": ..}
std::string metrics_json(const Metrics& m);

}  // namespace rsdmap
