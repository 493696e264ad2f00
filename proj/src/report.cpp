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

#include "rsdmap/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <stdexcept>

#include "rsdmap/errors.hpp"
#include "rsdmap/optimizer.hpp"

namespace rsdmap {

Metrics compute_metrics(const QubitHamiltonian& h) {
  return {h.size(), total_pauli_weight(h), weighted_pauli_weight(h), average_pauli_weight(h)};
}

Comparison compare(const QubitHamiltonian& candidate, const QubitHamiltonian& reference) {
  if (candidate.n_qubits() != reference.n_qubits()) {
    throw InputFormatError("cannot compare Hamiltonians on " +
                           std::to_string(candidate.n_qubits()) + " and " +
                           std::to_string(reference.n_qubits()) + " qubits");
  }
  return {percentage_reduction(static_cast<double>(total_pauli_weight(candidate)),
                               static_cast<double>(total_pauli_weight(reference))),
          percentage_reduction(weighted_pauli_weight(candidate),
                               weighted_pauli_weight(reference))};
}

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string metrics_json(const Metrics& m) {
  return "{\"terms\": " + std::to_string(m.terms) + ", \"pw\": " + std::to_string(m.pw) +
         ", \"wpw\": " + format_number(m.wpw) + ", \"avg_pw\": " + format_number(m.avg_pw) +
         "}";
}

}  // namespace rsdmap
