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

#include <filesystem>
#include <string>
#include <string_view>

#include "rsdmap/clifford.hpp"
#include "rsdmap/fermion.hpp"
#include "rsdmap/pauli.hpp"

// File formats shared by the CLI and the tests. Parsing failures throw
// InputFormatError.
//
//   qubit Hamiltonian: {"n_qubits": n, "terms": [{"c": 0.5, "p": "XIZ"}, ...]}
//   fermion operator:  {"n_modes": n, "terms": [{"re": 1, "im": 0,
//                       "ops": [[mode, dagger], ...]}, ...]}
//   gate log:          see format_gate_log

namespace rsdmap {

std::string serialize_qubit_hamiltonian(const QubitHamiltonian& h);
QubitHamiltonian parse_qubit_hamiltonian(std::string_view text);

/// `meta_json`, when non-empty, must be a JSON object; it is stored under
/// "meta" and ignored on load.
std::string serialize_fermion_operator(const FermionOperator& f,
                                       std::string_view meta_json = {});
FermionOperator parse_fermion_operator(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
QubitHamiltonian load_qubit_file(const std::filesystem::path& path);
FermionOperator load_fermion_file(const std::filesystem::path& path);

/// Writes every (path, content) pair to a sibling temporary file first and
/// renames them into place only after all writes succeeded.
void write_files_atomically(
    const std::vector<std::pair<std::filesystem::path, std::string>>& files);

}  // namespace rsdmap
