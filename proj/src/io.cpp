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

#include "rsdmap/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "rsdmap/errors.hpp"

namespace rsdmap {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputFormatError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw InputFormatError(std::string("missing field \"") + name + "\"");
  }
  return obj.at(name);
}

std::size_t positive_count(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw InputFormatError(std::string("\"") + name + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

double finite_number(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number()) throw InputFormatError(std::string("\"") + name + "\" must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputFormatError(std::string("\"") + name + "\" is not finite");
  return d;
}

std::string number_text(double d) { return json(d).dump(); }

}  // namespace

std::string serialize_qubit_hamiltonian(const QubitHamiltonian& h) {
  std::string out = "{\"n_qubits\": " + std::to_string(h.n_qubits()) + ", \"terms\": [";
  bool first = true;
  for (const auto& t : h.terms()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"c\": " + number_text(t.coeff) + ", \"p\": \"" + t.pauli.str() + "\"}";
  }
  out += first ? "]}\n" : "\n]}\n";
  return out;
}

QubitHamiltonian parse_qubit_hamiltonian(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t n = positive_count(doc, "n_qubits");
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) throw InputFormatError("\"terms\" must be an array");
  std::vector<PauliTerm> parsed;
  parsed.reserve(terms.size());
  std::set<std::string> seen;
  for (const auto& t : terms) {
    const json& p = field(t, "p");
    if (!p.is_string()) throw InputFormatError("\"p\" must be a string");
    const auto letters = p.get<std::string>();
    if (letters.size() != n) {
      throw InputFormatError("Pauli word \"" + letters + "\" does not have " +
                             std::to_string(n) + " letters");
    }
    if (!seen.insert(letters).second) {
      throw InputFormatError("duplicate Pauli word \"" + letters + "\"");
    }
    parsed.push_back({PauliString::from_string(letters), finite_number(t, "c")});
  }
  return QubitHamiltonian::from_terms(n, std::move(parsed));
}

std::string serialize_fermion_operator(const FermionOperator& f, std::string_view meta_json) {
  std::string out = "{\"n_modes\": " + std::to_string(f.n_modes());
  if (!meta_json.empty()) {
    const json meta = parse_json(meta_json);
    if (!meta.is_object()) throw std::invalid_argument("metadata must be a JSON object");
    out += ", \"meta\": " + meta.dump();
  }
  out += ", \"terms\": [";
  bool first = true;
  for (const auto& t : f.terms()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"re\": " + number_text(t.coeff.real()) +
           ", \"im\": " + number_text(t.coeff.imag()) + ", \"ops\": [";
    for (std::size_t k = 0; k < t.ops.size(); ++k) {
      if (k) out += ", ";
      out += "[" + std::to_string(t.ops[k].mode) + ", " + (t.ops[k].dagger ? "1" : "0") + "]";
    }
    out += "]}";
  }
  out += first ? "]}\n" : "\n]}\n";
  return out;
}

FermionOperator parse_fermion_operator(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t n = positive_count(doc, "n_modes");
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) throw InputFormatError("\"terms\" must be an array");
  FermionOperator f(n);
  for (const auto& t : terms) {
    const Complex coeff(finite_number(t, "re"), finite_number(t, "im"));
    const json& ops = field(t, "ops");
    if (!ops.is_array()) throw InputFormatError("\"ops\" must be an array");
    std::vector<LadderOp> ladder;
    ladder.reserve(ops.size());
    for (const auto& op : ops) {
      if (!op.is_array() || op.size() != 2 || !op[0].is_number_integer() ||
          !op[1].is_number_integer()) {
        throw InputFormatError("each op must be [mode, dagger] with integer entries");
      }
      const auto mode = op[0].get<std::int64_t>();
      const auto dagger = op[1].get<std::int64_t>();
      if (mode < 0 || static_cast<std::size_t>(mode) >= n) {
        throw InputFormatError("mode index " + std::to_string(mode) + " out of range for " +
                               std::to_string(n) + " modes");
      }
      if (dagger != 0 && dagger != 1) throw InputFormatError("dagger flag must be 0 or 1");
      ladder.push_back({static_cast<std::uint32_t>(mode), dagger == 1});
    }
    f.add_term(coeff, std::move(ladder));
  }
  return f;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QubitHamiltonian load_qubit_file(const std::filesystem::path& path) {
  return parse_qubit_hamiltonian(read_text_file(path));
}

FermionOperator load_fermion_file(const std::filesystem::path& path) {
  return parse_fermion_operator(read_text_file(path));
}

void write_files_atomically(
    const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
  std::vector<std::filesystem::path> temps;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& t : temps) std::filesystem::remove(t, ec);
  };
  for (const auto& [path, content] : files) {
    auto tmp = path;
    tmp += ".tmp";
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      cleanup();
      throw std::filesystem::filesystem_error(
          "cannot write", tmp, std::make_error_code(std::errc::permission_denied));
    }
    temps.push_back(tmp);
    out << content;
    out.close();
    if (!out) {
      cleanup();
      throw std::filesystem::filesystem_error("write failed", tmp,
                                              std::make_error_code(std::errc::io_error));
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::filesystem::rename(temps[i], files[i].first);
  }
}

}  // namespace rsdmap
