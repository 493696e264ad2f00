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

#include "rsdmap/clifford.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "rsdmap/errors.hpp"

namespace rsdmap {

std::uint32_t CliffordGate::max_qubit() const {
  return kind == GateKind::CNOT ? std::max(a, b) : a;
}

std::string CliffordGate::str() const {
  switch (kind) {
    case GateKind::H:
      return "H " + std::to_string(a);
    case GateKind::S:
      return "S " + std::to_string(a);
    case GateKind::CNOT:
      return "CNOT " + std::to_string(a) + " " + std::to_string(b);
  }
  return {};
}

void validate_gate(const CliffordGate& g, std::size_t n_qubits) {
  if (g.max_qubit() >= n_qubits) {
    throw std::out_of_range("gate '" + g.str() + "' does not fit " +
                            std::to_string(n_qubits) + " qubits");
  }
  if (g.kind == GateKind::CNOT && g.a == g.b) {
    throw std::invalid_argument("CNOT control and target coincide: " + g.str());
  }
}

bool conjugate_in_place(const CliffordGate& g, PauliString& p) {
  switch (g.kind) {
    case GateKind::H: {
      // X <-> Z, Y -> -Y
      const bool x = p.x(g.a), z = p.z(g.a);
      p.set_bits(g.a, z, x);
      return x && z;
    }
    case GateKind::S: {
      // X -> -Y, Y -> X, Z -> Z
      const bool x = p.x(g.a), z = p.z(g.a);
      p.set_bits(g.a, x, z != x);
      return x && !z;
    }
    case GateKind::CNOT: {
      const bool xc = p.x(g.a), zc = p.z(g.a);
      const bool xt = p.x(g.b), zt = p.z(g.b);
      p.set_bits(g.a, xc, zc != zt);
      p.set_bits(g.b, xt != xc, zt);
      return xc && zt && (xt == zc);
    }
  }
  return false;
}

SignedPauli conjugate_pauli(const CliffordGate& g, const PauliString& p) {
  validate_gate(g, p.n_qubits());
  SignedPauli out{p, 1};
  if (conjugate_in_place(g, out.pauli)) out.sign = -1;
  return out;
}

QubitHamiltonian conjugate_hamiltonian(const GateSequence& seq,
                                       const QubitHamiltonian& h) {
  for (const auto& g : seq) validate_gate(g, h.n_qubits());
  if (seq.empty()) return h;
  std::vector<PauliTerm> terms(h.terms().begin(), h.terms().end());
  for (auto& t : terms) {
    bool flip = false;
    for (const auto& g : seq) flip ^= conjugate_in_place(g, t.pauli);
    if (flip) t.coeff = -t.coeff;
  }
  return QubitHamiltonian::from_unique_terms(h.n_qubits(), std::move(terms));
}

GateSequence inverse(const GateSequence& seq) {
  GateSequence out;
  out.reserve(seq.size() * 3);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->kind == GateKind::S) {
      out.insert(out.end(), 3, *it);
    } else {
      out.push_back(*it);
    }
  }
  return out;
}

std::string format_gate_log(const GateSequence& seq) {
  std::string out;
  for (const auto& g : seq) {
    out += g.str();
    out += '\n';
  }
  return out;
}

GateSequence parse_gate_log(std::istream& in) {
  GateSequence seq;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    auto bad = [&] {
      return InputFormatError("gate log line " + std::to_string(line_no) +
                              ": cannot parse \"" + line + "\"");
    };
    std::int64_t a = -1, b = -1;
    if (name == "H" || name == "S") {
      if (!(ls >> a) || a < 0) throw bad();
      seq.push_back(name == "H" ? CliffordGate::h(static_cast<std::uint32_t>(a))
                                : CliffordGate::s(static_cast<std::uint32_t>(a)));
    } else if (name == "CNOT") {
      if (!(ls >> a >> b) || a < 0 || b < 0 || a == b) throw bad();
      seq.push_back(CliffordGate::cnot(static_cast<std::uint32_t>(a),
                                       static_cast<std::uint32_t>(b)));
    } else {
      throw bad();
    }
    std::string trailing;
    if (ls >> trailing) throw bad();
  }
  return seq;
}

}  // namespace rsdmap
