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

#include "rsdmap/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "rsdmap/errors.hpp"

namespace rsdmap {

namespace {

constexpr std::size_t limbs_for(std::size_t n) { return (n + 63) / 64; }

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli strings have different qubit counts: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
}

}  // namespace

char to_char(Pauli p) {
  constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits),
      xs_(limbs_for(n_qubits), 0),
      zs_(limbs_for(n_qubits), 0) {}

PauliString PauliString::from_string(std::string_view letters) {
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.set(q, Pauli::X);
        break;
      case 'Y':
        p.set(q, Pauli::Y);
        break;
      case 'Z':
        p.set(q, Pauli::Z);
        break;
      default:
        throw InputFormatError("invalid Pauli letter '" +
                               std::string(1, letters[q]) + "' in \"" +
                               std::string(letters) + "\"");
    }
  }
  return p;
}

Pauli PauliString::letter(std::size_t q) const {
  const bool xb = x(q);
  const bool zb = z(q);
  if (xb) return zb ? Pauli::Y : Pauli::X;
  return zb ? Pauli::Z : Pauli::I;
}

void PauliString::set_bits(std::size_t q, bool xb, bool zb) {
  const std::uint64_t mask = std::uint64_t{1} << (q & 63);
  auto& xl = xs_[q >> 6];
  auto& zl = zs_[q >> 6];
  xl = xb ? (xl | mask) : (xl & ~mask);
  zl = zb ? (zl | mask) : (zl & ~mask);
}

void PauliString::set(std::size_t q, Pauli p) {
  set_bits(q, p == Pauli::X || p == Pauli::Y, p == Pauli::Y || p == Pauli::Z);
}

bool PauliString::is_identity() const {
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (xs_[i] | zs_[i]) return false;
  }
  return true;
}

std::string PauliString::str() const {
  std::string out(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) out[q] = to_char(letter(q));
  return out;
}

bool lex_less(const PauliString& a, const PauliString& b) {
  const auto ax = a.x_limbs(), az = a.z_limbs();
  const auto bx = b.x_limbs(), bz = b.z_limbs();
  const std::size_t limbs = std::min(ax.size(), bx.size());
  for (std::size_t i = 0; i < limbs; ++i) {
    const std::uint64_t diff = (ax[i] ^ bx[i]) | (az[i] ^ bz[i]);
    if (diff == 0) continue;
    const std::size_t q = i * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    return a.letter(q) < b.letter(q);
  }
  return a.n_qubits() < b.n_qubits();
}

std::size_t PauliStringHash::operator()(const PauliString& p) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ p.n_qubits();
  const auto xs = p.x_limbs();
  const auto zs = p.z_limbs();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    h ^= xs[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= zs[i] * 0xbf58476d1ce4e5b9ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::size_t weight(const PauliString& p) {
  std::size_t w = 0;
  const auto xs = p.x_limbs();
  const auto zs = p.z_limbs();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(xs[i] | zs[i]));
  }
  return w;
}

PhasedPauli pauli_product(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  PhasedPauli out{PauliString(a.n_qubits()), 0};
  const auto ax = a.x_limbs(), az = a.z_limbs();
  const auto bx = b.x_limbs(), bz = b.z_limbs();
  auto ox = out.pauli.x_limbs();
  auto oz = out.pauli.z_limbs();
  int phase = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const std::uint64_t x1 = ax[i], z1 = az[i], x2 = bx[i], z2 = bz[i];
    ox[i] = x1 ^ x2;
    oz[i] = z1 ^ z2;
    // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
    const std::uint64_t anti = (x1 & z2) ^ (z1 & x2);
    const std::uint64_t cyclic = (x1 & ~z1 & x2 & z2) |   // X then Y
                                 (x1 & z1 & ~x2 & z2) |   // Y then Z
                                 (~x1 & z1 & x2 & ~z2);   // Z then X
    const int pos = std::popcount(cyclic);
    const int neg = std::popcount(anti) - pos;
    phase += pos - neg;
  }
  out.phase = static_cast<std::uint8_t>(((phase % 4) + 4) % 4);
  return out;
}

PhasedPauli pauli_product(const PhasedPauli& a, const PhasedPauli& b) {
  PhasedPauli out = pauli_product(a.pauli, b.pauli);
  out.phase = static_cast<std::uint8_t>((out.phase + a.phase + b.phase) & 3);
  return out;
}

bool anticommutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const auto ax = a.x_limbs(), az = a.z_limbs();
  const auto bx = b.x_limbs(), bz = b.z_limbs();
  int parity = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    parity ^= std::popcount((ax[i] & bz[i]) ^ (az[i] & bx[i])) & 1;
  }
  return parity != 0;
}

QubitHamiltonian QubitHamiltonian::from_terms(std::size_t n_qubits,
                                              std::vector<PauliTerm> terms) {
  for (const auto& t : terms) {
    if (t.pauli.n_qubits() != n_qubits) {
      throw std::invalid_argument("term " + t.pauli.str() + " does not act on " +
                                  std::to_string(n_qubits) + " qubits");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return lex_less(a.pauli, b.pauli);
  });
  QubitHamiltonian h(n_qubits);
  h.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!h.terms_.empty() && h.terms_.back().pauli == t.pauli) {
      h.terms_.back().coeff += t.coeff;
    } else {
      h.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(h.terms_, [](const PauliTerm& t) {
    return !(std::abs(t.coeff) >= kPruneTolerance);
  });
  return h;
}

QubitHamiltonian QubitHamiltonian::from_unique_terms(
    std::size_t n_qubits, std::vector<PauliTerm> terms) {
  const std::size_t before = terms.size();
  std::size_t pruned = 0;
  for (const auto& t : terms) {
    if (!(std::abs(t.coeff) >= kPruneTolerance)) ++pruned;
  }
  QubitHamiltonian h = from_terms(n_qubits, std::move(terms));
  if (h.size() + pruned != before) {
    throw std::logic_error("duplicate Pauli words in a term set expected to be distinct");
  }
  return h;
}

std::optional<double> QubitHamiltonian::coefficient(const PauliString& p) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), p,
      [](const PauliTerm& t, const PauliString& key) { return lex_less(t.pauli, key); });
  if (it != terms_.end() && it->pauli == p) return it->coeff;
  return std::nullopt;
}

std::size_t total_pauli_weight(const QubitHamiltonian& h) {
  std::size_t total = 0;
  for (const auto& t : h.terms()) total += weight(t.pauli);
  return total;
}

double weighted_pauli_weight(const QubitHamiltonian& h) {
  double total = 0.0;
  for (const auto& t : h.terms()) {
    total += std::abs(t.coeff) * static_cast<double>(weight(t.pauli));
  }
  return total;
}

double average_pauli_weight(const QubitHamiltonian& h) {
  if (h.empty()) return 0.0;
  return static_cast<double>(total_pauli_weight(h)) / static_cast<double>(h.size());
}

double cost(const QubitHamiltonian& h, CostKind kind) {
  return kind == CostKind::PW ? static_cast<double>(total_pauli_weight(h))
                              : weighted_pauli_weight(h);
}

std::vector<std::size_t> hamming_profile(const QubitHamiltonian& h) {
  std::vector<std::size_t> profile(h.n_qubits(), 0);
  for (const auto& t : h.terms()) {
    const auto xs = t.pauli.x_limbs();
    const auto zs = t.pauli.z_limbs();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::uint64_t support = xs[i] | zs[i];
      while (support) {
        profile[i * 64 + static_cast<std::size_t>(std::countr_zero(support))] += 1;
        support &= support - 1;
      }
    }
  }
  return profile;
}

}  // namespace rsdmap
