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

#include "rsdmap/subsystem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_map>

namespace rsdmap {

namespace {

int local_letter(std::uint32_t x, std::uint32_t z, int q) {
  const bool xb = (x >> q) & 1u, zb = (z >> q) & 1u;
  if (xb) return zb ? 2 : 1;
  return zb ? 3 : 0;
}

bool local_less(const ViewEntry& a, const ViewEntry& b) {
  const std::uint32_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  const int q = std::countr_zero(diff);
  return local_letter(a.x, a.z, q) < local_letter(b.x, b.z, q);
}

int local_weight(std::uint32_t x, std::uint32_t z) { return std::popcount(x | z); }

std::uint32_t support_of(const CliffordGate& g) {
  std::uint32_t s = std::uint32_t{1} << g.a;
  if (g.kind == GateKind::CNOT) s |= std::uint32_t{1} << g.b;
  return s;
}

// Whether the two (distinct) gates commute as unitaries.
bool gates_commute(const CliffordGate& a, const CliffordGate& b) {
  if ((support_of(a) & support_of(b)) == 0) return true;
  if (a.kind == GateKind::CNOT && b.kind == GateKind::CNOT) {
    return (a.a == b.a && a.b != b.b) || (a.b == b.b && a.a != b.a);
  }
  // S is diagonal, so it commutes with a CNOT controlled on its qubit.
  if (a.kind == GateKind::S && b.kind == GateKind::CNOT) return a.a == b.a;
  if (b.kind == GateKind::S && a.kind == GateKind::CNOT) return b.a == a.a;
  return false;
}

void apply_local(const CliffordGate& g, std::uint32_t& x, std::uint32_t& z) {
  switch (g.kind) {
    case GateKind::H: {
      const std::uint32_t m = std::uint32_t{1} << g.a;
      const std::uint32_t xb = x & m, zb = z & m;
      x = (x & ~m) | zb;
      z = (z & ~m) | xb;
      break;
    }
    case GateKind::S:
      z ^= x & (std::uint32_t{1} << g.a);
      break;
    case GateKind::CNOT:
      x ^= ((x >> g.a) & 1u) << g.b;
      z ^= ((z >> g.b) & 1u) << g.a;
      break;
  }
}

struct StateHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : v) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Alphabet {
  std::vector<CliffordGate> gates;
  std::vector<std::uint8_t> commute;  // gates.size()^2, row = previous gate

  explicit Alphabet(std::size_t width) : gates(solver_alphabet(width)) {
    const std::size_t m = gates.size();
    commute.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        commute[i * m + j] = i != j && gates_commute(gates[i], gates[j]);
      }
    }
  }

  // A sequence with `cur` right after `prev` has an equivalent sequence
  // that is shorter or earlier in enumeration order.
  bool redundant(int prev, int cur, int s_run) const {
    if (prev < 0) return false;
    if (prev == cur) {
      return gates[static_cast<std::size_t>(cur)].kind != GateKind::S || s_run >= 3;
    }
    return cur < prev && commute[static_cast<std::size_t>(prev) * gates.size() +
                                 static_cast<std::size_t>(cur)];
  }
};

template <typename W>
struct Best {
  W cost{};
  std::size_t len = 0;
  std::vector<int> seq;

  bool improved_by(W c, std::size_t l) const { return c < cost || (c == cost && l < len); }
};

template <typename W>
class Searcher {
 public:
  Searcher(const Alphabet& alphabet, std::span<const ViewEntry> entries, CostKind kind,
           std::size_t depth, bool use_tt)
      : alphabet_(alphabet), depth_(depth), use_tt_(use_tt) {
    for (const auto& e : entries) {
      if ((e.x | e.z) == 0) continue;  // identity stays identity
      xs0_.push_back(e.x);
      zs0_.push_back(e.z);
      if constexpr (std::is_same_v<W, std::int64_t>) {
        w_.push_back(e.count);
      } else {
        w_.push_back(kind == CostKind::WPW ? e.abs_coeff_sum : static_cast<double>(e.count));
      }
    }
    n_ = w_.size();
    xs_.assign((depth_ + 1) * n_, 0);
    zs_.assign((depth_ + 1) * n_, 0);
    std::copy(xs0_.begin(), xs0_.end(), xs_.begin());
    std::copy(zs0_.begin(), zs0_.end(), zs_.begin());
    seq_.assign(depth_, -1);
    root_cost_ = eval(0);
  }

  W root_cost() const { return root_cost_; }
  std::uint64_t nodes() const { return nodes_; }

  // Explores every sequence starting with `first`, updating `best`.
  void search_branch(int first, Best<W>& best) {
    best_ = &best;
    if (depth_ == 0) return;
    if (tt_.empty() && use_tt_) tt_[key(0)] = 0;
    step(0, -1, 0, first);
  }

 private:
  W eval(std::size_t level) const {
    const std::uint32_t* xs = &xs_[level * n_];
    const std::uint32_t* zs = &zs_[level * n_];
    W total{};
    for (std::size_t e = 0; e < n_; ++e) total += w_[e] * static_cast<W>(local_weight(xs[e], zs[e]));
    return total;
  }

  // Each CNOT moves any word's weight by at most one and single-qubit
  // gates keep it, while a non-identity word never drops below weight 1.
  W lower_bound(std::size_t level, int remaining) const {
    const std::uint32_t* xs = &xs_[level * n_];
    const std::uint32_t* zs = &zs_[level * n_];
    W total{};
    for (std::size_t e = 0; e < n_; ++e) {
      total += w_[e] * static_cast<W>(std::max(local_weight(xs[e], zs[e]) - remaining, 1));
    }
    return total;
  }

  bool bound_prunes(std::size_t level) const {
    const W lb = lower_bound(level, static_cast<int>(depth_ - level));
    const Best<W>& b = *best_;
    if constexpr (std::is_same_v<W, std::int64_t>) {
      return lb > b.cost || (lb == b.cost && level + 1 >= b.len);
    } else {
      return lb > b.cost + 1e-9 * std::max(1.0, std::abs(b.cost));
    }
  }

  std::vector<std::uint64_t> key(std::size_t level) const {
    std::vector<std::uint64_t> k(n_);
    for (std::size_t e = 0; e < n_; ++e) {
      k[e] = (std::uint64_t{xs_[level * n_ + e]} << 32) | zs_[level * n_ + e];
    }
    return k;
  }

  // Applies gate `g` on top of the state at `level` and recurses.
  void step(std::size_t level, int prev, int s_run, int g) {
    const CliffordGate& gate = alphabet_.gates[static_cast<std::size_t>(g)];
    const std::size_t next = level + 1;
    const std::uint32_t* sx = &xs_[level * n_];
    const std::uint32_t* sz = &zs_[level * n_];
    std::uint32_t* dx = &xs_[next * n_];
    std::uint32_t* dz = &zs_[next * n_];
    for (std::size_t e = 0; e < n_; ++e) {
      dx[e] = sx[e];
      dz[e] = sz[e];
      apply_local(gate, dx[e], dz[e]);
    }
    ++nodes_;
    seq_[level] = g;
    const W c = eval(next);
    if (best_->improved_by(c, next)) {
      best_->cost = c;
      best_->len = next;
      best_->seq.assign(seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(next));
    }
    if (next >= depth_ || bound_prunes(next)) return;
    if (use_tt_) {
      auto [it, inserted] = tt_.try_emplace(key(next), next);
      if (!inserted) {
        if (it->second <= next) return;
        it->second = next;
      }
    }
    const int run = (prev == g) ? s_run + 1 : 1;
    const int m = static_cast<int>(alphabet_.gates.size());
    for (int h = 0; h < m; ++h) {
      if (alphabet_.redundant(g, h, run)) continue;
      step(next, g, run, h);
    }
  }

  const Alphabet& alphabet_;
  std::size_t depth_;
  bool use_tt_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> xs0_, zs0_;
  std::vector<W> w_;
  std::vector<std::uint32_t> xs_, zs_;
  std::vector<int> seq_;
  W root_cost_{};
  Best<W>* best_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, StateHash> tt_;
};

template <typename W>
SolveResult run_search(const SubsystemView& view, const SolverConfig& cfg) {
  const Alphabet alphabet(view.width());
  const int m = static_cast<int>(alphabet.gates.size());
  Searcher<W> root(alphabet, view.entries(), cfg.cost, cfg.depth, cfg.transposition_table);
  const W start = root.root_cost();

  Best<W> best{start, 0, {}};
  std::uint64_t nodes = 0;
  const std::size_t threads =
      std::min<std::size_t>(std::max<std::size_t>(cfg.threads, 1), static_cast<std::size_t>(m));
  if (threads <= 1 || cfg.depth == 0) {
    for (int g = 0; g < m && cfg.depth > 0; ++g) root.search_branch(g, best);
    nodes = root.nodes();
  } else {
    // Branch-local searches; the ordered reduction below reproduces the
    // sequential tie-break exactly.
    std::vector<Best<W>> per_branch(static_cast<std::size_t>(m), Best<W>{start, 0, {}});
    std::vector<std::uint64_t> per_worker_nodes(threads, 0);
    {
      std::vector<std::jthread> workers;
      for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          for (int g = static_cast<int>(t); g < m; g += static_cast<int>(threads)) {
            Searcher<W> s(alphabet, view.entries(), cfg.cost, cfg.depth,
                          cfg.transposition_table);
            s.search_branch(g, per_branch[static_cast<std::size_t>(g)]);
            per_worker_nodes[t] += s.nodes();
          }
        });
      }
    }
    for (const auto& b : per_branch) {
      if (best.improved_by(b.cost, b.len)) best = b;
    }
    for (auto n : per_worker_nodes) nodes += n;
  }

  SolveResult out;
  out.cost_before = static_cast<double>(start);
  out.cost_after = static_cast<double>(best.cost);
  out.nodes = nodes;
  for (int g : best.seq) out.gates.push_back(alphabet.gates[static_cast<std::size_t>(g)]);
  return out;
}

}  // namespace

std::int64_t SubsystemView::total_count() const {
  std::int64_t total = 0;
  for (const auto& e : entries_) total += e.count;
  return total;
}

double SubsystemView::cost(CostKind kind) const {
  if (kind == CostKind::PW) {
    std::int64_t total = 0;
    for (const auto& e : entries_) total += e.count * local_weight(e.x, e.z);
    return static_cast<double>(total);
  }
  double total = 0.0;
  for (const auto& e : entries_) total += e.abs_coeff_sum * local_weight(e.x, e.z);
  return total;
}

SubsystemView restrict_to(const QubitHamiltonian& h, std::span<const std::size_t> indices) {
  if (indices.size() > kMaxViewWidth) {
    throw std::invalid_argument("subsystem wider than " + std::to_string(kMaxViewWidth));
  }
  std::vector<bool> used(h.n_qubits(), false);
  for (std::size_t q : indices) {
    if (q >= h.n_qubits()) {
      throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                              std::to_string(h.n_qubits()) + " qubits");
    }
    if (used[q]) throw std::invalid_argument("duplicate qubit index " + std::to_string(q));
    used[q] = true;
  }

  SubsystemView view;
  view.width_ = indices.size();
  std::unordered_map<std::uint64_t, std::uint32_t> slot;
  std::vector<ViewEntry> raw;
  std::vector<std::uint32_t> raw_links;
  raw_links.reserve(h.size());
  for (const auto& t : h.terms()) {
    std::uint32_t x = 0, z = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      x |= static_cast<std::uint32_t>(t.pauli.x(indices[i])) << i;
      z |= static_cast<std::uint32_t>(t.pauli.z(indices[i])) << i;
    }
    const std::uint64_t k = (std::uint64_t{x} << 32) | z;
    auto [it, inserted] = slot.try_emplace(k, static_cast<std::uint32_t>(raw.size()));
    if (inserted) raw.push_back({x, z, 0, 0.0});
    auto& e = raw[it->second];
    e.count += 1;
    e.abs_coeff_sum += std::abs(t.coeff);
    raw_links.push_back(it->second);
  }

  std::vector<std::uint32_t> order(raw.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return local_less(raw[a], raw[b]); });
  std::vector<std::uint32_t> rank(raw.size());
  view.entries_.reserve(raw.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    view.entries_.push_back(raw[order[r]]);
  }
  view.parent_links_.reserve(raw_links.size());
  for (auto link : raw_links) view.parent_links_.push_back(rank[link]);
  return view;
}

void validate(const SolverConfig& cfg) {
  if (cfg.width < 1 || cfg.width > kMaxSolverWidth) {
    throw std::invalid_argument("solver width must be in [1, " +
                                std::to_string(kMaxSolverWidth) + "]");
  }
  if (cfg.depth > kMaxSolverDepth) {
    throw std::invalid_argument("solver depth must be at most " +
                                std::to_string(kMaxSolverDepth));
  }
}

std::vector<CliffordGate> solver_alphabet(std::size_t width) {
  std::vector<CliffordGate> gates;
  const auto k = static_cast<std::uint32_t>(width);
  for (std::uint32_t q = 0; q < k; ++q) gates.push_back(CliffordGate::h(q));
  for (std::uint32_t q = 0; q < k; ++q) gates.push_back(CliffordGate::s(q));
  for (std::uint32_t c = 0; c < k; ++c) {
    for (std::uint32_t t = 0; t < k; ++t) {
      if (c != t) gates.push_back(CliffordGate::cnot(c, t));
    }
  }
  return gates;
}

SolveResult dfs_search(const SubsystemView& view, const SolverConfig& cfg) {
  if (view.width() > kMaxSolverWidth) {
    throw std::invalid_argument("view wider than the solver cap " +
                                std::to_string(kMaxSolverWidth));
  }
  if (cfg.depth > kMaxSolverDepth) {
    throw std::invalid_argument("solver depth must be at most " +
                                std::to_string(kMaxSolverDepth));
  }
  if (cfg.cost == CostKind::PW) return run_search<std::int64_t>(view, cfg);
  return run_search<double>(view, cfg);
}

GateSequence to_global(std::span<const std::size_t> indices, const GateSequence& local) {
  GateSequence out;
  out.reserve(local.size());
  for (const auto& g : local) {
    if (g.max_qubit() >= indices.size()) {
      throw std::out_of_range("local gate '" + g.str() + "' outside a " +
                              std::to_string(indices.size()) + "-qubit subsystem");
    }
    CliffordGate mapped = g;
    mapped.a = static_cast<std::uint32_t>(indices[g.a]);
    if (g.kind == GateKind::CNOT) mapped.b = static_cast<std::uint32_t>(indices[g.b]);
    out.push_back(mapped);
  }
  return out;
}

QubitHamiltonian apply_to_global(const QubitHamiltonian& h,
                                 std::span<const std::size_t> indices,
                                 const GateSequence& local) {
  return conjugate_hamiltonian(to_global(indices, local), h);
}

}  // namespace rsdmap
