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

// rsdmap: build fermionic models, map them to qubits, optimize the mapping
// by randomized subsystem descent and report Pauli-weight metrics.
//
// Exit codes: 0 success, 2 usage error, 3 input-format error,
// 4 numeric-integrity error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsdmap/errors.hpp"
#include "rsdmap/io.hpp"
#include "rsdmap/mappers.hpp"
#include "rsdmap/models.hpp"
#include "rsdmap/optimizer.hpp"
#include "rsdmap/report.hpp"

namespace {

using namespace rsdmap;
using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumeric = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  write_files_atomically({{path, content}});
}

void print_metrics(const QubitHamiltonian& h, std::ostream& out) {
  const Metrics m = compute_metrics(h);
  out << "#PS " << m.terms << "\n"
      << "PW " << m.pw << "\n"
      << "wPW " << format_number(m.wpw) << "\n"
      << "avgPW " << format_number(m.avg_pw) << "\n";
}

ordered_json metrics_object(const QubitHamiltonian& h) {
  const Metrics m = compute_metrics(h);
  return ordered_json{{"terms", m.terms}, {"pw", m.pw}, {"wpw", m.wpw}, {"avg_pw", m.avg_pw}};
}

std::size_t default_threads() {
  if (const char* env = std::getenv("RSDMAP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct BuildArgs {
  std::string model = "chain";
  std::size_t sites = 2;
  std::optional<std::size_t> range;
  double t_hop = 1.0;
  double u_int = 4.0;
  std::string boundary = "open";
  std::string out = "-";
};

int run_build(const BuildArgs& a) {
  LatticeSpec spec;
  spec.kind = parse_model(a.model);
  spec.sites = a.sites;
  spec.range = a.range.value_or(1);
  spec.t_hop = a.t_hop;
  spec.u_int = a.u_int;
  spec.boundary = parse_boundary(a.boundary);
  if (a.range && spec.kind != ModelKind::ChainHopping) {
    throw UsageError("--range only applies to --model chain");
  }
  const FermionOperator f = build_model(spec);

  ordered_json meta{{"model", model_name(spec.kind)},
                    {"sites", spec.sites},
                    {"boundary", boundary_name(spec.boundary)}};
  if (spec.kind == ModelKind::ChainHopping) meta["range"] = spec.range;
  if (spec.kind == ModelKind::GridHopping || spec.kind == ModelKind::Hubbard) {
    meta["site_order"] = "row-major";
  }
  if (spec.kind == ModelKind::Hubbard) {
    meta["t"] = spec.t_hop;
    meta["u"] = spec.u_int;
    meta["spin_order"] = "interleaved (mode = 2*site + spin)";
  }
  emit(a.out, serialize_fermion_operator(f, meta.dump()));
  std::cerr << "modes " << f.n_modes() << ", terms " << f.size() << "\n";
  return 0;
}

struct MapArgs {
  std::string in;
  std::string mapper = "jw";
  std::string out = "-";
};

int run_map(const MapArgs& a) {
  const MapperKind kind = parse_mapper(a.mapper);
  const FermionOperator f = load_fermion_file(a.in);
  const QubitHamiltonian h = map_operator(make_mapping(kind, f.n_modes()), f);
  emit(a.out, serialize_qubit_hamiltonian(h));
  print_metrics(h, a.out == "-" ? std::cerr : std::cout);
  return 0;
}

struct OptimizeArgs {
  std::string in;
  std::string out;
  std::string gates;
  std::string trajectory;
  std::string manifest;
  std::size_t width = 4;
  std::size_t depth = 4;
  std::size_t iters = 1000;
  std::string cost = "pw";
  std::string sampler = "hamming";
  double epsilon = 1e-3;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> patience;
  std::size_t threads = 1;
  bool no_memo = false;
  bool transposition_table = false;
};

CostKind parse_cost(const std::string& name) {
  if (name == "pw") return CostKind::PW;
  if (name == "wpw") return CostKind::WPW;
  throw UsageError("unknown cost '" + name + "' (expected pw or wpw)");
}

int run_optimize(const OptimizeArgs& a, const std::string& command_line) {
  RSDConfig cfg;
  cfg.iterations = a.iters;
  cfg.width = a.width;
  cfg.depth = a.depth;
  cfg.cost = parse_cost(a.cost);
  cfg.sampler = parse_sampler(a.sampler);
  cfg.epsilon = a.epsilon;
  cfg.patience = a.patience;
  cfg.threads = a.threads;
  cfg.memoize = !a.no_memo;
  cfg.transposition_table = a.transposition_table;
  if (a.seed) {
    cfg.seed = *a.seed;
  } else {
    std::random_device rd;
    cfg.seed = (std::uint64_t{rd()} << 32) ^ rd();
    std::cerr << "seed " << cfg.seed << " (drawn from the OS)\n";
  }
  if (cfg.iterations < 1) throw UsageError("--iters must be at least 1");

  const std::string input_text = read_text_file(a.in);
  const QubitHamiltonian h0 = parse_qubit_hamiltonian(input_text);
  validate(cfg, h0.n_qubits());

  const auto start = std::chrono::steady_clock::now();
  const RSDResult result = rsd_optimize(h0, cfg);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string h_text = serialize_qubit_hamiltonian(result.hamiltonian);
  const std::string gate_text = format_gate_log(result.gates);
  const std::string traj_text = format_trajectory_csv(result.trajectory);
  std::size_t accepted = 0;
  for (const auto& r : result.trajectory) accepted += r.accepted ? 1 : 0;

  ordered_json manifest;
  manifest["command"] = command_line;
  manifest["config"] = ordered_json{{"iterations", cfg.iterations},
                                    {"width", cfg.width},
                                    {"depth", cfg.depth},
                                    {"cost", a.cost},
                                    {"sampler", sampler_name(cfg.sampler)},
                                    {"epsilon", cfg.epsilon},
                                    {"patience", cfg.patience ? ordered_json(*cfg.patience)
                                                              : ordered_json(nullptr)},
                                    {"threads", cfg.threads},
                                    {"memoize", cfg.memoize},
                                    {"transposition_table", cfg.transposition_table}};
  manifest["seed"] = cfg.seed;
  manifest["rng"] = "mt19937_64";
  manifest["input"] = ordered_json{{"path", a.in}, {"sha256", sha256_hex(input_text)}};
  manifest["outputs"] = ordered_json{
      {"hamiltonian", {{"path", a.out}, {"sha256", sha256_hex(h_text)}}},
      {"gates", {{"path", a.gates}, {"sha256", sha256_hex(gate_text)}}},
      {"trajectory", {{"path", a.trajectory}, {"sha256", sha256_hex(traj_text)}}}};
  manifest["initial"] = metrics_object(h0);
  manifest["final"] = metrics_object(result.hamiltonian);
  manifest["iterations_run"] = result.trajectory.size();
  manifest["accepted_steps"] = accepted;
  manifest["gate_count"] = result.gates.size();
  manifest["wall_time_s"] = wall;

  std::vector<std::pair<std::filesystem::path, std::string>> files{
      {a.out, h_text}, {a.gates, gate_text}, {a.trajectory, traj_text}};
  if (!a.manifest.empty()) files.emplace_back(a.manifest, manifest.dump(2) + "\n");
  write_files_atomically(files);

  const Metrics before = compute_metrics(h0);
  const Metrics after = compute_metrics(result.hamiltonian);
  std::cout << "iterations " << result.trajectory.size() << ", accepted " << accepted << "\n"
            << "PW " << before.pw << " -> " << after.pw << "\n"
            << "wPW " << format_number(before.wpw) << " -> " << format_number(after.wpw)
            << "\n"
            << "avgPW " << format_number(before.avg_pw) << " -> "
            << format_number(after.avg_pw) << "\n";
  return 0;
}

int run_metrics(const std::string& path, bool as_json) {
  const QubitHamiltonian h = load_qubit_file(path);
  if (as_json) {
    std::cout << metrics_json(compute_metrics(h)) << "\n";
  } else {
    print_metrics(h, std::cout);
  }
  return 0;
}

int run_compare(const std::string& candidate, const std::string& reference) {
  const QubitHamiltonian a = load_qubit_file(candidate);
  const QubitHamiltonian b = load_qubit_file(reference);
  const Comparison c = compare(a, b);
  std::cout << "PR " << format_number(c.pr) << "\n"
            << "PRw " << format_number(c.pr_weighted) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion-to-qubit mapping optimization by randomized subsystem descent"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Write a lattice model as a fermionic interchange file");
  build->add_option("--model", build_args.model, "chain|alltoall|grid|hubbard")->required();
  build->add_option("--sites", build_args.sites, "Chain length or grid side length")->required();
  build->add_option("--range", build_args.range, "Hopping range r (chain only)");
  build->add_option("--t", build_args.t_hop, "Hubbard hopping t");
  build->add_option("--u", build_args.u_int, "Hubbard on-site U");
  build->add_option("--boundary", build_args.boundary, "open|periodic");
  build->add_option("--out,-o", build_args.out, "Output path ('-' for stdout)");

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Map a fermionic interchange file to a qubit Hamiltonian");
  map->add_option("--in,-i", map_args.in, "Fermionic interchange JSON")->required();
  map->add_option("--mapper", map_args.mapper, "jw|bk|ternary");
  map->add_option("--out,-o", map_args.out, "Output path ('-' for stdout)");

  OptimizeArgs opt_args;
  auto* optimize = app.add_subcommand("optimize", "Reduce Pauli weight by randomized subsystem descent");
  optimize->add_option("--in,-i", opt_args.in, "Qubit Hamiltonian JSON")->required();
  optimize->add_option("--out,-o", opt_args.out, "Optimized Hamiltonian JSON")->required();
  optimize->add_option("--gates", opt_args.gates, "Gate log output")->required();
  optimize->add_option("--trajectory", opt_args.trajectory, "Trajectory CSV output")->required();
  optimize->add_option("--manifest", opt_args.manifest, "Run manifest JSON output");
  optimize->add_option("--width", opt_args.width, "Subsystem width k");
  optimize->add_option("--depth", opt_args.depth, "Maximum gates per subsystem solve");
  optimize->add_option("--iters", opt_args.iters, "Iterations T");
  optimize->add_option("--cost", opt_args.cost, "pw|wpw");
  optimize->add_option("--sampler", opt_args.sampler, "hamming|uniform");
  optimize->add_option("--epsilon", opt_args.epsilon, "Hamming sampler epsilon");
  optimize->add_option("--seed", opt_args.seed, "RNG seed (drawn from the OS if absent)");
  optimize->add_option("--patience", opt_args.patience, "Stop after this many rejections in a row");
  opt_args.threads = default_threads();
  optimize->add_option("--threads", opt_args.threads,
                       "Solver worker threads (default $RSDMAP_THREADS or 1)");
  optimize->add_flag("--no-memo", opt_args.no_memo, "Disable reuse of solved subsystem views");
  optimize->add_flag("--transposition-table", opt_args.transposition_table,
                     "Deduplicate solver states within a search");

  std::string metrics_file;
  bool metrics_as_json = false;
  auto* metrics = app.add_subcommand("metrics", "Print #PS, PW, wPW and average PW");
  metrics->add_option("file", metrics_file, "Qubit Hamiltonian JSON")->required();
  metrics->add_flag("--json", metrics_as_json, "Print a JSON object");

  std::string compare_a, compare_b;
  auto* compare_cmd = app.add_subcommand("compare", "Percentage reduction of A relative to B");
  compare_cmd->add_option("candidate", compare_a, "Qubit Hamiltonian A")->required();
  compare_cmd->add_option("reference", compare_b, "Qubit Hamiltonian B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  try {
    if (*build) return run_build(build_args);
    if (*map) return run_map(map_args);
    if (*optimize) return run_optimize(opt_args, command_line);
    if (*metrics) return run_metrics(metrics_file, metrics_as_json);
    if (*compare_cmd) return run_compare(compare_a, compare_b);
  } catch (const NumericIntegrityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const InputFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    // Invalid parameters and unwritable output paths.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
