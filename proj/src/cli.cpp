// Copyright 2026 The bcqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bcqe/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "bcqe/cqe.hpp"
#include "bcqe/error.hpp"
#include "bcqe/model.hpp"
#include "bcqe/reference.hpp"

namespace bcqe::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Options {
  ModelSpec model;
  std::optional<double> gamma;
  std::string out_dir;
  std::string format = "both";

  // cqe
  CQEConfig cqe;
  std::string encoding = "pair";
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  std::optional<double> noise;
  bool no_calibration = false;
  bool no_halving = false;
  bool timing = false;

  // scan
  std::vector<int> scan_bosons{2, 4, 8};
  std::vector<double> grid;
  int scan_orbitals = 3;
};

ordered_json model_json(const ModelSpec& m) {
  return {{"n_bosons", m.n_bosons}, {"n_orbitals", m.n_orbitals}, {"Z", m.force_constant}};
}

ordered_json cqe_config_json(const Options& o, const std::string& initial) {
  const CQEConfig& c = o.cqe;
  ordered_json j;
  j["epsilon"] = c.epsilon;
  j["max_iterations"] = c.max_iterations;
  j["energy_tol"] = c.energy_tol;
  j["residual_tol"] = c.residual_tol;
  j["initial"] = initial;
  j["symmetrize_initial"] = c.symmetrize_initial;
  j["encoding"] = to_string(c.encoding.kind);
  j["normalization"] = c.encoding.normalization > 0.0 ? c.encoding.normalization
                                                      : 1.0 / std::sqrt(static_cast<double>(o.model.n_bosons));
  j["calibration"] = c.calibration;
  j["step_halving"] = c.step_halving;
  j["shots"] = c.shots ? ordered_json(c.shots->shots) : ordered_json(nullptr);
  j["seed"] = o.seed;
  j["noise_strength"] = c.noise_strength ? ordered_json(*c.noise_strength) : ordered_json(nullptr);
  j["noise_trajectories"] = c.noise_trajectories;
  j["timing"] = o.timing;
  return j;
}

bool wants(const Options& o, const char* kind) { return o.format == "both" || o.format == kind; }

std::filesystem::path prepare_out_dir(const Options& o) {
  std::filesystem::path dir(o.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  if (!f) throw IoError("failed writing " + path.string());
}

// JSON goes to stdout always; files are written only with an output directory.
void emit(const Options& o, const std::string& stem, const ordered_json& summary,
          const std::optional<std::string>& csv, std::ostream& out) {
  const std::string json_text = summary.dump(2) + "\n";
  if (!o.out_dir.empty()) {
    const auto dir = prepare_out_dir(o);
    if (csv && wants(o, "csv")) write_file(dir / (stem + ".csv"), *csv);
    if (wants(o, "json")) write_file(dir / (stem + ".json"), json_text);
    out << json_text;
    return;
  }
  if (csv && o.format == "csv") {
    out << *csv;
  } else {
    out << json_text;
  }
}

ReducedHamiltonian hamiltonian_for(const Options& o) {
  return o.gamma ? reduced_hamiltonian(o.model, *o.gamma) : reduced_hamiltonian(o.model);
}

void cmd_exact(const Options& o, std::ostream& out) {
  validate(o.model);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "exact";
  j["config"] = model_json(o.model);
  j["E_exact"] = exact_energy(o.model);
  j["E_MF"] = mean_field_energy(o.model);
  j["gamma"] = gamma_scaling(o.model).gamma;
  j["mode_constants"] = normal_mode_constants(o.model);
  emit(o, "exact", j, std::nullopt, out);
}

void cmd_fci(const Options& o, std::ostream& out) {
  validate(o.model);
  const ReducedHamiltonian k = hamiltonian_for(o);
  const SpectrumResult fci = full_ci(k);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "fci";
  j["config"] = model_json(o.model);
  j["config"]["gamma"] = k.gamma;
  j["E_exact"] = exact_energy(o.model);
  j["E_MF"] = mean_field_energy(o.model);
  j["eigenvalues"] = fci.eigenvalues;
  ordered_json occ = ordered_json::array();
  for (std::size_t i = 0; i < fci.eigenvalues.size(); ++i) occ.push_back(natural_occupations(fci, i));
  j["occupations"] = occ;
  std::size_t product_dim = 1;
  for (int i = 0; i < o.model.n_bosons && product_dim <= kMaxProductDimension; ++i) {
    product_dim *= static_cast<std::size_t>(o.model.n_orbitals);
  }
  if (product_dim <= kMaxProductDimension) {
    j["product_basis_eigenvalues"] = product_basis_ci(k).eigenvalues;
  }
  std::ostringstream csv;
  csv << "index,energy\n" << std::setprecision(15);
  for (std::size_t i = 0; i < fci.eigenvalues.size(); ++i) csv << i << ',' << fci.eigenvalues[i] << '\n';
  emit(o, "fci", j, csv.str(), out);
}

void cmd_cqe(Options o, std::ostream& out) {
  validate(o.model);
  o.cqe.encoding.kind = parse_encoding(o.encoding);
  o.cqe.calibration = !o.no_calibration;
  o.cqe.step_halving = !o.no_halving;
  o.cqe.gamma = o.gamma;
  o.cqe.noise_strength = o.noise;
  o.cqe.noise_seed = o.seed;
  if (o.shots) o.cqe.shots = ShotConfig{*o.shots, o.seed};
  validate(o.cqe);
  const QubitLayout layout = QubitLayout::of(o.model);
  const std::string initial = o.cqe.initial.empty() ? ground_guess(layout) : o.cqe.initial;
  o.cqe.initial = initial;

  CQEResult res = run(o.model, o.cqe);
  if (!o.timing) {
    for (auto& r : res.trace.records) r.wall_ms = 0.0;
  }
  std::ostringstream csv;
  res.trace.write_csv(csv);

  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "cqe";
  j["config"] = model_json(o.model);
  j["config"]["gamma"] = res.gamma;
  j["config"]["cqe"] = cqe_config_json(o, initial);
  j["converged"] = res.converged;
  j["stop_reason"] = res.stop_reason;
  j["iterations"] = res.iterations();
  j["final_energy"] = res.energy;
  j["fci_reference"] = res.fci_reference;
  j["E_exact"] = res.exact_energy;
  j["final_residual_norm"] = res.trace.records.back().residual_norm;
  j["rdm_trace"] = res.rdm.trace().real();
  j["warnings"] = res.warnings;
  emit(o, "cqe", j, csv.str(), out);
}

void cmd_scan(const Options& o, std::ostream& out) {
  const std::vector<double> grid = o.grid.empty() ? default_scan_grid() : o.grid;
  if (o.scan_orbitals < 1) throw InvalidArgument("--orbitals must be at least 1");
  for (int n : o.scan_bosons) {
    if (n < 2) throw InvalidArgument("--bosons entries must be at least 2");
  }
  const auto rows = scan(o.scan_bosons, grid, o.scan_orbitals);
  std::ostringstream csv;
  write_scan_csv(csv, rows, o.scan_orbitals);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "scan";
  j["config"] = {{"bosons", o.scan_bosons}, {"n_orbitals", o.scan_orbitals}, {"grid", grid}};
  ordered_json table = ordered_json::array();
  for (const auto& r : rows) {
    table.push_back({{"N", r.n_bosons},
                     {"Z", r.force_constant},
                     {"N_over_Z", r.n_over_z},
                     {"E_MF", r.mean_field},
                     {"E_FCI", r.full_ci},
                     {"E_exact", r.exact},
                     {"occupations", r.occupations}});
  }
  j["rows"] = table;
  emit(o, "scan", j, csv.str(), out);
}

void add_model_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--bosons,-N", o.model.n_bosons, "Number of bosons N")->capture_default_str();
  cmd->add_option("--orbitals,-R", o.model.n_orbitals, "Hermite orbitals R")->capture_default_str();
  cmd->add_option("-Z,--force-constant", o.model.force_constant, "Harmonic force constant Z")
      ->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "Override the natural-orbital length scale");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out-dir,-o", o.out_dir, std::string("Output directory (default $") + kOutputDirEnv + ")");
  cmd->add_option("--format", o.format, "csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv(kOutputDirEnv)) o.out_dir = env;

  CLI::App app{"Contracted quantum eigensolver for coupled bosonic oscillators"};
  app.require_subcommand(1);

  auto* exact = app.add_subcommand("exact", "Closed-form energies and basis length scale");
  add_model_flags(exact, o);
  add_output_flags(exact, o);

  auto* fci = app.add_subcommand("fci", "Bosonic full CI spectrum and natural occupations");
  add_model_flags(fci, o);
  add_output_flags(fci, o);

  auto* cqe = app.add_subcommand("cqe", "Run the contracted quantum eigensolver");
  add_model_flags(cqe, o);
  add_output_flags(cqe, o);
  cqe->add_option("--initial", o.cqe.initial, "Start bitstring, qubit 0 rightmost (default all in orbital 1)");
  cqe->add_flag("--symmetrize", o.cqe.symmetrize_initial, "Symmetrize the start state over boson rows");
  cqe->add_option("--epsilon", o.cqe.epsilon, "Step size")->capture_default_str();
  cqe->add_option("--max-iterations", o.cqe.max_iterations, "Iteration cap")->capture_default_str();
  cqe->add_option("--energy-tol", o.cqe.energy_tol, "Stop when |dE| falls below")->capture_default_str();
  cqe->add_option("--residual-tol", o.cqe.residual_tol, "Stop when ||R|| falls below")->capture_default_str();
  cqe->add_option("--shots", o.shots, "Shots per Pauli word (exact expectations when omitted)");
  cqe->add_option("--seed", o.seed, "Seed for sampling and noise")->capture_default_str();
  cqe->add_option("--noise", o.noise, "Depolarizing strength per qubit per iteration");
  cqe->add_option("--trajectories", o.cqe.noise_trajectories, "Noisy executions per measurement")
      ->capture_default_str();
  cqe->add_option("--encoding", o.encoding, "pair or collective")
      ->check(CLI::IsMember({"pair", "collective"}))
      ->capture_default_str();
  cqe->add_option("--normalization", o.cqe.encoding.normalization, "Collective operator constant c");
  cqe->add_flag("--no-calibration", o.no_calibration, "Report raw encoded expectations");
  cqe->add_flag("--no-halving", o.no_halving, "Disable step halving on energy increase");
  cqe->add_flag("--timing", o.timing, "Record wall-clock times in the trace");

  auto* scan_cmd = app.add_subcommand("scan", "Mean-field, full CI and exact energies over N/Z");
  scan_cmd->add_option("--bosons,-N", o.scan_bosons, "Boson counts")->delimiter(',')->capture_default_str();
  scan_cmd->add_option("--orbitals,-R", o.scan_orbitals, "Hermite orbitals R")->capture_default_str();
  scan_cmd->add_option("--grid", o.grid, "N/Z values in (0, 1)")->delimiter(',');
  add_output_flags(scan_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (*exact) cmd_exact(o, out);
    if (*fci) cmd_fci(o, out);
    if (*cqe) cmd_cqe(o, out);
    if (*scan_cmd) cmd_scan(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const UnboundSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

}  // namespace bcqe::cli
