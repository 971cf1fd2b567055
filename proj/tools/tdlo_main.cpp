// Copyright 2026 The tdlo developers
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

// Command-line driver: decompose, compile, verify, run, estimate.
// Exit codes: 0 success, 1 verification failure, 2 input validation,
// 3 numerical failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tdlo/compiler.hpp"
#include "tdlo/io.hpp"
#include "tdlo/presets.hpp"

namespace fs = std::filesystem;
using namespace tdlo;
using tdlo::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

UnitaryMatrix load_unitary(const fs::path& path) {
  const json j = json::parse(io::read_text_file(path));
  return UnitaryMatrix(io::complex_matrix_from_json(j));
}

struct RunConfig {
  int n_modes = 3;
  double tau_ns = 66.0;
  double source_detection_loss = 0.23;
  double inner_trip_loss = 0.15;
  double outer_trip_loss = 0.20;
  double squeezing_db = 7.4;
  std::string preset;
  std::string unitary_file;
  std::uint64_t seed = 12345;
  int samples = 5000;
  std::string output_dir;
  bool lossless = false;
  bool estimate = false;
  bool apply_final_phases = false;

  json to_json() const {
    return json{{"n_modes", n_modes},
                {"tau_ns", tau_ns},
                {"source_detection_loss", source_detection_loss},
                {"inner_trip_loss", inner_trip_loss},
                {"outer_trip_loss", outer_trip_loss},
                {"squeezing_db", squeezing_db},
                {"preset", preset},
                {"unitary_file", unitary_file},
                {"seed", seed},
                {"samples", samples},
                {"lossless", lossless},
                {"estimate", estimate},
                {"apply_final_phases", apply_final_phases}};
  }

  void load_file(const fs::path& path) {
    const json j = json::parse(io::read_text_file(path));
    if (j.contains("n_modes")) n_modes = j["n_modes"].get<int>();
    if (j.contains("tau_ns")) tau_ns = j["tau_ns"].get<double>();
    if (j.contains("source_detection_loss"))
      source_detection_loss = j["source_detection_loss"].get<double>();
    if (j.contains("inner_trip_loss"))
      inner_trip_loss = j["inner_trip_loss"].get<double>();
    if (j.contains("outer_trip_loss"))
      outer_trip_loss = j["outer_trip_loss"].get<double>();
    if (j.contains("squeezing_db"))
      squeezing_db = j["squeezing_db"].get<double>();
    if (j.contains("preset")) preset = j["preset"].get<std::string>();
    if (j.contains("unitary_file"))
      unitary_file = j["unitary_file"].get<std::string>();
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) samples = j["samples"].get<int>();
    if (j.contains("lossless")) lossless = j["lossless"].get<bool>();
    if (j.contains("estimate")) estimate = j["estimate"].get<bool>();
    if (j.contains("apply_final_phases"))
      apply_final_phases = j["apply_final_phases"].get<bool>();
  }
};

int cmd_decompose(const fs::path& unitary_file,
                  const std::optional<fs::path>& out) {
  const UnitaryMatrix u = load_unitary(unitary_file);
  const DecompositionPlan plan = decompose(u);
  const UnitaryMatrix rebuilt = reconstruct(plan);
  const double err = (rebuilt.entries() - u.entries()).norm();
  std::cout << "dim " << plan.dim << ", layers " << plan.layers.size()
            << ", T count " << plan.t_count() << "\n"
            << "reconstruction error " << err << "\n";
  if (out) {
    io::write_text_file_atomic(*out, io::plan_to_json(plan).dump(2) + "\n");
    std::cout << "plan written to " << out->string() << "\n";
  }
  if (err > kArithmeticTol) {
    std::cerr << "error: reconstruction error exceeds 1e-9\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_compile(const std::optional<fs::path>& plan_file,
                const std::optional<fs::path>& unitary_file,
                bool apply_final_phases, double tau_ns,
                const std::optional<fs::path>& out,
                const std::optional<fs::path>& table_out) {
  DecompositionPlan plan;
  if (plan_file) {
    plan = io::plan_from_json(json::parse(io::read_text_file(*plan_file)));
  } else if (unitary_file) {
    plan = decompose(load_unitary(*unitary_file));
  } else {
    throw ValidationError("compile: need --plan or --unitary");
  }
  const ControlTimeline t = compile(plan, apply_final_phases, tau_ns);
  std::cout << "compiled " << t.bins.size() << " bins for " << t.n_modes
            << " modes (" << to_string(t.final_phase_mode) << ")\n";
  if (out) {
    io::write_text_file_atomic(*out, io::timeline_to_json(t).dump(2) + "\n");
  }
  if (table_out) {
    io::write_text_file_atomic(*table_out, control_table(t));
  }
  if (!out && !table_out) std::cout << control_table(t);
  return kExitOk;
}

int cmd_verify(const fs::path& timeline_file, const fs::path& unitary_file) {
  const ControlTimeline t =
      io::timeline_from_json(json::parse(io::read_text_file(timeline_file)));
  const UnitaryMatrix u = load_unitary(unitary_file);
  if (t.n_modes != u.dim()) {
    throw ValidationError("verify: timeline and unitary dimensions differ");
  }
  const MatrixXcd realized = effective_unitary(t);
  const double dev = deviation_up_to_global_phase(realized, u.entries());
  std::cout << "max deviation up to global phase: " << dev << "\n";
  return dev < kArithmeticTol ? kExitOk : kExitVerifyFailed;
}

int cmd_run(const RunConfig& cfg) {
  const fs::path out_dir = cfg.output_dir.empty() ? fs::path(".")
                                                  : fs::path(cfg.output_dir);
  fs::create_directories(out_dir);

  ControlTimeline timeline;
  std::string description;
  std::optional<PresetId> preset_id;
  if (!cfg.preset.empty()) {
    preset_id = parse_preset(cfg.preset);
    PresetTimeline pt = preset_timeline(*preset_id, cfg.tau_ns);
    timeline = std::move(pt.timeline);
    description = std::move(pt.description);
  } else if (!cfg.unitary_file.empty()) {
    const DecompositionPlan plan = decompose(load_unitary(cfg.unitary_file));
    timeline = compile(plan, cfg.apply_final_phases, cfg.tau_ns);
    description = "custom unitary (" + cfg.unitary_file + ")";
  } else {
    throw ValidationError("run: need a preset or a unitary file");
  }

  LossModel lm = LossModel::paper();
  lm.input_squeezing_db = cfg.squeezing_db;
  if (cfg.lossless) {
    lm.source_detection_loss = lm.inner_trip_loss = lm.outer_trip_loss = 0.0;
  } else {
    lm.source_detection_loss = cfg.source_detection_loss;
    lm.inner_trip_loss = cfg.inner_trip_loss;
    lm.outer_trip_loss = cfg.outer_trip_loss;
  }
  lm.validate();

  const auto inputs = uniform_inputs(timeline.n_modes, cfg.squeezing_db);
  const CovarianceMatrix gamma = simulate(timeline, inputs, lm);
  const CovarianceMatrix gamma_ideal =
      simulate(timeline, inputs, LossModel::lossless());

  io::write_text_file_atomic(out_dir / "control_table.txt",
                             control_table(timeline));
  io::write_text_file_atomic(out_dir / "timeline.json",
                             io::timeline_to_json(timeline).dump(2) + "\n");
  io::write_text_file_atomic(out_dir / "covariance.csv",
                             io::covariance_to_csv(gamma));
  io::write_text_file_atomic(out_dir / "covariance.json",
                             io::covariance_to_json(gamma).dump(2) + "\n");
  io::write_text_file_atomic(
      out_dir / "covariance_elements.json",
      io::covariance_element_list(gamma).dump(2) + "\n");

  json report;
  report["version"] = kVersion;
  report["operation"] = cfg.preset.empty() ? description : cfg.preset;
  report["description"] = description;
  report["seed"] = cfg.seed;
  report["config"] = cfg.to_json();
  report["config_hash"] = io::fnv1a_hex(cfg.to_json().dump());
  report["fidelity_vs_lossless"] = gaussian_fidelity(gamma, gamma_ideal);
  report["physicality_eig"] = gamma.physicality_eig();
  json variances = json::array();
  for (int k = 0; k < timeline.n_modes; ++k) {
    variances.push_back({{"mode", k + 1},
                         {"var_x", gamma(2 * k, 2 * k)},
                         {"var_p", gamma(2 * k + 1, 2 * k + 1)}});
  }
  report["output_variances"] = std::move(variances);

  std::ostringstream table;
  table << "operation: " << (cfg.preset.empty() ? "custom" : cfg.preset)
        << "\noutput state: " << description << "\nfidelity vs lossless: "
        << gaussian_fidelity(gamma, gamma_ideal) << "\n";
  if (preset_id && *preset_id != PresetId::Op1) {
    const InseparabilityReport insep = inseparability(gamma, *preset_id);
    report["inseparability"] = io::inseparability_to_json(insep);
    for (const auto& e : insep.entries) {
      table << e.label << " = " << e.value << "  [threshold " << e.threshold
            << "] " << (e.passes ? "PASS" : "FAIL") << "\n";
    }
  }

  if (cfg.estimate) {
    if (timeline.n_modes != 3) {
      throw ValidationError("run: --estimate requires three modes");
    }
    const auto sets = sample_all_bases(gamma, cfg.samples, cfg.seed);
    io::write_text_file_atomic(out_dir / "samples.csv",
                               io::samples_to_csv(sets));
    const CovarianceMatrix estimated = estimate_covariance(sets);
    io::write_text_file_atomic(out_dir / "estimated_covariance.csv",
                               io::covariance_to_csv(estimated));
    io::write_text_file_atomic(
        out_dir / "estimated_covariance.json",
        io::covariance_to_json(estimated).dump(2) + "\n");
    const double max_err =
        (estimated.gamma() - gamma.gamma()).cwiseAbs().maxCoeff();
    report["estimate"] = {{"samples", cfg.samples},
                          {"max_element_error", max_err},
                          {"physicality_eig", estimated.physicality_eig()}};
    table << "estimated covariance max deviation: " << max_err << "\n";
  }

  io::write_text_file_atomic(out_dir / "report.json",
                             report.dump(2) + "\n");
  io::write_text_file_atomic(out_dir / "report.txt", table.str());
  std::cout << table.str();
  std::cout << "outputs written to " << out_dir.string() << "\n";
  return kExitOk;
}

int cmd_estimate(const fs::path& samples_file,
                 const std::optional<fs::path>& out,
                 const std::optional<fs::path>& out_csv) {
  const auto sets = io::samples_from_csv(io::read_text_file(samples_file));
  const CovarianceMatrix estimated = estimate_covariance(sets);
  std::cout << "estimated covariance (min physicality eig "
            << estimated.physicality_eig() << ")\n";
  if (out) {
    io::write_text_file_atomic(
        *out, io::covariance_to_json(estimated).dump(2) + "\n");
  }
  if (out_csv) {
    io::write_text_file_atomic(*out_csv, io::covariance_to_csv(estimated));
  }
  if (!out && !out_csv) std::cout << io::covariance_to_csv(estimated);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-domain dual-loop linear optics compiler and simulator"};
  app.require_subcommand(1);

  std::string unitary_file, plan_file, timeline_file, samples_file;
  std::string out, table_out, out_csv, config_file;
  bool apply_final_phases = false;
  double tau_ns = 66.0;

  auto* dec = app.add_subcommand("decompose",
                                 "decompose a unitary into T-matrix layers");
  dec->add_option("--unitary", unitary_file, "unitary JSON file")->required();
  dec->add_option("--out", out, "plan JSON output");

  auto* comp = app.add_subcommand("compile",
                                  "compile a plan onto the dual loop");
  comp->add_option("--plan", plan_file, "plan JSON file");
  comp->add_option("--unitary", unitary_file, "unitary JSON file");
  comp->add_flag("--apply-final-phases", apply_final_phases,
                 "realize the diagonal phases in the VPS");
  comp->add_option("--tau-ns", tau_ns, "time-bin interval in ns");
  comp->add_option("--out", out, "timeline JSON output");
  comp->add_option("--table", table_out, "control table text output");

  auto* ver = app.add_subcommand("verify",
                                 "check a timeline against a unitary");
  ver->add_option("--timeline", timeline_file, "timeline JSON file")
      ->required();
  ver->add_option("--unitary", unitary_file, "unitary JSON file")->required();

  RunConfig cfg;
  if (const char* env = std::getenv("TDLO_OUT_DIR")) cfg.output_dir = env;
  auto* run = app.add_subcommand("run", "simulate an operation end to end");
  run->add_option("--config", config_file, "config JSON file");
  auto* opt_preset = run->add_option("--preset", cfg.preset,
                                     "preset id (op1, op2i, ..., op4ii)");
  auto* opt_unitary = run->add_option("--unitary", cfg.unitary_file,
                                      "unitary JSON file");
  auto* opt_tau = run->add_option("--tau-ns", cfg.tau_ns, "bin interval, ns");
  auto* opt_db = run->add_option("--squeezing-db", cfg.squeezing_db,
                                 "input squeezing in dB");
  auto* opt_src = run->add_option("--source-loss", cfg.source_detection_loss,
                                  "source/detection loss fraction");
  auto* opt_inner = run->add_option("--inner-loss", cfg.inner_trip_loss,
                                    "inner round-trip loss fraction");
  auto* opt_outer = run->add_option("--outer-loss", cfg.outer_trip_loss,
                                    "outer round-trip loss fraction");
  auto* opt_seed = run->add_option("--seed", cfg.seed, "sampler seed");
  auto* opt_samples = run->add_option("--samples", cfg.samples,
                                      "samples per basis");
  auto* opt_outdir = run->add_option("--out-dir", cfg.output_dir,
                                     "output directory");
  auto* flag_lossless = run->add_flag("--lossless", "zero all losses");
  auto* flag_estimate = run->add_flag("--estimate",
                                      "sample and reconstruct the covariance");
  auto* flag_afp = run->add_flag("--apply-final-phases",
                                 "realize diagonal phases in the VPS");

  auto* est = app.add_subcommand("estimate",
                                 "reconstruct a covariance from samples CSV");
  est->add_option("--samples", samples_file, "samples CSV file")->required();
  est->add_option("--out", out, "covariance JSON output");
  est->add_option("--out-csv", out_csv, "covariance CSV output");

  try {
    app.parse(argc, argv);

    if (dec->parsed()) {
      return cmd_decompose(unitary_file,
                           out.empty() ? std::nullopt
                                       : std::optional<fs::path>(out));
    }
    if (comp->parsed()) {
      return cmd_compile(
          plan_file.empty() ? std::nullopt : std::optional<fs::path>(plan_file),
          unitary_file.empty() ? std::nullopt
                               : std::optional<fs::path>(unitary_file),
          apply_final_phases, tau_ns,
          out.empty() ? std::nullopt : std::optional<fs::path>(out),
          table_out.empty() ? std::nullopt
                            : std::optional<fs::path>(table_out));
    }
    if (ver->parsed()) {
      return cmd_verify(timeline_file, unitary_file);
    }
    if (run->parsed()) {
      RunConfig file_cfg;
      if (const char* env = std::getenv("TDLO_OUT_DIR")) {
        file_cfg.output_dir = env;
      }
      if (!config_file.empty()) file_cfg.load_file(config_file);
      // Precedence: command line > config file > defaults.
      if (!*opt_preset) cfg.preset = file_cfg.preset;
      if (!*opt_unitary) cfg.unitary_file = file_cfg.unitary_file;
      if (!*opt_tau) cfg.tau_ns = file_cfg.tau_ns;
      if (!*opt_db) cfg.squeezing_db = file_cfg.squeezing_db;
      if (!*opt_src) cfg.source_detection_loss = file_cfg.source_detection_loss;
      if (!*opt_inner) cfg.inner_trip_loss = file_cfg.inner_trip_loss;
      if (!*opt_outer) cfg.outer_trip_loss = file_cfg.outer_trip_loss;
      if (!*opt_seed) cfg.seed = file_cfg.seed;
      if (!*opt_samples) cfg.samples = file_cfg.samples;
      if (!*opt_outdir) cfg.output_dir = file_cfg.output_dir;
      if (!*flag_lossless) cfg.lossless = file_cfg.lossless;
      else cfg.lossless = true;
      if (!*flag_estimate) cfg.estimate = file_cfg.estimate;
      else cfg.estimate = true;
      if (!*flag_afp) cfg.apply_final_phases = file_cfg.apply_final_phases;
      else cfg.apply_final_phases = true;
      return cmd_run(cfg);
    }
    if (est->parsed()) {
      return cmd_estimate(
          samples_file,
          out.empty() ? std::nullopt : std::optional<fs::path>(out),
          out_csv.empty() ? std::nullopt : std::optional<fs::path>(out_csv));
    }
    return kExitValidation;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const RoutingError& e) {
    std::cerr << "invalid timeline: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  }
}
