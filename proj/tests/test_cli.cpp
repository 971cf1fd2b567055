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

// End-to-end checks of the command-line driver. The binary path comes from
// the TDLO_BIN environment variable (set by ctest).

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <doctest.h>

#include "tdlo/compiler.hpp"
#include "tdlo/io.hpp"
#include "tdlo/presets.hpp"

namespace fs = std::filesystem;
using namespace tdlo;

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("TDLO_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe)) output += buf;
  const int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), output};
}

fs::path temp_dir() {
  const fs::path dir =
      fs::temp_directory_path() / ("tdlo_cli_test_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

fs::path write_random_unitary(const fs::path& dir, int n, std::uint64_t seed) {
  Rng rng(seed);
  const UnitaryMatrix u = random_unitary(n, rng);
  const fs::path path = dir / "unitary.json";
  io::write_text_file_atomic(
      path, io::complex_matrix_to_json(u.entries()).dump(2) + "\n");
  return path;
}

}  // namespace

TEST_CASE("decompose command round trip and validation") {
  const fs::path dir = temp_dir();
  const fs::path ufile = write_random_unitary(dir, 3, 91);

  const CliResult ok = run_cli("decompose --unitary " + ufile.string() +
                               " --out " + (dir / "plan.json").string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("reconstruction error") != std::string::npos);
  CHECK(fs::exists(dir / "plan.json"));

  // Identity input: plan with identity layers.
  io::write_text_file_atomic(
      dir / "identity.json",
      io::complex_matrix_to_json(MatrixXcd::Identity(3, 3)).dump() + "\n");
  const CliResult id = run_cli("decompose --unitary " +
                               (dir / "identity.json").string());
  CHECK(id.exit_code == 0);

  // Malformed JSON and non-unitary input exit 2.
  io::write_text_file_atomic(dir / "broken.json", "{not json");
  CHECK(run_cli("decompose --unitary " + (dir / "broken.json").string())
            .exit_code == 2);
  io::write_text_file_atomic(
      dir / "nonunitary.json",
      io::complex_matrix_to_json(2.0 * MatrixXcd::Identity(3, 3)).dump());
  CHECK(run_cli("decompose --unitary " + (dir / "nonunitary.json").string())
            .exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("compile then verify succeeds, perturbed timeline fails") {
  const fs::path dir = temp_dir();
  const fs::path ufile = write_random_unitary(dir, 3, 92);
  const fs::path tfile = dir / "timeline.json";

  CHECK(run_cli("compile --unitary " + ufile.string() + " --out " +
                tfile.string())
            .exit_code == 0);
  const CliResult good =
      run_cli("verify --timeline " + tfile.string() + " --unitary " +
              ufile.string());
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("max deviation") != std::string::npos);

  // Perturb one interacting bin.
  auto j = io::json::parse(io::read_text_file(tfile));
  const double t = j["bins"][1]["vbs_T"].get<double>();
  j["bins"][1]["vbs_T"] = (t < 0.5) ? t + 0.2 : t - 0.2;
  io::write_text_file_atomic(tfile, j.dump(2) + "\n");
  CHECK(run_cli("verify --timeline " + tfile.string() + " --unitary " +
                ufile.string())
            .exit_code == 1);

  // Mismatched dimensions exit 2.
  const fs::path u2 = dir / "u2.json";
  Rng rng(93);
  io::write_text_file_atomic(
      u2,
      io::complex_matrix_to_json(random_unitary(2, rng).entries()).dump());
  CHECK(run_cli("verify --timeline " + tfile.string() + " --unitary " +
                u2.string())
            .exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("run produces the preset bundle") {
  const fs::path dir = temp_dir();
  const CliResult r = run_cli("run --preset op1 --out-dir " + dir.string());
  CHECK(r.exit_code == 0);
  for (const char* name :
       {"control_table.txt", "timeline.json", "covariance.csv",
        "covariance.json", "covariance_elements.json", "report.json",
        "report.txt"}) {
    CAPTURE(name);
    CHECK(fs::exists(dir / name));
  }
  const CovarianceMatrix g =
      io::covariance_from_csv(io::read_text_file(dir / "covariance.csv"));
  CHECK(g(1, 1) == doctest::Approx(0.5717).epsilon(2e-3));
  CHECK(g(3, 3) == doctest::Approx(0.4646).epsilon(2e-3));
  fs::remove_all(dir);
}

TEST_CASE("run with estimation is reproducible and accurate") {
  const fs::path dir1 = temp_dir() / "a";
  const fs::path dir2 = temp_dir() / "b";
  const std::string common =
      "run --preset op2ii --estimate --seed 7 --samples 5000 --out-dir ";
  CHECK(run_cli(common + dir1.string()).exit_code == 0);
  CHECK(run_cli(common + dir2.string()).exit_code == 0);
  for (const char* name :
       {"samples.csv", "estimated_covariance.csv", "report.json"}) {
    CAPTURE(name);
    CHECK(io::read_text_file(dir1 / name) == io::read_text_file(dir2 / name));
  }
  const CovarianceMatrix est = io::covariance_from_csv(
      io::read_text_file(dir1 / "estimated_covariance.csv"));
  const CovarianceMatrix truth =
      io::covariance_from_csv(io::read_text_file(dir1 / "covariance.csv"));
  CHECK((est.gamma() - truth.gamma()).cwiseAbs().maxCoeff() < 0.15);

  // estimate subcommand reconstructs from the samples file.
  const CliResult est_cmd =
      run_cli("estimate --samples " + (dir1 / "samples.csv").string() +
              " --out-csv " + (dir1 / "reestimated.csv").string());
  CHECK(est_cmd.exit_code == 0);
  const CovarianceMatrix re = io::covariance_from_csv(
      io::read_text_file(dir1 / "reestimated.csv"));
  CHECK((re.gamma() - est.gamma()).cwiseAbs().maxCoeff() < 1e-12);
  fs::remove_all(dir1.parent_path());
}

TEST_CASE("run rejects unknown presets with exit 2") {
  CHECK(run_cli("run --preset op99").exit_code == 2);
}

TEST_CASE("lossless GHZ at high squeezing passes the nullifier gate") {
  const fs::path dir = temp_dir();
  const CliResult r = run_cli(
      "run --preset op3i --lossless --squeezing-db 20 --out-dir " +
      dir.string());
  CHECK(r.exit_code == 0);
  const auto report =
      io::json::parse(io::read_text_file(dir / "report.json"));
  for (const auto& e : report["inseparability"]["entries"]) {
    CHECK(e["value"].get<double>() < 0.1);
  }
  fs::remove_all(dir);
}

TEST_CASE("config file values are overridden by flags") {
  const fs::path dir = temp_dir();
  io::write_text_file_atomic(dir / "config.json",
                             io::json{{"preset", "op2i"},
                                      {"squeezing_db", 20.0},
                                      {"lossless", true}}
                                 .dump());
  const CliResult r =
      run_cli("run --config " + (dir / "config.json").string() +
              " --out-dir " + dir.string());
  CHECK(r.exit_code == 0);
  const auto report = io::json::parse(io::read_text_file(dir / "report.json"));
  const double value =
      report["inseparability"]["entries"][0]["value"].get<double>();
  CHECK(value == doctest::Approx(0.04).epsilon(1e-6));
  fs::remove_all(dir);
}
