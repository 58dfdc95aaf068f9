#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dpc/json_io.hpp"
#include "dpc/mcsim.hpp"
#include "dpc/optimize.hpp"
#include "dpc/rates.hpp"

#ifndef DPC_CLI_PATH
#error "DPC_CLI_PATH must point at the dpc binary"
#endif

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(DPC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
    output += buffer;
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

dpc::json run_json(const std::string& args) {
  const CliResult result = run_cli(args);
  CAPTURE(result.output);
  REQUIRE(result.exit_code == 0);
  return dpc::json::parse(result.output);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    lines.push_back(current);
  }
  return lines;
}

std::filesystem::path write_temp_json(const std::string& name, const dpc::json& j) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream stream(path);
  stream << j.dump();
  return path;
}

}  // namespace

TEST_CASE("rate subcommand reproduces the paper values") {
  const dpc::json joint =
      run_json("rate joint --eta 0.5 --n-e 0 --n-a 2 --n-s 2 --t 1");
  CHECK(std::abs(joint["rate"].get<double>() - 1.7549) < 1e-4);

  const dpc::json hom = run_json("rate hom --eta 0.5 --n-e 0 --n-a 2 --n-s 2");
  CHECK(std::abs(hom["rate"].get<double>() - 1.1609) < 1e-4);

  const dpc::json het = run_json("rate het --eta 0.5 --n-e 0 --n-a 2 --n-s 2");
  CHECK(std::abs(het["rate"].get<double>() - 1.0) < 1e-12);

  const dpc::json costa = run_json("rate costa --p 1 --q 0 --n 0.25 --t 0.123");
  CHECK(std::abs(costa["rate"].get<double>() - 1.1610) < 1e-4);
}

TEST_CASE("rate output is reproducible from the library") {
  const dpc::json joint =
      run_json("rate joint --eta 0.6 --n-e 0.2 --n-a 1.5 --n-s 0.7 --t 0.35");
  const double expected = dpc::joint_dpc_rate(
      dpc::LossyChannelParams(0.6, dpc::PhotonNumber(0.2)),
      dpc::SignalParams(dpc::PhotonNumber(1.5), dpc::PhotonNumber(0.7)),
      dpc::DpcCoefficient(0.35));
  CHECK(joint["rate"].get<double>() == expected);

  const dpc::json amp = run_json("rate amp --kappa 2 --n-e 0 --n-a 2 --n-s 2 --t 1");
  const double amp_expected = dpc::amplifier_dpc_rate(
      dpc::AmplifierChannelParams(2.0, dpc::PhotonNumber(0.0)),
      dpc::SignalParams(dpc::PhotonNumber(2.0), dpc::PhotonNumber(2.0)), dpc::DpcCoefficient(1.0));
  CHECK(amp["rate"].get<double>() == amp_expected);
}

TEST_CASE("sweep emits the pinned CSV format") {
  const CliResult result =
      run_cli("sweep joint --eta 0.5 --n-e 0 --n-a 2 --n-s 2 --steps 11 --format csv");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find('\r') == std::string::npos);

  const std::vector<std::string> lines = split_lines(result.output);
  REQUIRE(lines.size() == 13);  // header + 11 rows + argmax footer
  CHECK(lines[0] == "t,rate_bits");
  CHECK(lines.back().rfind("argmax,", 0) == 0);

  // Rows reproduce the library values at 12-significant-digit precision.
  const dpc::LossyChannelParams ch(0.5, dpc::PhotonNumber(0.0));
  const dpc::SignalParams sig(dpc::PhotonNumber(2.0), dpc::PhotonNumber(2.0));
  for (int i = 0; i < 11; ++i) {
    const std::string& line = lines[static_cast<std::size_t>(i + 1)];
    const auto comma = line.find(',');
    const double t = std::stod(line.substr(0, comma));
    const double rate = std::stod(line.substr(comma + 1));
    const double expected = dpc::joint_dpc_rate(ch, sig, dpc::DpcCoefficient(t));
    CHECK(std::abs(rate - expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
  }

  // Footer carries the refined maximum.
  const std::string footer = lines.back();
  const auto c1 = footer.find(',');
  const auto c2 = footer.find(',', c1 + 1);
  CHECK(std::abs(std::stod(footer.substr(c1 + 1, c2 - c1 - 1)) - 0.8065) < 5e-4);
  CHECK(std::abs(std::stod(footer.substr(c2 + 1)) - 1.8750) < 5e-4);
}

TEST_CASE("sweep without interference is a constant curve") {
  const CliResult result =
      run_cli("sweep joint --eta 0.5 --n-e 0 --n-a 2 --n-s 0 --steps 21 --format csv");
  REQUIRE(result.exit_code == 0);
  const std::vector<std::string> lines = split_lines(result.output);
  REQUIRE(lines.size() == 23);
  const std::string first_rate = lines[1].substr(lines[1].find(',') + 1);
  for (std::size_t i = 2; i < lines.size() - 1; ++i) {
    CHECK(lines[i].substr(lines[i].find(',') + 1) == first_rate);
  }
  CHECK(std::abs(std::stod(first_rate) - 2.0) < 1e-11);
}

TEST_CASE("amplifier sweep rows match the library pointwise") {
  const dpc::json sweep = run_json("sweep amp --kappa 2 --n-e 0.5 --n-a 2 --n-s 2 --steps 41");
  const dpc::AmplifierChannelParams ch(2.0, dpc::PhotonNumber(0.5));
  const dpc::SignalParams sig(dpc::PhotonNumber(2.0), dpc::PhotonNumber(2.0));
  REQUIRE(sweep["points"].size() == 41);
  for (const auto& point : sweep["points"]) {
    const double expected =
        dpc::amplifier_dpc_rate(ch, sig, dpc::DpcCoefficient(point["t"].get<double>()));
    CHECK(point["rate"].get<double>() == expected);
  }
}

TEST_CASE("optimize reports the refined maximum") {
  const dpc::json result = run_json("optimize joint --eta 0.5 --n-e 0 --n-a 2 --n-s 2");
  CHECK(std::abs(result["t_star"].get<double>() - 0.8065) < 5e-4);
  CHECK(std::abs(result["rate_star"].get<double>() - 1.8750) < 1e-4);
}

TEST_CASE("simulate costa-mi is deterministic and matches the library") {
  const dpc::json cfg{{"seed", 42},
                      {"num_samples", 50000},
                      {"inst", {{"p", 1.0}, {"q", 1.0}, {"n", 0.25}}},
                      {"t", 0.8}};
  const auto path = write_temp_json("dpc_cli_test_mc.json", cfg);

  const CliResult first = run_cli("simulate costa-mi --config " + path.string());
  const CliResult second = run_cli("simulate costa-mi --config " + path.string());
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);

  const dpc::json report = dpc::json::parse(first.output);
  const dpc::CostaMiEstimate direct = dpc::estimate_costa_rate(dpc::mc_config_from_json(cfg));
  CHECK(report["estimate"].get<double>() == direct.estimate);
  CHECK(report["std_error"].get<double>() == direct.std_error);
}

TEST_CASE("simulate modulo-demo with zero interference gives equal rates") {
  const dpc::json cfg{{"seed", 5},          {"num_symbols", 20000}, {"constellation_size", 4},
                      {"cell_width", 4.0},  {"noise_std", 0.4},     {"interference_std", 0.0}};
  const auto path = write_temp_json("dpc_cli_test_mod.json", cfg);
  const dpc::json report = run_json("simulate modulo-demo --config " + path.string());
  CHECK(report["ser_with_interference"] == report["ser_without"]);
}

TEST_CASE("oracle subcommand solves the bundled instances") {
  const dpc::json noiseless{{"s_dist", {1.0}},
                            {"channel", {{{1.0, 0.0}, {0.0, 1.0}}}},
                            {"u_size", 2}};
  const auto path = write_temp_json("dpc_cli_test_gp.json", noiseless);
  const dpc::json report = run_json("oracle " + path.string() + " --grid-levels 8");
  CHECK(std::abs(report["best_rate"].get<double>() - 1.0) < 1e-9);

  const dpc::json useless{{"s_dist", {1.0}},
                          {"channel", {{{0.5, 0.5}, {0.5, 0.5}}}},
                          {"u_size", 2}};
  const auto useless_path = write_temp_json("dpc_cli_test_gp0.json", useless);
  const dpc::json zero = run_json("oracle " + useless_path.string() + " --grid-levels 8");
  CHECK(std::abs(zero["best_rate"].get<double>()) < 1e-9);

  const dpc::json stuck{{"s_dist", {0.7, 0.15, 0.15}},
                        {"channel",
                         {{{1.0, 0.0}, {0.0, 1.0}},
                          {{1.0, 0.0}, {1.0, 0.0}},
                          {{0.0, 1.0}, {0.0, 1.0}}}},
                        {"u_size", 2}};
  const auto stuck_path = write_temp_json("dpc_cli_test_gp_stuck.json", stuck);
  const dpc::json stuck_report = run_json("oracle " + stuck_path.string() + " --grid-levels 32");
  CHECK(std::abs(stuck_report["best_rate"].get<double>() - 0.7) < 0.02);
}

TEST_CASE("exit codes distinguish argument, domain, and budget failures") {
  CHECK(run_cli("rate joint --bogus 1").exit_code == 2);
  CHECK(run_cli("rate joint").exit_code == 2);  // missing required flags
  CHECK(run_cli("rate joint --eta 1.5 --n-a 2 --n-s 2 --t 0").exit_code == 3);
  CHECK(run_cli("rate joint --eta 0.5 --n-a 0 --n-s 2 --t 0").exit_code == 3);

  const dpc::json stuck{{"s_dist", {0.5, 0.25, 0.25}},
                        {"channel",
                         {{{1.0, 0.0}, {0.0, 1.0}},
                          {{1.0, 0.0}, {1.0, 0.0}},
                          {{0.0, 1.0}, {0.0, 1.0}}}},
                        {"u_size", 2}};
  const auto path = write_temp_json("dpc_cli_test_budget.json", stuck);
  const CliResult budget = run_cli("oracle " + path.string() + " --max-maps 10");
  CHECK(budget.exit_code == 4);
  const dpc::json error = dpc::json::parse(budget.output);
  CHECK(error["required_budget"] == 64);

  // Errors carry a machine-readable field.
  const CliResult domain = run_cli("rate joint --eta 1.5 --n-a 2 --n-s 2 --t 0");
  CHECK(dpc::json::parse(domain.output).contains("error"));
}

TEST_CASE("--nats converts at the formatting layer") {
  const dpc::json bits = run_json("rate joint --eta 0.5 --n-e 0 --n-a 2 --n-s 2 --t 1");
  const dpc::json nats = run_json("rate joint --eta 0.5 --n-e 0 --n-a 2 --n-s 2 --t 1 --nats");
  CHECK(std::abs(nats["rate"].get<double>() -
                 bits["rate"].get<double>() * std::log(2.0)) < 1e-12);
  CHECK(nats["unit"] == "nats");

  const CliResult csv =
      run_cli("sweep costa --p 1 --q 1 --n 0.25 --steps 3 --format csv --nats");
  CHECK(split_lines(csv.output)[0] == "t,rate_nats");
}

TEST_CASE("--clamp floors negative rates at zero") {
  const dpc::json raw = run_json("rate costa --p 0.1 --q 10 --n 1 --t 1");
  CHECK(raw["rate"].get<double>() < 0.0);
  const dpc::json clamped = run_json("rate costa --p 0.1 --q 10 --n 1 --t 1 --clamp");
  CHECK(clamped["rate"].get<double>() == 0.0);
}

TEST_CASE("--output writes atomically and honors DPC_OUTPUT_DIR") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "dpc_cli_test_outdir";
  std::filesystem::create_directories(dir);
  const std::string cmd = "DPC_OUTPUT_DIR=" + dir.string() +
                          " " DPC_CLI_PATH
                          " rate hom --eta 0.5 --n-e 0 --n-a 2 --n-s 2 -o result.json";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream stream(dir / "result.json");
  REQUIRE(stream.good());
  dpc::json report;
  stream >> report;
  CHECK(std::abs(report["rate"].get<double>() - 1.1609) < 1e-4);
}
