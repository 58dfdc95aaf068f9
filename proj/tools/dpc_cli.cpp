// Command-line front end for the dirty-paper rate library: closed-form rates,
// t-sweeps and optimization, Monte Carlo validation runs, and the discrete
// Gelfand-Pinsker oracle. Emits JSON or CSV suitable for plotting.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dpc/errors.hpp"
#include "dpc/gp_oracle.hpp"
#include "dpc/json_io.hpp"
#include "dpc/mcsim.hpp"
#include "dpc/optimize.hpp"
#include "dpc/rates.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArguments = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitBudgetExceeded = 4;

constexpr double kLn2 = 0.6931471805599453;

struct OutputOptions {
  std::string path;           // empty = stdout
  std::string format = "json";
  bool nats = false;
  bool clamp = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("-o,--output", out.path,
                  "Output file (default stdout); relative paths resolve under $DPC_OUTPUT_DIR");
  cmd->add_option("--format", out.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--nats", out.nats, "Report rates in nats instead of bits");
  cmd->add_flag("--clamp", out.clamp, "Clamp negative rates to 0");
}

// Formatting-layer unit conversion; all internal math stays in bits.
double formatted_rate(double bits, const OutputOptions& out) {
  double value = out.clamp ? std::max(bits, 0.0) : bits;
  if (out.nats) {
    value *= kLn2;
  }
  return value;
}

std::string format_number(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

std::filesystem::path resolve_output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("DPC_OUTPUT_DIR")) {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

// Atomic write: temp file in the target directory, then rename.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::filesystem::path target = resolve_output_path(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw std::runtime_error("cannot open output file: " + tmp.string());
    }
    stream << content;
  }
  std::filesystem::rename(tmp, target);
}

std::string rate_unit_name(const OutputOptions& out) {
  return out.nats ? "rate_nats" : "rate_bits";
}

// ---------------------------------------------------------------------------
// Shared parameter blocks

struct ChannelArgs {
  double eta = 0.5;
  double kappa = 2.0;
  double n_e = 0.0;
  double n_a = 1.0;
  double n_s = 0.0;
};

void add_lossy_options(CLI::App* cmd, ChannelArgs& args, bool with_signal = true) {
  cmd->add_option("--eta", args.eta, "Transmissivity in [0,1]")->required();
  cmd->add_option("--n-e", args.n_e, "Environment mean photon number (default 0)");
  if (with_signal) {
    cmd->add_option("--n-a", args.n_a, "Input photon-number constraint")->required();
    cmd->add_option("--n-s", args.n_s, "Interference mean photon number (default 0)");
  }
}

void add_amplifier_options(CLI::App* cmd, ChannelArgs& args) {
  cmd->add_option("--kappa", args.kappa, "Amplification gain > 1")->required();
  cmd->add_option("--n-e", args.n_e, "Environment mean photon number (default 0)");
  cmd->add_option("--n-a", args.n_a, "Input photon-number constraint")->required();
  cmd->add_option("--n-s", args.n_s, "Interference mean photon number (default 0)");
}

struct CostaArgs {
  double p = 1.0;
  double q = 0.0;
  double n = 1.0;
};

void add_costa_options(CLI::App* cmd, CostaArgs& args) {
  cmd->add_option("--p", args.p, "Input power")->required();
  cmd->add_option("--q", args.q, "Interference power (default 0)");
  cmd->add_option("--n", args.n, "Noise variance")->required();
}

dpc::LossyChannelParams lossy_from_args(const ChannelArgs& a) {
  return dpc::LossyChannelParams(a.eta, dpc::PhotonNumber(a.n_e));
}

dpc::AmplifierChannelParams amplifier_from_args(const ChannelArgs& a) {
  return dpc::AmplifierChannelParams(a.kappa, dpc::PhotonNumber(a.n_e));
}

dpc::SignalParams signal_from_args(const ChannelArgs& a) {
  return dpc::SignalParams(dpc::PhotonNumber(a.n_a), dpc::PhotonNumber(a.n_s));
}

// ---------------------------------------------------------------------------
// rate

struct RateJob {
  std::string kind;
  dpc::json params;
  std::function<double()> compute;
};

void emit_scalar_rate(const RateJob& job, const OutputOptions& out) {
  const double bits = job.compute();
  const double value = formatted_rate(bits, out);
  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "kind";
    for (const auto& item : job.params.items()) {
      csv << ',' << item.key();
    }
    csv << ',' << rate_unit_name(out) << '\n' << job.kind;
    for (const auto& item : job.params.items()) {
      csv << ',' << format_number(item.value().get<double>());
    }
    csv << ',' << format_number(value) << '\n';
    write_output(out.path, csv.str());
    return;
  }
  dpc::json report = job.params;
  report["kind"] = job.kind;
  report["rate"] = value;
  report["unit"] = out.nats ? "nats" : "bits";
  write_output(out.path, report.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// sweep / optimize

std::string sweep_to_csv(const dpc::SweepResult& sweep, const OutputOptions& out) {
  std::ostringstream csv;
  csv << "t," << rate_unit_name(out) << '\n';
  for (const dpc::RatePoint& point : sweep.points) {
    csv << format_number(point.t.value()) << ',' << format_number(formatted_rate(point.rate, out))
        << '\n';
  }
  csv << "argmax," << format_number(sweep.argmax_t) << ','
      << format_number(formatted_rate(sweep.max_rate, out)) << '\n';
  return csv.str();
}

dpc::json sweep_to_json(const dpc::SweepResult& sweep, const std::string& kind,
                        const dpc::json& params, const OutputOptions& out) {
  dpc::json points = dpc::json::array();
  for (const dpc::RatePoint& point : sweep.points) {
    points.push_back({{"t", point.t.value()}, {"rate", formatted_rate(point.rate, out)}});
  }
  return dpc::json{{"kind", kind},
                   {"params", params},
                   {"unit", out.nats ? "nats" : "bits"},
                   {"grid_step", sweep.grid_step},
                   {"argmax_t", sweep.argmax_t},
                   {"max_rate", formatted_rate(sweep.max_rate, out)},
                   {"points", std::move(points)}};
}

// ---------------------------------------------------------------------------
// CLI assembly

struct CliState {
  OutputOptions out;
  ChannelArgs channel;
  CostaArgs costa;
  double t = 0.0;
  double t_min = 0.0;
  double t_max = 1.0;
  int steps = 1001;
  double tol = 1e-9;
  std::string config_path;
  std::string instance_path;
  int grid_levels = 16;
  int u_size_override = 0;
  std::uint64_t max_maps = 200000;
  bool no_refine = false;
};

dpc::json load_json_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw dpc::DomainError("cannot open file: " + path);
  }
  try {
    return dpc::json::parse(stream);
  } catch (const dpc::json::exception& e) {
    throw dpc::DomainError("JSON parse error in " + path + ": " + e.what());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Achievable-rate toolkit for Gaussian channels with transmitter-known interference"};
  app.require_subcommand(1);
  CliState st;

  // --- rate ------------------------------------------------------------
  CLI::App* rate = app.add_subcommand("rate", "Evaluate a single closed-form rate");
  rate->require_subcommand(1);
  std::vector<RateJob> jobs;

  CLI::App* rate_hom = rate->add_subcommand("hom", "Homodyne-detection capacity");
  add_lossy_options(rate_hom, st.channel);
  add_output_options(rate_hom, st.out);
  rate_hom->callback([&] {
    jobs.push_back({"hom",
                    {{"eta", st.channel.eta},
                     {"n_e", st.channel.n_e},
                     {"n_a", st.channel.n_a},
                     {"n_s", st.channel.n_s}},
                    [&] {
                      return dpc::homodyne_capacity(lossy_from_args(st.channel),
                                                    signal_from_args(st.channel));
                    }});
  });

  CLI::App* rate_het = rate->add_subcommand("het", "Heterodyne-detection capacity");
  add_lossy_options(rate_het, st.channel);
  add_output_options(rate_het, st.out);
  rate_het->callback([&] {
    jobs.push_back({"het",
                    {{"eta", st.channel.eta},
                     {"n_e", st.channel.n_e},
                     {"n_a", st.channel.n_a},
                     {"n_s", st.channel.n_s}},
                    [&] {
                      return dpc::heterodyne_capacity(lossy_from_args(st.channel),
                                                      signal_from_args(st.channel));
                    }});
  });

  CLI::App* rate_joint = rate->add_subcommand("joint", "Joint-detection DPC lower bound");
  add_lossy_options(rate_joint, st.channel);
  rate_joint->add_option("--t", st.t, "Dirty-paper coefficient")->required();
  add_output_options(rate_joint, st.out);
  rate_joint->callback([&] {
    jobs.push_back({"joint",
                    {{"eta", st.channel.eta},
                     {"n_e", st.channel.n_e},
                     {"n_a", st.channel.n_a},
                     {"n_s", st.channel.n_s},
                     {"t", st.t}},
                    [&] {
                      return dpc::joint_dpc_rate(lossy_from_args(st.channel),
                                                 signal_from_args(st.channel),
                                                 dpc::DpcCoefficient(st.t));
                    }});
  });

  CLI::App* rate_amp = rate->add_subcommand("amp", "Thermal-amplifier DPC lower bound");
  add_amplifier_options(rate_amp, st.channel);
  rate_amp->add_option("--t", st.t, "Dirty-paper coefficient")->required();
  add_output_options(rate_amp, st.out);
  rate_amp->callback([&] {
    jobs.push_back({"amp",
                    {{"kappa", st.channel.kappa},
                     {"n_e", st.channel.n_e},
                     {"n_a", st.channel.n_a},
                     {"n_s", st.channel.n_s},
                     {"t", st.t}},
                    [&] {
                      return dpc::amplifier_dpc_rate(amplifier_from_args(st.channel),
                                                     signal_from_args(st.channel),
                                                     dpc::DpcCoefficient(st.t));
                    }});
  });

  CLI::App* rate_costa = rate->add_subcommand("costa", "Classical dirty-paper rate");
  add_costa_options(rate_costa, st.costa);
  rate_costa->add_option("--t", st.t, "Dirty-paper coefficient")->required();
  add_output_options(rate_costa, st.out);
  rate_costa->callback([&] {
    jobs.push_back({"costa",
                    {{"p", st.costa.p}, {"q", st.costa.q}, {"n", st.costa.n}, {"t", st.t}},
                    [&] {
                      return dpc::costa_rate(
                          dpc::ClassicalDpcInstance(st.costa.p, st.costa.q, st.costa.n),
                          dpc::DpcCoefficient(st.t));
                    }});
  });

  // --- sweep / optimize --------------------------------------------------
  struct CurveJob {
    std::string kind;
    dpc::json params;
    dpc::RateFunction fn;
  };
  std::vector<CurveJob> curve_jobs;

  const auto add_interval_options = [&](CLI::App* cmd, bool with_grid) {
    cmd->add_option("--t-min", st.t_min, "Lower end of the t interval (default 0)");
    cmd->add_option("--t-max", st.t_max, "Upper end of the t interval (default 1)");
    if (with_grid) {
      cmd->add_option("--steps", st.steps, "Grid points including both endpoints");
    } else {
      cmd->add_option("--tol", st.tol, "Refinement tolerance on t");
    }
  };

  const auto add_curve_kinds = [&](CLI::App* parent, bool with_grid) {
    CLI::App* joint = parent->add_subcommand("joint", "Joint-detection DPC bound vs t");
    add_lossy_options(joint, st.channel);
    add_interval_options(joint, with_grid);
    add_output_options(joint, st.out);
    joint->callback([&] {
      const auto ch = lossy_from_args(st.channel);
      const auto sig = signal_from_args(st.channel);
      curve_jobs.push_back({"joint",
                            {{"eta", st.channel.eta},
                             {"n_e", st.channel.n_e},
                             {"n_a", st.channel.n_a},
                             {"n_s", st.channel.n_s}},
                            [ch, sig](double t) {
                              return dpc::joint_dpc_rate(ch, sig, dpc::DpcCoefficient(t));
                            }});
    });

    CLI::App* amp = parent->add_subcommand("amp", "Amplifier DPC bound vs t");
    add_amplifier_options(amp, st.channel);
    add_interval_options(amp, with_grid);
    add_output_options(amp, st.out);
    amp->callback([&] {
      const auto ch = amplifier_from_args(st.channel);
      const auto sig = signal_from_args(st.channel);
      curve_jobs.push_back({"amp",
                            {{"kappa", st.channel.kappa},
                             {"n_e", st.channel.n_e},
                             {"n_a", st.channel.n_a},
                             {"n_s", st.channel.n_s}},
                            [ch, sig](double t) {
                              return dpc::amplifier_dpc_rate(ch, sig, dpc::DpcCoefficient(t));
                            }});
    });

    CLI::App* costa = parent->add_subcommand("costa", "Classical Costa rate vs t");
    add_costa_options(costa, st.costa);
    add_interval_options(costa, with_grid);
    add_output_options(costa, st.out);
    costa->callback([&] {
      const dpc::ClassicalDpcInstance inst(st.costa.p, st.costa.q, st.costa.n);
      curve_jobs.push_back({"costa",
                            {{"p", st.costa.p}, {"q", st.costa.q}, {"n", st.costa.n}},
                            [inst](double t) {
                              return dpc::costa_rate(inst, dpc::DpcCoefficient(t));
                            }});
    });
  };

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate a rate curve over t");
  sweep->require_subcommand(1);
  add_curve_kinds(sweep, /*with_grid=*/true);

  CLI::App* optimize = app.add_subcommand("optimize", "Maximize a rate curve over t");
  optimize->require_subcommand(1);
  add_curve_kinds(optimize, /*with_grid=*/false);

  // --- simulate ------------------------------------------------------------
  CLI::App* simulate = app.add_subcommand("simulate", "Run a seeded Monte Carlo validation");
  simulate->require_subcommand(1);

  CLI::App* costa_mi = simulate->add_subcommand(
      "costa-mi", "Estimate I(U;Y)-I(U;S) for the Gaussian DPC ensemble");
  costa_mi->add_option("--config", st.config_path, "JSON config file")->required();
  add_output_options(costa_mi, st.out);

  CLI::App* modulo_demo = simulate->add_subcommand(
      "modulo-demo", "Modulo-precoding transceiver symbol-error demo");
  modulo_demo->add_option("--config", st.config_path, "JSON config file")->required();
  add_output_options(modulo_demo, st.out);

  // --- oracle ------------------------------------------------------------
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force discrete Gelfand-Pinsker lower bound");
  oracle->add_option("instance", st.instance_path, "Instance JSON file")->required();
  oracle->add_option("--u-size", st.u_size_override,
                     "Override the auxiliary alphabet size from the instance file");
  oracle->add_option("--grid-levels", st.grid_levels,
                     "Simplex grid subdivisions per conditional (default 16)");
  oracle->add_option("--max-maps", st.max_maps, "Enumeration budget over deterministic maps");
  oracle->add_flag("--no-refine", st.no_refine, "Skip local refinement after the grid scan");
  add_output_options(oracle, st.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << dpc::json{{"error", e.what()}}.dump() << '\n';
    return kExitBadArguments;
  }

  try {
    for (const RateJob& job : jobs) {
      emit_scalar_rate(job, st.out);
    }

    for (const CurveJob& job : curve_jobs) {
      if (app.got_subcommand(sweep)) {
        const dpc::SweepResult result = dpc::sweep_t(job.fn, st.t_min, st.t_max, st.steps);
        if (st.out.format == "csv") {
          write_output(st.out.path, sweep_to_csv(result, st.out));
        } else {
          write_output(st.out.path,
                       sweep_to_json(result, job.kind, job.params, st.out).dump(2) + "\n");
        }
      } else {
        const dpc::ScalarMaximum result = dpc::maximize_over_t(job.fn, st.t_min, st.t_max, st.tol);
        dpc::json report{{"kind", job.kind},
                         {"params", job.params},
                         {"unit", st.out.nats ? "nats" : "bits"},
                         {"t_star", result.t_star},
                         {"rate_star", formatted_rate(result.rate_star, st.out)}};
        write_output(st.out.path, report.dump(2) + "\n");
      }
    }

    if (simulate->parsed()) {
      const dpc::json config = load_json_file(st.config_path);
      dpc::json report;
      if (costa_mi->parsed()) {
        const dpc::McConfig cfg = dpc::mc_config_from_json(config);
        report = dpc::to_json(dpc::estimate_costa_rate(cfg));
        report["mode"] = "costa-mi";
      } else {
        const dpc::ModuloDemoConfig cfg = dpc::modulo_config_from_json(config);
        report = dpc::to_json(dpc::modulo_dpc_demo(cfg));
        report["mode"] = "modulo-demo";
      }
      report["config"] = config;
      write_output(st.out.path, report.dump(2) + "\n");
    }

    if (oracle->parsed()) {
      dpc::json instance_json = load_json_file(st.instance_path);
      if (st.u_size_override > 0) {
        instance_json["u_size"] = st.u_size_override;
      }
      const dpc::DiscreteGpInstance instance = dpc::gp_instance_from_json(instance_json);
      dpc::GpSearchOptions options;
      options.max_maps = st.max_maps;
      options.refine = !st.no_refine;
      const dpc::GpSearchResult result =
          dpc::gp_capacity_bruteforce(instance, st.grid_levels, options);
      dpc::json report = dpc::to_json(result);
      report["grid_levels"] = st.grid_levels;
      report["instance"] = instance_json;
      write_output(st.out.path, report.dump(2) + "\n");
    }
  } catch (const dpc::BudgetError& e) {
    std::cerr << dpc::json{{"error", e.what()},
                           {"required_budget", e.required},
                           {"allowed_budget", e.allowed}}
                     .dump()
              << '\n';
    return kExitBudgetExceeded;
  } catch (const dpc::DomainError& e) {
    std::cerr << dpc::json{{"error", e.what()}}.dump() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << dpc::json{{"error", e.what()}}.dump() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
