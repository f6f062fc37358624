#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "naed/circuits.hpp"
#include "naed/logical.hpp"
#include "naed/sweep.hpp"
#include "naed/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw naed::ConfigError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw naed::ConfigError("cannot open output file '" + path + "'");
  out << text;
}

naed::ErrorKind parse_error_kind(const std::string& name) {
  if (name == "X") return naed::ErrorKind::X;
  if (name == "Y") return naed::ErrorKind::Y;
  if (name == "Z") return naed::ErrorKind::Z;
  if (name == "PHASE") return naed::ErrorKind::Phase;
  throw naed::ConfigError("unknown error kind '" + name +
                          "' (expected X, Y, Z or PHASE)");
}

struct CommonFlags {
  std::vector<int> n_list;
  std::vector<int> q_list;
  std::uint64_t shots = 8192;
  int reps = 225;
  std::uint64_t seed = 0;
  double p_gate = 0.0;
  double gamma = 0.0;
  std::string paulis = "XYZ";
  std::string out;
  std::string format = "json";
  int threads = 0;
};

naed::SweepConfig to_config(const CommonFlags& flags) {
  naed::SweepConfig config;
  config.n_list = flags.n_list;
  config.q_list = flags.q_list;
  config.shots = flags.shots;
  config.reps = flags.reps;
  config.master_seed = flags.seed;
  config.threads = flags.threads;
  if (flags.p_gate > 0.0 || flags.gamma > 0.0) {
    naed::StochasticModel model;
    model.p_gate = flags.p_gate;
    model.gamma = flags.gamma;
    model.seed = flags.seed;
    model.paulis = flags.paulis;
    config.noise = model;
  }
  return config;
}

void emit_sweep(const naed::SweepResult& result, const CommonFlags& flags) {
  if (flags.format == "json") {
    write_output(flags.out, naed::sweep_to_json(result));
  } else if (flags.format == "csv") {
    write_output(flags.out, naed::sweep_to_csv(result));
  } else {
    throw naed::ConfigError("unknown format '" + flags.format + "'");
  }
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool grid) {
  if (grid) {
    cmd->add_option("--n", flags.n_list, "logical qubit counts")
        ->delimiter(',')
        ->required();
    cmd->add_option("--q", flags.q_list, "physical qubits per logical qubit")
        ->delimiter(',')
        ->required();
  }
  cmd->add_option("--shots", flags.shots, "shots per repetition");
  cmd->add_option("--reps", flags.reps, "repetitions per cell");
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("--p-gate", flags.p_gate, "per-gate Pauli probability");
  cmd->add_option("--gamma", flags.gamma, "per-layer damping probability");
  cmd->add_option("--paulis", flags.paulis, "Pauli subset, e.g. XZ");
  cmd->add_option("--out", flags.out, "output file (default stdout)");
  cmd->add_option("--format", flags.format, "json or csv");
  cmd->add_option("--threads", flags.threads,
                  "worker threads (0: NAEDSIM_THREADS or 1)");
}

int run_main(int argc, char** argv) {
  CLI::App app{"No-ancilla error detection simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  int run_n = 0, run_q = 0;
  auto* run = app.add_subcommand("run", "simulate a single GHZ(N,Q) cell");
  run->add_option("--n", run_n, "logical qubits")->required();
  run->add_option("--q", run_q, "physical qubits per logical qubit")
      ->required();
  add_common(run, run_flags, false);

  CommonFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "simulate a grid of (N,Q) cells");
  add_common(sweep, sweep_flags, true);

  int inj_n = 2, inj_q = 2;
  std::string inj_error = "X", inj_out, inj_format = "json";
  double inj_theta = 0.0, inj_phi = 0.0;
  auto* inj = app.add_subcommand(
      "inject", "exact single-error study at logical boundaries");
  inj->add_option("--n", inj_n, "logical qubits")->required();
  inj->add_option("--q", inj_q, "physical qubits per logical qubit")
      ->required();
  inj->add_option("--error", inj_error, "X, Y, Z or PHASE");
  inj->add_option("--theta", inj_theta, "PHASE theta (radians)");
  inj->add_option("--phi", inj_phi, "PHASE phi (radians)");
  inj->add_option("--out", inj_out, "output file (default stdout)");
  inj->add_option("--format", inj_format, "json or csv");

  auto* verify =
      app.add_subcommand("verify", "run the numerical verification battery");

  std::string parse_in, parse_out;
  auto* parse = app.add_subcommand("parse", "parse DSL, print canonical form");
  parse->add_option("input", parse_in, "DSL file, or - for stdin")
      ->required();
  parse->add_option("--out", parse_out, "output file (default stdout)");

  std::string lower_in, lower_out, lower_s;
  int lower_q = 1;
  bool lower_raw = false;
  auto* lower_cmd = app.add_subcommand(
      "lower", "lower a logical DSL circuit to physical gates");
  lower_cmd->add_option("input", lower_in, "DSL file, or - for stdin")
      ->required();
  lower_cmd->add_option("--q", lower_q, "physical qubits per logical qubit")
      ->required();
  lower_cmd->add_option(
      "--s", lower_s, "comma-separated S set (default: experiment set)");
  lower_cmd->add_flag("--no-simplify", lower_raw,
                      "keep the raw lowered gate list");
  lower_cmd->add_option("--out", lower_out, "output file (default stdout)");

  std::string plot_in, plot_out, plot_metric = "mu_full";
  auto* plot = app.add_subcommand(
      "plotdata", "reshape a sweep result into a heatmap matrix CSV");
  plot->add_option("input", plot_in, "sweep result (.json or .csv)")
      ->required();
  plot->add_option("--metric", plot_metric, "mu_full, mu_naed or p_kept");
  plot->add_option("--out", plot_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  if (run->parsed()) {
    run_flags.n_list = {run_n};
    run_flags.q_list = {run_q};
    emit_sweep(naed::run_sweep(to_config(run_flags)), run_flags);
  } else if (sweep->parsed()) {
    emit_sweep(naed::run_sweep(to_config(sweep_flags)), sweep_flags);
  } else if (inj->parsed()) {
    const auto report = naed::inject_study(
        inj_n, inj_q, parse_error_kind(inj_error), inj_theta, inj_phi);
    if (inj_format == "json") {
      write_output(inj_out, naed::inject_report_to_json(report));
    } else if (inj_format == "csv") {
      write_output(inj_out, naed::inject_report_to_csv(report));
    } else {
      throw naed::ConfigError("unknown format '" + inj_format + "'");
    }
  } else if (verify->parsed()) {
    const naed::VerifyReport report = naed::run_verification();
    for (const auto& line : report.lines) {
      std::printf("%-28s %s  max residual %.3e (tolerance %.0e)\n",
                  line.name.c_str(), line.pass ? "PASS" : "FAIL",
                  line.residual, line.tolerance);
    }
    if (!report.all_pass) {
      std::fprintf(stderr, "verification failed\n");
      return kExitVerify;
    }
  } else if (parse->parsed()) {
    write_output(parse_out, naed::render_dsl(naed::parse_dsl(
                                read_input(parse_in))));
  } else if (lower_cmd->parsed()) {
    const naed::LogicalCircuit logical =
        naed::parse_dsl(read_input(lower_in));
    naed::BitFlipCode code;
    if (lower_cmd->count("--s")) {
      std::set<int> s;
      std::stringstream ss(lower_s);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) s.insert(std::stoi(item));
      }
      code = naed::make_code(lower_q, s);
    } else {
      code = naed::experiment_code(lower_q);
    }
    naed::PhysicalCircuit physical = naed::lower(logical, code);
    if (!lower_raw) physical = naed::simplify(physical);
    write_output(lower_out, naed::render_physical(physical));
  } else if (plot->parsed()) {
    const std::string text = read_input(plot_in);
    const naed::SweepResult result =
        plot_in.size() > 4 && plot_in.substr(plot_in.size() - 4) == ".csv"
            ? naed::read_sweep_csv(text)
            : naed::read_sweep_json(text);
    write_output(plot_out, naed::plotdata_csv(result, plot_metric));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const naed::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}
