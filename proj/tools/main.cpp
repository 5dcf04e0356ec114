#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcsat/amplifier.hpp"
#include "qcsat/circuit.hpp"
#include "qcsat/cnf.hpp"
#include "report.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitError = 2;

qcsat::ClauseSet load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open `" + path + "`");
  return qcsat::parse_dimacs(in);
}

void write_double(std::ostream& out, double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.write(buf, p - buf);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open `" + path + "` for writing");
  return out;
}

struct AmplifyOptions {
  std::string q2_text;
  int n = 0;
  std::uint64_t r = 1;
  double a = qcsat::kChaosParameter;
  std::optional<int> max_steps;
  bool sweep = false;
  std::string trace_path;
};

int run_amplify(const AmplifyOptions& opt) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opt.trace_path.empty()) {
    file = open_output(opt.trace_path);
    out = &file;
  }

  qcsat::LogisticParams params;
  params.a = opt.a;

  if (opt.sweep) {
    if (opt.n < 1) throw std::runtime_error("--sweep requires --n");
    params.max_steps = opt.max_steps.value_or(qcsat::default_max_steps(opt.n));
    *out << "r,q2,m_star,x_max\n";
    for (std::uint64_t r = 1; r <= (1ull << (opt.n - 1)); ++r) {
      const double q2 = std::ldexp(static_cast<double>(r), -opt.n);
      const auto trace = qcsat::amplify(q2, params);
      *out << r << ',';
      write_double(*out, q2);
      *out << ',' << (trace.m_star ? *trace.m_star : -1) << ',';
      write_double(*out, trace.orbit.back());
      *out << '\n';
    }
    return 0;
  }

  double q2 = 0;
  if (!opt.q2_text.empty()) {
    q2 = qcsat::cli::parse_probability(opt.q2_text);
    params.max_steps = opt.max_steps.value_or(
        opt.n >= 1 ? qcsat::default_max_steps(opt.n) : params.max_steps);
  } else if (opt.n >= 1) {
    if (opt.r > (1ull << opt.n)) throw std::runtime_error("r exceeds 2^n");
    q2 = std::ldexp(static_cast<double>(opt.r), -opt.n);
    params.max_steps = opt.max_steps.value_or(qcsat::default_max_steps(opt.n));
  } else {
    throw std::runtime_error("amplify needs --q2 or --n (with optional --r)");
  }
  qcsat::write_trace_csv(*out, qcsat::amplify(q2, params));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT decision by reversible-circuit simulation and logistic-map amplification"};
  app.require_subcommand(1);

  // solve
  std::string solve_path;
  std::string engine_name;
  qcsat::cli::SolveOptions solve_opt;
  int max_steps_flag = -1;
  auto* solve = app.add_subcommand("solve", "Decide a DIMACS CNF instance and print a JSON report");
  solve->add_option("file", solve_path, "DIMACS CNF file")->required();
  solve->add_option("--engine", engine_name, "Simulation engine")
      ->check(CLI::IsMember({"dense", "table"}));
  solve->add_option("--a", solve_opt.a, "Logistic map parameter");
  solve->add_option("--max-steps", max_steps_flag, "Amplifier step cap");
  solve->add_option("--max-qubits", solve_opt.max_qubits, "Dense state width cap");
  solve->add_option("--trace", solve_opt.trace_path, "Write the amplifier CSV trace here");
  solve->add_option("--dump-state", solve_opt.dump_state_path,
                    "Write the final dense state as CSV (dense engine only)");

  // compile
  std::string compile_path;
  bool logic_only_flag = false;
  auto* compile = app.add_subcommand("compile", "Print the synthesized gate list");
  compile->add_option("file", compile_path, "DIMACS CNF file")->required();
  compile->add_flag("--logic-only", logic_only_flag, "Drop the Hadamard prefix");

  // amplify
  AmplifyOptions amp_opt;
  int amp_max_steps = -1;
  auto* amplify = app.add_subcommand("amplify", "Iterate the logistic map and print a CSV trace");
  amplify->add_option("--q2", amp_opt.q2_text, "Initial probability, decimal or p/q");
  amplify->add_option("--n", amp_opt.n, "Variable count defining the dyadic grid");
  amplify->add_option("--r", amp_opt.r, "Numerator of q^2 = r/2^n");
  amplify->add_option("--a", amp_opt.a, "Logistic map parameter");
  amplify->add_option("--max-steps", amp_max_steps, "Step cap");
  amplify->add_flag("--sweep", amp_opt.sweep, "Emit the per-r first-crossing table");
  amplify->add_option("--trace", amp_opt.trace_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve->parsed()) {
      if (engine_name == "dense") solve_opt.engine = qcsat::cli::Engine::kDense;
      if (engine_name == "table") solve_opt.engine = qcsat::cli::Engine::kTable;
      if (max_steps_flag >= 0) solve_opt.max_steps = max_steps_flag;
      const auto outcome = qcsat::cli::solve_instance(load_instance(solve_path), solve_opt);
      std::cout << outcome.json;
      return outcome.sat ? kExitSat : kExitUnsat;
    }
    if (compile->parsed()) {
      qcsat::Circuit circuit = qcsat::synthesize(load_instance(compile_path));
      if (logic_only_flag) circuit = circuit.logic_only();
      qcsat::write_circuit(std::cout, circuit);
      return 0;
    }
    if (amp_max_steps >= 0) amp_opt.max_steps = amp_max_steps;
    return run_amplify(amp_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
