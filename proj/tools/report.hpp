#pragma once

#include <optional>
#include <string>

#include "qcsat/amplifier.hpp"
#include "qcsat/cnf.hpp"
#include "qcsat/circuit.hpp"
#include "qcsat/complexity.hpp"

namespace qcsat::cli {

enum class Engine { kDense, kTable };

struct SolveOptions {
  std::optional<Engine> engine;  // unset: table when width > max_qubits
  double a = kChaosParameter;
  std::optional<int> max_steps;  // unset: max(2n, t_c(n))
  int max_qubits = 26;
  std::string trace_path;        // amplifier CSV, when nonempty
  std::string dump_state_path;   // dense amplitude CSV, when nonempty
};

struct SolveOutcome {
  bool sat = false;
  std::string json;  // one deterministic UTF-8 document
};

// Full pipeline on a parsed instance: synthesize, simulate, amplify,
// account. Writes side files per options; the JSON goes to the caller.
SolveOutcome solve_instance(const ClauseSet& cs, const SolveOptions& opt);

// "p/q" fraction or plain decimal, restricted to [0,1].
double parse_probability(const std::string& text);

}  // namespace qcsat::cli
