#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcsat/cnf.hpp"

namespace qcsat {

enum class GateKind : std::uint8_t { kHadamard, kNot, kCNot, kCCNot };

// One elementary gate over 1-based qubit lines. Unused index fields are 0.
struct Gate {
  GateKind kind = GateKind::kNot;
  int target = 0;
  int control1 = 0;
  int control2 = 0;

  static Gate h(int target);
  static Gate x(int target);
  static Gate cx(int control, int target);
  static Gate ccx(int control1, int control2, int target);

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Work-qubit map for a clause set. Clause k owns the lines starting at s_k;
// its truth value lands on clause_out[k-1]; the full conjunction lands on
// the last line (width).
struct RegisterLayout {
  int n = 0;
  int m = 0;
  std::vector<int> s;           // s[k-1] = s_k, first work line of clause k
  int s_f = 0;                  // one past the last clause work line
  std::vector<int> delta;       // delta[k-1] = 1 iff card(C_k) == 1
  int mu = 0;                   // dust-qubit count
  int width = 0;                // N = n + mu + 1
  std::vector<int> clause_out;  // line holding t(C_k)

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
  RegisterLayout layout;

  // The same circuit without the Hadamard prefix: a classical reversible
  // map on basis states.
  Circuit logic_only() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

RegisterLayout compute_layout(const ClauseSet& cs);

// OR of lines u and v into a fresh zero line w, emitted as CCX, CX, CX
// (the composite's factors applied right to left). A negated input is
// wrapped with X before and after the pattern.
std::vector<Gate> expand_or(int u, int v, int w, bool negate_u, bool negate_v);

// Gates computing t(C_k) onto layout.clause_out[k-1]; k is 1-based.
// Single-literal clauses copy (and invert, when negated) onto s_k; larger
// clauses chain ORs through the clause's work lines.
std::vector<Gate> expand_clause(const ClauseSet& cs, const RegisterLayout& layout, int k);

// Conjunction chain over the clause outputs, ending on the last line.
// For m = 1 this is a single copy of the lone clause output.
std::vector<Gate> expand_and_chain(const ClauseSet& cs, const RegisterLayout& layout);

// Full circuit: Hadamards on x_1..x_n, then the clause ORs in clause order,
// then the AND chain.
Circuit synthesize(const ClauseSet& cs);

struct GateCensus {
  std::int64_t hadamards = 0;
  std::int64_t nots = 0;
  std::int64_t cnots = 0;
  std::int64_t ccnots = 0;

  std::int64_t total() const { return hadamards + nots + cnots + ccnots; }
  friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

GateCensus gate_census(const Circuit& c);

// Line-oriented text form: a `qubits N` header, `# ...` layout comments,
// then one gate per line (`H t`, `X t`, `CX c t`, `CCX c1 c2 t`).
// Byte-identical across platforms.
void write_circuit(std::ostream& out, const Circuit& c);
std::string circuit_to_string(const Circuit& c);

// Reads the gate-list form back (comments ignored); returns width and gates.
std::pair<int, std::vector<Gate>> read_gate_list(std::istream& in);

}  // namespace qcsat
