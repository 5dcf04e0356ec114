#include "qcsat/circuit.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcsat {

namespace {

void require_line(int q) {
  if (q < 1) throw std::invalid_argument("qubit index must be >= 1");
}

void require_distinct(std::initializer_list<int> qs) {
  for (auto i = qs.begin(); i != qs.end(); ++i)
    for (auto j = std::next(i); j != qs.end(); ++j)
      if (*i == *j)
        throw std::invalid_argument("gate lines must be distinct (got " +
                                    std::to_string(*i) + " twice)");
}

}  // namespace

Gate Gate::h(int target) {
  require_line(target);
  return Gate{GateKind::kHadamard, target, 0, 0};
}

Gate Gate::x(int target) {
  require_line(target);
  return Gate{GateKind::kNot, target, 0, 0};
}

Gate Gate::cx(int control, int target) {
  require_line(control);
  require_line(target);
  require_distinct({control, target});
  return Gate{GateKind::kCNot, target, control, 0};
}

Gate Gate::ccx(int control1, int control2, int target) {
  require_line(control1);
  require_line(control2);
  require_line(target);
  require_distinct({control1, control2, target});
  return Gate{GateKind::kCCNot, target, control1, control2};
}

RegisterLayout compute_layout(const ClauseSet& cs) {
  validate(cs);
  const int n = cs.n;
  const int m = cs.m();

  RegisterLayout lay;
  lay.n = n;
  lay.m = m;
  lay.delta.resize(m);
  for (int k = 0; k < m; ++k) lay.delta[k] = cs.clauses[k].card() == 1 ? 1 : 0;

  lay.s.resize(m);
  lay.s[0] = n + 1;
  if (m >= 2) {
    lay.s[1] = lay.s[0] + cs.clauses[0].card() + lay.delta[0] - 1;
    for (int i = 2; i < m; ++i)
      lay.s[i] = lay.s[i - 1] + cs.clauses[i - 1].card() + lay.delta[i - 1];
  }
  lay.s_f = lay.s[m - 1] - 1 + cs.clauses[m - 1].card() + lay.delta[m - 1];
  lay.mu = lay.s_f - 1 - n;
  lay.width = n + lay.mu + 1;

  // t(C_k) always lands card+delta-2 lines past s_k, for every position of
  // k and every cardinality.
  lay.clause_out.resize(m);
  for (int k = 0; k < m; ++k)
    lay.clause_out[k] = lay.s[k] + cs.clauses[k].card() + lay.delta[k] - 2;
  return lay;
}

std::vector<Gate> expand_or(int u, int v, int w, bool negate_u, bool negate_v) {
  require_distinct({u, v, w});
  std::vector<Gate> g;
  g.reserve(3 + 2 * (negate_u + negate_v));
  if (negate_u) g.push_back(Gate::x(u));
  if (negate_v) g.push_back(Gate::x(v));
  g.push_back(Gate::ccx(u, v, w));
  g.push_back(Gate::cx(v, w));
  g.push_back(Gate::cx(u, w));
  if (negate_v) g.push_back(Gate::x(v));
  if (negate_u) g.push_back(Gate::x(u));
  return g;
}

std::vector<Gate> expand_clause(const ClauseSet& cs, const RegisterLayout& layout, int k) {
  if (k < 1 || k > layout.m) throw std::invalid_argument("clause index out of range");
  const Clause& c = cs.clauses[static_cast<std::size_t>(k - 1)];
  const int sk = layout.s[static_cast<std::size_t>(k - 1)];

  std::vector<Gate> g;
  if (c.card() == 1) {
    // copy, then invert in place when the literal is negated
    g.push_back(Gate::cx(c.literals[0].variable, sk));
    if (c.literals[0].negated) g.push_back(Gate::x(sk));
    return g;
  }

  auto append = [&g](std::vector<Gate> part) {
    g.insert(g.end(), part.begin(), part.end());
  };
  append(expand_or(c.literals[0].variable, c.literals[1].variable, sk,
                   c.literals[0].negated, c.literals[1].negated));
  // fold the remaining literals into the running OR; only the fresh literal
  // input is ever negation-wrapped
  for (int i = 1; i <= c.card() - 2; ++i)
    append(expand_or(c.literals[static_cast<std::size_t>(i + 1)].variable,
                     sk + i - 1, sk + i,
                     c.literals[static_cast<std::size_t>(i + 1)].negated, false));
  return g;
}

std::vector<Gate> expand_and_chain(const ClauseSet& cs, const RegisterLayout& layout) {
  if (cs.m() != layout.m) throw std::invalid_argument("layout does not match clause set");
  const int m = layout.m;
  std::vector<Gate> g;
  if (m == 1) {
    // the lone clause output is copied onto the result line
    g.push_back(Gate::cx(layout.clause_out[0], layout.width));
    return g;
  }
  for (int k = 1; k <= m - 2; ++k)
    g.push_back(Gate::ccx(layout.s[static_cast<std::size_t>(k)] - 1,
                          layout.s[static_cast<std::size_t>(k + 1)] - 2,
                          layout.s[static_cast<std::size_t>(k + 1)] - 1));
  g.push_back(Gate::ccx(layout.s[static_cast<std::size_t>(m - 1)] - 1,
                        layout.clause_out[static_cast<std::size_t>(m - 1)],
                        layout.width));
  return g;
}

Circuit synthesize(const ClauseSet& cs) {
  Circuit c;
  c.layout = compute_layout(cs);
  c.width = c.layout.width;
  for (int q = 1; q <= cs.n; ++q) c.gates.push_back(Gate::h(q));
  for (int k = 1; k <= c.layout.m; ++k) {
    auto part = expand_clause(cs, c.layout, k);
    c.gates.insert(c.gates.end(), part.begin(), part.end());
  }
  auto chain = expand_and_chain(cs, c.layout);
  c.gates.insert(c.gates.end(), chain.begin(), chain.end());
  return c;
}

Circuit Circuit::logic_only() const {
  Circuit out;
  out.width = width;
  out.layout = layout;
  std::copy_if(gates.begin(), gates.end(), std::back_inserter(out.gates),
               [](const Gate& g) { return g.kind != GateKind::kHadamard; });
  return out;
}

GateCensus gate_census(const Circuit& c) {
  GateCensus census;
  for (const Gate& g : c.gates) switch (g.kind) {
      case GateKind::kHadamard: ++census.hadamards; break;
      case GateKind::kNot: ++census.nots; break;
      case GateKind::kCNot: ++census.cnots; break;
      case GateKind::kCCNot: ++census.ccnots; break;
    }
  return census;
}

namespace {

void write_int_list(std::ostream& out, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
}

}  // namespace

void write_circuit(std::ostream& out, const Circuit& c) {
  out << "qubits " << c.width << '\n';
  if (c.layout.m > 0) {
    out << "# n=" << c.layout.n << " m=" << c.layout.m << " mu=" << c.layout.mu
        << " s_f=" << c.layout.s_f << '\n';
    out << "# s_k=";
    write_int_list(out, c.layout.s);
    out << '\n';
    out << "# clause_out=";
    write_int_list(out, c.layout.clause_out);
    out << '\n';
  }
  for (const Gate& g : c.gates) switch (g.kind) {
      case GateKind::kHadamard: out << "H " << g.target << '\n'; break;
      case GateKind::kNot: out << "X " << g.target << '\n'; break;
      case GateKind::kCNot: out << "CX " << g.control1 << ' ' << g.target << '\n'; break;
      case GateKind::kCCNot:
        out << "CCX " << g.control1 << ' ' << g.control2 << ' ' << g.target << '\n';
        break;
    }
}

std::string circuit_to_string(const Circuit& c) {
  std::ostringstream out;
  write_circuit(out, c);
  return out.str();
}

std::pair<int, std::vector<Gate>> read_gate_list(std::istream& in) {
  std::string line;
  int width = -1;
  std::vector<Gate> gates;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::string op;
    if (!(toks >> op) || op.starts_with("#")) continue;
    auto fail = [&](const std::string& what) -> void {
      throw std::runtime_error("gate list line " + std::to_string(line_no) + ": " + what);
    };
    if (width < 0) {
      int w;
      if (op != "qubits" || !(toks >> w) || w < 1) fail("expected `qubits <N>` header");
      width = w;
      continue;
    }
    int a = 0, b = 0, t = 0;
    if (op == "H" && (toks >> t)) gates.push_back(Gate::h(t));
    else if (op == "X" && (toks >> t)) gates.push_back(Gate::x(t));
    else if (op == "CX" && (toks >> a >> t)) gates.push_back(Gate::cx(a, t));
    else if (op == "CCX" && (toks >> a >> b >> t)) gates.push_back(Gate::ccx(a, b, t));
    else fail("unrecognized gate `" + op + "`");
    if (gates.back().target > width || gates.back().control1 > width ||
        gates.back().control2 > width)
      fail("line index beyond declared width");
  }
  if (width < 0) throw std::runtime_error("gate list: missing `qubits` header");
  return {width, std::move(gates)};
}

}  // namespace qcsat
