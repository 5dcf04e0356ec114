#include "report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "qcsat/simulator.hpp"
#include "qcsat/truth_table.hpp"

namespace qcsat::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open `" + path + "` for writing");
  return out;
}

}  // namespace

SolveOutcome solve_instance(const ClauseSet& cs, const SolveOptions& opt) {
  const Circuit circuit = synthesize(cs);
  const RegisterLayout& lay = circuit.layout;

  Engine engine = opt.engine.value_or(lay.width > opt.max_qubits ? Engine::kTable
                                                                 : Engine::kDense);

  std::uint64_t r = 0;
  double q2 = 0;
  std::optional<ExactProbability> exact;
  if (engine == Engine::kDense) {
    StateVector state(lay.width, opt.max_qubits);
    run(circuit, state);
    const MeasurementSummary meas = success_probability(state, lay);
    q2 = meas.q_squared;
    r = static_cast<std::uint64_t>(std::llround(std::ldexp(q2, cs.n)));
    if (!opt.dump_state_path.empty()) {
      auto out = open_output(opt.dump_state_path);
      write_state_csv(out, state);
    }
  } else {
    const TruthTableResult ttr = truth_table_run(cs, circuit);
    r = ttr.satisfying_count;
    exact = ttr.q_squared;
    q2 = ttr.q_squared.value();
  }
  const bool sat = q2 > kZeroTolerance;

  LogisticParams params;
  params.a = opt.a;
  params.max_steps = opt.max_steps.value_or(default_max_steps(cs.n));
  const AmplificationTrace trace = amplify(q2, params);
  if (!opt.trace_path.empty()) {
    auto out = open_output(opt.trace_path);
    write_trace_csv(out, trace);
  }

  const ComplexityReport comp = make_report(cs, gate_census(circuit));

  ordered_json j;
  j["instance"]["n"] = cs.n;
  j["instance"]["m"] = cs.m();
  auto& cards = j["instance"]["cards"] = ordered_json::array();
  for (const auto& c : cs.clauses) cards.push_back(c.card());
  j["layout"]["s"] = lay.s;
  j["layout"]["s_f"] = lay.s_f;
  j["layout"]["mu"] = lay.mu;
  j["layout"]["width"] = lay.width;
  j["layout"]["clause_out"] = lay.clause_out;
  j["engine"] = engine == Engine::kDense ? "dense" : "table";
  j["r"] = r;
  if (exact) j["q2"]["exact"] = exact->str();
  j["q2"]["value"] = q2;
  j["sat"] = sat;
  j["amplifier"]["a"] = params.a;
  j["amplifier"]["max_steps"] = params.max_steps;
  j["amplifier"]["m_star"] =
      trace.m_star ? ordered_json(*trace.m_star) : ordered_json(nullptr);
  j["amplifier"]["orbit_length"] = trace.orbit.size();
  if (r >= 1) {
    const StepBounds bounds = step_bounds(cs.n, r);
    j["amplifier"]["bounds"]["lower"] = bounds.lower;
    j["amplifier"]["bounds"]["upper"] = bounds.upper;
  }
  j["complexity"]["n"] = comp.n;
  j["complexity"]["m"] = comp.m;
  j["complexity"]["t_q_measured"] = comp.t_q_measured;
  j["complexity"]["t_q_closed_form"] = comp.t_q_closed_form;
  j["complexity"]["t_q_excluding_copies"] = comp.t_q_excluding_copies;
  j["complexity"]["t_q_bound"] = comp.t_q_bound;
  j["complexity"]["t_c"] = comp.t_c;
  j["complexity"]["total"] = comp.total;
  j["complexity"]["total_bound"] = comp.total_bound;

  return SolveOutcome{sat, j.dump(2) + "\n"};
}

double parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  double value = 0;
  if (slash != std::string::npos) {
    std::uint64_t num = 0, den = 0;
    const char* nb = text.data();
    const char* db = text.data() + slash + 1;
    auto [np, nec] = std::from_chars(nb, nb + slash, num);
    auto [dp, dec] = std::from_chars(db, text.data() + text.size(), den);
    if (nec != std::errc{} || dec != std::errc{} || np != nb + slash ||
        dp != text.data() + text.size() || den == 0)
      throw std::invalid_argument("bad fraction `" + text + "`");
    value = static_cast<double>(num) / static_cast<double>(den);
  } else {
    const char* b = text.data();
    auto [p, ec] = std::from_chars(b, b + text.size(), value);
    if (ec != std::errc{} || p != b + text.size())
      throw std::invalid_argument("bad probability `" + text + "`");
  }
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("probability must lie in [0,1]");
  return value;
}

}  // namespace qcsat::cli
