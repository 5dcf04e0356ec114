#include "qcsat/amplifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qcsat {

double logistic_step(double x, double a) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("logistic map input must lie in [0,1]");
  if (!(a >= 0.0 && a <= 4.0))
    throw std::invalid_argument("logistic parameter must lie in [0,4]");
  return a * x * (1.0 - x);
}

AmplificationTrace amplify(double q_squared, const LogisticParams& p) {
  if (!(q_squared >= 0.0 && q_squared <= 1.0))
    throw std::invalid_argument("q^2 must lie in [0,1]");
  if (p.max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");

  AmplificationTrace t;
  t.x0 = q_squared;
  t.orbit.reserve(static_cast<std::size_t>(p.max_steps) + 1);
  t.orbit.push_back(q_squared);
  if (q_squared > p.threshold) {
    t.m_star = 0;
    return t;
  }
  double x = q_squared;
  for (int m = 1; m <= p.max_steps; ++m) {
    x = logistic_step(x, p.a);
    t.orbit.push_back(x);
    if (x > p.threshold) {
      t.m_star = m;
      break;
    }
  }
  return t;
}

int t_c(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return 5 * (n - 1) / 4;
}

int default_max_steps(int n) { return std::max(2 * n, t_c(n)); }

StepBounds step_bounds(int n, std::uint64_t r) {
  if (n < 1 || n > 62) throw std::invalid_argument("n out of range");
  if (r < 1 || r > (1ull << n)) throw std::invalid_argument("r must lie in 1..2^n");
  const double raw =
      (static_cast<double>(n - 1) - std::log2(static_cast<double>(r))) / std::log2(kChaosParameter);
  StepBounds b;
  b.lower = std::max(0, static_cast<int>(std::floor(raw)));
  b.upper = t_c(n);
  return b;
}

int empirical_t_c(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("grid sweep limited to 1 <= n <= 20");
  LogisticParams p;
  p.max_steps = default_max_steps(n);
  int worst = 0;
  for (std::uint64_t r = 1; r <= (1ull << (n - 1)); ++r) {
    const AmplificationTrace t = amplify(std::ldexp(static_cast<double>(r), -n), p);
    if (!t.m_star)
      throw std::runtime_error("no crossing within " + std::to_string(p.max_steps) +
                               " steps for r = " + std::to_string(r));
    worst = std::max(worst, *t.m_star);
  }
  return worst;
}

AmplifierState density_view(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("orbit value must lie in [0,1]");
  return AmplifierState{(1.0 + x) / 2.0, (1.0 - x) / 2.0, x};
}

void write_trace_csv(std::ostream& out, const AmplificationTrace& t) {
  char buf[64];
  out << "step,x\n";
  for (std::size_t m = 0; m < t.orbit.size(); ++m) {
    auto [p, ec] =
        std::to_chars(buf, buf + sizeof buf, t.orbit[m], std::chars_format::general, 17);
    out << m << ',';
    out.write(buf, p - buf);
    out << '\n';
  }
  if (t.m_star)
    out << "# m_star=" << *t.m_star << '\n';
  else
    out << "# m_star=none\n";
}

}  // namespace qcsat
