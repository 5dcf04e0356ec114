#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace qcsat {

inline constexpr double kChaosParameter = 3.71;
inline constexpr double kCrossingThreshold = 0.5;

struct LogisticParams {
  double a = kChaosParameter;
  double threshold = kCrossingThreshold;
  int max_steps = 64;
};

// x -> a x (1 - x); requires x in [0,1] and a in [0,4], stays in [0,1].
double logistic_step(double x, double a);

struct AmplificationTrace {
  double x0 = 0;
  std::vector<double> orbit;  // x_0 .. x_L, L = min(max_steps, first crossing)
  std::optional<int> m_star;  // first m with x_m > threshold, if reached
};

// Iterates the logistic map on q^2 until the orbit first exceeds the
// threshold (strictly) or max_steps is exhausted.
AmplificationTrace amplify(double q_squared, const LogisticParams& p = {});

// Worst-case amplifier budget floor(5(n-1)/4).
int t_c(int n);

// Covers both the 2n crossing window and the step budget: max(2n, t_c(n)).
int default_max_steps(int n);

// Step bracket for q^2 = r/2^n at a = 3.71:
//   lower = floor((n - 1 - log2 r) / log2 3.71), clamped at 0
//   upper = floor(5(n-1)/4)
struct StepBounds {
  int lower = 0;
  int upper = 0;
};
StepBounds step_bounds(int n, std::uint64_t r);

// Definition-level worst case: the largest first-crossing step over the
// dyadic grid q^2 in { r/2^n : 1 <= r <= 2^(n-1) }. Exhaustive; n <= 20.
int empirical_t_c(int n);

// Diagonal two-level view of one amplifier step value.
struct AmplifierState {
  double diag_plus = 0;   // (1 + x)/2
  double diag_minus = 0;  // (1 - x)/2
  double m_value = 0;     // sigma_3 expectation, equals x
};

AmplifierState density_view(double x);

// CSV rows `step,x` (17 significant digits) with a trailing
// `# m_star=...` comment row.
void write_trace_csv(std::ostream& out, const AmplificationTrace& t);

}  // namespace qcsat
