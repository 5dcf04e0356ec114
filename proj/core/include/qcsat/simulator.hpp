#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcsat/circuit.hpp"

namespace qcsat {

inline constexpr int kDefaultDenseWidth = 26;  // 2^26 amplitudes, ~1 GiB
inline constexpr int kHardDenseWidth = 30;     // never allocate beyond this

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kZeroTolerance = 1e-12;

// Throws std::invalid_argument unless 1 <= width <= min(max_width, hard cap).
void check_dense_width(int width, int max_width = kDefaultDenseWidth);

// Dense vector of 2^N complex amplitudes. Basis index bit j-1 carries
// qubit j: qubit 1 is the least significant bit.
class StateVector {
 public:
  explicit StateVector(int width, int max_width = kDefaultDenseWidth);

  int width() const { return width_; }
  std::uint64_t size() const { return amps_.size(); }
  std::complex<double>& amp(std::uint64_t i) { return amps_[i]; }
  const std::complex<double>& amp(std::uint64_t i) const { return amps_[i]; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::span<std::complex<double>> amplitudes() { return amps_; }

  double norm_sq() const;

 private:
  int width_;
  std::vector<std::complex<double>> amps_;
};

// |bits> with bits[j] the value of qubit j+1; bits.size() must equal width.
StateVector basis_state(int width, std::span<const std::uint8_t> bits,
                        int max_width = kDefaultDenseWidth);

// Applies one gate in place. The index space is partitioned into disjoint
// amplitude pairs, so any worker count gives bit-identical results;
// threads = 0 picks one automatically.
void apply_gate(StateVector& s, const Gate& g, unsigned threads = 0);

// Applies the circuit's gates in sequence order.
void run(const Circuit& c, StateVector& s, unsigned threads = 0);

// Measurement statistics of the last register line.
struct MeasurementSummary {
  double q_squared = 0;  // probability of reading 1
  double p_zero = 0;     // independently summed, not 1 - q_squared
  double p_one = 0;

  bool sat() const { return q_squared > kZeroTolerance; }
};

MeasurementSummary success_probability(const StateVector& s, const RegisterLayout& layout);

// Debug dump, one `index,re,im` row per amplitude.
void write_state_csv(std::ostream& out, const StateVector& s);

}  // namespace qcsat
