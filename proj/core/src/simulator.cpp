#include "qcsat/simulator.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace qcsat {

void check_dense_width(int width, int max_width) {
  if (width < 1) throw std::invalid_argument("state width must be >= 1");
  if (width > kHardDenseWidth)
    throw std::invalid_argument("state width " + std::to_string(width) +
                                " beyond hard cap " + std::to_string(kHardDenseWidth));
  if (width > max_width)
    throw std::invalid_argument("state width " + std::to_string(width) +
                                " beyond configured cap " + std::to_string(max_width));
}

StateVector::StateVector(int width, int max_width) : width_(width) {
  check_dense_width(width, max_width);
  amps_.assign(1ull << width, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

double StateVector::norm_sq() const {
  double total = 0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

StateVector basis_state(int width, std::span<const std::uint8_t> bits, int max_width) {
  if (static_cast<int>(bits.size()) != width)
    throw std::invalid_argument("bit pattern length must equal state width");
  StateVector s(width, max_width);
  std::uint64_t index = 0;
  for (int j = 0; j < width; ++j)
    if (bits[static_cast<std::size_t>(j)]) index |= 1ull << j;
  s.amp(0) = {0.0, 0.0};
  s.amp(index) = {1.0, 0.0};
  return s;
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210484903928;

// Re-spreads the bits of x so position `pos` becomes a zero bit: the pair
// iteration trick used by dense simulators.
inline std::uint64_t insert_zero(std::uint64_t x, int pos) {
  const std::uint64_t low = x & ((1ull << pos) - 1);
  return ((x >> pos) << (pos + 1)) | low;
}

void check_lines(const StateVector& s, const Gate& g) {
  for (int q : {g.target, g.control1, g.control2})
    if (q > s.width())
      throw std::out_of_range("gate line " + std::to_string(q) +
                              " beyond state width " + std::to_string(s.width()));
}

void apply_not(StateVector& s, int target, unsigned threads) {
  const int pt = target - 1;
  const std::uint64_t tmask = 1ull << pt;
  auto* amps = s.amplitudes().data();
  detail::parallel_for(s.size() >> 1, threads, [=](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t i0 = insert_zero(i, pt);
      std::swap(amps[i0], amps[i0 | tmask]);
    }
  });
}

void apply_cnot(StateVector& s, int control, int target, unsigned threads) {
  const int pc = control - 1, pt = target - 1;
  const std::uint64_t cmask = 1ull << pc;
  const std::uint64_t tmask = 1ull << pt;
  const int lowpos = std::min(pc, pt), highpos = std::max(pc, pt);
  auto* amps = s.amplitudes().data();
  detail::parallel_for(s.size() >> 2, threads, [=](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t i0 = insert_zero(insert_zero(i, lowpos), highpos) | cmask;
      std::swap(amps[i0], amps[i0 | tmask]);
    }
  });
}

void apply_ccnot(StateVector& s, int c1, int c2, int target, unsigned threads) {
  const std::uint64_t cmask = (1ull << (c1 - 1)) | (1ull << (c2 - 1));
  const std::uint64_t tmask = 1ull << (target - 1);
  std::array<int, 3> pos = {c1 - 1, c2 - 1, target - 1};
  std::sort(pos.begin(), pos.end());
  auto* amps = s.amplitudes().data();
  detail::parallel_for(s.size() >> 3, threads, [=](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t base =
          insert_zero(insert_zero(insert_zero(i, pos[0]), pos[1]), pos[2]);
      const std::uint64_t i0 = base | cmask;
      std::swap(amps[i0], amps[i0 | tmask]);
    }
  });
}

void apply_hadamard(StateVector& s, int target, unsigned threads) {
  const int pt = target - 1;
  const std::uint64_t tmask = 1ull << pt;
  auto* amps = s.amplitudes().data();
  detail::parallel_for(s.size() >> 1, threads, [=](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t i0 = insert_zero(i, pt);
      const std::uint64_t i1 = i0 | tmask;
      const std::complex<double> a0 = amps[i0];
      const std::complex<double> a1 = amps[i1];
      amps[i0] = (a0 + a1) * kInvSqrt2;
      amps[i1] = (a0 - a1) * kInvSqrt2;
    }
  });
}

}  // namespace

void apply_gate(StateVector& s, const Gate& g, unsigned threads) {
  check_lines(s, g);
  switch (g.kind) {
    case GateKind::kNot: apply_not(s, g.target, threads); break;
    case GateKind::kCNot: apply_cnot(s, g.control1, g.target, threads); break;
    case GateKind::kCCNot: apply_ccnot(s, g.control1, g.control2, g.target, threads); break;
    case GateKind::kHadamard: apply_hadamard(s, g.target, threads); break;
  }
}

void run(const Circuit& c, StateVector& s, unsigned threads) {
  if (c.width != s.width())
    throw std::invalid_argument("circuit width " + std::to_string(c.width) +
                                " does not match state width " +
                                std::to_string(s.width()));
  for (const Gate& g : c.gates) apply_gate(s, g, threads);
}

MeasurementSummary success_probability(const StateVector& s, const RegisterLayout& layout) {
  if (layout.width != s.width())
    throw std::invalid_argument("layout width does not match state width");
  const std::uint64_t result_mask = 1ull << (s.width() - 1);
  MeasurementSummary summary;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    const double p = std::norm(s.amp(i));
    if (i & result_mask)
      summary.p_one += p;
    else
      summary.p_zero += p;
  }
  summary.q_squared = summary.p_one;
  return summary;
}

void write_state_csv(std::ostream& out, const StateVector& s) {
  char buf[64];
  auto put = [&](double v) {
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.write(buf, p - buf);
  };
  out << "index,re,im\n";
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    out << i << ',';
    put(s.amp(i).real());
    out << ',';
    put(s.amp(i).imag());
    out << '\n';
  }
}

}  // namespace qcsat
