#include "qcsat/truth_table.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace qcsat {

double ExactProbability::value() const {
  return std::ldexp(static_cast<double>(numerator), -log2_denominator);
}

std::string ExactProbability::str() const {
  return std::to_string(numerator) + "/" + std::to_string(1ull << log2_denominator);
}

namespace {

// Bit patterns of variable j+1 over 64 consecutive assignment indices.
constexpr std::uint64_t kVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void propagate_into(std::vector<std::uint64_t>& lines, const Circuit& logic, int n,
                    std::uint64_t base) {
  lines.assign(static_cast<std::size_t>(logic.width), 0);
  for (int j = 0; j < n; ++j)
    lines[static_cast<std::size_t>(j)] =
        j < 6 ? kVarPattern[j] : ((base >> j) & 1u ? ~0ull : 0ull);

  for (const Gate& g : logic.gates) {
    switch (g.kind) {
      case GateKind::kNot:
        lines[static_cast<std::size_t>(g.target - 1)] =
            ~lines[static_cast<std::size_t>(g.target - 1)];
        break;
      case GateKind::kCNot:
        lines[static_cast<std::size_t>(g.target - 1)] ^=
            lines[static_cast<std::size_t>(g.control1 - 1)];
        break;
      case GateKind::kCCNot:
        lines[static_cast<std::size_t>(g.target - 1)] ^=
            lines[static_cast<std::size_t>(g.control1 - 1)] &
            lines[static_cast<std::size_t>(g.control2 - 1)];
        break;
      case GateKind::kHadamard:
        throw std::invalid_argument("Hadamard is not a classical gate");
    }
  }
}

}  // namespace

std::vector<std::uint64_t> propagate_block(const Circuit& logic, int n, std::uint64_t base) {
  if (base % 64 != 0) throw std::invalid_argument("block base must be 64-aligned");
  if (n < 1 || n > logic.width) throw std::invalid_argument("bad variable count");
  std::vector<std::uint64_t> lines;
  propagate_into(lines, logic, n, base);
  return lines;
}

TruthTableResult truth_table_run(const ClauseSet& cs, const Circuit& c, unsigned threads) {
  if (cs.n != c.layout.n)
    throw std::invalid_argument("circuit was synthesized for a different clause set");
  if (cs.n > kMaxExhaustiveVars)
    throw std::invalid_argument("truth-table sweep limited to n <= " +
                                std::to_string(kMaxExhaustiveVars));

  const Circuit logic = c.logic_only();
  const int n = cs.n;
  const std::uint64_t total = 1ull << n;
  const std::uint64_t live = std::min<std::uint64_t>(total, 64);
  const std::uint64_t live_mask = live == 64 ? ~0ull : (1ull << live) - 1;
  const std::uint64_t blocks = (total + 63) / 64;
  const std::size_t last = static_cast<std::size_t>(logic.width - 1);

  // integer sum, so the reduction order cannot change the result
  std::atomic<std::uint64_t> r{0};
  detail::parallel_for(blocks, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> lines;
    std::uint64_t sum = 0;
    for (std::uint64_t b = lo; b < hi; ++b) {
      propagate_into(lines, logic, n, b * 64);
      sum += static_cast<std::uint64_t>(std::popcount(lines[last] & live_mask));
    }
    r.fetch_add(sum, std::memory_order_relaxed);
  });

  const std::uint64_t count = r.load();
  return TruthTableResult{count, ExactProbability{count, n}};
}

}  // namespace qcsat
