#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcsat/circuit.hpp"

namespace qcsat {

// Exact dyadic probability r / 2^n.
struct ExactProbability {
  std::uint64_t numerator = 0;   // r
  int log2_denominator = 0;      // n

  double value() const;
  std::string str() const;  // e.g. "7/16"

  friend bool operator==(const ExactProbability&, const ExactProbability&) = default;
};

struct TruthTableResult {
  std::uint64_t satisfying_count = 0;  // r
  ExactProbability q_squared;          // r / 2^n
};

// Classical line values after the logic-only circuit for the 64 assignments
// starting at `base` (base must be 64-aligned). Bit i of word j-1 is the
// value of qubit j on assignment base+i; assignments are indexed with
// variable 1 in the least significant bit, matching the dense engine.
// Rejects circuits containing Hadamards.
std::vector<std::uint64_t> propagate_block(const Circuit& logic, int n, std::uint64_t base);

// Counts satisfying assignments by propagating classical bits through the
// logic-only part of `c`, 64 assignments per machine word. Exact for any
// circuit width; n is capped at 30.
TruthTableResult truth_table_run(const ClauseSet& cs, const Circuit& c, unsigned threads = 0);

}  // namespace qcsat
