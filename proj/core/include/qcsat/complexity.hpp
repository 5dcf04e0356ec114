#pragma once

#include <cstdint>

#include "qcsat/cnf.hpp"
#include "qcsat/circuit.hpp"

namespace qcsat {

struct ComplexityReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t t_q_measured = 0;          // gate census total
  std::int64_t t_q_closed_form = 0;       // always equals the census
  std::int64_t t_q_excluding_copies = 0;  // same formula without the copy gates
  std::int64_t t_q_bound = 0;             // 8mn - 2m + n - 1
  std::int64_t t_c = 0;                   // floor(5(n-1)/4)
  std::int64_t total = 0;                 // t_q_measured * t_c
  std::int64_t total_bound = 0;           // t_q_bound * t_c

  friend bool operator==(const ComplexityReport&, const ComplexityReport&) = default;
};

// Gate count of the synthesized circuit in closed form: per clause,
// 3(card-1) CCX/CX plus two X per negated literal when card >= 2, or one
// copy CX plus at most one X when card == 1; plus the AND chain and the
// Hadamard prefix.
std::int64_t t_q_closed_form(const ClauseSet& cs);

// The OR/AND/Hadamard terms alone: 3 sum(card-1) + 2 (negated literals)
// + (m-1) + n. Smaller than the census whenever copy gates are emitted
// (single-literal clauses, or m == 1).
std::int64_t t_q_excluding_copies(const ClauseSet& cs);

std::int64_t t_q_bound(std::int64_t n, std::int64_t m);

// Populates every field and enforces the report invariants; a violation
// signals a compiler or census bug and throws std::runtime_error.
ComplexityReport make_report(const ClauseSet& cs, const GateCensus& census);

}  // namespace qcsat
