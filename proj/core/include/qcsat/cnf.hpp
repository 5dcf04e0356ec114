#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcsat {

// A Boolean variable or its negation. Variables are numbered from 1.
struct Literal {
  int variable = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Builds a literal from the DIMACS convention: +v is x_v, -v its negation.
Literal lit(int dimacs);

// Disjunction of literals. Input order is preserved; a variable may appear
// at most once, so repeated literals and tautological pairs are rejected.
struct Clause {
  std::vector<Literal> literals;

  int card() const { return static_cast<int>(literals.size()); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

// Conjunction of clauses over variables x_1..x_n.
struct ClauseSet {
  int n = 0;
  std::vector<Clause> clauses;

  int m() const { return static_cast<int>(clauses.size()); }
  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

// One truth assignment; bits[i] is the value of x_{i+1}.
struct Assignment {
  std::vector<std::uint8_t> bits;

  int n() const { return static_cast<int>(bits.size()); }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Assignment from the n-bit value b, x_1 taken from the least significant bit.
Assignment assignment_from_index(std::uint64_t b, int n);

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Validating constructors. Throw std::invalid_argument on a broken invariant
// (empty clause, duplicate variable, variable out of range, no clauses).
Clause make_clause(const std::vector<int>& dimacs_literals);
ClauseSet make_clause_set(int n, const std::vector<std::vector<int>>& clauses);
void validate(const ClauseSet& cs);

// DIMACS CNF: `c` comment lines, one `p cnf <n> <m>` header, clauses as
// signed nonzero integers terminated by 0, free whitespace.
ClauseSet parse_dimacs(std::istream& in);
ClauseSet parse_dimacs(std::string_view text);

bool eval_clause(const Assignment& a, const Clause& c);
bool eval_clause_set(const Assignment& a, const ClauseSet& cs);

struct Enumeration {
  std::uint64_t count = 0;             // number of satisfying assignments
  std::vector<Assignment> witnesses;   // all of them, in lexicographic order
};

inline constexpr int kMaxExhaustiveVars = 30;

// Exhaustive sweep over all 2^n assignments (n <= 30). threads = 0 picks a
// worker count automatically; the result is identical to the sequential sweep.
Enumeration enumerate_satisfying(const ClauseSet& cs, unsigned threads = 0);

}  // namespace qcsat
