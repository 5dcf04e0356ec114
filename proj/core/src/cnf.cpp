#include "qcsat/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <thread>

namespace qcsat {

Literal lit(int dimacs) {
  if (dimacs == 0) throw std::invalid_argument("literal value 0 is reserved");
  return Literal{std::abs(dimacs), dimacs < 0};
}

Assignment assignment_from_index(std::uint64_t b, int n) {
  Assignment a;
  a.bits.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) a.bits[j] = static_cast<std::uint8_t>((b >> j) & 1u);
  return a;
}

namespace {

void check_clause(const Clause& c) {
  if (c.literals.empty()) throw std::invalid_argument("empty clause");
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (c.literals[i].variable < 1)
      throw std::invalid_argument("variable index must be >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (c.literals[i].variable == c.literals[j].variable)
        throw std::invalid_argument("duplicate variable " +
                                    std::to_string(c.literals[i].variable) +
                                    " in clause");
  }
}

}  // namespace

Clause make_clause(const std::vector<int>& dimacs_literals) {
  Clause c;
  c.literals.reserve(dimacs_literals.size());
  for (int v : dimacs_literals) c.literals.push_back(lit(v));
  check_clause(c);
  return c;
}

ClauseSet make_clause_set(int n, const std::vector<std::vector<int>>& clauses) {
  ClauseSet cs;
  cs.n = n;
  cs.clauses.reserve(clauses.size());
  for (const auto& c : clauses) cs.clauses.push_back(make_clause(c));
  validate(cs);
  return cs;
}

void validate(const ClauseSet& cs) {
  if (cs.n < 1) throw std::invalid_argument("variable count must be >= 1");
  if (cs.clauses.empty()) throw std::invalid_argument("clause set must be nonempty");
  for (const auto& c : cs.clauses) {
    check_clause(c);
    for (const auto& l : c.literals)
      if (l.variable > cs.n)
        throw std::invalid_argument("variable index " + std::to_string(l.variable) +
                                    " out of range (n = " + std::to_string(cs.n) + ")");
  }
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_int(std::string_view tok, long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

}  // namespace

ClauseSet parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  long n = 0, m = 0;
  bool have_header = false;
  std::vector<int> pending;
  std::vector<std::vector<int>> clauses;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::string tok;
    if (!(toks >> tok)) continue;  // blank line
    if (tok.front() == 'c') continue;  // comment lines may appear anywhere
    if (!have_header) {
      if (tok != "p") parse_fail(line_no, "expected `p cnf <vars> <clauses>` header");
      std::string fmt;
      if (!(toks >> fmt >> n >> m) || fmt != "cnf" || (toks >> tok))
        parse_fail(line_no, "malformed header");
      if (n < 1) parse_fail(line_no, "variable count must be >= 1");
      if (m < 1) parse_fail(line_no, "clause count must be >= 1");
      have_header = true;
      continue;
    }
    // clause data: signed integers, 0 closes a clause
    do {
      long v;
      if (!parse_int(tok, v)) parse_fail(line_no, "bad token `" + tok + "`");
      if (v == 0) {
        if (pending.empty()) parse_fail(line_no, "empty clause");
        if (static_cast<long>(clauses.size()) == m)
          parse_fail(line_no, "more clauses than declared");
        clauses.push_back(std::move(pending));
        pending.clear();
      } else {
        if (std::abs(v) > n)
          parse_fail(line_no, "variable index " + std::to_string(std::abs(v)) +
                                  " out of range (n = " + std::to_string(n) + ")");
        for (int seen : pending)
          if (std::abs(seen) == std::abs(v))
            parse_fail(line_no, "duplicate variable " + std::to_string(std::abs(v)) +
                                    " in clause");
        pending.push_back(static_cast<int>(v));
      }
    } while (toks >> tok);
  }

  if (!have_header) throw ParseError("missing `p cnf` header");
  if (!pending.empty()) throw ParseError("unterminated clause at end of input");
  if (static_cast<long>(clauses.size()) != m)
    throw ParseError("clause count mismatch: header declares " + std::to_string(m) +
                     ", found " + std::to_string(clauses.size()));
  return make_clause_set(static_cast<int>(n), clauses);
}

ClauseSet parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

bool eval_clause(const Assignment& a, const Clause& c) {
  for (const auto& l : c.literals) {
    const bool value = a.bits[static_cast<std::size_t>(l.variable - 1)] != 0;
    if (value != l.negated) return true;
  }
  return false;
}

bool eval_clause_set(const Assignment& a, const ClauseSet& cs) {
  return std::ranges::all_of(cs.clauses,
                             [&](const Clause& c) { return eval_clause(a, c); });
}

namespace {

// Packed clause over lexicographic bit positions: variable v sits at bit n-v,
// so increasing integer order is lexicographic order on (eps_1,...,eps_n).
struct PackedClause {
  std::uint64_t pos_mask = 0;
  std::uint64_t neg_mask = 0;
};

bool packed_sat(std::uint64_t b, const std::vector<PackedClause>& pc) {
  for (const auto& c : pc)
    if ((b & c.pos_mask) == 0 && (~b & c.neg_mask) == 0) return false;
  return true;
}

}  // namespace

Enumeration enumerate_satisfying(const ClauseSet& cs, unsigned threads) {
  validate(cs);
  if (cs.n > kMaxExhaustiveVars)
    throw std::invalid_argument("exhaustive sweep limited to n <= " +
                                std::to_string(kMaxExhaustiveVars));

  const int n = cs.n;
  std::vector<PackedClause> packed(cs.clauses.size());
  for (std::size_t k = 0; k < cs.clauses.size(); ++k)
    for (const auto& l : cs.clauses[k].literals) {
      const std::uint64_t bit = 1ull << (n - l.variable);
      (l.negated ? packed[k].neg_mask : packed[k].pos_mask) |= bit;
    }

  const std::uint64_t total = 1ull << n;
  if (threads == 0)
    threads = n >= 18 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  threads = std::min<std::uint64_t>(threads, 64);

  auto to_assignment = [n](std::uint64_t b) {
    Assignment a;
    a.bits.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      a.bits[j] = static_cast<std::uint8_t>((b >> (n - 1 - j)) & 1u);
    return a;
  };

  Enumeration result;
  if (threads <= 1) {
    for (std::uint64_t b = 0; b < total; ++b)
      if (packed_sat(b, packed)) result.witnesses.push_back(to_assignment(b));
  } else {
    std::vector<std::vector<Assignment>> parts(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&, lo, hi, t] {
        for (std::uint64_t b = lo; b < hi; ++b)
          if (packed_sat(b, packed)) parts[t].push_back(to_assignment(b));
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts)
      result.witnesses.insert(result.witnesses.end(),
                              std::make_move_iterator(p.begin()),
                              std::make_move_iterator(p.end()));
  }
  result.count = result.witnesses.size();
  return result;
}

}  // namespace qcsat
