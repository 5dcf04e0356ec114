#include "qcsat/complexity.hpp"

#include <stdexcept>
#include <string>

#include "qcsat/amplifier.hpp"

namespace qcsat {

namespace {

std::int64_t negated_count(const Clause& c) {
  std::int64_t negs = 0;
  for (const auto& l : c.literals) negs += l.negated ? 1 : 0;
  return negs;
}

}  // namespace

std::int64_t t_q_closed_form(const ClauseSet& cs) {
  validate(cs);
  std::int64_t sum = 0;
  for (const auto& c : cs.clauses) {
    if (c.card() >= 2)
      sum += 3 * (c.card() - 1) + 2 * negated_count(c);
    else
      sum += 1 + negated_count(c);  // copy, plus the in-place invert
  }
  sum += cs.m() >= 2 ? cs.m() - 1 : 1;  // AND chain, or the m = 1 final copy
  sum += cs.n;                          // Hadamard prefix
  return sum;
}

std::int64_t t_q_excluding_copies(const ClauseSet& cs) {
  validate(cs);
  std::int64_t sum = 0;
  for (const auto& c : cs.clauses) sum += 3 * (c.card() - 1) + 2 * negated_count(c);
  return sum + (cs.m() - 1) + cs.n;
}

std::int64_t t_q_bound(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  return 8 * m * n - 2 * m + n - 1;
}

ComplexityReport make_report(const ClauseSet& cs, const GateCensus& census) {
  ComplexityReport r;
  r.n = cs.n;
  r.m = cs.m();
  r.t_q_measured = census.total();
  r.t_q_closed_form = t_q_closed_form(cs);
  r.t_q_excluding_copies = t_q_excluding_copies(cs);
  r.t_q_bound = t_q_bound(r.n, r.m);
  r.t_c = t_c(cs.n);
  r.total = r.t_q_measured * r.t_c;
  r.total_bound = r.t_q_bound * r.t_c;

  if (r.t_q_measured != r.t_q_closed_form)
    throw std::runtime_error("gate census " + std::to_string(r.t_q_measured) +
                             " disagrees with closed form " +
                             std::to_string(r.t_q_closed_form));
  if (r.t_q_measured > r.t_q_bound)
    throw std::runtime_error("gate census exceeds the 8mn-2m+n-1 bound");
  return r;
}

}  // namespace qcsat
