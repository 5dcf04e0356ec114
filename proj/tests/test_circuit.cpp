#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "qcsat/circuit.hpp"
#include "test_util.hpp"

using namespace qcsat;
using namespace qcsat::testing;
using G = Gate;

TEST_CASE("compute_layout on the worked four-clause instance") {
  const RegisterLayout lay = compute_layout(make_clause_set(4, kWorkedClauses));
  CHECK(lay.s == std::vector<int>{5, 7, 10, 12});
  CHECK(lay.s_f == 14);
  CHECK(lay.mu == 9);
  CHECK(lay.width == 14);
  CHECK(lay.delta == std::vector<int>{0, 0, 0, 0});
  CHECK(lay.clause_out == std::vector<int>{6, 8, 10, 13});
}

TEST_CASE("compute_layout single-clause and mixed-cardinality cases") {
  const RegisterLayout one = compute_layout(make_clause_set(1, {{1}}));
  CHECK(one.s == std::vector<int>{2});
  CHECK(one.mu == 1);
  CHECK(one.width == 3);
  CHECK(one.clause_out == std::vector<int>{2});

  const RegisterLayout mixed = compute_layout(make_clause_set(3, {{1, 2}, {3}}));
  CHECK(mixed.s == std::vector<int>{4, 5});
  CHECK(mixed.s_f == 6);
  CHECK(mixed.mu == 2);
  CHECK(mixed.width == 6);
  CHECK(mixed.delta == std::vector<int>{0, 1});
  CHECK(mixed.clause_out == std::vector<int>{4, 5});
}

TEST_CASE("layout arithmetic, randomized") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const RandomInstance inst =
        random_instance(rng, {.max_vars = 10, .max_clauses = 12, .max_card = 5});
    const RegisterLayout lay = compute_layout(inst.cs);
    const int m = inst.cs.m();

    CHECK(lay.s[0] == inst.n + 1);
    CHECK(lay.width == inst.n + lay.mu + 1);
    int sum = 0;
    for (const Clause& c : inst.cs.clauses) sum += c.card() + (c.card() == 1);
    if (m >= 2) CHECK(lay.mu == sum - 2);
    else CHECK(lay.mu == sum - 1);

    // the per-position forms of the output lines collapse to one rule
    if (m >= 2) CHECK(lay.clause_out[0] == lay.s[1] - 1);
    for (int k = 2; k <= m - 1; ++k)
      CHECK(lay.clause_out[k - 1] == lay.s[static_cast<std::size_t>(k)] - 2);
    CHECK(lay.clause_out[static_cast<std::size_t>(m - 1)] == lay.width - 1);
    CHECK(std::ranges::is_sorted(lay.clause_out));
    for (int out : lay.clause_out) {
      CHECK(out > inst.n);
      CHECK(out < lay.width);
    }
  }
}

TEST_CASE("expand_or emits the CCX,CX,CX pattern with negation wraps") {
  CHECK(expand_or(1, 4, 5, false, false) ==
        std::vector<G>{G::ccx(1, 4, 5), G::cx(4, 5), G::cx(1, 5)});
  CHECK(expand_or(2, 5, 6, true, false) ==
        std::vector<G>{G::x(2), G::ccx(2, 5, 6), G::cx(5, 6), G::cx(2, 6), G::x(2)});
  CHECK(expand_or(3, 7, 9, true, true) ==
        std::vector<G>{G::x(3), G::x(7), G::ccx(3, 7, 9), G::cx(7, 9), G::cx(3, 9),
                       G::x(7), G::x(3)});
  CHECK_THROWS_AS((void)expand_or(2, 2, 5, false, false), std::invalid_argument);
}

TEST_CASE("doubly negated OR still computes the OR on basis inputs") {
  // on (u,v,w) = (0,0,0) the wrapped pattern must set w, since !0 or !0 = 1
  const auto gates = expand_or(1, 2, 3, true, true);
  std::uint8_t bit[4] = {0, 0, 0, 0};  // 1-based
  for (const G& g : gates) switch (g.kind) {
      case GateKind::kNot: bit[g.target] ^= 1; break;
      case GateKind::kCNot: bit[g.target] ^= bit[g.control1]; break;
      case GateKind::kCCNot: bit[g.target] ^= bit[g.control1] & bit[g.control2]; break;
      default: break;
    }
  CHECK(bit[1] == 0);  // wraps cancel
  CHECK(bit[2] == 0);
  CHECK(bit[3] == 1);
}

TEST_CASE("expand_clause follows the worked instance verbatim") {
  const ClauseSet cs = make_clause_set(4, kWorkedClauses);
  const RegisterLayout lay = compute_layout(cs);

  CHECK(expand_clause(cs, lay, 2) ==
        std::vector<G>{G::ccx(2, 3, 7), G::cx(3, 7), G::cx(2, 7),
                       G::ccx(4, 7, 8), G::cx(7, 8), G::cx(4, 8)});
  CHECK(expand_clause(cs, lay, 4) ==
        std::vector<G>{G::x(1), G::ccx(3, 1, 12), G::cx(1, 12), G::cx(3, 12), G::x(1),
                       G::x(2), G::ccx(2, 12, 13), G::cx(12, 13), G::cx(2, 13), G::x(2)});
}

TEST_CASE("expand_clause single-literal forms") {
  const ClauseSet pos = make_clause_set(1, {{1}});
  CHECK(expand_clause(pos, compute_layout(pos), 1) == std::vector<G>{G::cx(1, 2)});

  const ClauseSet neg = make_clause_set(1, {{-1}});
  CHECK(expand_clause(neg, compute_layout(neg), 1) ==
        std::vector<G>{G::cx(1, 2), G::x(2)});
}

TEST_CASE("expand_and_chain forms") {
  const ClauseSet worked = make_clause_set(4, kWorkedClauses);
  CHECK(expand_and_chain(worked, compute_layout(worked)) ==
        std::vector<G>{G::ccx(6, 8, 9), G::ccx(9, 10, 11), G::ccx(11, 13, 14)});

  const ClauseSet one = make_clause_set(1, {{1}});
  CHECK(expand_and_chain(one, compute_layout(one)) == std::vector<G>{G::cx(2, 3)});

  // two single-literal clauses: one CCX of the two copies onto the last line
  const ClauseSet two = make_clause_set(2, {{1}, {2}});
  const RegisterLayout lay = compute_layout(two);
  CHECK(lay.width == 5);
  CHECK(expand_and_chain(two, lay) == std::vector<G>{G::ccx(3, 4, 5)});
}

TEST_CASE("synthesize reproduces the worked circuit gate for gate") {
  const Circuit c = synthesize(make_clause_set(4, kWorkedClauses));
  const std::vector<G> expected = {
      G::h(1), G::h(2), G::h(3), G::h(4),
      // C1 = {x1, x4, !x2}
      G::ccx(1, 4, 5), G::cx(4, 5), G::cx(1, 5),
      G::x(2), G::ccx(2, 5, 6), G::cx(5, 6), G::cx(2, 6), G::x(2),
      // C2 = {x2, x3, x4}
      G::ccx(2, 3, 7), G::cx(3, 7), G::cx(2, 7),
      G::ccx(4, 7, 8), G::cx(7, 8), G::cx(4, 8),
      // C3 = {x1, !x3}
      G::x(3), G::ccx(1, 3, 10), G::cx(3, 10), G::cx(1, 10), G::x(3),
      // C4 = {x3, !x1, !x2}
      G::x(1), G::ccx(3, 1, 12), G::cx(1, 12), G::cx(3, 12), G::x(1),
      G::x(2), G::ccx(2, 12, 13), G::cx(12, 13), G::cx(2, 13), G::x(2),
      // conjunction chain
      G::ccx(6, 8, 9), G::ccx(9, 10, 11), G::ccx(11, 13, 14)};
  CHECK(c.width == 14);
  CHECK(c.gates == expected);
}

TEST_CASE("synthesize smallest instance") {
  const Circuit c = synthesize(make_clause_set(1, {{1}}));
  CHECK(c.width == 3);
  CHECK(c.gates == std::vector<G>{G::h(1), G::cx(1, 2), G::cx(2, 3)});
}

TEST_CASE("gate_census on the pinned circuits") {
  const Circuit worked = synthesize(make_clause_set(4, kWorkedClauses));
  const GateCensus census = gate_census(worked);
  CHECK(census.hadamards == 4);
  CHECK(census.nots == 8);
  CHECK(census.cnots == 14);
  CHECK(census.ccnots == 10);  // 7 from ORs, 3 from the AND chain
  CHECK(census.total() == 36);

  const GateCensus logic = gate_census(worked.logic_only());
  CHECK(logic.hadamards == 0);
  CHECK(logic.total() == census.total() - 4);

  CHECK(gate_census(synthesize(make_clause_set(1, {{1}}))).total() == 3);
}

TEST_CASE("structural circuit invariants, randomized") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const RandomInstance inst =
        random_instance(rng, {.max_vars = 8, .max_clauses = 10, .max_card = 4});
    const Circuit c = synthesize(inst.cs);
    const int n = inst.n;

    int leading_h = 0;
    for (const Gate& g : c.gates) {
      CHECK(g.target >= 1);
      CHECK(g.target <= c.width);
      CHECK(g.control1 <= c.width);
      CHECK(g.control2 <= c.width);
      if (g.kind == GateKind::kHadamard) {
        CHECK(g.target <= n);  // only variable lines are put in superposition
        ++leading_h;
      }
      if (g.kind == GateKind::kCNot || g.kind == GateKind::kCCNot)
        CHECK(g.target > n);  // variable lines are never overwritten
    }
    CHECK(leading_h == n);

    // each composite writes its own fresh work lines: across clause groups
    // and AND-chain gates, the written dust lines are pairwise disjoint
    std::set<int> written;
    auto claim_targets = [&](const std::vector<Gate>& group) {
      std::set<int> mine;
      for (const Gate& g : group)
        if (g.target > n) mine.insert(g.target);  // X wraps on variables cancel
      for (int t : mine) CHECK(!written.contains(t));
      written.insert(mine.begin(), mine.end());
    };
    for (int k = 1; k <= inst.cs.m(); ++k)
      claim_targets(expand_clause(inst.cs, c.layout, k));
    for (const Gate& g : expand_and_chain(inst.cs, c.layout))
      claim_targets({g});
    CHECK(written.contains(c.width));
  }
}

TEST_CASE("circuit text form is pinned") {
  const std::string text = circuit_to_string(synthesize(make_clause_set(1, {{1}})));
  CHECK(text ==
        "qubits 3\n"
        "# n=1 m=1 mu=1 s_f=3\n"
        "# s_k=2\n"
        "# clause_out=2\n"
        "H 1\n"
        "CX 1 2\n"
        "CX 2 3\n");
}

TEST_CASE("gate list round-trips through the text form") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const RandomInstance inst = random_instance(rng, {.max_vars = 7, .max_clauses = 9});
    const Circuit c = synthesize(inst.cs);
    std::istringstream in(circuit_to_string(c));
    const auto [width, gates] = read_gate_list(in);
    CHECK(width == c.width);
    CHECK(gates == c.gates);
  }
}

TEST_CASE("read_gate_list rejects junk") {
  std::istringstream missing("H 1\n");
  CHECK_THROWS_AS((void)read_gate_list(missing), std::runtime_error);
  std::istringstream bad("qubits 3\nROT 1\n");
  CHECK_THROWS_AS((void)read_gate_list(bad), std::runtime_error);
  std::istringstream wide("qubits 3\nCX 1 4\n");
  CHECK_THROWS_AS((void)read_gate_list(wide), std::runtime_error);
}
