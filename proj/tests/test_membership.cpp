#include <doctest.h>

#include <random>

#include "idemca/language.hpp"
#include "idemca/membership.hpp"
#include "idemca/rule_io.hpp"

using namespace idemca;

namespace {

CellularAutomaton eca(int n) { return CellularAutomaton::elementary(n); }

CellularAutomaton left_shift() { return parse_rule_text("k=2\nr=1\ntable=01010101\n"); }

CellularAutomaton cascade3() { return CellularAutomaton::from_table(Alphabet(3), 0, {0, 0, 1}); }

/// k=3 rule depending on (center, right): 0 spreads, unary points all map
/// to 0, mixed 1/2 neighborhoods map to 2.
CellularAutomaton spreading_rule() {
    return CellularAutomaton::procedural(Alphabet(3), 1, [](std::span<const Symbol> w) -> Symbol {
               const Symbol b = w[1], c = w[2];
               if (b == 0 || c == 0 || b == c) return 0;
               return 2;
           })
        .materialized();
}

}  // namespace

TEST_CASE("verdicts pinned by the examples") {
    const MembershipVerdict identity = decide_membership(eca(204), 8);
    CHECK(identity.kind == MembershipVerdict::Kind::In);
    CHECK(identity.certificate == Certificate::Identity);

    const MembershipVerdict xor_rule = decide_membership(eca(102), 8);
    CHECK(xor_rule.kind == MembershipVerdict::Kind::Out);
    CHECK(xor_rule.witness == Witness::SurjectiveNonIdentity);

    const MembershipVerdict shift = decide_membership(left_shift(), 4);
    CHECK(shift.kind == MembershipVerdict::Kind::Out);
    CHECK(shift.witness == Witness::Eq1Violation);
    REQUIRE(shift.eq1_violation.has_value());
    CHECK(shift.eq1_violation->n == 2);
    CHECK(shift.eq1_violation->violation_witness->str() == "01");

    const MembershipVerdict cascade = decide_membership(cascade3(), 5);
    CHECK(cascade.kind == MembershipVerdict::Kind::In);
    CHECK(cascade.certificate == Certificate::EventuallyIdempotent);
    CHECK(cascade.stabilization_power == 2);

    const MembershipVerdict and_right = decide_membership(eca(136), 6);
    CHECK(and_right.kind == MembershipVerdict::Kind::ConsistentUpTo);
    CHECK(and_right.bound == 6);
}

TEST_CASE("idempotent rules certify directly") {
    const MembershipVerdict zero = decide_membership(eca(0), 6);
    CHECK(zero.kind == MembershipVerdict::Kind::In);
    CHECK(zero.certificate == Certificate::Idempotent);
}

TEST_CASE("spreading certificate at a bound too small for stabilization") {
    const CellularAutomaton f = spreading_rule();
    CHECK(spreading_states(f) == std::set<Symbol>{0});
    CHECK(minimal_neighborhood(f).size() >= 2);
    CHECK(is_constant_on_unary(f));
    CHECK_FALSE(is_eventually_idempotent(f, 1).has_value());

    const MembershipVerdict verdict = decide_membership(f, 1);
    CHECK(verdict.kind == MembershipVerdict::Kind::In);
    CHECK(verdict.certificate == Certificate::SpreadingConstantUnary);
    CHECK(verdict.spreading_symbol == Symbol{0});
}

TEST_CASE("out verdicts re-verify") {
    const MembershipVerdict xor_rule = decide_membership(eca(102), 8);
    CHECK(is_surjective(eca(102)));
    CHECK_FALSE(equals(eca(102), CellularAutomaton::identity(Alphabet(2))));

    const MembershipVerdict shift = decide_membership(left_shift(), 4);
    const Eq1Report recheck = eq1_check(left_shift(), shift.eq1_violation->n);
    CHECK(recheck.maps_onto);
    CHECK_FALSE(recheck.is_identity_on);
    const CyclicWord witness = *shift.eq1_violation->violation_witness;
    CHECK_FALSE(apply_to_cyclic(left_shift(), witness) == witness);
}

TEST_CASE("in certificates re-verify") {
    CHECK(equals(compose(eca(0), eca(0)), eca(0)));
    CHECK(equals(power(cascade3(), 3), power(cascade3(), 2)));
    CHECK_FALSE(equals(power(cascade3(), 2), power(cascade3(), 1)));
}

TEST_CASE("verdicts refine but never flip as the bound grows") {
    for (int bound : {1, 2, 4, 6}) {
        CHECK(decide_membership(eca(136), bound).kind == MembershipVerdict::Kind::ConsistentUpTo);
        CHECK(decide_membership(left_shift(), bound).kind == MembershipVerdict::Kind::Out);
        CHECK(decide_membership(eca(204), bound).kind == MembershipVerdict::Kind::In);
    }
}

TEST_CASE("products of idempotent rules are never rejected") {
    std::vector<int> idempotent_rules;
    for (int rule = 0; rule < 256; ++rule)
        if (is_idempotent(eca(rule))) idempotent_rules.push_back(rule);

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        CellularAutomaton product = eca(idempotent_rules[rng() % idempotent_rules.size()]);
        const int extra = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < extra; ++i)
            product = compose(product, eca(idempotent_rules[rng() % idempotent_rules.size()]));
        // Keep the bound small: the stabilization probe at bound b needs
        // tables of radius (b+1) * r.
        CHECK(decide_membership(product, 2).kind != MembershipVerdict::Kind::Out);
    }
}

TEST_CASE("explanations are stable text") {
    const std::string text = explain(decide_membership(eca(102), 8));
    CHECK(text.find("Out(SurjectiveNonIdentity)") != std::string::npos);
    CHECK(explain(decide_membership(eca(204), 8)).find("In(Identity)") != std::string::npos);
    CHECK(explain(decide_membership(eca(136), 4)).find("ConsistentUpTo(4)") != std::string::npos);
    CHECK(explain(decide_membership(left_shift(), 4)).find("Eq1Violation(2, 01)") != std::string::npos);
}
