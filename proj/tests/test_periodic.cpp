#include <doctest.h>

#include <random>
#include <set>

#include "idemca/language.hpp"
#include "idemca/periodic.hpp"
#include "idemca/rule_io.hpp"

using namespace idemca;

namespace {

CellularAutomaton eca(int n) { return CellularAutomaton::elementary(n); }

CellularAutomaton left_shift() { return parse_rule_text("k=2\nr=1\ntable=01010101\n"); }

CyclicWord cyc(const std::string& digits, int k = 2) { return CyclicWord{parse_digits(digits, k)}; }

long long mobius(long long n) {
    long long result = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

long long mobius_count(int k, int n) {
    long long total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        long long power = 1;
        for (int i = 0; i < d; ++i) power *= k;
        total += mobius(n / d) * power;
    }
    return total;
}

}  // namespace

TEST_CASE("periodic point enumeration matches the Mobius count") {
    const PeriodicOrbitSet q1 = enumerate_periodic(2, 1);
    CHECK(q1.points.size() == 2);
    CHECK(q1.orbits.size() == 2);

    const PeriodicOrbitSet q3 = enumerate_periodic(2, 3);
    CHECK(q3.points.size() == 6);
    CHECK(q3.orbits.size() == 2);

    const PeriodicOrbitSet q4 = enumerate_periodic(2, 4);
    CHECK(q4.points.size() == 12);
    CHECK(q4.orbits.size() == 3);

    for (int k = 2; k <= 3; ++k) {
        for (int n = 1; n <= 8; ++n) {
            const PeriodicOrbitSet q = enumerate_periodic(k, n);
            CHECK(static_cast<long long>(q.points.size()) == mobius_count(k, n));
            for (const auto& orbit : q.orbits) CHECK(orbit.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("action on periodic points") {
    const auto xor_action = action_on_periodic(eca(102), 1);
    CHECK(xor_action.at(cyc("0")) == cyc("0"));
    CHECK(xor_action.at(cyc("1")) == cyc("0"));

    const auto id_action = action_on_periodic(eca(204), 5);
    for (const auto& [x, fx] : id_action) CHECK(x == fx);

    const auto and_action = action_on_periodic(eca(136), 2);
    CHECK(and_action.at(cyc("01")) == cyc("0"));
    CHECK(and_action.at(cyc("10")) == cyc("0"));

    for (int rule : {30, 90, 110}) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& [x, fx] : action_on_periodic(eca(rule), n)) {
                CHECK(n % fx.least_period() == 0);
                // Equivariance along the orbit.
                CHECK(apply_to_cyclic(eca(rule), x.rotate_left(1)) == fx.rotate_left(1));
            }
        }
    }
}

TEST_CASE("period-class identity checks") {
    const Eq1Report xor3 = eq1_check(eca(102), 3);
    CHECK_FALSE(xor3.maps_onto);

    const Eq1Report id5 = eq1_check(eca(204), 5);
    CHECK(id5.maps_onto);
    CHECK(id5.is_identity_on);

    const Eq1Report shift2 = eq1_check(left_shift(), 2);
    CHECK(shift2.maps_onto);
    CHECK_FALSE(shift2.is_identity_on);
    CHECK(shift2.violation_witness == cyc("01"));
}

TEST_CASE("bounded scans") {
    CHECK_FALSE(eq1_check_up_to(eca(102), 8).has_value());
    CHECK_FALSE(eq1_check_up_to(eca(204), 8).has_value());

    const auto shift_report = eq1_check_up_to(left_shift(), 4);
    REQUIRE(shift_report.has_value());
    CHECK(shift_report->n == 2);
    CHECK(shift_report->violation_witness == cyc("01"));
}

TEST_CASE("products of idempotent rules never violate the period condition") {
    std::vector<int> idempotent_rules;
    for (int rule = 0; rule < 256; ++rule)
        if (is_idempotent(eca(rule))) idempotent_rules.push_back(rule);
    CHECK(idempotent_rules.size() >= 3);

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int count = 2 + static_cast<int>(rng() % 3);
        CellularAutomaton product = eca(idempotent_rules[rng() % idempotent_rules.size()]);
        for (int i = 1; i < count; ++i)
            product = compose(product, eca(idempotent_rules[rng() % idempotent_rules.size()]));
        CHECK_FALSE(eq1_check_up_to(product, 6).has_value());
        if (is_surjective(product))
            CHECK(equals(product, CellularAutomaton::identity(Alphabet(2))));
    }
}
