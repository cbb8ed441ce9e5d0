#include <doctest.h>

#include <set>

#include "idemca/finite.hpp"

using namespace idemca;

namespace {

FiniteFunction fn(std::vector<int> images) { return FiniteFunction{std::move(images)}; }

/// All functions on a domain of the given size, mixed-radix order.
std::vector<FiniteFunction> all_functions(int size) {
    std::vector<FiniteFunction> out;
    FiniteFunction f;
    f.images.assign(static_cast<std::size_t>(size), 0);
    while (true) {
        out.push_back(f);
        int pos = size - 1;
        while (pos >= 0 && f.images[static_cast<std::size_t>(pos)] == size - 1)
            f.images[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++f.images[static_cast<std::size_t>(pos)];
    }
    return out;
}

/// Independent ground truth: BFS closure of the idempotents under
/// composition, identity included as the empty product.
std::set<std::vector<int>> idempotent_closure(int size) {
    std::vector<std::vector<int>> generators;
    for (const FiniteFunction& f : all_functions(size))
        if (f.is_idempotent()) generators.push_back(f.images);
    std::set<std::vector<int>> closure{FiniteFunction::identity(size).images};
    std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                std::vector<int> gx(x.size()), xg(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) {
                    gx[i] = g[static_cast<std::size_t>(x[i])];
                    xg[i] = x[static_cast<std::size_t>(g[i])];
                }
                if (closure.insert(gx).second) next.push_back(gx);
                if (closure.insert(xg).second) next.push_back(xg);
            }
        }
        frontier = std::move(next);
    }
    return closure;
}

std::shared_ptr<const PeriodicCarrier> carrier(int k, int m) {
    return std::make_shared<const PeriodicCarrier>(k, m);
}

}  // namespace

TEST_CASE("finite decomposition examples") {
    const FiniteFactorization empty = decompose_finite(FiniteFunction::identity(5));
    CHECK(empty.factors.empty());
    CHECK(verify_factorization(empty));

    const FiniteFactorization fact = decompose_finite(fn({0, 0, 1}));
    CHECK_FALSE(fact.factors.empty());
    CHECK(verify_factorization(fact));

    CHECK_THROWS_AS(decompose_finite(fn({1, 0})), NotDecomposable);
}

TEST_CASE("decomposition succeeds exactly on the idempotent closure") {
    for (int size = 1; size <= 4; ++size) {
        const std::set<std::vector<int>> closure = idempotent_closure(size);
        std::size_t expected = 0;
        for (const FiniteFunction& f : all_functions(size)) {
            const bool in_closure = closure.contains(f.images);
            CHECK(in_closure == (f.is_identity() || !f.is_bijection()));
            if (in_closure) ++expected;
            try {
                const FiniteFactorization fact = decompose_finite(f);
                CHECK(in_closure);
                CHECK(verify_factorization(fact));
                for (const FiniteFunction& factor : fact.factors) CHECK(factor.is_idempotent());
            } catch (const NotDecomposable&) {
                CHECK_FALSE(in_closure);
            }
        }
        CHECK(closure.size() == expected);
    }
}

TEST_CASE("verify_factorization rejects broken factor lists") {
    FiniteFactorization bogus;
    bogus.target = fn({0, 0});
    bogus.factors = {fn({1, 0})};  // a swap is not idempotent
    CHECK_FALSE(verify_factorization(bogus));

    FiniteFactorization wrong;
    wrong.target = fn({0, 0});
    wrong.factors = {FiniteFunction::identity(2)};  // composes to id, not the target
    CHECK_FALSE(verify_factorization(wrong));
}

TEST_CASE("periodic carrier structure") {
    const auto c = carrier(2, 3);
    CHECK(c->size() == 10);  // 2 + 2 + 6 points
    CHECK(c->orbit_count() == 5);

    for (int i = 0; i < c->size(); ++i) {
        const int p = c->period(i);
        CHECK(c->rotate(i, p) == i);
        CHECK(c->orbit_period(c->orbit_of(i)) == p);
        // The representative reaches the point by its recorded phase.
        CHECK(c->rotate(c->orbit_rep(c->orbit_of(i)), c->phase_of(i)) == i);
    }

    const auto empty = carrier(2, 0);
    CHECK(empty->size() == 0);
    CHECK(empty->orbit_count() == 0);
}

TEST_CASE("equivariant maps validate their structure") {
    const auto c = carrier(2, 2);
    CHECK(EquivariantMap::identity(c).is_identity());

    // period_word order: 0, 1, 01, 10 -> indices 0, 1, 2, 3.
    CHECK_THROWS_AS(EquivariantMap(c, {0, 1, 2, 2}), std::invalid_argument);  // not equivariant
    CHECK_THROWS_AS(EquivariantMap(c, {2, 1, 2, 3}), std::invalid_argument);  // period grows

    const EquivariantMap collapse(c, {0, 1, 0, 0});  // both period-2 points to unary 0
    CHECK(collapse.is_equivariant());
    CHECK(collapse.is_idempotent());
}

TEST_CASE("equivariant decomposition examples") {
    const auto c = carrier(2, 3);
    const EquivariantFactorization empty = decompose_equivariant(EquivariantMap::identity(c));
    CHECK(empty.factors.empty());
    CHECK(verify_factorization(empty));

    const auto c2 = carrier(2, 2);
    const EquivariantFactorization fact =
        decompose_equivariant(EquivariantMap(c2, {0, 1, 0, 0}));
    CHECK_FALSE(fact.factors.empty());
    CHECK(verify_factorization(fact));

    // Rotation of the period-2 orbit: onto but not the identity there.
    try {
        decompose_equivariant(EquivariantMap(c2, {0, 1, 3, 2}));
        CHECK(false);
    } catch (const ConditionViolated& e) {
        CHECK(e.period == 2);
        CHECK(format_digits(e.witness_period_word) == "01");
    }
}

TEST_CASE("every map satisfying the orbit condition decomposes, others are rejected") {
    for (int m = 1; m <= 3; ++m) {
        const auto c = carrier(2, m);
        const OracleReport report = monoid_closure_oracle(2, m);
        std::set<std::vector<int>> decomposable;
        for (const EquivariantMap& f : enumerate_equivariant_maps(c)) {
            try {
                const EquivariantFactorization fact = decompose_equivariant(f);
                CHECK(verify_factorization(fact));
                for (const EquivariantMap& factor : fact.factors) {
                    CHECK(factor.is_idempotent());
                    CHECK(factor.is_equivariant());
                }
                decomposable.insert(f.images());
            } catch (const ConditionViolated&) {
            }
        }
        CHECK(decomposable.size() == report.condition_size);
    }
}

TEST_CASE("monoid closure oracle") {
    const OracleReport m1 = monoid_closure_oracle(2, 1);
    CHECK(m1.map_count == 4);
    CHECK(m1.closure_size == 3);  // identity and the two constants
    CHECK(m1.condition_size == 3);
    CHECK(m1.equal);

    const OracleReport m2 = monoid_closure_oracle(2, 2);
    CHECK(m2.map_count == 16);
    CHECK(m2.closure_size == 9);
    CHECK(m2.condition_size == 9);
    CHECK(m2.equal);

    const OracleReport m0 = monoid_closure_oracle(2, 0);
    CHECK(m0.map_count == 1);
    CHECK(m0.closure_size == 1);
    CHECK(m0.condition_size == 1);
    CHECK(m0.equal);
}
