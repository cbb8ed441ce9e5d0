#include <doctest.h>

#include <random>

#include "idemca/eraser.hpp"
#include "idemca/rule_io.hpp"

using namespace idemca;

namespace {

CellularAutomaton eca(int n) { return CellularAutomaton::elementary(n); }

Word w(const std::string& digits) { return parse_digits(digits, 2); }

}  // namespace

TEST_CASE("surjective sources have no eraser") {
    CHECK_THROWS_AS(build_eraser(eca(204)), SourceIsSurjective);
    CHECK_THROWS_AS(build_eraser(eca(102)), SourceIsSurjective);
}

TEST_CASE("eraser from the and-with-right rule") {
    const Eraser e = build_eraser(eca(136));
    CHECK(e.u() == w("00000"));
    CHECK(e.u_prime() == w("00100"));
    CHECK(e.radius() == 13);

    const EraserReport report = verify_eraser(e, eca(136), 10, 300, 42);
    CHECK(report.idempotent_ok);
    CHECK(report.image_preserved_ok);
    CHECK(report.witness_ok);
}

TEST_CASE("eraser from the constant rule") {
    const Eraser e = build_eraser(eca(0));
    CHECK(e.u() == w("00000"));
    CHECK(e.u_prime() == w("00100"));
    const EraserReport report = verify_eraser(e, eca(0), 8, 200, 7);
    CHECK(report.all_ok());
}

TEST_CASE("eraser leaves occurrence-free configurations unchanged") {
    const Eraser e = build_eraser(eca(136));
    const Word no_u = w("110110110110110110110110110110");
    CHECK(e.rewrite_word(no_u) == no_u);
    CHECK(e.rewrite_cyclic(CyclicWord{w("110")}) == CyclicWord{w("110")});
}

TEST_CASE("eraser changes nothing far from occurrences of u") {
    const Eraser e = build_eraser(eca(136));
    const Word& u = e.u();
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Word x(120);
        for (auto& s : x) s = static_cast<Symbol>(rng() % 2);
        const Word out = e.rewrite_word(x);
        const auto occ = occurrences(x, u);
        for (std::size_t p = 0; p < x.size(); ++p) {
            bool near = false;
            for (std::size_t site : occ) {
                const long long d = static_cast<long long>(p) - static_cast<long long>(site);
                if (d >= -3 * static_cast<long long>(u.size()) &&
                    d <= 4 * static_cast<long long>(u.size()))
                    near = true;
            }
            if (!near) CHECK(out[p] == x[p]);
        }
    }
}

TEST_CASE("window rule agrees with the global pass") {
    const Eraser e = build_eraser(eca(136));
    const CellularAutomaton ca = e.ca();
    const int R = e.radius();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Word x(static_cast<std::size_t>(2 * R + 1) + 20);
        for (auto& s : x) s = static_cast<Symbol>(rng() % 2);
        const Word global = e.rewrite_word(x);
        const Word windowed = apply_to_word(ca, x);
        for (std::size_t j = 0; j < windowed.size(); ++j)
            CHECK(windowed[j] == global[j + static_cast<std::size_t>(R)]);
    }
}

TEST_CASE("disabling the overlap condition breaks idempotency") {
    // Rewriting 110 -> 101 next to a 1 creates a fresh 110 one cell to the
    // left, so the overlap check is what makes the eraser idempotent.
    const Eraser corrupted(Alphabet(2), w("110"), w("101"), 1, false);
    Word x = w("0000000011100000000");
    const Word once = corrupted.rewrite_word(x);
    const Word twice = corrupted.rewrite_word(once);
    CHECK(once != x);
    CHECK(twice != once);

    const Eraser honest(Alphabet(2), w("110"), w("101"), 1, true);
    const Word h_once = honest.rewrite_word(x);
    CHECK(honest.rewrite_word(h_once) == h_once);
}

TEST_CASE("witness pair collides") {
    for (int rule : {0, 128, 136}) {
        const Eraser e = build_eraser(eca(rule));
        const EraserReport report = verify_eraser(e, eca(rule), 4, 50, 1);
        CHECK(report.witness_ok);
    }
}
