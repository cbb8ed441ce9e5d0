#include <doctest.h>

#include <map>

#include "idemca/language.hpp"
#include "idemca/rule_io.hpp"

using namespace idemca;

namespace {

CellularAutomaton eca(int n) { return CellularAutomaton::elementary(n); }

Word w(const std::string& digits, int k = 2) { return parse_digits(digits, k); }

/// Independent oracle: does any word of length |target| + 2r map onto target?
bool has_preimage(const CellularAutomaton& ca, const Word& target) {
    Word probe(target.size() + 2 * static_cast<std::size_t>(ca.radius()), 0);
    do {
        if (apply_to_word(ca, probe) == target) return true;
    } while (next_word(probe, ca.alphabet_size()));
    return false;
}

/// Brute-force word counting for the avoid-language.
std::uint64_t brute_count_avoiding(const std::vector<Word>& forbidden, int k, int n) {
    if (n == 0) return 1;
    std::uint64_t count = 0;
    Word probe(static_cast<std::size_t>(n), 0);
    do {
        bool clean = true;
        for (const Word& f : forbidden)
            if (!occurrences(probe, f).empty()) {
                clean = false;
                break;
            }
        if (clean) ++count;
    } while (next_word(probe, k));
    return count;
}

}  // namespace

TEST_CASE("image automaton acceptance") {
    const ImageAutomaton id_auto(CellularAutomaton::identity(Alphabet(2)));
    CHECK(id_auto.accepts(w("0110")));

    const ImageAutomaton zero(eca(0));
    CHECK(zero.accepts(w("0000")));
    CHECK_FALSE(zero.accepts(w("1")));

    const ImageAutomaton and_right(eca(136));
    CHECK_FALSE(and_right.accepts(w("101")));
    for (const char* word : {"00", "01", "10", "11"}) CHECK(and_right.accepts(w(word)));
}

TEST_CASE("surjectivity decisions") {
    CHECK(is_surjective(eca(102)));
    CHECK(is_surjective(eca(204)));
    CHECK_FALSE(is_surjective(eca(136)));
}

TEST_CASE("orphans are shortest, lexicographically least, and really orphans") {
    CHECK(find_orphan(eca(136)) == w("101"));
    CHECK_FALSE(find_orphan(eca(102)).has_value());
    CHECK(find_orphan(eca(0)) == w("1"));

    for (int rule : {0, 128, 136, 160, 4}) {
        const auto orphan = find_orphan(eca(rule));
        if (!orphan) continue;
        CHECK_FALSE(has_preimage(eca(rule), *orphan));
        // Shorter words all have preimages.
        if (orphan->size() > 1) {
            Word shorter(orphan->size() - 1, 0);
            do {
                CHECK(has_preimage(eca(rule), shorter));
            } while (next_word(shorter, 2));
        }
    }
}

TEST_CASE("preinjectivity and diamonds") {
    CHECK(is_preinjective(eca(204)));
    CHECK_FALSE(is_preinjective(eca(0)));
    CHECK_FALSE(is_preinjective(eca(136)));

    const auto d0 = find_diamond(eca(0));
    REQUIRE(d0.has_value());
    CHECK(d0->prefix == w("00"));
    CHECK(d0->mid_a == w("0"));
    CHECK(d0->mid_b == w("1"));
    CHECK(d0->suffix == w("00"));
    CHECK(verify_diamond(eca(0), *d0));

    CHECK_FALSE(find_diamond(eca(204)).has_value());

    const auto d136 = find_diamond(eca(136));
    REQUIRE(d136.has_value());
    CHECK(d136->left().size() <= 8);
    CHECK(verify_diamond(eca(136), *d136));
}

TEST_CASE("Moore-Myhill agreement and image balance across all elementary rules") {
    int surjective_count = 0;
    for (int rule = 0; rule < 256; ++rule) {
        const MooreMyhillReport report = moore_myhill_crosscheck(eca(rule));
        CHECK(report.consistent());
        if (!report.surjective) continue;
        ++surjective_count;
        // Balance oracle: surjective rules hit every length-n word with
        // multiplicity exactly k^2 from the length-(n+2) windows.
        for (int n = 1; n <= 6; ++n) {
            std::map<Word, int> hits;
            Word probe(static_cast<std::size_t>(n) + 2, 0);
            do {
                ++hits[apply_to_word(eca(rule), probe)];
            } while (next_word(probe, 2));
            CHECK(hits.size() == (std::size_t{1} << n));
            for (const auto& [image, count] : hits) CHECK(count == 4);
        }
    }
    CHECK(surjective_count == 30);  // classical count of surjective elementary rules
}

TEST_CASE("count_avoiding matches examples and brute force") {
    CHECK(count_avoiding({}, 2, 4) == 16);
    CHECK(count_avoiding({w("11")}, 2, 4) == 8);
    CHECK(count_avoiding({w("0"), w("1")}, 2, 1) == 0);

    for (std::size_t len = 1; len <= 4; ++len) {
        Word f(len, 0);
        do {
            for (int n = 0; n <= 12; ++n) {
                CHECK(count_avoiding({f}, 2, n) == brute_count_avoiding({f}, 2, n));
            }
        } while (next_word(f, 2));
    }
    // A two-word set exercises the shared automaton.
    CHECK(count_avoiding({w("11"), w("00")}, 2, 5) == brute_count_avoiding({w("11"), w("00")}, 2, 5));
}

TEST_CASE("count_avoiding grows when the forbidden word is extended") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(count_avoiding({w("101")}, 2, n) <= count_avoiding({w("1010")}, 2, n));
        CHECK(count_avoiding({w("11")}, 2, n) <= count_avoiding({w("110")}, 2, n));
    }
}

TEST_CASE("mixing of avoid-one-word subshifts") {
    CHECK(is_mixing_avoid(w("11"), 2));        // golden mean shift
    CHECK_FALSE(is_mixing_avoid(w("0"), 2));   // single point
    CHECK_FALSE(is_mixing_avoid(w("01"), 2));  // not transitive
    CHECK(is_mixing_avoid(w("0", 3), 3));      // full shift on two remaining symbols
    CHECK(is_mixing_avoid(w("10100"), 2));
}
