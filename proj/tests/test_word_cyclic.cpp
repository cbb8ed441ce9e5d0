#include <doctest.h>

#include <random>
#include <stdexcept>

#include "idemca/cyclic.hpp"
#include "idemca/word.hpp"

using namespace idemca;

TEST_CASE("word index round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 4);
        const std::size_t len = 1 + rng() % 9;
        Word w(len);
        for (auto& s : w) s = static_cast<Symbol>(rng() % k);
        CHECK(index_to_word(word_to_index(w, k), k, len) == w);
    }
    CHECK(word_to_index(parse_digits("101", 2), 2) == 5);
    CHECK(format_digits(index_to_word(5, 2, 3)) == "101");
}

TEST_CASE("digit parsing rejects out-of-range symbols") {
    CHECK_THROWS_AS(parse_digits("012", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_digits("0a1", 2), std::invalid_argument);
    CHECK(parse_digits("0120", 3) == Word{0, 1, 2, 0});
}

TEST_CASE("occurrences") {
    const Word host = parse_digits("0010010", 2);
    const Word pat = parse_digits("001", 2);
    CHECK(occurrences(host, pat) == std::vector<std::size_t>{0, 3});
    CHECK(occurrences(host, parse_digits("11", 2)).empty());
}

TEST_CASE("least cyclic period divides the word length") {
    for (int n = 1; n <= 10; ++n) {
        Word w(static_cast<std::size_t>(n), 0);
        do {
            const int p = least_cyclic_period(w);
            CHECK(n % p == 0);
            // p really is a cyclic period.
            for (int i = 0; i < n; ++i) CHECK(w[i] == w[(i + p) % n]);
        } while (next_word(w, 2));
    }
}

TEST_CASE("cyclic words reduce to their least period and keep phase") {
    const CyclicWord x{parse_digits("0101", 2)};
    CHECK(x.least_period() == 2);
    CHECK(x.period_word() == parse_digits("01", 2));

    const CyclicWord y{parse_digits("10", 2)};
    CHECK_FALSE(x == y);          // different points
    CHECK(x.same_orbit(y));       // same orbit
    CHECK(x.rotate_left(1) == y);
    CHECK(x.rotate_left(2) == x);
    CHECK(x.at(-1) == 1);
    CHECK(x.at(4) == 0);
}

TEST_CASE("canonical form is the lex-least rotation") {
    const CyclicWord x{parse_digits("110", 2)};
    CHECK(x.canonical().period_word() == parse_digits("011", 2));
    CHECK(CyclicWord{parse_digits("000", 2)}.canonical().period_word() == Word{0});
}

TEST_CASE("expansion repeats the period") {
    const CyclicWord x{parse_digits("011", 2)};
    CHECK(x.expand(7) == parse_digits("011011011", 2));
}
