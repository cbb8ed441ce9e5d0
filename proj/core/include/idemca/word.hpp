#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace idemca {

/// Symbols are small integers 0..k-1; k never exceeds 255 in practice.
using Symbol = std::uint8_t;

/// A finite word over some alphabet {0..k-1}. The alphabet size travels
/// separately (in the CA, the kit, or an explicit parameter).
using Word = std::vector<Symbol>;

/// Alphabet {0..k-1}, k >= 2.
struct Alphabet {
    int k;

    explicit Alphabet(int symbols);
    bool operator==(const Alphabet&) const = default;
};

/// k^e without overflow checks beyond 64 bits; callers gate sizes by budget.
std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

/// Big-endian base-k value of a word (leftmost symbol most significant).
std::uint64_t word_to_index(std::span<const Symbol> w, int k);

/// Inverse of word_to_index for a fixed length.
Word index_to_word(std::uint64_t index, int k, std::size_t length);

/// Digits "0217" -> word; throws std::invalid_argument on characters
/// outside '0'..'9' or digits >= k.
Word parse_digits(const std::string& digits, int k);

/// Word as a digit string, e.g. {1,0,1} -> "101".
std::string format_digits(std::span<const Symbol> w);

bool all_symbols_below(std::span<const Symbol> w, int k);

/// True iff u occurs in w starting at position pos.
bool occurs_at(std::span<const Symbol> w, std::span<const Symbol> u, std::size_t pos);

/// All start positions of u in w, ascending.
std::vector<std::size_t> occurrences(std::span<const Symbol> w, std::span<const Symbol> u);

/// Concatenation helpers used throughout the constructors.
Word concat(std::span<const Symbol> a, std::span<const Symbol> b);
Word concat(std::span<const Symbol> a, std::span<const Symbol> b, std::span<const Symbol> c);

/// Odometer-style increment of a base-k word (rightmost digit least
/// significant); returns false on wrap-around from the all-(k-1) word.
bool next_word(Word& w, int k);

}  // namespace idemca
