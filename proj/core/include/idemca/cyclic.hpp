#pragma once

#include <compare>
#include <string>

#include "idemca/word.hpp"

namespace idemca {

/// A spatially periodic configuration x with x_i = period_word[i mod p],
/// stored reduced to its least period p. The phase matters: cyclic 01 and
/// cyclic 10 are distinct points of the same shift orbit.
class CyclicWord {
public:
    /// Reduces w to its least cyclic period (which always divides |w|).
    explicit CyclicWord(Word w);

    const Word& period_word() const { return word_; }
    int least_period() const { return static_cast<int>(word_.size()); }

    Symbol at(long long i) const;

    /// The left shift: rotate_left(1) is sigma(x), with sigma(x)_i = x_{i+1}.
    CyclicWord rotate_left(int amount) const;

    /// Orbit representative: the lexicographically least rotation.
    CyclicWord canonical() const;
    bool same_orbit(const CyclicWord& other) const;

    /// Repeat the period word out to at least `min_length` cells.
    Word expand(std::size_t min_length) const;

    std::string str() const;

    bool operator==(const CyclicWord&) const = default;
    auto operator<=>(const CyclicWord&) const = default;

private:
    Word word_;
};

/// Least p such that rotating w by p is the identity; divides |w|.
int least_cyclic_period(const Word& w);

}  // namespace idemca
