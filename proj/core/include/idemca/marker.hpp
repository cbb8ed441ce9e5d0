#pragma once

#include <cstdint>
#include <vector>

#include "idemca/ca.hpp"
#include "idemca/cyclic.hpp"

namespace idemca {

/// The marker automaton for gap parameter N: position i is marked iff its
/// window x[i-N..i+N] has no period p < N and no strictly higher-priority
/// window is already marked within distance N-1. Priorities are
/// lexicographic on the window; equal-priority marks never conflict, since
/// equal windows closer than N would force a period below N.
///
/// Output 1s are always at least N apart, and an all-zero stretch of
/// length 2N-1 around i certifies that x[i-N..i+N] has a period below N.
class Marker {
public:
    Marker(int k, int N, std::uint64_t budget = kDefaultBudget);

    int alphabet_size() const { return k_; }
    int gap() const { return n_; }
    int window_length() const { return 2 * n_ + 1; }
    std::size_t priority_count() const { return priority_size_; }

    /// Certified radius bound N + (N-1)*|priority list|; evaluation uses a
    /// global pass per configuration instead of this bound.
    long long declared_radius() const {
        return n_ + static_cast<long long>(n_ - 1) * static_cast<long long>(priority_size_);
    }

    /// The marking rule as a procedural CA (outputs in {0,1}).
    CellularAutomaton ca() const;

    /// Marks for the positions with a full window: output length |x| - 2N,
    /// output j describing input position j + N. Throws WordTooShort.
    Word mark_word(std::span<const Symbol> x) const;

    /// Phase-aligned cyclic marking with cyclic suppression distances.
    CyclicWord mark_cyclic(const CyclicWord& x) const;

private:
    long long rank_of(std::span<const Symbol> window) const;

    int k_;
    int n_;
    std::vector<std::int32_t> rank_;  // window index -> priority rank, -1 if periodic
    std::size_t priority_size_;
};

Marker build_marker(int k, int N, std::uint64_t budget = kDefaultBudget);

}  // namespace idemca
