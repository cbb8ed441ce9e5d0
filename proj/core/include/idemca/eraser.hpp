#pragma once

#include <optional>
#include <string>

#include "idemca/ca.hpp"
#include "idemca/language.hpp"

namespace idemca {

/// The idempotent non-surjective rewriting automaton built from a diamond
/// (u, u') of a non-surjective CA g. An occurrence of u at [i, i+|u|-1] is
/// rewritten to u' iff
///   (1) u occurs exactly once in x[i-2|u|+1 .. i+3|u|-2], and
///   (2) the rewrite creates no new u overlapping [i, i+|u|-1].
/// Cells outside rewritten occurrences are copied. Then g o E' = g,
/// E' o E' = E', and E' is not surjective.
class Eraser {
public:
    Eraser(Alphabet a, Word u, Word u_prime, int source_radius,
           bool enforce_overlap_condition = true);

    const Word& u() const { return u_; }
    const Word& u_prime() const { return u_prime_; }
    int source_radius() const { return source_radius_; }
    int radius() const { return 3 * static_cast<int>(u_.size()) - 2; }
    int alphabet_size() const { return k_; }

    /// The rewriting rule as a procedural CA of radius 3|u|-2.
    CellularAutomaton ca() const;

    /// Whole-configuration pass; output has the input's length. Positions
    /// closer than radius() to an edge see only the visible cells.
    Word rewrite_word(std::span<const Symbol> x) const;
    CyclicWord rewrite_cyclic(const CyclicWord& x) const;

private:
    bool qualifies(long long i, const std::function<Symbol(long long)>& cell, long long lo,
                   long long hi) const;
    std::vector<long long> rewrite_sites_cyclic(const CyclicWord& x) const;

    int k_;
    Word u_;
    Word u_prime_;
    int source_radius_;
    bool enforce_overlap_condition_;
};

/// Builds the eraser for a non-surjective CA from its minimal diamond.
/// A length-1 rewrite word is padded by one margin cell on each side.
Eraser build_eraser(const CellularAutomaton& g, std::uint64_t budget = kDefaultBudget);

struct EraserReport {
    bool idempotent_ok = true;
    bool image_preserved_ok = true;
    bool witness_ok = true;
    std::optional<CyclicWord> idempotency_cyclic_witness;
    std::optional<Word> idempotency_word_witness;
    std::optional<CyclicWord> image_cyclic_witness;
    std::optional<Word> image_word_witness;
    std::uint64_t configurations_checked = 0;

    bool all_ok() const { return idempotent_ok && image_preserved_ok && witness_ok; }
};

/// Checks, over all cyclic words up to period_bound and seeded random
/// margin-padded words: E'(E'(x)) = E'(x), g(E'(x)) = g(x), and that the
/// isolated-occurrence pair a^inf u b^inf / a^inf u' b^inf collides.
EraserReport verify_eraser(const Eraser& e, const CellularAutomaton& g, int period_bound,
                           int trials, std::uint64_t seed);

}  // namespace idemca
