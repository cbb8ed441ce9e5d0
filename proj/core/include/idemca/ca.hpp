#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "idemca/cyclic.hpp"
#include "idemca/errors.hpp"
#include "idemca/word.hpp"

namespace idemca {

/// A one-dimensional cellular automaton on the full shift over {0..k-1},
/// given by a radius-r local rule. Table-backed when the full table of
/// k^(2r+1) entries is materialized (windows indexed big-endian, leftmost
/// cell most significant), procedural otherwise. Values are immutable and
/// cheap to copy; the table is shared.
class CellularAutomaton {
public:
    using EvalFn = std::function<Symbol(std::span<const Symbol>)>;

    static CellularAutomaton from_table(Alphabet a, int radius, std::vector<Symbol> table);
    static CellularAutomaton procedural(Alphabet a, int radius, EvalFn eval);
    static CellularAutomaton identity(Alphabet a);
    /// Elementary CA in Wolfram numbering: window abc maps to bit 4a+2b+c.
    static CellularAutomaton elementary(int rule);

    int alphabet_size() const { return k_; }
    int radius() const { return radius_; }
    std::size_t window_length() const { return 2 * static_cast<std::size_t>(radius_) + 1; }

    bool has_table() const { return table_ != nullptr; }
    const std::vector<Symbol>& table() const;

    /// Local rule on one window of length 2r+1.
    Symbol eval(std::span<const Symbol> window) const;

    /// Materialize the rule table if within budget; identity otherwise.
    CellularAutomaton materialized(std::uint64_t budget = kDefaultBudget) const;

private:
    CellularAutomaton(int k, int radius, std::shared_ptr<const std::vector<Symbol>> table,
                      EvalFn eval);

    int k_;
    int radius_;
    std::shared_ptr<const std::vector<Symbol>> table_;
    EvalFn eval_;
};

/// Slide the rule over w; output length |w| - 2r. Throws WordTooShort.
Word apply_to_word(const CellularAutomaton& ca, std::span<const Symbol> w);

/// Phase-preserving action on a periodic point: output cell j is the rule
/// applied to the cyclic window around j. The result is reduced to its
/// least period, which divides the input's.
CyclicWord apply_to_cyclic(const CellularAutomaton& ca, const CyclicWord& x);

/// (F o G)(x) = F(G(x)); radius r_F + r_G. Table-backed iff both inputs
/// are and the composed table fits the budget.
CellularAutomaton compose(const CellularAutomaton& f, const CellularAutomaton& g,
                          std::uint64_t budget = kDefaultBudget);

/// n-fold composition; power(ca, 0) is the radius-0 identity.
CellularAutomaton power(const CellularAutomaton& ca, int n,
                        std::uint64_t budget = kDefaultBudget);

/// Extensional equality, decided by enumerating all windows at the common
/// radius max(r_f, r_g). Throws ExhaustiveCheckInfeasible past the budget.
bool equals(const CellularAutomaton& f, const CellularAutomaton& g,
            std::uint64_t budget = kDefaultBudget);

struct AgreementReport {
    bool agree = true;
    std::optional<CyclicWord> cyclic_witness;
    std::optional<Word> word_witness;
    std::uint64_t configurations_checked = 0;
};

/// Testing surrogate for equals() when windows are infeasible: checks all
/// cyclic words of length <= max_period plus seeded random words with full
/// margins. Deterministic for a fixed seed.
AgreementReport sampled_agreement(const CellularAutomaton& f, const CellularAutomaton& g,
                                  int max_period, int random_trials, std::uint64_t seed);

/// Offsets d in [-r, r] the rule actually depends on: d is essential iff
/// two windows differing only at d produce different outputs.
std::set<int> minimal_neighborhood(const CellularAutomaton& ca,
                                   std::uint64_t budget = kDefaultBudget);

bool is_idempotent(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

/// Least m <= bound with ca^(m+1) = ca^m, or nullopt.
std::optional<int> is_eventually_idempotent(const CellularAutomaton& ca, int bound,
                                            std::uint64_t budget = kDefaultBudget);

/// Symbols q such that every window containing q at an offset of the
/// minimal neighborhood outputs q. A minimal neighborhood of size < 2
/// reports no spreading states.
std::set<Symbol> spreading_states(const CellularAutomaton& ca,
                                  std::uint64_t budget = kDefaultBudget);

/// True iff all k unary windows a^(2r+1) map to the same symbol.
bool is_constant_on_unary(const CellularAutomaton& ca);

}  // namespace idemca
