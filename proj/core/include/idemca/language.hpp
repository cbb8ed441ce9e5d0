#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "idemca/ca.hpp"

namespace idemca {

using BigInt = boost::multiprecision::cpp_int;

/// Labeled de Bruijn graph of a table-backed CA: nodes are the k^(2r)
/// words of length 2r, node u has one edge per appended symbol s to
/// u[1:]s, labeled by the rule output on the window u·s.
class DeBruijnGraph {
public:
    explicit DeBruijnGraph(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

    int alphabet_size() const { return k_; }
    int order() const { return order_; }
    std::uint64_t node_count() const { return nodes_; }

    std::uint64_t successor(std::uint64_t node, Symbol appended) const;
    Symbol label(std::uint64_t node, Symbol appended) const;
    Word node_word(std::uint64_t node) const;

private:
    int k_;
    int order_;  // 2r
    std::uint64_t nodes_;
    std::uint64_t tail_mod_;  // k^(2r-1), or 1 when order == 0
    std::vector<Symbol> table_;
};

/// Nondeterministic automaton accepting exactly the finite words occurring
/// in image configurations of the CA.
class ImageAutomaton {
public:
    explicit ImageAutomaton(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

    bool accepts(std::span<const Symbol> w) const;
    const DeBruijnGraph& graph() const { return graph_; }

    /// Shortest rejected word (ties broken lexicographically), or nullopt
    /// when every word is accepted.
    std::optional<Word> shortest_rejected(std::uint64_t budget = kDefaultBudget) const;

private:
    DeBruijnGraph graph_;
};

/// Two distinct equal-length words with identical 2r-margins whose images
/// agree in every radius-r context; witnesses non-preinjectivity.
struct Diamond {
    Word prefix;
    Word mid_a;
    Word mid_b;
    Word suffix;

    Word left() const;   // prefix . mid_a . suffix
    Word right() const;  // prefix . mid_b . suffix
};

ImageAutomaton build_image_automaton(const CellularAutomaton& ca,
                                     std::uint64_t budget = kDefaultBudget);

bool is_surjective(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

std::optional<Word> find_orphan(const CellularAutomaton& ca,
                                std::uint64_t budget = kDefaultBudget);

bool is_preinjective(const CellularAutomaton& ca, std::uint64_t budget = kDefaultBudget);

/// Minimal diamond if any: |mid| minimized first, then lexicographic on
/// (prefix, mid_a, mid_b, suffix).
std::optional<Diamond> find_diamond(const CellularAutomaton& ca,
                                    std::uint64_t budget = kDefaultBudget);

/// Exhaustive check of the Diamond contract at radius r.
bool verify_diamond(const CellularAutomaton& ca, const Diamond& d);

struct MooreMyhillReport {
    bool surjective = false;
    bool preinjective = false;
    std::optional<Word> orphan;
    std::optional<Diamond> diamond;
    bool consistent() const { return surjective == preinjective; }
};

/// Runs both deciders; the Garden of Eden theorem says they must agree.
MooreMyhillReport moore_myhill_crosscheck(const CellularAutomaton& ca,
                                          std::uint64_t budget = kDefaultBudget);

/// Exact count of length-n words over {0..k-1} containing no element of
/// `forbidden` (Aho-Corasick dynamic programming, arbitrary precision).
BigInt count_avoiding(const std::vector<Word>& forbidden, int k, int n);

/// True iff the SFT of configurations avoiding w is mixing and contains at
/// least two points: the essential transition graph is strongly connected,
/// its cycle lengths have gcd 1, and it carries more than one orbit.
bool is_mixing_avoid(const Word& w, int k);

}  // namespace idemca
