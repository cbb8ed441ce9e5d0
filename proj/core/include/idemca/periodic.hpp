#pragma once

#include <map>
#include <optional>
#include <vector>

#include "idemca/ca.hpp"
#include "idemca/cyclic.hpp"

namespace idemca {

/// All points of least period exactly n, with their shift-orbit partition.
/// Points are phase-bearing: cyclic 01 and cyclic 10 are both members of
/// Q_2 and form one orbit of size 2.
struct PeriodicOrbitSet {
    int n = 0;
    std::vector<CyclicWord> points;               // sorted by period word
    std::vector<std::vector<CyclicWord>> orbits;  // each of size exactly n
};

/// Enumerates Q_n by filtering the k^n period words down to the primitive
/// ones. |Q_n| equals the Mobius count over divisors of n.
PeriodicOrbitSet enumerate_periodic(int k, int n, std::uint64_t budget = kDefaultBudget);

/// The CA action on Q_n, phase-exact. The least period of every image
/// divides n.
std::map<CyclicWord, CyclicWord> action_on_periodic(const CellularAutomaton& ca, int n,
                                                    std::uint64_t budget = kDefaultBudget);

struct Eq1Report {
    int n = 0;
    bool maps_onto = false;
    bool is_identity_on = false;
    std::optional<CyclicWord> violation_witness;  // set iff maps_onto && !is_identity_on
};

/// Checks, for one n, whether the CA maps Q_n onto itself and, if so,
/// whether it acts identically there. A violation witness is a moved point.
Eq1Report eq1_check(const CellularAutomaton& ca, int n, std::uint64_t budget = kDefaultBudget);

/// Scans n = 1..bound; returns the first violating report, or nullopt.
std::optional<Eq1Report> eq1_check_up_to(const CellularAutomaton& ca, int bound,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace idemca
