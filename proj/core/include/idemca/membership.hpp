#pragma once

#include <optional>
#include <string>

#include "idemca/ca.hpp"
#include "idemca/periodic.hpp"

namespace idemca {

enum class Certificate {
    Identity,
    Idempotent,
    EventuallyIdempotent,
    SpreadingConstantUnary,
    SinglePeriodicPoint,
};

enum class Witness {
    SurjectiveNonIdentity,
    Eq1Violation,
};

/// Verdict of the bounded membership decision: In with a sufficient
/// certificate, Out with a machine-checkable witness, or ConsistentUpTo
/// when neither fires below the bound.
struct MembershipVerdict {
    enum class Kind { In, Out, ConsistentUpTo };

    Kind kind = Kind::ConsistentUpTo;
    int bound = 0;
    std::optional<Certificate> certificate;
    std::optional<int> stabilization_power;   // EventuallyIdempotent: least m
    std::optional<Symbol> spreading_symbol;   // SpreadingConstantUnary
    std::optional<int> fixed_point_period;    // SinglePeriodicPoint
    std::optional<Witness> witness;
    std::optional<Eq1Report> eq1_violation;   // Eq1Violation: n and moved point
};

/// Decision pipeline: identity; then the bounded period-class scan (its
/// violations are the sharper witness, checked before plain surjectivity);
/// then surjectivity; then the sufficient certificates in order
/// (idempotent, eventually idempotent, spreading + neighborhood >= 2 +
/// constant on unary, unique bounded temporally-fixed periodic point).
MembershipVerdict decide_membership(const CellularAutomaton& ca, int bound,
                                    std::uint64_t budget = kDefaultBudget);

/// Stable human-readable account of the verdict and what justifies it.
std::string explain(const MembershipVerdict& verdict);

const char* certificate_name(Certificate c);
const char* witness_name(Witness w);

}  // namespace idemca
