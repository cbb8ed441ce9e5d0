#include "idemca/membership.hpp"

#include <sstream>

#include "idemca/language.hpp"

namespace idemca {

MembershipVerdict decide_membership(const CellularAutomaton& ca, int bound,
                                    std::uint64_t budget) {
    MembershipVerdict verdict;
    verdict.bound = bound;
    const CellularAutomaton id = CellularAutomaton::identity(Alphabet(ca.alphabet_size()));

    if (equals(ca, id, budget)) {
        verdict.kind = MembershipVerdict::Kind::In;
        verdict.certificate = Certificate::Identity;
        return verdict;
    }

    if (std::optional<Eq1Report> violation = eq1_check_up_to(ca, bound, budget)) {
        verdict.kind = MembershipVerdict::Kind::Out;
        verdict.witness = Witness::Eq1Violation;
        verdict.eq1_violation = std::move(violation);
        return verdict;
    }

    const bool surjective = is_surjective(ca, budget);
    if (surjective) {
        verdict.kind = MembershipVerdict::Kind::Out;
        verdict.witness = Witness::SurjectiveNonIdentity;
        return verdict;
    }

    if (is_idempotent(ca, budget)) {
        verdict.kind = MembershipVerdict::Kind::In;
        verdict.certificate = Certificate::Idempotent;
        return verdict;
    }

    if (std::optional<int> m = is_eventually_idempotent(ca, bound, budget)) {
        verdict.kind = MembershipVerdict::Kind::In;
        verdict.certificate = Certificate::EventuallyIdempotent;
        verdict.stabilization_power = m;
        return verdict;
    }

    {
        const std::set<Symbol> spreading = spreading_states(ca, budget);
        if (!spreading.empty() && minimal_neighborhood(ca, budget).size() >= 2 &&
            is_constant_on_unary(ca)) {
            verdict.kind = MembershipVerdict::Kind::In;
            verdict.certificate = Certificate::SpreadingConstantUnary;
            verdict.spreading_symbol = *spreading.begin();
            return verdict;
        }
    }

    {
        int fixed_points = 0;
        std::optional<int> fixed_period;
        for (int n = 1; n <= bound && fixed_points <= 1; ++n) {
            for (const auto& [x, fx] : action_on_periodic(ca, n, budget)) {
                if (x == fx) {
                    ++fixed_points;
                    fixed_period = n;
                    if (fixed_points > 1) break;
                }
            }
        }
        if (fixed_points == 1 && !surjective) {
            verdict.kind = MembershipVerdict::Kind::In;
            verdict.certificate = Certificate::SinglePeriodicPoint;
            verdict.fixed_point_period = fixed_period;
            return verdict;
        }
    }

    verdict.kind = MembershipVerdict::Kind::ConsistentUpTo;
    return verdict;
}

const char* certificate_name(Certificate c) {
    switch (c) {
        case Certificate::Identity: return "Identity";
        case Certificate::Idempotent: return "Idempotent";
        case Certificate::EventuallyIdempotent: return "EventuallyIdempotent";
        case Certificate::SpreadingConstantUnary: return "SpreadingConstantUnary";
        case Certificate::SinglePeriodicPoint: return "SinglePeriodicPoint";
    }
    return "?";
}

const char* witness_name(Witness w) {
    switch (w) {
        case Witness::SurjectiveNonIdentity: return "SurjectiveNonIdentity";
        case Witness::Eq1Violation: return "Eq1Violation";
    }
    return "?";
}

std::string explain(const MembershipVerdict& v) {
    std::ostringstream out;
    switch (v.kind) {
        case MembershipVerdict::Kind::In:
            out << "In(" << certificate_name(*v.certificate);
            if (v.certificate == Certificate::EventuallyIdempotent)
                out << "(" << *v.stabilization_power << ")";
            out << ")\n";
            switch (*v.certificate) {
                case Certificate::Identity:
                    out << "The rule is the identity: the empty product of idempotents.\n";
                    break;
                case Certificate::Idempotent:
                    out << "The rule equals its own square, so it is itself idempotent.\n";
                    break;
                case Certificate::EventuallyIdempotent:
                    out << "Powers stabilize: rule^" << (*v.stabilization_power + 1)
                        << " = rule^" << *v.stabilization_power
                        << "; eventually idempotent rules are products of idempotents.\n";
                    break;
                case Certificate::SpreadingConstantUnary:
                    out << "The rule has spreading state "
                        << static_cast<int>(*v.spreading_symbol)
                        << ", a neighborhood of size at least 2, and is constant on unary"
                           " points; such rules are products of idempotents.\n";
                    break;
                case Certificate::SinglePeriodicPoint:
                    out << "Non-surjective with exactly one temporally fixed spatially"
                           " periodic point up to period "
                        << v.bound << " (bounded check); such rules are products of"
                           " idempotents.\n";
                    break;
            }
            break;
        case MembershipVerdict::Kind::Out:
            out << "Out(" << witness_name(*v.witness);
            if (v.witness == Witness::Eq1Violation)
                out << "(" << v.eq1_violation->n << ", "
                    << v.eq1_violation->violation_witness->str() << ")";
            out << ")\n";
            if (v.witness == Witness::SurjectiveNonIdentity) {
                out << "Surjective but different from the identity; a surjective product"
                       " of idempotents must be the identity.\n";
            } else {
                out << "The least-period-" << v.eq1_violation->n
                    << " points map onto themselves but not identically (moved point "
                    << v.eq1_violation->violation_witness->str()
                    << "); a product of idempotents mapping a finite period class onto"
                       " itself acts on it identically.\n";
            }
            break;
        case MembershipVerdict::Kind::ConsistentUpTo:
            out << "ConsistentUpTo(" << v.bound << ")\n";
            out << "No witness against membership up to period " << v.bound
                << " and no sufficient certificate applies; membership is not"
                   " certified either way.\n";
            break;
    }
    return out.str();
}

}  // namespace idemca
