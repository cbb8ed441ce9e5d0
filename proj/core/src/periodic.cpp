#include "idemca/periodic.hpp"

#include <algorithm>
#include <set>

namespace idemca {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) {
        if (r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace

PeriodicOrbitSet enumerate_periodic(int k, int n, std::uint64_t budget) {
    if (n < 1) throw std::invalid_argument("period must be positive");
    const std::uint64_t total = saturating_pow(k, static_cast<unsigned>(n));
    if (total > budget) throw ExhaustiveCheckInfeasible(total);

    PeriodicOrbitSet result;
    result.n = n;
    Word w(static_cast<std::size_t>(n), 0);
    do {
        if (least_cyclic_period(w) == n) result.points.emplace_back(w);
    } while (next_word(w, k));
    std::sort(result.points.begin(), result.points.end());

    std::set<CyclicWord> grouped;
    for (const CyclicWord& x : result.points) {
        if (grouped.contains(x)) continue;
        std::vector<CyclicWord> orbit;
        for (int s = 0; s < n; ++s) {
            CyclicWord rot = x.rotate_left(s);
            grouped.insert(rot);
            orbit.push_back(std::move(rot));
        }
        std::sort(orbit.begin(), orbit.end());
        result.orbits.push_back(std::move(orbit));
    }
    return result;
}

std::map<CyclicWord, CyclicWord> action_on_periodic(const CellularAutomaton& ca, int n,
                                                    std::uint64_t budget) {
    const PeriodicOrbitSet q = enumerate_periodic(ca.alphabet_size(), n, budget);
    std::map<CyclicWord, CyclicWord> action;
    for (const CyclicWord& x : q.points) {
        CyclicWord image = apply_to_cyclic(ca, x);
        if (n % image.least_period() != 0)
            throw Error("image least period does not divide the source period");
        action.emplace(x, std::move(image));
    }
    return action;
}

Eq1Report eq1_check(const CellularAutomaton& ca, int n, std::uint64_t budget) {
    Eq1Report report;
    report.n = n;

    const auto action = action_on_periodic(ca, n, budget);
    std::set<CyclicWord> image;
    for (const auto& [x, fx] : action) image.insert(fx);

    report.maps_onto = image.size() == action.size() &&
                       std::all_of(action.begin(), action.end(), [&](const auto& kv) {
                           return kv.second.least_period() == n;
                       });
    if (!report.maps_onto) return report;

    report.is_identity_on = true;
    for (const auto& [x, fx] : action) {
        if (!(x == fx)) {
            report.is_identity_on = false;
            report.violation_witness = x;
            break;
        }
    }
    return report;
}

std::optional<Eq1Report> eq1_check_up_to(const CellularAutomaton& ca, int bound,
                                         std::uint64_t budget) {
    for (int n = 1; n <= bound; ++n) {
        Eq1Report report = eq1_check(ca, n, budget);
        if (report.maps_onto && !report.is_identity_on) return report;
    }
    return std::nullopt;
}

}  // namespace idemca
