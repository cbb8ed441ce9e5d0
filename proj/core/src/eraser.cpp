#include "idemca/eraser.hpp"

#include <climits>
#include <random>

namespace idemca {

namespace {

constexpr long long kFarRange = LLONG_MAX / 4;

}  // namespace

Eraser::Eraser(Alphabet a, Word u, Word u_prime, int source_radius,
               bool enforce_overlap_condition)
    : k_(a.k),
      u_(std::move(u)),
      u_prime_(std::move(u_prime)),
      source_radius_(source_radius),
      enforce_overlap_condition_(enforce_overlap_condition) {
    if (u_.size() != u_prime_.size() || u_.size() < 2 || u_ == u_prime_)
        throw std::invalid_argument("rewrite pair needs distinct equal-length words, |u| > 1");
    if (!all_symbols_below(u_, k_) || !all_symbols_below(u_prime_, k_))
        throw std::invalid_argument("rewrite word symbol out of range");
}

/// Occurrence of u at i plus the two rewrite conditions, over an abstract
/// cell accessor valid on [lo, hi]; occurrences needing cells outside the
/// range do not count.
bool Eraser::qualifies(long long i, const std::function<Symbol(long long)>& cell, long long lo,
                       long long hi) const {
    const long long len = static_cast<long long>(u_.size());
    auto occurrence_at = [&](long long t, const std::function<Symbol(long long)>& get) {
        if (t < lo || t + len - 1 > hi) return false;
        for (long long j = 0; j < len; ++j)
            if (get(t + j) != u_[static_cast<std::size_t>(j)]) return false;
        return true;
    };

    if (!occurrence_at(i, cell)) return false;

    // (1) u occurs exactly once in x[i-2|u|+1 .. i+3|u|-2]; contained
    // occurrence starts range over [i-(2|u|-1), i+(2|u|-1)], symmetric, so
    // close occurrences always block each other.
    int count = 0;
    for (long long t = i - 2 * len + 1; t <= i + 2 * len - 1; ++t) {
        if (occurrence_at(t, cell) && ++count > 1) return false;
    }
    if (count != 1) return false;

    // (2) the rewrite introduces no new u overlapping [i, i+|u|-1].
    if (enforce_overlap_condition_) {
        auto rewritten = [&](long long p) -> Symbol {
            if (p >= i && p < i + len) return u_prime_[static_cast<std::size_t>(p - i)];
            return cell(p);
        };
        for (long long t = i - len + 1; t <= i + len - 1; ++t) {
            if (occurrence_at(t, rewritten)) return false;
        }
    }
    return true;
}

Word Eraser::rewrite_word(std::span<const Symbol> x) const {
    Word out(x.begin(), x.end());
    const long long n = static_cast<long long>(x.size());
    const long long len = static_cast<long long>(u_.size());
    auto cell = [&](long long p) { return x[static_cast<std::size_t>(p)]; };
    for (long long i = 0; i + len <= n; ++i) {
        if (qualifies(i, cell, 0, n - 1)) {
            for (long long j = 0; j < len; ++j)
                out[static_cast<std::size_t>(i + j)] = u_prime_[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

std::vector<long long> Eraser::rewrite_sites_cyclic(const CyclicWord& x) const {
    const long long n = x.least_period();
    std::vector<long long> sites;
    auto cell = [&](long long p) { return x.at(p); };
    for (long long i = 0; i < n; ++i) {
        if (qualifies(i, cell, -kFarRange, kFarRange)) sites.push_back(i);
    }
    return sites;
}

CyclicWord Eraser::rewrite_cyclic(const CyclicWord& x) const {
    const long long n = x.least_period();
    Word out(static_cast<std::size_t>(n));
    for (long long p = 0; p < n; ++p) out[static_cast<std::size_t>(p)] = x.at(p);
    for (long long i : rewrite_sites_cyclic(x)) {
        for (long long j = 0; j < static_cast<long long>(u_.size()); ++j)
            out[static_cast<std::size_t>((i + j) % n)] = u_prime_[static_cast<std::size_t>(j)];
    }
    return CyclicWord(std::move(out));
}

CellularAutomaton Eraser::ca() const {
    const Eraser copy = *this;
    const int R = radius();
    return CellularAutomaton::procedural(
        Alphabet(k_), R, [copy, R](std::span<const Symbol> window) -> Symbol {
            const long long center = R;
            const long long len = static_cast<long long>(copy.u_.size());
            auto cell = [&](long long p) { return window[static_cast<std::size_t>(p)]; };
            for (long long i = center - len + 1; i <= center; ++i) {
                if (i < 0) continue;
                if (copy.qualifies(i, cell, 0, 2 * static_cast<long long>(R))) {
                    return copy.u_prime_[static_cast<std::size_t>(center - i)];
                }
            }
            return window[static_cast<std::size_t>(center)];
        });
}

Eraser build_eraser(const CellularAutomaton& g, std::uint64_t budget) {
    if (is_surjective(g, budget)) throw SourceIsSurjective();
    const std::optional<Diamond> d = find_diamond(g, budget);
    if (!d) throw Error("non-surjective rule without a diamond contradicts the Garden of Eden theorem");
    Word u = d->left();
    Word u_prime = d->right();
    if (u.size() < 2) {
        const Word margin{0};
        u = concat(margin, u, margin);
        u_prime = concat(margin, u_prime, margin);
    }
    return Eraser(Alphabet(g.alphabet_size()), std::move(u), std::move(u_prime), g.radius());
}

EraserReport verify_eraser(const Eraser& e, const CellularAutomaton& g, int period_bound,
                           int trials, std::uint64_t seed) {
    EraserReport report;
    const int k = e.alphabet_size();

    // Cyclic corpus: idempotency and image preservation, phase-exact.
    for (int n = 1; n <= period_bound && (report.idempotent_ok && report.image_preserved_ok); ++n) {
        Word w(static_cast<std::size_t>(n), 0);
        do {
            CyclicWord x{w};
            CyclicWord ex = e.rewrite_cyclic(x);
            ++report.configurations_checked;
            if (report.idempotent_ok && !(e.rewrite_cyclic(ex) == ex)) {
                report.idempotent_ok = false;
                report.idempotency_cyclic_witness = x;
            }
            if (report.image_preserved_ok &&
                !(apply_to_cyclic(g, ex) == apply_to_cyclic(g, x))) {
                report.image_preserved_ok = false;
                report.image_cyclic_witness = x;
            }
            if (!report.idempotent_ok && !report.image_preserved_ok) break;
        } while (next_word(w, k));
    }

    // Random margin-padded windows. The eraser's edge cells see only the
    // visible word, so comparisons stay on fully determined positions.
    const int R = e.radius();
    const int rg = g.radius();
    const std::size_t len = static_cast<std::size_t>(4 * R + 2 * rg) + 24;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (int t = 0; t < trials; ++t) {
        Word x(len);
        for (auto& s : x) s = static_cast<Symbol>(pick(rng));
        ++report.configurations_checked;

        Word ex = e.rewrite_word(x);
        if (report.idempotent_ok) {
            Word eex = e.rewrite_word(ex);
            for (std::size_t p = 2 * static_cast<std::size_t>(R);
                 p + 2 * static_cast<std::size_t>(R) < len; ++p) {
                if (eex[p] != ex[p]) {
                    report.idempotent_ok = false;
                    report.idempotency_word_witness = x;
                    break;
                }
            }
        }
        if (report.image_preserved_ok) {
            Word gex = apply_to_word(g, ex);
            Word gx = apply_to_word(g, x);
            for (std::size_t p = static_cast<std::size_t>(R);
                 p + static_cast<std::size_t>(R) + 2 * static_cast<std::size_t>(rg) < gex.size();
                 ++p) {
                if (gex[p] != gx[p]) {
                    report.image_preserved_ok = false;
                    report.image_word_witness = x;
                    break;
                }
            }
        }
    }

    // Non-preinjectivity witness: margins that cannot extend u.
    {
        const Word& u = e.u();
        Symbol a = u.front() == 0 ? 1 : 0;
        Symbol b = u.back() == 0 ? 1 : 0;
        const std::size_t margin = static_cast<std::size_t>(R);
        Word x1(margin, a), x2(margin, a);
        x1.insert(x1.end(), u.begin(), u.end());
        x2.insert(x2.end(), e.u_prime().begin(), e.u_prime().end());
        x1.insert(x1.end(), margin, b);
        x2.insert(x2.end(), margin, b);
        report.witness_ok = x1 != x2 && e.rewrite_word(x1) == e.rewrite_word(x2);
    }
    return report;
}

}  // namespace idemca
