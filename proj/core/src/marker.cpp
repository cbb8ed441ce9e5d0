#include "idemca/marker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "idemca/errors.hpp"

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

bool has_period_below(const Word& w, int bound) {
    for (int p = 1; p < bound; ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < w.size() && periodic; ++i)
            if (w[i] != w[i + static_cast<std::size_t>(p)]) periodic = false;
        if (periodic) return true;
    }
    return false;
}

/// Greedy pass shared by word and cyclic marking. Candidates carry
/// (rank, position); suppression looks at already-placed marks of strictly
/// lower rank within distance N-1 (cyclic distance when n > 0).
std::set<long long> greedy_marks(std::vector<std::pair<long long, long long>> candidates, int N,
                                 long long cycle) {
    std::sort(candidates.begin(), candidates.end());
    std::set<long long> marks;
    auto distance = [&](long long a, long long b) {
        long long d = a > b ? a - b : b - a;
        if (cycle > 0) d = std::min(d, cycle - d);
        return d;
    };
    std::size_t i = 0;
    while (i < candidates.size()) {
        std::size_t j = i;
        while (j < candidates.size() && candidates[j].first == candidates[i].first) ++j;
        std::vector<long long> batch;
        for (std::size_t t = i; t < j; ++t) {
            const long long pos = candidates[t].second;
            bool suppressed = false;
            for (long long m : marks) {
                if (distance(m, pos) <= N - 1) {
                    suppressed = true;
                    break;
                }
            }
            if (!suppressed) batch.push_back(pos);
        }
        for (long long pos : batch) marks.insert(pos);
        i = j;
    }
    return marks;
}

}  // namespace

Marker::Marker(int k, int N, std::uint64_t budget) : k_(k), n_(N) {
    if (k < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    if (N < 1) throw std::invalid_argument("gap parameter must be at least 1");
    const std::uint64_t windows =
        saturating_pow(static_cast<std::uint64_t>(k), 2 * static_cast<unsigned>(N) + 1);
    if (windows > budget) throw ExhaustiveCheckInfeasible(windows);

    rank_.assign(windows, -1);
    std::int32_t next_rank = 0;
    Word w(static_cast<std::size_t>(2 * N + 1), 0);
    std::uint64_t idx = 0;
    do {
        if (!has_period_below(w, N)) rank_[idx] = next_rank++;
        ++idx;
    } while (next_word(w, k));
    priority_size_ = static_cast<std::size_t>(next_rank);
}

long long Marker::rank_of(std::span<const Symbol> window) const {
    return rank_[word_to_index(window, k_)];
}

Word Marker::mark_word(std::span<const Symbol> x) const {
    const std::size_t win = static_cast<std::size_t>(window_length());
    if (x.size() < win) throw WordTooShort(x.size(), win);

    std::vector<std::pair<long long, long long>> candidates;
    for (std::size_t i = 0; i + win <= x.size(); ++i) {
        const long long r = rank_of(x.subspan(i, win));
        if (r >= 0) candidates.emplace_back(r, static_cast<long long>(i) + n_);
    }
    const std::set<long long> marks = greedy_marks(std::move(candidates), n_, 0);

    Word out(x.size() - 2 * static_cast<std::size_t>(n_), 0);
    for (long long pos : marks) out[static_cast<std::size_t>(pos - n_)] = 1;
    return out;
}

CyclicWord Marker::mark_cyclic(const CyclicWord& x) const {
    const long long n = x.least_period();
    const std::size_t win = static_cast<std::size_t>(window_length());

    std::vector<std::pair<long long, long long>> candidates;
    Word window(win);
    for (long long i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < win; ++j)
            window[j] = x.at(i - n_ + static_cast<long long>(j));
        const long long r = rank_of(window);
        if (r >= 0) candidates.emplace_back(r, i);
    }
    const std::set<long long> marks = greedy_marks(std::move(candidates), n_, n);

    Word out(static_cast<std::size_t>(n), 0);
    for (long long pos : marks) out[static_cast<std::size_t>(pos)] = 1;
    return CyclicWord(std::move(out));
}

CellularAutomaton Marker::ca() const {
    const Marker copy = *this;
    const long long R = declared_radius();
    if (R > (std::int64_t{1} << 22))
        throw ExhaustiveCheckInfeasible(static_cast<std::uint64_t>(R));
    return CellularAutomaton::procedural(
        Alphabet(k_), static_cast<int>(R), [copy, R](std::span<const Symbol> window) -> Symbol {
            Word marks = copy.mark_word(window);
            return marks[static_cast<std::size_t>(R - copy.gap())];
        });
}

Marker build_marker(int k, int N, std::uint64_t budget) { return Marker(k, N, budget); }

}  // namespace idemca
