#include "idemca/ca.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace idemca {

namespace {

/// k^length, saturating at UINT64_MAX. Used for window counts.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) {
        if (r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

std::uint64_t window_count_or_throw(int k, std::size_t window_len, std::uint64_t budget) {
    const std::uint64_t n = saturating_pow(static_cast<std::uint64_t>(k),
                                           static_cast<unsigned>(window_len));
    if (n > budget) throw ExhaustiveCheckInfeasible(n);
    return n;
}

}  // namespace

CellularAutomaton::CellularAutomaton(int k, int radius,
                                     std::shared_ptr<const std::vector<Symbol>> table,
                                     EvalFn eval)
    : k_(k), radius_(radius), table_(std::move(table)), eval_(std::move(eval)) {}

CellularAutomaton CellularAutomaton::from_table(Alphabet a, int radius,
                                                std::vector<Symbol> table) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    const std::uint64_t want = saturating_pow(a.k, 2 * static_cast<unsigned>(radius) + 1);
    if (table.size() != want)
        throw std::invalid_argument("table has " + std::to_string(table.size()) +
                                    " entries, expected " + std::to_string(want));
    if (!all_symbols_below(table, a.k))
        throw std::invalid_argument("table entry out of alphabet range");
    auto shared = std::make_shared<const std::vector<Symbol>>(std::move(table));
    return CellularAutomaton(a.k, radius, shared, nullptr);
}

CellularAutomaton CellularAutomaton::procedural(Alphabet a, int radius, EvalFn eval) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    if (!eval) throw std::invalid_argument("procedural rule needs an eval function");
    return CellularAutomaton(a.k, radius, nullptr, std::move(eval));
}

CellularAutomaton CellularAutomaton::identity(Alphabet a) {
    std::vector<Symbol> table(a.k);
    for (int s = 0; s < a.k; ++s) table[s] = static_cast<Symbol>(s);
    return from_table(a, 0, std::move(table));
}

CellularAutomaton CellularAutomaton::elementary(int rule) {
    if (rule < 0 || rule > 255) throw std::invalid_argument("elementary rule must be 0..255");
    std::vector<Symbol> table(8);
    for (int idx = 0; idx < 8; ++idx) table[idx] = static_cast<Symbol>((rule >> idx) & 1);
    return from_table(Alphabet(2), 1, std::move(table));
}

const std::vector<Symbol>& CellularAutomaton::table() const {
    if (!table_) throw std::logic_error("rule table not materialized");
    return *table_;
}

Symbol CellularAutomaton::eval(std::span<const Symbol> window) const {
    if (window.size() != window_length())
        throw std::invalid_argument("window length mismatch");
    if (table_) return (*table_)[word_to_index(window, k_)];
    return eval_(window);
}

CellularAutomaton CellularAutomaton::materialized(std::uint64_t budget) const {
    if (table_) return *this;
    const std::uint64_t n = saturating_pow(k_, static_cast<unsigned>(window_length()));
    if (n > budget) return *this;
    std::vector<Symbol> table(n);
    Word w(window_length(), 0);
    std::uint64_t idx = 0;
    do {
        table[idx++] = eval_(w);
    } while (next_word(w, k_));
    return from_table(Alphabet(k_), radius_, std::move(table));
}

Word apply_to_word(const CellularAutomaton& ca, std::span<const Symbol> w) {
    const std::size_t win = ca.window_length();
    if (w.size() < win) throw WordTooShort(w.size(), win);
    const std::size_t out_len = w.size() - win + 1;
    Word out(out_len);
    if (ca.has_table()) {
        const int k = ca.alphabet_size();
        const auto& table = ca.table();
        const std::uint64_t head = pow_u64(k, static_cast<unsigned>(win) - 1);
        std::uint64_t idx = word_to_index(w.subspan(0, win), k);
        out[0] = table[idx];
        for (std::size_t j = 1; j < out_len; ++j) {
            idx = (idx % head) * k + w[j + win - 1];
            out[j] = table[idx];
        }
    } else {
        for (std::size_t j = 0; j < out_len; ++j) out[j] = ca.eval(w.subspan(j, win));
    }
    return out;
}

CyclicWord apply_to_cyclic(const CellularAutomaton& ca, const CyclicWord& x) {
    const int n = x.least_period();
    const int r = ca.radius();
    Word buffer(static_cast<std::size_t>(n) + 2 * r);
    for (std::size_t t = 0; t < buffer.size(); ++t)
        buffer[t] = x.at(static_cast<long long>(t) - r);
    Word image = apply_to_word(ca, buffer);
    return CyclicWord(std::move(image));
}

CellularAutomaton compose(const CellularAutomaton& f, const CellularAutomaton& g,
                          std::uint64_t budget) {
    if (f.alphabet_size() != g.alphabet_size()) throw AlphabetMismatch();
    const int k = f.alphabet_size();
    const int radius = f.radius() + g.radius();
    auto eval = [f, g](std::span<const Symbol> window) -> Symbol {
        Word mid = apply_to_word(g, window);
        return f.eval(mid);
    };
    CellularAutomaton result = CellularAutomaton::procedural(Alphabet(k), radius, eval);
    if (f.has_table() && g.has_table()) return result.materialized(budget);
    return result;
}

CellularAutomaton power(const CellularAutomaton& ca, int n, std::uint64_t budget) {
    if (n < 0) throw std::invalid_argument("power needs n >= 0");
    CellularAutomaton acc = CellularAutomaton::identity(Alphabet(ca.alphabet_size()));
    for (int i = 0; i < n; ++i) acc = compose(acc, ca, budget);
    return acc;
}

bool equals(const CellularAutomaton& f, const CellularAutomaton& g, std::uint64_t budget) {
    if (f.alphabet_size() != g.alphabet_size()) throw AlphabetMismatch();
    const int k = f.alphabet_size();
    const int R = std::max(f.radius(), g.radius());
    const std::size_t len = 2 * static_cast<std::size_t>(R) + 1;
    const std::uint64_t total = window_count_or_throw(k, len, budget);

    if (f.has_table() && g.has_table()) {
        const auto& ft = f.table();
        const auto& gt = g.table();
        const std::uint64_t f_shift = pow_u64(k, static_cast<unsigned>(R - f.radius()));
        const std::uint64_t g_shift = pow_u64(k, static_cast<unsigned>(R - g.radius()));
        const std::uint64_t f_mod = pow_u64(k, static_cast<unsigned>(f.window_length()));
        const std::uint64_t g_mod = pow_u64(k, static_cast<unsigned>(g.window_length()));
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            if (ft[(idx / f_shift) % f_mod] != gt[(idx / g_shift) % g_mod]) return false;
        }
        return true;
    }

    Word w(len, 0);
    const std::size_t f_off = static_cast<std::size_t>(R - f.radius());
    const std::size_t g_off = static_cast<std::size_t>(R - g.radius());
    do {
        std::span<const Symbol> span(w);
        if (f.eval(span.subspan(f_off, f.window_length())) !=
            g.eval(span.subspan(g_off, g.window_length())))
            return false;
    } while (next_word(w, k));
    return true;
}

AgreementReport sampled_agreement(const CellularAutomaton& f, const CellularAutomaton& g,
                                  int max_period, int random_trials, std::uint64_t seed) {
    AgreementReport report;
    if (f.alphabet_size() != g.alphabet_size()) throw AlphabetMismatch();
    const int k = f.alphabet_size();

    for (int n = 1; n <= max_period; ++n) {
        Word w(static_cast<std::size_t>(n), 0);
        do {
            CyclicWord x{w};
            ++report.configurations_checked;
            if (apply_to_cyclic(f, x) != apply_to_cyclic(g, x)) {
                report.agree = false;
                report.cyclic_witness = x;
                return report;
            }
        } while (next_word(w, k));
    }

    const int R = std::max(f.radius(), g.radius());
    const std::size_t len = 2 * static_cast<std::size_t>(R) + 1 + 32;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (int t = 0; t < random_trials; ++t) {
        Word w(len);
        for (auto& s : w) s = static_cast<Symbol>(pick(rng));
        Word fo = apply_to_word(f, w);
        Word go = apply_to_word(g, w);
        ++report.configurations_checked;
        // Positions where both automata have a full window.
        const std::size_t span = w.size() - 2 * static_cast<std::size_t>(R);
        for (std::size_t p = 0; p < span; ++p) {
            if (fo[p + (R - f.radius())] != go[p + (R - g.radius())]) {
                report.agree = false;
                report.word_witness = w;
                return report;
            }
        }
    }
    return report;
}

std::set<int> minimal_neighborhood(const CellularAutomaton& ca, std::uint64_t budget) {
    const int k = ca.alphabet_size();
    const int r = ca.radius();
    const std::size_t len = ca.window_length();
    window_count_or_throw(k, len, budget);

    std::set<int> essential;
    Word w(len, 0);
    do {
        const Symbol base = ca.eval(w);
        for (std::size_t j = 0; j < len; ++j) {
            const int d = static_cast<int>(j) - r;
            if (essential.count(d)) continue;
            Word flipped = w;
            for (int c = 0; c < k; ++c) {
                if (c == w[j]) continue;
                flipped[j] = static_cast<Symbol>(c);
                if (ca.eval(flipped) != base) {
                    essential.insert(d);
                    break;
                }
            }
        }
    } while (next_word(w, k));
    return essential;
}

bool is_idempotent(const CellularAutomaton& ca, std::uint64_t budget) {
    return equals(compose(ca, ca, budget), ca, budget);
}

std::optional<int> is_eventually_idempotent(const CellularAutomaton& ca, int bound,
                                            std::uint64_t budget) {
    CellularAutomaton current = CellularAutomaton::identity(Alphabet(ca.alphabet_size()));
    for (int m = 0; m <= bound; ++m) {
        CellularAutomaton next = compose(current, ca, budget);
        if (equals(next, current, budget)) return m;
        current = next;
    }
    return std::nullopt;
}

std::set<Symbol> spreading_states(const CellularAutomaton& ca, std::uint64_t budget) {
    const std::set<int> nb = minimal_neighborhood(ca, budget);
    std::set<Symbol> result;
    if (nb.size() < 2) return result;

    const int k = ca.alphabet_size();
    const int r = ca.radius();
    for (int q = 0; q < k; ++q) {
        bool spreads = true;
        Word w(ca.window_length(), 0);
        do {
            bool sees_q = false;
            for (int d : nb)
                if (w[static_cast<std::size_t>(r + d)] == q) {
                    sees_q = true;
                    break;
                }
            if (sees_q && ca.eval(w) != q) {
                spreads = false;
                break;
            }
        } while (next_word(w, k));
        if (spreads) result.insert(static_cast<Symbol>(q));
    }
    return result;
}

bool is_constant_on_unary(const CellularAutomaton& ca) {
    const int k = ca.alphabet_size();
    Word w(ca.window_length(), 0);
    const Symbol first = ca.eval(w);
    for (int a = 1; a < k; ++a) {
        std::fill(w.begin(), w.end(), static_cast<Symbol>(a));
        if (ca.eval(w) != first) return false;
    }
    return true;
}

}  // namespace idemca
