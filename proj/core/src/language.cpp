#include "idemca/language.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <unordered_map>

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

/// Fixed-capacity bitset over automaton nodes, hashable for subset BFS.
struct NodeSet {
    std::vector<std::uint64_t> bits;

    explicit NodeSet(std::uint64_t n) : bits((n + 63) / 64, 0) {}

    void set(std::uint64_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool empty() const {
        for (auto b : bits)
            if (b) return false;
        return true;
    }
    bool operator==(const NodeSet&) const = default;
};

struct NodeSetHash {
    std::size_t operator()(const NodeSet& s) const {
        std::size_t h = 1469598103934665603ull;
        for (auto b : s.bits) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

DeBruijnGraph::DeBruijnGraph(const CellularAutomaton& ca, std::uint64_t budget) {
    k_ = ca.alphabet_size();
    order_ = 2 * ca.radius();
    const std::uint64_t windows = saturating_pow(k_, static_cast<unsigned>(order_) + 1);
    if (windows > budget) throw ExhaustiveCheckInfeasible(windows);
    nodes_ = saturating_pow(k_, static_cast<unsigned>(order_));
    tail_mod_ = order_ == 0 ? 1 : saturating_pow(k_, static_cast<unsigned>(order_) - 1);
    table_ = ca.materialized(budget).table();
}

std::uint64_t DeBruijnGraph::successor(std::uint64_t node, Symbol appended) const {
    if (order_ == 0) return 0;
    return (node % tail_mod_) * static_cast<std::uint64_t>(k_) + appended;
}

Symbol DeBruijnGraph::label(std::uint64_t node, Symbol appended) const {
    return table_[node * static_cast<std::uint64_t>(k_) + appended];
}

Word DeBruijnGraph::node_word(std::uint64_t node) const {
    return index_to_word(node, k_, static_cast<std::size_t>(order_));
}

ImageAutomaton::ImageAutomaton(const CellularAutomaton& ca, std::uint64_t budget)
    : graph_(ca, budget) {}

bool ImageAutomaton::accepts(std::span<const Symbol> w) const {
    const std::uint64_t n = graph_.node_count();
    const int k = graph_.alphabet_size();
    std::vector<char> current(n, 1), next(n, 0);
    for (Symbol c : w) {
        bool any = false;
        std::fill(next.begin(), next.end(), 0);
        for (std::uint64_t u = 0; u < n; ++u) {
            if (!current[u]) continue;
            for (int s = 0; s < k; ++s) {
                if (graph_.label(u, static_cast<Symbol>(s)) == c) {
                    next[graph_.successor(u, static_cast<Symbol>(s))] = 1;
                    any = true;
                }
            }
        }
        if (!any) return false;
        std::swap(current, next);
    }
    return true;
}

std::optional<Word> ImageAutomaton::shortest_rejected(std::uint64_t budget) const {
    const std::uint64_t n = graph_.node_count();
    const int k = graph_.alphabet_size();

    NodeSet start(n);
    for (std::uint64_t u = 0; u < n; ++u) start.set(u);

    struct Visit {
        NodeSet set;
        std::size_t parent;
        Symbol via;
    };
    std::vector<Visit> visits;
    std::unordered_map<NodeSet, std::size_t, NodeSetHash> seen;
    visits.push_back({start, SIZE_MAX, 0});
    seen.emplace(start, 0);
    std::deque<std::size_t> queue{0};

    auto word_of = [&](std::size_t id, Symbol last) {
        Word w{last};
        while (visits[id].parent != SIZE_MAX) {
            w.push_back(visits[id].via);
            id = visits[id].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        for (int c = 0; c < k; ++c) {
            NodeSet succ(n);
            bool nonempty = false;
            for (std::uint64_t u = 0; u < n; ++u) {
                if (!(visits[id].set.bits[u >> 6] >> (u & 63) & 1)) continue;
                for (int s = 0; s < k; ++s) {
                    if (graph_.label(u, static_cast<Symbol>(s)) == c) {
                        succ.set(graph_.successor(u, static_cast<Symbol>(s)));
                        nonempty = true;
                    }
                }
            }
            if (!nonempty) return word_of(id, static_cast<Symbol>(c));
            if (!seen.contains(succ)) {
                if (visits.size() >= budget) throw ExhaustiveCheckInfeasible(visits.size() + 1);
                seen.emplace(succ, visits.size());
                visits.push_back({std::move(succ), id, static_cast<Symbol>(c)});
                queue.push_back(visits.size() - 1);
            }
        }
    }
    return std::nullopt;
}

Word Diamond::left() const { return concat(concat(prefix, mid_a), suffix); }
Word Diamond::right() const { return concat(concat(prefix, mid_b), suffix); }

ImageAutomaton build_image_automaton(const CellularAutomaton& ca, std::uint64_t budget) {
    return ImageAutomaton(ca, budget);
}

bool is_surjective(const CellularAutomaton& ca, std::uint64_t budget) {
    return !find_orphan(ca, budget).has_value();
}

std::optional<Word> find_orphan(const CellularAutomaton& ca, std::uint64_t budget) {
    return ImageAutomaton(ca, budget).shortest_rejected(budget);
}

namespace {

/// Shortest diverged diagonal-to-diagonal path length in the pair graph,
/// or 0 when none exists (the CA is then preinjective).
std::size_t minimal_pair_path(const DeBruijnGraph& g, std::uint64_t budget) {
    const std::uint64_t n = g.node_count();
    const int k = g.alphabet_size();
    const std::uint64_t states = n * n * 2;
    if (states > budget) throw ExhaustiveCheckInfeasible(states);

    std::vector<std::int32_t> dist(states, -1);
    std::deque<std::uint64_t> queue;
    for (std::uint64_t d = 0; d < n; ++d) {
        const std::uint64_t id = (d * n + d) * 2;  // flag 0
        dist[id] = 0;
        queue.push_back(id);
    }
    while (!queue.empty()) {
        const std::uint64_t id = queue.front();
        queue.pop_front();
        const bool diverged = id & 1;
        const std::uint64_t pair = id >> 1;
        const std::uint64_t u = pair / n;
        const std::uint64_t v = pair % n;
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                if (g.label(u, static_cast<Symbol>(a)) != g.label(v, static_cast<Symbol>(b)))
                    continue;
                const std::uint64_t u2 = g.successor(u, static_cast<Symbol>(a));
                const std::uint64_t v2 = g.successor(v, static_cast<Symbol>(b));
                const bool flag = diverged || a != b;
                const std::uint64_t nid = (u2 * n + v2) * 2 + flag;
                if (dist[nid] != -1) continue;
                dist[nid] = dist[id] + 1;
                if (u2 == v2 && flag) return static_cast<std::size_t>(dist[nid]);
                queue.push_back(nid);
            }
        }
    }
    return 0;
}

}  // namespace

bool is_preinjective(const CellularAutomaton& ca, std::uint64_t budget) {
    DeBruijnGraph g(ca, budget);
    return minimal_pair_path(g, budget) == 0;
}

std::optional<Diamond> find_diamond(const CellularAutomaton& ca, std::uint64_t budget) {
    DeBruijnGraph g(ca, budget);
    const std::size_t path_len = minimal_pair_path(g, budget);
    if (path_len == 0) return std::nullopt;

    const int r = ca.radius();
    const std::size_t margin = 2 * static_cast<std::size_t>(r);
    const std::size_t mid = path_len - margin;  // >= 1 for any diverged path
    const int k = ca.alphabet_size();

    const std::uint64_t candidates =
        saturating_pow(k, static_cast<unsigned>(2 * margin + 2 * mid));
    if (candidates > budget) throw ExhaustiveCheckInfeasible(candidates);

    const CellularAutomaton table_ca = ca.materialized(budget);
    Word prefix(margin, 0);
    do {
        Word mid_a(mid, 0);
        do {
            Word mid_b(mid, 0);
            do {
                if (mid_a == mid_b) continue;
                Word suffix(margin, 0);
                do {
                    Word u = concat(concat(prefix, mid_a), suffix);
                    Word v = concat(concat(prefix, mid_b), suffix);
                    if (apply_to_word(table_ca, u) == apply_to_word(table_ca, v)) {
                        Diamond d{prefix, mid_a, mid_b, suffix};
                        return d;
                    }
                } while (next_word(suffix, k));
            } while (next_word(mid_b, k));
        } while (next_word(mid_a, k));
    } while (next_word(prefix, k));

    // The pair-graph path guarantees a diamond of this size exists.
    throw Error("diamond search inconsistency: path exists but enumeration found none");
}

bool verify_diamond(const CellularAutomaton& ca, const Diamond& d) {
    const int r = ca.radius();
    const int k = ca.alphabet_size();
    if (d.mid_a.size() != d.mid_b.size() || d.mid_a.empty() || d.mid_a == d.mid_b) return false;
    if (d.prefix.size() != 2 * static_cast<std::size_t>(r) ||
        d.suffix.size() != 2 * static_cast<std::size_t>(r))
        return false;

    const Word u = d.left();
    const Word v = d.right();
    Word left_ctx(static_cast<std::size_t>(r), 0);
    do {
        Word right_ctx(static_cast<std::size_t>(r), 0);
        do {
            Word xu = concat(concat(left_ctx, u), right_ctx);
            Word xv = concat(concat(left_ctx, v), right_ctx);
            if (apply_to_word(ca, xu) != apply_to_word(ca, xv)) return false;
        } while (next_word(right_ctx, k));
    } while (next_word(left_ctx, k));
    return true;
}

MooreMyhillReport moore_myhill_crosscheck(const CellularAutomaton& ca, std::uint64_t budget) {
    MooreMyhillReport report;
    report.orphan = find_orphan(ca, budget);
    report.surjective = !report.orphan.has_value();
    report.diamond = find_diamond(ca, budget);
    report.preinjective = !report.diamond.has_value();
    return report;
}

namespace {

/// Aho-Corasick matcher over the forbidden words; state -1 is "matched".
struct AhoCorasick {
    int k;
    std::vector<std::vector<int>> next;  // next[state][symbol], -1 = dead
    explicit AhoCorasick(const std::vector<Word>& patterns, int alphabet) : k(alphabet) {
        // Trie.
        std::vector<std::vector<int>> children{std::vector<int>(k, 0)};
        std::vector<char> terminal{0};
        children[0].assign(k, -2);  // -2 = unset
        for (const Word& p : patterns) {
            int s = 0;
            for (Symbol c : p) {
                if (children[s][c] < 0) {
                    children[s][c] = static_cast<int>(children.size());
                    children.push_back(std::vector<int>(k, -2));
                    terminal.push_back(0);
                }
                s = children[s][c];
            }
            terminal[s] = 1;
        }
        // Breadth-first failure links; dead state collapses on any match.
        const int states = static_cast<int>(children.size());
        std::vector<int> fail(states, 0);
        next.assign(states, std::vector<int>(k, 0));
        std::queue<int> bfs;
        for (int c = 0; c < k; ++c) {
            const int child = children[0][c];
            if (child >= 0) {
                fail[child] = 0;
                next[0][c] = terminal[child] ? -1 : child;
                bfs.push(child);
            } else {
                next[0][c] = 0;
            }
        }
        while (!bfs.empty()) {
            const int s = bfs.front();
            bfs.pop();
            for (int c = 0; c < k; ++c) {
                const int child = children[s][c];
                if (child < 0) {
                    next[s][c] = next[fail[s]][c];
                    continue;
                }
                const int f = next[fail[s]][c];
                fail[child] = f < 0 ? 0 : f;
                if (terminal[child] || f < 0) terminal[child] = 1;
                next[s][c] = terminal[child] ? -1 : child;
                bfs.push(child);
            }
        }
    }
};

}  // namespace

BigInt count_avoiding(const std::vector<Word>& forbidden, int k, int n) {
    for (const Word& w : forbidden)
        if (w.empty()) return 0;
    AhoCorasick ac(forbidden, k);
    const int states = static_cast<int>(ac.next.size());
    std::vector<BigInt> current(states, 0), succ(states, 0);
    current[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(succ.begin(), succ.end(), BigInt(0));
        for (int s = 0; s < states; ++s) {
            if (current[s] == 0) continue;
            for (int c = 0; c < k; ++c) {
                const int t = ac.next[s][c];
                if (t >= 0) succ[t] += current[s];
            }
        }
        std::swap(current, succ);
    }
    BigInt total = 0;
    for (const BigInt& v : current) total += v;
    return total;
}

bool is_mixing_avoid(const Word& w, int k) {
    if (w.empty()) return false;
    const unsigned order = static_cast<unsigned>(w.size()) - 1;
    const std::uint64_t nodes = saturating_pow(k, order);
    if (nodes > (std::uint64_t{1} << 26)) throw ExhaustiveCheckInfeasible(nodes);
    const std::uint64_t tail = order == 0 ? 1 : saturating_pow(k, order - 1);
    const std::uint64_t forbidden = word_to_index(w, k);

    auto edge_allowed = [&](std::uint64_t u, int s) {
        return u * static_cast<std::uint64_t>(k) + s != forbidden;
    };
    auto succ = [&](std::uint64_t u, int s) {
        return order == 0 ? 0 : (u % tail) * static_cast<std::uint64_t>(k) + s;
    };

    // Prune to the essential part: nodes on bi-infinite legal paths.
    // Predecessors of v are a.(v without last symbol) over leading symbols a.
    auto preds_of = [&](std::uint64_t v, auto&& visit) {
        if (order == 0) {
            for (int s = 0; s < k; ++s)
                if (edge_allowed(0, s)) {
                    visit(std::uint64_t{0});
                    break;
                }
            return;
        }
        const int appended = static_cast<int>(v % static_cast<std::uint64_t>(k));
        const std::uint64_t core = v / static_cast<std::uint64_t>(k);
        for (int a = 0; a < k; ++a) {
            const std::uint64_t u = static_cast<std::uint64_t>(a) * tail + core;
            if (edge_allowed(u, appended)) visit(u);
        }
    };
    std::vector<char> alive(nodes, 1);
    std::vector<int> out_deg(nodes, 0), in_deg(nodes, 0);
    for (std::uint64_t u = 0; u < nodes; ++u) {
        for (int s = 0; s < k; ++s) {
            if (edge_allowed(u, s)) {
                ++out_deg[u];
                ++in_deg[succ(u, s)];
            }
        }
    }
    std::deque<std::uint64_t> dead_list;
    for (std::uint64_t u = 0; u < nodes; ++u)
        if (out_deg[u] == 0 || in_deg[u] == 0) dead_list.push_back(u);
    while (!dead_list.empty()) {
        const std::uint64_t u = dead_list.front();
        dead_list.pop_front();
        if (!alive[u]) continue;
        alive[u] = 0;
        for (int s = 0; s < k; ++s) {
            if (!edge_allowed(u, s)) continue;
            const std::uint64_t v = succ(u, s);
            if (alive[v] && --in_deg[v] == 0) dead_list.push_back(v);
        }
        preds_of(u, [&](std::uint64_t p) {
            if (alive[p] && --out_deg[p] == 0) dead_list.push_back(p);
        });
    }

    std::uint64_t first = nodes;
    std::uint64_t alive_count = 0;
    std::uint64_t edge_count = 0;
    for (std::uint64_t u = 0; u < nodes; ++u) {
        if (!alive[u]) continue;
        if (first == nodes) first = u;
        ++alive_count;
        for (int s = 0; s < k; ++s)
            if (edge_allowed(u, s) && alive[succ(u, s)]) ++edge_count;
    }
    if (alive_count == 0) return false;

    // Strong connectivity: forward and backward reachability from `first`.
    auto reach = [&](bool forward) {
        std::vector<char> seen(nodes, 0);
        std::vector<std::uint64_t> stack{first};
        seen[first] = 1;
        std::vector<std::vector<std::uint64_t>> preds;
        if (!forward) {
            preds.assign(nodes, {});
            for (std::uint64_t u = 0; u < nodes; ++u) {
                if (!alive[u]) continue;
                for (int s = 0; s < k; ++s)
                    if (edge_allowed(u, s) && alive[succ(u, s)]) preds[succ(u, s)].push_back(u);
            }
        }
        while (!stack.empty()) {
            const std::uint64_t u = stack.back();
            stack.pop_back();
            if (forward) {
                for (int s = 0; s < k; ++s) {
                    if (!edge_allowed(u, s)) continue;
                    const std::uint64_t v = succ(u, s);
                    if (alive[v] && !seen[v]) {
                        seen[v] = 1;
                        stack.push_back(v);
                    }
                }
            } else {
                for (std::uint64_t v : preds[u]) {
                    if (!seen[v]) {
                        seen[v] = 1;
                        stack.push_back(v);
                    }
                }
            }
        }
        return seen;
    };
    const std::vector<char> fwd = reach(true);
    const std::vector<char> bwd = reach(false);
    for (std::uint64_t u = 0; u < nodes; ++u)
        if (alive[u] && (!fwd[u] || !bwd[u])) return false;

    // Aperiodicity: gcd over edges of the potential differences is 1.
    std::vector<std::int64_t> level(nodes, -1);
    std::deque<std::uint64_t> queue{first};
    level[first] = 0;
    std::int64_t g = 0;
    while (!queue.empty()) {
        const std::uint64_t u = queue.front();
        queue.pop_front();
        for (int s = 0; s < k; ++s) {
            if (!edge_allowed(u, s)) continue;
            const std::uint64_t v = succ(u, s);
            if (!alive[v]) continue;
            if (level[v] == -1) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            } else {
                g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
            }
        }
    }
    if (g != 1) return false;

    // At least two points: a strongly connected aperiodic graph that is not
    // a single self-loop has more than one orbit.
    return !(alive_count == 1 && edge_count == 1);
}

}  // namespace idemca
