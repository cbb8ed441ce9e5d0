#include "idemca/coding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "idemca/errors.hpp"

namespace idemca {

namespace {

/// Could `inner` occur starting at (signed) offset j relative to `host`,
/// in some ambient configuration containing host? Cells outside host are
/// unconstrained, so only the overlapping cells must match.
bool overlap_compatible(const Word& host, const Word& inner, long long j) {
    bool overlaps = false;
    for (std::size_t p = 0; p < inner.size(); ++p) {
        const long long pos = j + static_cast<long long>(p);
        if (pos < 0 || pos >= static_cast<long long>(host.size())) continue;
        overlaps = true;
        if (host[static_cast<std::size_t>(pos)] != inner[p]) return false;
    }
    return overlaps;
}

}  // namespace

bool is_mutually_unbordered(const std::vector<Word>& words) {
    for (const Word& a : words)
        if (a.empty()) return false;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            const Word& vi = words[i];
            const Word& vj = words[j];
            // vj starting strictly inside vi.
            for (long long t = 1; t < static_cast<long long>(vi.size()); ++t)
                if (overlap_compatible(vi, vj, t)) return false;
            // Same start position with different words.
            if (i != j && overlap_compatible(vi, vj, 0)) return false;
        }
    }
    return true;
}

namespace {

bool contains_exactly_one(const Word& host, const Word& v) {
    return occurrences(host, v).size() == 1;
}

/// v may overlap host only at its unique internal occurrence.
bool v_overlaps_only_internally(const Word& host, const Word& v) {
    const auto occ = occurrences(host, v);
    if (occ.size() != 1) return false;
    const long long internal = static_cast<long long>(occ[0]);
    for (long long j = -(static_cast<long long>(v.size()) - 1);
         j < static_cast<long long>(host.size()); ++j) {
        if (j == internal) continue;
        if (overlap_compatible(host, v, j)) return false;
    }
    return true;
}

}  // namespace

bool check_triple(const UnborderedTriple& t, int k, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    for (const Word* host : {&t.w, &t.w0, &t.w1}) {
        if (!contains_exactly_one(*host, t.v))
            return fail("word " + format_digits(*host) + " does not contain exactly one " +
                        format_digits(t.v));
        if (!v_overlaps_only_internally(*host, t.v))
            return fail(format_digits(t.v) + " can overlap " + format_digits(*host) +
                        " outside its occurrence");
    }
    if (!is_mutually_unbordered({t.w, t.w0, t.w1}))
        return fail("the three words are not mutually unbordered");
    if (!is_mixing_avoid(t.w, k)) return fail("avoiding " + format_digits(t.w) + " is not mixing");
    return true;
}

UnborderedTriple build_triple(const Word& v, int k, std::uint64_t candidate_budget) {
    if (v.empty()) throw std::invalid_argument("v must be nonempty");
    std::uint64_t spent = 0;
    auto charge = [&](std::uint64_t amount) {
        spent += amount;
        if (spent > candidate_budget)
            throw SearchBudgetExceeded("no unbordered triple for " + format_digits(v) +
                                       " within the search budget");
    };

    // Admissible padded copies of v, grouped by length.
    std::map<int, std::vector<Word>> pools;
    std::map<Word, bool> mixing_cache;
    auto pool_for = [&](int len) -> const std::vector<Word>& {
        auto it = pools.find(len);
        if (it != pools.end()) return it->second;
        std::vector<Word>& pool = pools[len];
        Word c(static_cast<std::size_t>(len), 0);
        do {
            charge(1);
            if (!contains_exactly_one(c, v)) continue;
            if (!v_overlaps_only_internally(c, v)) continue;
            if (!is_mutually_unbordered({c})) continue;
            pool.push_back(c);
        } while (next_word(c, k));
        return pool;
    };
    auto mixing = [&](const Word& w) {
        auto it = mixing_cache.find(w);
        if (it != mixing_cache.end()) return it->second;
        const bool ok = is_mixing_avoid(w, k);
        mixing_cache.emplace(w, ok);
        return ok;
    };

    const int base = static_cast<int>(v.size());
    for (int total = 3 * base;; ++total) {
        charge(1);
        for (int l1 = base; l1 <= total - 2 * base; ++l1) {
            for (int l2 = base; l2 <= total - l1 - base; ++l2) {
                const int l3 = total - l1 - l2;
                for (const Word& w : pool_for(l1)) {
                    if (!mixing(w)) continue;
                    for (const Word& w0 : pool_for(l2)) {
                        if (w0 == w) continue;
                        for (const Word& w1 : pool_for(l3)) {
                            if (w1 == w || w1 == w0) continue;
                            charge(1);
                            UnborderedTriple t{v, w, w0, w1};
                            if (is_mutually_unbordered({t.w, t.w0, t.w1})) return t;
                        }
                    }
                }
            }
        }
    }
}

AvoidanceCounter::AvoidanceCounter(Word forbidden, int k)
    : forbidden_(std::move(forbidden)), k_(k) {
    if (forbidden_.empty()) throw std::invalid_argument("forbidden word must be nonempty");
    const int len = static_cast<int>(forbidden_.size());
    dead_ = len;

    // Prefix-match automaton with failure links.
    std::vector<int> fail(static_cast<std::size_t>(len) + 1, 0);
    for (int q = 1; q < len; ++q) {
        int f = fail[static_cast<std::size_t>(q)];
        const Symbol c = forbidden_[static_cast<std::size_t>(q)];
        while (f > 0 && forbidden_[static_cast<std::size_t>(f)] != c)
            f = fail[static_cast<std::size_t>(f)];
        fail[static_cast<std::size_t>(q) + 1] = forbidden_[static_cast<std::size_t>(f)] == c ? f + 1 : 0;
    }
    delta_.assign(static_cast<std::size_t>(len) + 1, std::vector<int>(static_cast<std::size_t>(k_), 0));
    for (int q = 0; q <= len; ++q) {
        for (int c = 0; c < k_; ++c) {
            if (q == dead_) {
                delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] = dead_;
            } else if (forbidden_[static_cast<std::size_t>(q)] == c) {
                delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] = q + 1;
            } else if (q == 0) {
                delta_[0][static_cast<std::size_t>(c)] = 0;
            } else {
                delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] =
                    delta_[static_cast<std::size_t>(fail[static_cast<std::size_t>(q)])]
                          [static_cast<std::size_t>(c)];
            }
        }
    }
    extensions_.push_back(std::vector<BigInt>(static_cast<std::size_t>(len) + 1, 1));
    extensions_.back()[static_cast<std::size_t>(dead_)] = 0;
    extensions64_.push_back(std::vector<std::uint64_t>(static_cast<std::size_t>(len) + 1, 1));
    extensions64_.back()[static_cast<std::size_t>(dead_)] = 0;
}

void AvoidanceCounter::ensure_table(int n) const {
    while (static_cast<int>(extensions_.size()) <= n) {
        const auto& prev = extensions_.back();
        std::vector<BigInt> row(prev.size(), 0);
        for (int q = 0; q < dead_; ++q) {
            BigInt total = 0;
            for (int c = 0; c < k_; ++c) {
                const int t = delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
                if (t != dead_) total += prev[static_cast<std::size_t>(t)];
            }
            row[static_cast<std::size_t>(q)] = std::move(total);
        }
        extensions_.push_back(std::move(row));
        if (fits64_) {
            const auto& prev64 = extensions64_.back();
            std::vector<std::uint64_t> row64(prev64.size(), 0);
            for (int q = 0; q < dead_ && fits64_; ++q) {
                std::uint64_t total = 0;
                for (int c = 0; c < k_; ++c) {
                    const int t = delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
                    if (t == dead_) continue;
                    const std::uint64_t add = prev64[static_cast<std::size_t>(t)];
                    if (total > UINT64_MAX - add) {
                        fits64_ = false;
                        break;
                    }
                    total += add;
                }
                row64[static_cast<std::size_t>(q)] = total;
            }
            if (fits64_) extensions64_.push_back(std::move(row64));
        }
    }
}

BigInt AvoidanceCounter::count(int n) const {
    if (n < 0) return 0;
    ensure_table(n);
    return extensions_[static_cast<std::size_t>(n)][0];
}

BigInt AvoidanceCounter::rank(std::span<const Symbol> u) const {
    const int n = static_cast<int>(u.size());
    ensure_table(n);
    if (n < static_cast<int>(extensions64_.size())) {
        std::uint64_t r = 0;
        int q = 0;
        for (int i = 0; i < n; ++i) {
            const auto& row = extensions64_[static_cast<std::size_t>(n - 1 - i)];
            for (int c = 0; c < u[static_cast<std::size_t>(i)]; ++c) {
                const int t = delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
                if (t != dead_) r += row[static_cast<std::size_t>(t)];
            }
            q = delta_[static_cast<std::size_t>(q)][u[static_cast<std::size_t>(i)]];
            if (q == dead_) throw std::invalid_argument("word contains the forbidden factor");
        }
        return BigInt(r);
    }
    BigInt r = 0;
    int q = 0;
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < u[static_cast<std::size_t>(i)]; ++c) {
            const int t = delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
            if (t != dead_) r += extensions_[static_cast<std::size_t>(n - 1 - i)][static_cast<std::size_t>(t)];
        }
        q = delta_[static_cast<std::size_t>(q)][u[static_cast<std::size_t>(i)]];
        if (q == dead_) throw std::invalid_argument("word contains the forbidden factor");
    }
    return r;
}

Word AvoidanceCounter::unrank(const BigInt& r, int n) const {
    ensure_table(n);
    if (r < 0 || r >= count(n)) throw std::invalid_argument("rank out of range");
    Word u;
    u.reserve(static_cast<std::size_t>(n));
    int q = 0;
    if (n < static_cast<int>(extensions64_.size())) {
        std::uint64_t rest = r.convert_to<std::uint64_t>();
        for (int i = 0; i < n; ++i) {
            const auto& row = extensions64_[static_cast<std::size_t>(n - 1 - i)];
            for (int c = 0; c < k_; ++c) {
                const int t = delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
                if (t == dead_) continue;
                const std::uint64_t below = row[static_cast<std::size_t>(t)];
                if (rest < below) {
                    u.push_back(static_cast<Symbol>(c));
                    q = t;
                    break;
                }
                rest -= below;
            }
        }
        return u;
    }
    BigInt rest = r;
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < k_; ++c) {
            const int t = delta_[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
            if (t == dead_) continue;
            const BigInt& below = extensions_[static_cast<std::size_t>(n - 1 - i)][static_cast<std::size_t>(t)];
            if (rest < below) {
                u.push_back(static_cast<Symbol>(c));
                q = t;
                break;
            }
            rest -= below;
        }
    }
    return u;
}

CapacityCertificate capacity_threshold(const UnborderedTriple& t, int k, int check_span,
                                       int scan_limit) {
    AvoidanceCounter avoid_v(t.v, k);
    AvoidanceCounter avoid_w(t.w, k);
    const int twice_w = 2 * static_cast<int>(t.w.size());

    auto holds = [&](int n) {
        if (n < twice_w) return false;
        return avoid_w.count(n - twice_w) > avoid_v.count(n);
    };

    CapacityCertificate cert;
    for (int m = 1; m + check_span <= scan_limit; ++m) {
        bool ok = true;
        for (int n = m; n <= m + check_span && ok; ++n) ok = holds(n);
        if (ok) {
            cert.m = m;
            cert.verified_lo = m;
            cert.verified_hi = m + check_span;
            const int probe = std::max(m + check_span, 160);
            cert.growth_avoid_v = avoid_v.count(probe + 1).convert_to<double>() /
                                  avoid_v.count(probe).convert_to<double>();
            cert.growth_avoid_w = avoid_w.count(probe + 1).convert_to<double>() /
                                  avoid_w.count(probe).convert_to<double>();
            cert.asymptotic_indicated = cert.growth_avoid_w > cert.growth_avoid_v + 1e-9;
            return cert;
        }
    }
    throw NoThresholdFound("no capacity threshold below " + std::to_string(scan_limit));
}

int separation_length(int m, int k) {
    if (m < 1) throw std::invalid_argument("period bound must be at least 1");
    if (k < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");

    // A word of length L is ambiguous if two periods p < q <= m both hold
    // but force different continuations. Position classes under the two
    // period relations decide this without enumerating words: every x in
    // [0, q) shares a class with x mod p, so a differing pair exists iff
    // some residue class mod gcd(p, q) meets two distinct classes.
    auto ambiguous_at = [&](int L) {
        std::vector<int> parent(static_cast<std::size_t>(L));
        std::vector<int> first_class;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (int q = m; q >= 2; --q) {
            for (int p = q - 1; p >= 1; --p) {
                std::iota(parent.begin(), parent.end(), 0);
                for (int i = 0; i + p < L; ++i) {
                    const int a = find(i);
                    const int b = find(i + p);
                    if (a != b) parent[static_cast<std::size_t>(a)] = b;
                }
                for (int i = 0; i + q < L; ++i) {
                    const int a = find(i);
                    const int b = find(i + q);
                    if (a != b) parent[static_cast<std::size_t>(a)] = b;
                }
                const int g = std::gcd(p, q);
                first_class.assign(static_cast<std::size_t>(g), -1);
                for (int x = 0; x < q; ++x) {
                    const int c = find(x);
                    int& slot = first_class[static_cast<std::size_t>(x % g)];
                    if (slot == -1)
                        slot = c;
                    else if (slot != c)
                        return true;
                }
            }
        }
        return false;
    };

    // Safety is monotone in L (a prefix of an ambiguous word is ambiguous),
    // and Fine and Wilf bound the answer by max(p + q - gcd(p, q)).
    int candidate = m;
    for (int q = 2; q <= m; ++q)
        for (int p = 1; p < q; ++p) candidate = std::max(candidate, p + q - std::gcd(p, q));
    if (!ambiguous_at(candidate) && (candidate == m || ambiguous_at(candidate - 1)))
        return candidate;
    int lo = m, hi = candidate;  // least safe length by bisection
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (ambiguous_at(mid))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

CodingKit::CodingKit(UnborderedTriple triple, int k, int check_span)
    : k_(k),
      triple_(std::move(triple)),
      certificate_(capacity_threshold(triple_, k, check_span)),
      k_sep_(separation_length(certificate_.m, k)),
      counter_v_(triple_.v, k),
      counter_w_(triple_.w, k) {
    std::string reason;
    if (!check_triple(triple_, k_, &reason))
        throw std::invalid_argument("invalid triple: " + reason);
}

Word CodingKit::encode(const Word& u) const {
    const int n = static_cast<int>(u.size());
    if (n < certificate_.m)
        throw LengthBelowThreshold(u.size(), static_cast<std::size_t>(certificate_.m));
    if (!occurrences(u, triple_.v).empty())
        throw std::invalid_argument("word to encode contains v");

    const int inner = n - 2 * static_cast<int>(triple_.w.size());
    const BigInt r = counter_v_.rank(u);
    if (inner < 0 || r >= counter_w_.count(inner))
        throw Error("capacity inequality failed at length " + std::to_string(n));
    const Word s = counter_w_.unrank(r, inner);
    return concat(triple_.w, s, triple_.w);
}

Word CodingKit::decode(const Word& block) const {
    const std::size_t wl = triple_.w.size();
    if (block.size() < 2 * wl) throw MalformedBlock("block shorter than its two margins");
    if (!occurs_at(block, triple_.w, 0)) throw MalformedBlock("block does not start with w");
    if (!occurs_at(block, triple_.w, block.size() - wl))
        throw MalformedBlock("block does not end with w");
    const Word s(block.begin() + static_cast<long long>(wl),
                 block.end() - static_cast<long long>(wl));
    if (!occurrences(s, triple_.w).empty()) throw MalformedBlock("inner word contains w");

    const BigInt r = counter_w_.rank(s);
    const int n = static_cast<int>(block.size());
    if (r >= counter_v_.count(n)) throw MalformedBlock("block is not the encoding of any word");
    return counter_v_.unrank(r, n);
}

CodingKit build_coding_kit(const Word& v, int k, int check_span,
                           std::uint64_t candidate_budget) {
    return CodingKit(build_triple(v, k, candidate_budget), k, check_span);
}

}  // namespace idemca
