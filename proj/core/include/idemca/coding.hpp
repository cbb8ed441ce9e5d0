#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idemca/language.hpp"
#include "idemca/word.hpp"

namespace idemca {

/// No member may occur inside another or across a nontrivial overlap;
/// decided by exhaustive overlap testing of every ordered pair.
bool is_mutually_unbordered(const std::vector<Word>& words);

/// Marker words around v: each of w, w0, w1 contains exactly one copy of
/// v, v cannot overlap any of them except at that copy, the set is
/// mutually unbordered, and the SFT avoiding w is mixing.
struct UnborderedTriple {
    Word v;
    Word w;
    Word w0;
    Word w1;
};

/// All five UnborderedTriple conditions; `reason` names the first failure.
bool check_triple(const UnborderedTriple& t, int k, std::string* reason = nullptr);

/// Deterministic search for a triple of padded copies of v, by total
/// length and then lexicographic order. Throws SearchBudgetExceeded.
UnborderedTriple build_triple(const Word& v, int k,
                              std::uint64_t candidate_budget = 20'000'000);

/// Exact counting, lexicographic rank and unrank for the words avoiding
/// one forbidden word, via its prefix-match automaton.
class AvoidanceCounter {
public:
    AvoidanceCounter(Word forbidden, int k);

    const Word& forbidden() const { return forbidden_; }
    BigInt count(int n) const;
    /// Rank of u among the avoid-words of its length; u must avoid the word.
    BigInt rank(std::span<const Symbol> u) const;
    /// Inverse of rank for length n; r must be below count(n).
    Word unrank(const BigInt& r, int n) const;

private:
    void ensure_table(int n) const;

    Word forbidden_;
    int k_;
    int dead_;
    std::vector<std::vector<int>> delta_;
    mutable std::vector<std::vector<BigInt>> extensions_;  // [length][state]
    // Machine-word mirror of the table, valid while the values fit; rank
    // and unrank take it for the long exhaustive corpora.
    mutable std::vector<std::vector<std::uint64_t>> extensions64_;
    mutable bool fits64_ = true;
};

struct CapacityCertificate {
    int m = 0;                 // least threshold found
    int verified_lo = 0;       // inequality checked exactly on [lo, hi]
    int verified_hi = 0;
    double growth_avoid_v = 0;  // dominant-eigenvalue estimates
    double growth_avoid_w = 0;
    bool asymptotic_indicated = false;
};

/// Least m such that #(length-(n-2|w|) avoid-w words) strictly exceeds
/// #(length-n avoid-v words) for every n in [m, m+check_span], with exact
/// integers; the growth estimates flag the asymptotic direction only.
CapacityCertificate capacity_threshold(const UnborderedTriple& t, int k, int check_span,
                                       int scan_limit = 2048);

/// Least L >= m such that every word of length L determines its periodic
/// continuation: no word admits two periods p != q <= m whose extensions
/// disagree. Always at most 2m (Fine and Wilf).
int separation_length(int m, int k);

/// The assembled coding machinery: triple, capacity threshold, period
/// separation length, and the two counting automata.
class CodingKit {
public:
    CodingKit(UnborderedTriple triple, int k, int check_span = 8);

    int alphabet_size() const { return k_; }
    const UnborderedTriple& triple() const { return triple_; }
    int threshold() const { return certificate_.m; }
    int separation() const { return k_sep_; }
    const CapacityCertificate& certificate() const { return certificate_; }

    BigInt count_avoid_v(int n) const { return counter_v_.count(n); }
    BigInt count_avoid_w(int n) const { return counter_w_.count(n); }

    /// Injects u (avoiding v, |u| >= threshold) into w.s.w of the same
    /// length: the rank of u among avoid-v words becomes the rank of s
    /// among avoid-w words. Throws LengthBelowThreshold.
    Word encode(const Word& u) const;

    /// Exact inverse of encode. Throws MalformedBlock on anything that is
    /// not an encoding: wrong margins, s containing w, or rank overflow.
    Word decode(const Word& block) const;

private:
    int k_;
    UnborderedTriple triple_;
    CapacityCertificate certificate_;
    int k_sep_;
    AvoidanceCounter counter_v_;
    AvoidanceCounter counter_w_;
};

CodingKit build_coding_kit(const Word& v, int k, int check_span = 8,
                           std::uint64_t candidate_budget = 20'000'000);

inline Word encode_rank(const CodingKit& kit, const Word& u) { return kit.encode(u); }
inline Word decode_rank(const CodingKit& kit, const Word& block) { return kit.decode(block); }

}  // namespace idemca
