#include "idemca/word.hpp"

#include <stdexcept>

namespace idemca {

Alphabet::Alphabet(int symbols) : k(symbols) {
    if (k < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    if (k > 255) throw std::invalid_argument("alphabet size above 255 is unsupported");
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::uint64_t word_to_index(std::span<const Symbol> w, int k) {
    std::uint64_t idx = 0;
    for (Symbol s : w) idx = idx * static_cast<std::uint64_t>(k) + s;
    return idx;
}

Word index_to_word(std::uint64_t index, int k, std::size_t length) {
    Word w(length, 0);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(k));
        index /= static_cast<std::uint64_t>(k);
    }
    return w;
}

Word parse_digits(const std::string& digits, int k) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("expected digit, got '" + std::string(1, c) + "'");
        int v = c - '0';
        if (v >= k) throw std::invalid_argument("symbol " + std::to_string(v) + " out of range for k=" + std::to_string(k));
        w.push_back(static_cast<Symbol>(v));
    }
    return w;
}

std::string format_digits(std::span<const Symbol> w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol x : w) s.push_back(static_cast<char>('0' + x));
    return s;
}

bool all_symbols_below(std::span<const Symbol> w, int k) {
    for (Symbol s : w)
        if (s >= k) return false;
    return true;
}

bool occurs_at(std::span<const Symbol> w, std::span<const Symbol> u, std::size_t pos) {
    if (pos + u.size() > w.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (w[pos + i] != u[i]) return false;
    return true;
}

std::vector<std::size_t> occurrences(std::span<const Symbol> w, std::span<const Symbol> u) {
    std::vector<std::size_t> out;
    if (u.empty() || u.size() > w.size()) return out;
    for (std::size_t pos = 0; pos + u.size() <= w.size(); ++pos)
        if (occurs_at(w, u, pos)) out.push_back(pos);
    return out;
}

Word concat(std::span<const Symbol> a, std::span<const Symbol> b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word concat(std::span<const Symbol> a, std::span<const Symbol> b, std::span<const Symbol> c) {
    Word w;
    w.reserve(a.size() + b.size() + c.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    w.insert(w.end(), c.begin(), c.end());
    return w;
}

bool next_word(Word& w, int k) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] + 1 < k) {
            ++w[i];
            return true;
        }
        w[i] = 0;
    }
    return false;
}

}  // namespace idemca
