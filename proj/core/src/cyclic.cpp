#include "idemca/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

namespace idemca {

int least_cyclic_period(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (w[i] != w[(i + p) % n]) ok = false;
        if (ok) return p;
    }
    return n;  // unreachable for nonempty w
}

CyclicWord::CyclicWord(Word w) {
    if (w.empty()) throw std::invalid_argument("cyclic word needs a nonempty period");
    const int p = least_cyclic_period(w);
    word_.assign(w.begin(), w.begin() + p);
}

Symbol CyclicWord::at(long long i) const {
    const long long n = static_cast<long long>(word_.size());
    long long m = i % n;
    if (m < 0) m += n;
    return word_[static_cast<std::size_t>(m)];
}

CyclicWord CyclicWord::rotate_left(int amount) const {
    const int n = least_period();
    int s = amount % n;
    if (s < 0) s += n;
    Word r(word_.begin() + s, word_.end());
    r.insert(r.end(), word_.begin(), word_.begin() + s);
    return CyclicWord(std::move(r));
}

CyclicWord CyclicWord::canonical() const {
    CyclicWord best = *this;
    for (int s = 1; s < least_period(); ++s) {
        CyclicWord rot = rotate_left(s);
        if (rot.word_ < best.word_) best = rot;
    }
    return best;
}

bool CyclicWord::same_orbit(const CyclicWord& other) const {
    return canonical() == other.canonical();
}

Word CyclicWord::expand(std::size_t min_length) const {
    Word out;
    out.reserve(min_length + word_.size());
    while (out.size() < min_length) out.insert(out.end(), word_.begin(), word_.end());
    if (out.empty()) out = word_;
    return out;
}

std::string CyclicWord::str() const { return format_digits(word_); }

}  // namespace idemca
