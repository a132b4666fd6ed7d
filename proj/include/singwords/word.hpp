#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "singwords/alphabet.hpp"

namespace singwords {

enum class Ordering { less, equal, greater };

inline Ordering flip(Ordering o) {
    if (o == Ordering::less) return Ordering::greater;
    if (o == Ordering::greater) return Ordering::less;
    return Ordering::equal;
}

// A finite word over an OrderedAlphabet. Immutable after construction.
class Word {
public:
    Word(AlphabetPtr alphabet, std::string letters)
        : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
        if (!alphabet_)
            throw std::invalid_argument("word needs an alphabet");
        for (char c : letters_)
            if (!alphabet_->contains(c))
                throw std::invalid_argument(std::string("letter '") + c +
                                            "' not in alphabet " + alphabet_->to_string());
    }

    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    const OrderedAlphabet& alphabet() const { return *alphabet_; }
    const std::string& text() const { return letters_; }
    std::string_view view() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char at(size_t i) const { return letters_.at(i); }

    friend bool operator==(const Word& a, const Word& b) {
        return *a.alphabet_ == *b.alphabet_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    AlphabetPtr alphabet_;
    std::string letters_;
};

inline std::string reverse_text(std::string_view s) {
    return std::string(s.rbegin(), s.rend());
}

inline Word reverse(const Word& w) {
    return Word(w.alphabet_ptr(), reverse_text(w.view()));
}

// Lexicographic order with the opposite convention on proper prefixes:
// a word is smaller than each of its proper prefixes, so the empty word is
// the maximum element.
inline Ordering lex_compare(const OrderedAlphabet& alphabet, std::string_view x,
                            std::string_view y) {
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) {
            return alphabet.rank(x[i]) < alphabet.rank(y[i]) ? Ordering::less
                                                             : Ordering::greater;
        }
    }
    if (x.size() == y.size()) return Ordering::equal;
    return x.size() > y.size() ? Ordering::less : Ordering::greater;
}

inline Ordering lex_compare(const Word& x, const Word& y) {
    require_same_alphabet(x.alphabet(), y.alphabet());
    return lex_compare(x.alphabet(), x.view(), y.view());
}

// Letter-occurrence counts, indexed by alphabet rank.
struct ParikhVector {
    AlphabetPtr alphabet;
    std::vector<long long> counts;

    long long total() const {
        long long t = 0;
        for (long long c : counts) t += c;
        return t;
    }
    long long of(char letter) const { return counts.at(static_cast<size_t>(alphabet->rank(letter))); }

    friend bool operator==(const ParikhVector& a, const ParikhVector& b) {
        return *a.alphabet == *b.alphabet && a.counts == b.counts;
    }
};

inline ParikhVector parikh(const Word& w) {
    ParikhVector p{w.alphabet_ptr(), std::vector<long long>(static_cast<size_t>(w.alphabet().size()), 0)};
    for (char c : w.view())
        ++p.counts[static_cast<size_t>(w.alphabet().rank(c))];
    return p;
}

} // namespace singwords
