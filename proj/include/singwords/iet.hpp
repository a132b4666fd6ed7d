#pragma once

#include <map>
#include <string>
#include <vector>

#include "singwords/rational.hpp"
#include "singwords/word.hpp"

namespace singwords {

// Symmetric k-interval exchange: interval lengths alpha_1..alpha_k summing to
// one, permutation fixed to i -> k+1-i. Intervals are half open on the right.
class IETSpec {
public:
    explicit IETSpec(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
        int k = static_cast<int>(lengths_.size());
        if (k < 2) throw std::domain_error("an interval exchange needs k >= 2");
        if (k > 9) throw std::domain_error("at most 9 intervals are supported");
        Rational sum(0);
        for (const Rational& a : lengths_) {
            if (!(Rational(0) < a && a < Rational(1)))
                throw std::domain_error("interval lengths must lie strictly between 0 and 1");
            sum = sum + a;
        }
        if (sum != Rational(1)) throw std::domain_error("interval lengths must sum to 1");
        Rational acc(0);
        for (const Rational& a : lengths_) {
            acc = acc + a;
            gammas_.push_back(acc); // gamma_1..gamma_k, last is 1
        }
    }

    int k() const { return static_cast<int>(lengths_.size()); }
    const std::vector<Rational>& lengths() const { return lengths_; }

    // Discontinuities gamma_i = alpha_1 + ... + alpha_i, 1 <= i <= k-1.
    std::vector<Rational> discontinuities() const {
        return {gammas_.begin(), gammas_.end() - 1};
    }
    // Discontinuities of the inverse: beta_i = alpha_{k+1-i} + ... + alpha_k.
    std::vector<Rational> inverse_discontinuities() const {
        std::vector<Rational> betas;
        Rational acc(0);
        for (int i = k() - 1; i >= 1; --i) {
            acc = acc + lengths_[static_cast<size_t>(i)];
            betas.push_back(acc);
        }
        return betas;
    }

    // 1-based index of the interval containing x.
    int interval_of(const Rational& x) const {
        require_domain(x);
        for (int i = 0; i < k(); ++i)
            if (x < gammas_[static_cast<size_t>(i)]) return i + 1;
        throw std::logic_error("point escaped the unit interval");
    }

    Rational apply(const Rational& x) const {
        int i = interval_of(x);
        return x + shift(i);
    }

    Rational inverse_apply(const Rational& y) const {
        require_domain(y);
        // Image intervals come in the order J_k, J_{k-1}, ..., J_1.
        Rational acc(0);
        for (int i = k(); i >= 1; --i) {
            acc = acc + lengths_[static_cast<size_t>(i - 1)];
            if (y < acc) return y - shift(i);
        }
        throw std::logic_error("point escaped the unit interval");
    }

private:
    void require_domain(const Rational& x) const {
        if (x < Rational(0) || !(x < Rational(1)))
            throw std::domain_error("point must lie in [0, 1)");
    }

    // I(x) = x + sum_{j>i} alpha_j - sum_{j<i} alpha_j on interval i.
    Rational shift(int i) const {
        Rational above(0), below(0);
        for (int j = i + 1; j <= k(); ++j) above = above + lengths_[static_cast<size_t>(j - 1)];
        for (int j = 1; j < i; ++j) below = below + lengths_[static_cast<size_t>(j - 1)];
        return above - below;
    }

    std::vector<Rational> lengths_;
    std::vector<Rational> gammas_;
};

inline AlphabetPtr coding_alphabet(int k) {
    std::string letters;
    for (int i = 1; i <= k; ++i) letters.push_back(static_cast<char>('0' + i));
    return std::make_shared<const OrderedAlphabet>(letters);
}

struct CodingWindow {
    long long lo; // letters[t] codes iterate lo + t
    Word letters;
};

// x_n = i whenever the n-th iterate of gamma lies in interval i, for
// lo <= n <= hi.
inline CodingWindow natural_coding(const IETSpec& spec, const Rational& gamma, long long lo,
                                   long long hi) {
    if (lo > 0 || hi < 0 || lo > hi)
        throw std::invalid_argument("window must satisfy lo <= 0 <= hi");
    std::string letters(static_cast<size_t>(hi - lo + 1), '?');
    Rational p = gamma;
    for (long long n = 0; n <= hi; ++n) {
        letters[static_cast<size_t>(n - lo)] = static_cast<char>('0' + spec.interval_of(p));
        if (n < hi) p = spec.apply(p);
    }
    p = gamma;
    for (long long n = -1; n >= lo; --n) {
        p = spec.inverse_apply(p);
        letters[static_cast<size_t>(n - lo)] = static_cast<char>('0' + spec.interval_of(p));
    }
    return CodingWindow{lo, Word(coding_alphabet(spec.k()), std::move(letters))};
}

// Prefix of the image of `seed` under a nonerasing letter-to-word morphism.
inline Word morphic_word(const std::map<char, std::string>& rules, const Word& seed,
                         size_t length) {
    for (auto& [c, image] : rules) {
        (void)c;
        if (image.empty()) throw std::invalid_argument("morphism must be nonerasing");
    }
    std::string out;
    out.reserve(length);
    for (char c : seed.view()) {
        if (out.size() >= length) break;
        auto it = rules.find(c);
        if (it == rules.end())
            throw std::invalid_argument(std::string("no rule for letter '") + c + "'");
        out += it->second;
    }
    if (out.size() < length)
        throw std::invalid_argument("seed too short for the requested prefix length");
    out.resize(length);
    AlphabetPtr target = seed.alphabet_ptr();
    for (char c : out)
        if (!target->contains(c)) { // images may use a different alphabet
            std::string letters;
            for (auto& [from, image] : rules) {
                (void)from;
                for (char lc : image)
                    if (letters.find(lc) == std::string::npos) letters.push_back(lc);
            }
            std::sort(letters.begin(), letters.end());
            target = std::make_shared<const OrderedAlphabet>(letters);
            break;
        }
    return Word(target, std::move(out));
}

// Prefix of the Fibonacci word, the fixed point of 0 -> 01, 1 -> 0.
inline Word fibonacci_word(size_t length) {
    std::string s = "0";
    while (s.size() < length) {
        std::string next;
        next.reserve(2 * s.size());
        for (char c : s) next += (c == '0') ? "01" : "0";
        s = std::move(next);
    }
    s.resize(std::max<size_t>(length, 1));
    if (length == 0) s.clear();
    return Word(OrderedAlphabet::shared("01"), std::move(s));
}

} // namespace singwords
