#pragma once

#include <numeric>
#include <string>

#include "singwords/balance.hpp"
#include "singwords/word.hpp"

namespace singwords {

namespace detail {

inline void require_binary(const OrderedAlphabet& a) {
    if (a.size() != 2) throw std::invalid_argument("operation needs a binary alphabet");
}

// Lower Christoffel word with p occurrences of `a` and q of `b`, as raw text.
inline std::string christoffel_text(long long p, long long q, char a, char b) {
    if (p < 0 || q < 0 || p + q < 1) throw std::domain_error("christoffel needs p+q >= 1");
    if (std::gcd(p, q) != 1) throw std::domain_error("christoffel needs gcd(p,q) = 1");
    if (q == 0) return std::string(static_cast<size_t>(p), a); // p = 1
    if (p == 0) return std::string(static_cast<size_t>(q), b); // q = 1
    long long n = p + q;
    std::string out;
    out.reserve(static_cast<size_t>(n));
    for (long long k = 1; k <= n; ++k)
        out.push_back((k * q) % n > ((k - 1) * q) % n ? a : b);
    return out;
}

} // namespace detail

// The lower Christoffel word C_{p,q} over {a<b}: p a's, q b's, gcd(p,q) = 1.
inline Word christoffel(long long p, long long q,
                        AlphabetPtr alphabet = OrderedAlphabet::shared("ab")) {
    detail::require_binary(*alphabet);
    return Word(alphabet,
                detail::christoffel_text(p, q, alphabet->letter(0), alphabet->letter(1)));
}

struct SingularPair {
    Word word;     // representative whose first letter is not larger than the reverse's
    Word reversed; // the other member of the pair (equal for palindromes)
};

namespace detail {

inline SingularPair make_pair_canonical(Word x) {
    Word r = reverse(x);
    if (!x.empty() &&
        x.alphabet().rank(r.at(0)) < x.alphabet().rank(x.at(0)))
        return SingularPair{std::move(r), std::move(x)};
    return SingularPair{std::move(x), std::move(r)};
}

// Core of the binary construction: b^n, a b^n, or a power of a Christoffel
// word with its final b turned into a.
inline std::string binary_singular_text(long long n_a, long long n_b, char a, char b) {
    if (n_a < 0 || n_b < 0 || n_a + n_b == 0)
        throw std::domain_error("binary construction needs a nonzero count vector");
    if (n_a == 0) return std::string(static_cast<size_t>(n_b), b);
    if (n_a == 1) return a + std::string(static_cast<size_t>(n_b), b);
    long long p = n_a - 1, q = n_b + 1;
    long long g = std::gcd(p, q);
    std::string base = christoffel_text(p / g, q / g, a, b);
    std::string out;
    out.reserve(static_cast<size_t>(p + q));
    for (long long i = 0; i < g; ++i) out += base;
    out.back() = a;
    return out;
}

} // namespace detail

// The unique (up to reversal) singular binary word with the given letter
// counts.
inline SingularPair binary_singular_from_parikh(long long n_a, long long n_b,
                                                AlphabetPtr alphabet = OrderedAlphabet::shared("ab")) {
    detail::require_binary(*alphabet);
    return detail::make_pair_canonical(Word(
        alphabet, detail::binary_singular_text(n_a, n_b, alphabet->letter(0), alphabet->letter(1))));
}

// A binary word is singular exactly when it or its reversal has one of the
// closed forms b^n, a b^n, or aya with ayb a power of a Christoffel word.
inline bool is_binary_singular(const Word& x) {
    detail::require_binary(x.alphabet());
    char a = x.alphabet().letter(0), b = x.alphabet().letter(1);
    auto matches = [&](std::string_view s) {
        size_t i = 0;
        if (i < s.size() && s[i] == a) ++i; // optional single leading a
        bool rest_all_b = true;
        for (size_t t = i; t < s.size(); ++t)
            if (s[t] != b) { rest_all_b = false; break; }
        if (rest_all_b) return true; // b^n or a b^n
        if (s.size() < 2 || s.front() != a || s.back() != a) return false;
        std::string ayb(s);
        ayb.back() = b;
        long long p = 0, q = 0;
        for (char c : ayb) (c == a ? p : q)++;
        long long g = std::gcd(p, q);
        std::string base = detail::christoffel_text(p / g, q / g, a, b);
        std::string power;
        power.reserve(ayb.size());
        for (long long t = 0; t < g; ++t) power += base;
        return power == ayb;
    };
    return matches(x.view()) || matches(reverse_text(x.view()));
}

// y is bispecial Sturmian when all four one-letter extensions are balanced.
inline bool is_bispecial_sturmian(const Word& y) {
    detail::require_binary(y.alphabet());
    std::string a(1, y.alphabet().letter(0)), b(1, y.alphabet().letter(1));
    auto balanced = [&](const std::string& s) {
        return is_balanced(Word(y.alphabet_ptr(), s)).balanced;
    };
    return balanced(a + y.text()) && balanced(b + y.text()) && balanced(y.text() + a) &&
           balanced(y.text() + b);
}

} // namespace singwords
