#pragma once

#include <optional>
#include <string_view>

#include "singwords/word.hpp"

namespace singwords {

// A split x = reverse(u) . v . w with v nonempty.
struct Factorization {
    Word u;
    Word v;
    Word w;

    std::string reconstruct() const {
        return reverse_text(u.view()) + v.text() + w.text();
    }
};

enum class Verdict { singular, reversible };

struct Classification {
    Verdict verdict;
    std::optional<Factorization> witness; // present iff reversible
};

namespace detail {

// Compares v with its own reversal without materializing the reversal.
inline Ordering compare_with_reversal(const OrderedAlphabet& a, std::string_view v) {
    size_t n = v.size();
    for (size_t t = 0; t < n; ++t) {
        char x = v[t], y = v[n - 1 - t];
        if (x != y)
            return a.rank(x) < a.rank(y) ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

// Compares u = reverse(s[0..i)) with w = s[j..n)) under the prefix-flipping
// lexicographic order, in place.
inline Ordering compare_u_w(const OrderedAlphabet& a, std::string_view s, size_t i, size_t j) {
    size_t lu = i, lw = s.size() - j;
    size_t m = std::min(lu, lw);
    for (size_t t = 0; t < m; ++t) {
        char x = s[i - 1 - t], y = s[j + t];
        if (x != y)
            return a.rank(x) < a.rank(y) ? Ordering::less : Ordering::greater;
    }
    if (lu == lw) return Ordering::equal;
    return lu > lw ? Ordering::less : Ordering::greater;
}

// Scans factorizations by increasing |v|, then start index, and reports the
// first reversible one. In fast mode only v beginning and ending in distinct
// letters are inspected; by the structure of reversible factorizations the
// verdict is unchanged.
inline bool find_reversible(const OrderedAlphabet& a, std::string_view s, bool fast,
                            size_t& out_i, size_t& out_j) {
    size_t n = s.size();
    for (size_t len = 1; len <= n; ++len) {
        for (size_t i = 0; i + len <= n; ++i) {
            size_t j = i + len;
            if (fast && s[i] == s[j - 1]) continue;
            Ordering cv = compare_with_reversal(a, s.substr(i, len));
            if (cv == Ordering::equal) continue;
            Ordering cuw = compare_u_w(a, s, i, j);
            if (cuw == Ordering::equal) continue;
            if (cv == cuw) {
                out_i = i;
                out_j = j;
                return true;
            }
        }
    }
    return false;
}

} // namespace detail

inline bool is_singular(const OrderedAlphabet& a, std::string_view s, bool fast = true) {
    size_t i, j;
    return !detail::find_reversible(a, s, fast, i, j);
}

namespace detail {

inline Classification classify_impl(const Word& x, bool fast) {
    size_t i, j;
    if (!find_reversible(x.alphabet(), x.view(), fast, i, j))
        return Classification{Verdict::singular, std::nullopt};
    std::string_view s = x.view();
    Factorization f{
        Word(x.alphabet_ptr(), reverse_text(s.substr(0, i))),
        Word(x.alphabet_ptr(), std::string(s.substr(i, j - i))),
        Word(x.alphabet_ptr(), std::string(s.substr(j))),
    };
    return Classification{Verdict::reversible, std::move(f)};
}

} // namespace detail

// Enumerates every split x = reverse(u).v.w with v nonempty; reversible iff
// some split has v != reverse(v), u != w and the two comparisons agree in
// direction. The witness minimizes (|v|, start index).
inline Classification classify_singular(const Word& x) {
    return detail::classify_impl(x, /*fast=*/false);
}

// Same verdict as classify_singular; skips v with equal endpoints.
inline Classification classify_singular_fast(const Word& x) {
    return detail::classify_impl(x, /*fast=*/true);
}

} // namespace singwords
