#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "singwords/word.hpp"

namespace singwords {

struct BalanceViolation {
    std::string factor_high; // the two equal-length factors whose counts differ
    std::string factor_low;
    char letter;
    long long count_high;
    long long count_low;
};

struct BalanceReport {
    bool balanced;
    std::optional<BalanceViolation> violation;
    // Binary alphabets only: a palindrome z such that aza and bzb are both
    // factors; exists exactly when the word is unbalanced.
    std::optional<std::string> palindrome_witness;
};

namespace detail {

inline std::optional<BalanceViolation> find_balance_violation(const OrderedAlphabet& a,
                                                              std::string_view s,
                                                              size_t max_len) {
    size_t n = s.size();
    max_len = std::min(max_len, n);
    for (size_t m = 1; m <= max_len; ++m) {
        for (int r = 0; r < a.size(); ++r) {
            char letter = a.letter(r);
            long long cnt = 0;
            for (size_t t = 0; t < m; ++t) cnt += (s[t] == letter);
            long long lo = cnt, hi = cnt;
            size_t lo_pos = 0, hi_pos = 0;
            for (size_t start = 1; start + m <= n; ++start) {
                cnt += (s[start + m - 1] == letter);
                cnt -= (s[start - 1] == letter);
                if (cnt < lo) { lo = cnt; lo_pos = start; }
                if (cnt > hi) { hi = cnt; hi_pos = start; }
            }
            if (hi - lo > 1) {
                return BalanceViolation{std::string(s.substr(hi_pos, m)),
                                        std::string(s.substr(lo_pos, m)), letter, hi, lo};
            }
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> find_binary_palindrome_witness(const OrderedAlphabet& alpha,
                                                                 std::string_view s,
                                                                 size_t max_len) {
    if (alpha.size() != 2) return std::nullopt;
    char a = alpha.letter(0), b = alpha.letter(1);
    std::set<std::string, std::less<>> factors;
    size_t n = s.size();
    size_t cap = std::min(max_len, n);
    for (size_t m = 1; m <= cap; ++m)
        for (size_t i = 0; i + m <= n; ++i)
            factors.insert(std::string(s.substr(i, m)));
    // Shortest palindrome z with aza and bzb both present.
    for (size_t zl = 0; zl + 2 <= cap; ++zl) {
        if (zl == 0) {
            std::string aa{a, a}, bb{b, b};
            if (factors.count(aa) && factors.count(bb)) return std::string();
            continue;
        }
        for (size_t i = 0; i + zl <= n; ++i) {
            std::string_view z = s.substr(i, zl);
            bool pal = true;
            for (size_t t = 0; t < zl / 2; ++t)
                if (z[t] != z[zl - 1 - t]) { pal = false; break; }
            if (!pal) continue;
            std::string aza = a + std::string(z) + a;
            std::string bzb = b + std::string(z) + b;
            if (factors.count(aza) && factors.count(bzb)) return std::string(z);
        }
    }
    return std::nullopt;
}

} // namespace detail

// A word is balanced when any two equal-length factors carry the same number
// of each letter up to 1.
inline BalanceReport is_balanced(const Word& x) {
    auto violation = detail::find_balance_violation(x.alphabet(), x.view(), x.size());
    BalanceReport report{!violation.has_value(), violation, std::nullopt};
    if (violation && x.alphabet().size() == 2)
        report.palindrome_witness =
            detail::find_binary_palindrome_witness(x.alphabet(), x.view(), x.size());
    return report;
}

} // namespace singwords
