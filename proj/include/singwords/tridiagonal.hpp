#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "singwords/bigint.hpp"
#include "singwords/continuant.hpp"

namespace singwords {

struct TridiagonalResult {
    BigInt permanent;
    BigInt determinant;
};

namespace detail {

// Full Laplace expansion over column subsets (no pivoting, no recurrences),
// so the result is an oracle independent of the continuant recurrences.
// signed = determinant, unsigned = permanent.
inline BigInt expand_matrix(const std::vector<std::vector<long long>>& m, bool with_signs) {
    size_t n = m.size();
    size_t full = (size_t{1} << n) - 1;
    std::vector<BigInt> memo(full + 1);
    memo[full] = BigInt(1);

    // f(S) = expansion of the submatrix on rows |S|..n-1 and columns not in S,
    // computed bottom-up by decreasing popcount.
    std::vector<size_t> by_count(full + 1);
    for (size_t s = 0; s <= full; ++s) by_count[s] = s;
    std::sort(by_count.begin(), by_count.end(), [](size_t a, size_t b) {
        return __builtin_popcountll(a) > __builtin_popcountll(b);
    });
    for (size_t s_idx = 0; s_idx <= full; ++s_idx) {
        size_t s = by_count[s_idx];
        if (s == full) continue;
        size_t row = static_cast<size_t>(__builtin_popcountll(s));
        BigInt acc(0);
        int pos = 0; // rank of column j among unused columns
        for (size_t j = 0; j < n; ++j) {
            if (s & (size_t{1} << j)) continue;
            if (m[row][j] != 0) {
                BigInt term = BigInt(m[row][j]) * memo[s | (size_t{1} << j)];
                if (with_signs && (pos % 2 == 1)) acc -= term;
                else acc += term;
            }
            ++pos;
        }
        memo[s] = std::move(acc);
    }
    return memo[0];
}

} // namespace detail

// Permanent and determinant of the tridiagonal matrix with the given diagonal
// and unit off-diagonals. Exponential in |d|, so it is capped; this exists as
// a cross-check oracle for the continuant recurrences.
inline TridiagonalResult tridiagonal_check(const DigitSequence& d, size_t cap = 10) {
    if (d.empty()) throw std::domain_error("tridiagonal matrix needs at least one digit");
    if (d.size() > cap) throw std::length_error("digit sequence exceeds tridiagonal cap");
    size_t n = d.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        m[i][i] = d[i];
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
    }
    return TridiagonalResult{detail::expand_matrix(m, false), detail::expand_matrix(m, true)};
}

} // namespace singwords
