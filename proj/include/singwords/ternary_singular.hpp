#pragma once

#include <array>
#include <vector>

#include "singwords/binary_singular.hpp"
#include "singwords/morphisms.hpp"
#include "singwords/word.hpp"

namespace singwords {

using ParikhTriple = std::array<long long, 3>; // counts of a < b < c

enum class ReductionRule { reduce_a, reduce_c, reduce_b, stop };

struct ReductionState {
    ParikhTriple vector;
    long long delta; // n_c - n_a + 1
    ReductionRule rule;
};

// One step of the vector reduction. The stop test (a zero component, or
// n_a = n_c + 1) is evaluated before any rule; rules are tried in the fixed
// order a, c, b and the first applicable one wins.
inline ReductionState reduce_vector(const ParikhTriple& v) {
    auto [na, nb, nc] = v;
    if (na < 0 || nb < 0 || nc < 0)
        throw std::domain_error("count vector components must be nonnegative");
    long long delta = nc - na + 1;
    if (na * nb * nc == 0 || na == nc + 1) return ReductionState{v, delta, ReductionRule::stop};
    if (na >= nb + nc + 1) return ReductionState{v, delta, ReductionRule::reduce_a};
    if (nc >= na + nb - 1) return ReductionState{v, delta, ReductionRule::reduce_c};
    return ReductionState{v, delta, ReductionRule::reduce_b};
}

inline ParikhTriple next_vector(const ReductionState& s) {
    auto [na, nb, nc] = s.vector;
    switch (s.rule) {
    case ReductionRule::reduce_a: return {na - nb - nc - 1, nb, nc};
    case ReductionRule::reduce_c: return {na, nb, nc - na - nb + 1};
    case ReductionRule::reduce_b: return {na, nb - (s.delta < 0 ? -s.delta : s.delta), nc};
    case ReductionRule::stop: break;
    }
    throw std::logic_error("no next vector at a stop state");
}

struct ReductionTrace {
    std::vector<ReductionState> states; // last state carries ReductionRule::stop
};

inline ReductionTrace build_trace(const ParikhTriple& start) {
    ReductionTrace trace;
    ParikhTriple v = start;
    for (;;) {
        ReductionState s = reduce_vector(v);
        trace.states.push_back(s);
        if (s.rule == ReductionRule::stop) return trace;
        ParikhTriple nxt = next_vector(s);
        long long before = v[0] + v[1] + v[2];
        long long after = nxt[0] + nxt[1] + nxt[2];
        if (after >= before || nxt[0] < 0 || nxt[1] < 0 || nxt[2] < 0)
            throw std::logic_error("vector reduction failed to decrease");
        v = nxt;
    }
}

namespace detail {

inline AlphabetPtr sub_alphabet(const OrderedAlphabet& a, int r1, int r2) {
    std::string two{a.letter(r1), a.letter(r2)};
    return std::make_shared<const OrderedAlphabet>(two);
}

} // namespace detail

// Base cases of the construction: with a zero component the two remaining
// letters are handled by the binary construction; with p = r + 1 the word is
// a b^q (ca)^r.
inline Word base_case_word(const ParikhTriple& v,
                           AlphabetPtr alphabet = OrderedAlphabet::shared("abc")) {
    detail::require_ternary(*alphabet);
    auto [p, q, r] = v;
    if (p < 0 || q < 0 || r < 0)
        throw std::domain_error("count vector components must be nonnegative");
    char a = alphabet->letter(0), b = alphabet->letter(1), c = alphabet->letter(2);
    if (r == 0)
        return Word(alphabet, detail::binary_singular_text(p, q, a, b));
    if (p == 0)
        return Word(alphabet, detail::binary_singular_text(q, r, b, c));
    if (q == 0)
        return Word(alphabet, detail::binary_singular_text(p, r, a, c));
    if (p != r + 1)
        throw std::domain_error("not a base-case vector: needs a zero component or p = r+1");
    std::string out(1, a);
    out.append(static_cast<size_t>(q), b);
    for (long long i = 0; i < r; ++i) {
        out.push_back(c);
        out.push_back(a);
    }
    return Word(alphabet, std::move(out));
}

// The unique (up to reversal) singular ternary word with the given letter
// counts: reduce the vector to a base case, then replay the trace backwards
// through the three singularity-preserving maps.
inline SingularPair construct_ternary(const ParikhTriple& v,
                                      AlphabetPtr alphabet = OrderedAlphabet::shared("abc")) {
    detail::require_ternary(*alphabet);
    if (v[0] < 0 || v[1] < 0 || v[2] < 0 || v[0] + v[1] + v[2] == 0)
        throw std::domain_error("count vector must be nonnegative and nonzero");
    ReductionTrace trace = build_trace(v);
    Word x = base_case_word(trace.states.back().vector, alphabet);
    char a = alphabet->letter(0), c = alphabet->letter(2);
    for (size_t i = trace.states.size() - 1; i-- > 0;) {
        switch (trace.states[i].rule) {
        case ReductionRule::reduce_a:
            x = Word(alphabet, lambda_apply(a, x).text() + a);
            break;
        case ReductionRule::reduce_c:
            x = drop_final(c, rho_apply(c, x));
            break;
        case ReductionRule::reduce_b:
            x = xi_bounded(x);
            break;
        case ReductionRule::stop:
            throw std::logic_error("stop rule inside a trace replay");
        }
    }
    return detail::make_pair_canonical(std::move(x));
}

struct SeparatingReport {
    std::string separating; // letters occurring in every length-2 factor
    // Count inequalities behind the separation criteria for the extreme
    // letters: |x|_min >= rest + 1 and |x|_max >= rest - 1.
    bool min_letter_inequality;
    bool max_letter_inequality;
};

inline SeparatingReport separating_report(const Word& x) {
    const OrderedAlphabet& al = x.alphabet();
    std::string_view s = x.view();
    SeparatingReport rep{"", false, false};
    for (int r = 0; r < al.size(); ++r) {
        char d = al.letter(r);
        bool sep = true;
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] != d && s[i + 1] != d) { sep = false; break; }
        if (sep) rep.separating.push_back(d);
    }
    ParikhVector p = parikh(x);
    long long total = p.total();
    long long min_count = p.counts.front(), max_count = p.counts.back();
    rep.min_letter_inequality = min_count >= (total - min_count) + 1;
    rep.max_letter_inequality = max_count >= (total - max_count) - 1;
    return rep;
}

// Number of maximal blocks of the middle letter b.
inline long long count_b_runs(const Word& x) {
    detail::require_ternary(x.alphabet());
    char b = x.alphabet().letter(1);
    long long runs = 0;
    bool in_run = false;
    for (char ch : x.view()) {
        if (ch == b) {
            if (!in_run) ++runs;
            in_run = true;
        } else {
            in_run = false;
        }
    }
    return runs;
}

} // namespace singwords
