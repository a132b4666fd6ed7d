#pragma once

#include <string>
#include <string_view>

#include "singwords/word.hpp"

namespace singwords {

// lambda_d: d' -> dd' for d' != d, d -> d.
inline Word lambda_apply(char d, const Word& x) {
    x.alphabet().rank(d);
    std::string out;
    out.reserve(2 * x.size());
    for (char c : x.view()) {
        if (c != d) out.push_back(d);
        out.push_back(c);
    }
    return Word(x.alphabet_ptr(), std::move(out));
}

// rho_d: d' -> d'd for d' != d, d -> d.
inline Word rho_apply(char d, const Word& x) {
    x.alphabet().rank(d);
    std::string out;
    out.reserve(2 * x.size());
    for (char c : x.view()) {
        out.push_back(c);
        if (c != d) out.push_back(d);
    }
    return Word(x.alphabet_ptr(), std::move(out));
}

// Removes a final occurrence of `d`; only applied where the construction
// guarantees the word ends in `d`, so anything else is a hard error.
inline Word drop_final(char d, const Word& x) {
    if (x.empty() || x.at(x.size() - 1) != d)
        throw std::logic_error(std::string("word does not end in '") + d + "'");
    return Word(x.alphabet_ptr(), std::string(x.view().substr(0, x.size() - 1)));
}

namespace detail {

// States of the sequential transducer computing xi: track the previously read
// letter class so that one b is added to each b-run and inside each aa / cc.
enum class XiState { start, after_a, after_b, after_c };

inline void xi_step(XiState& state, int rank, std::string& out, char a, char b, char c) {
    switch (rank) {
    case 0:
        if (state == XiState::after_a) out.push_back(b);
        out.push_back(a);
        state = XiState::after_a;
        break;
    case 1:
        if (state != XiState::after_b) out.push_back(b);
        out.push_back(b);
        state = XiState::after_b;
        break;
    default:
        if (state == XiState::after_c) out.push_back(b);
        out.push_back(c);
        state = XiState::after_c;
        break;
    }
}

inline void require_ternary(const OrderedAlphabet& a) {
    if (a.size() != 3) throw std::invalid_argument("operation needs a ternary alphabet");
}

} // namespace detail

// xi adds one b to every maximal run of b and inserts a b inside every aa and
// cc, realized as a single left-to-right transducer pass.
inline Word xi_apply(const Word& x) {
    detail::require_ternary(x.alphabet());
    const OrderedAlphabet& al = x.alphabet();
    char a = al.letter(0), b = al.letter(1), c = al.letter(2);
    std::string out;
    out.reserve(2 * x.size() + 2);
    detail::XiState state = detail::XiState::start;
    for (char ch : x.view()) detail::xi_step(state, al.rank(ch), out, a, b, c);
    return Word(x.alphabet_ptr(), std::move(out));
}

// Computes c^-1 . xi(c x c) . c^-1: like xi, but words behave as if bracketed
// by c on both sides, so a b also lands next to each virtual boundary c.
// Maps the empty word to "b".
inline Word xi_bounded(const Word& x) {
    detail::require_ternary(x.alphabet());
    const OrderedAlphabet& al = x.alphabet();
    char a = al.letter(0), b = al.letter(1), c = al.letter(2);
    std::string out;
    out.reserve(2 * x.size() + 2);
    detail::XiState state = detail::XiState::after_c;
    for (char ch : x.view()) detail::xi_step(state, al.rank(ch), out, a, b, c);
    if (state == detail::XiState::after_c) out.push_back(b);
    return Word(x.alphabet_ptr(), std::move(out));
}

// Describes why x is outside the image of xi_bounded, or empty if it is in
// the image. The image is characterized by: aa, abc, cba, cc are not factors;
// c is neither a prefix nor a suffix; the word neither begins with ba nor
// ends with ab; and the word is nonempty.
inline std::string xi_bounded_image_violation(const Word& x) {
    detail::require_ternary(x.alphabet());
    const OrderedAlphabet& al = x.alphabet();
    char a = al.letter(0), b = al.letter(1), c = al.letter(2);
    std::string_view s = x.view();
    if (s.empty()) return "empty word";
    auto has_factor = [&](std::string_view f) { return s.find(f) != std::string_view::npos; };
    std::string aa{a, a}, cc{c, c}, abc{a, b, c}, cba{c, b, a};
    if (has_factor(aa)) return "aa factor";
    if (has_factor(cc)) return "cc factor";
    if (has_factor(abc)) return "abc factor";
    if (has_factor(cba)) return "cba factor";
    if (s.front() == c) return "begins with c";
    if (s.back() == c) return "ends with c";
    if (s.size() >= 2 && s[0] == b && s[1] == a) return "begins with ba";
    if (s.size() >= 2 && s[s.size() - 2] == a && s.back() == b) return "ends with ab";
    return "";
}

// Inverse of xi_bounded on its image: delete one b from every maximal run.
inline Word xi_bounded_inverse(const Word& x) {
    std::string why = xi_bounded_image_violation(x);
    if (!why.empty())
        throw std::domain_error("word is not in the image of the bounded xi map: " + why);
    const OrderedAlphabet& al = x.alphabet();
    char b = al.letter(1);
    std::string out;
    out.reserve(x.size());
    std::string_view s = x.view();
    for (size_t i = 0; i < s.size();) {
        if (s[i] != b) {
            out.push_back(s[i]);
            ++i;
            continue;
        }
        size_t j = i;
        while (j < s.size() && s[j] == b) ++j;
        out.append(j - i - 1, b);
        i = j;
    }
    return Word(x.alphabet_ptr(), std::move(out));
}

} // namespace singwords
