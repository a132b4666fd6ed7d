#pragma once

#include <map>
#include <vector>

#include "singwords/bigint.hpp"
#include "singwords/word.hpp"

namespace singwords {

using DigitSequence = std::vector<long long>;

enum class ContinuantKind { regular, semiregular };

// K_0 = 1, K_1 = x_1, K_n = x_n K_{n-1} + K_{n-2}. Digits must be >= 1.
inline BigInt continuant_regular(const DigitSequence& d) {
    for (long long x : d)
        if (x < 1) throw std::domain_error("regular continuant needs digits >= 1");
    BigInt prev(1), cur(1); // K_{-1} is irrelevant; start K_0 = 1
    bool first = true;
    for (long long x : d) {
        if (first) {
            prev = BigInt(1);
            cur = BigInt(x);
            first = false;
        } else {
            BigInt next = BigInt(x) * cur + prev;
            prev = cur;
            cur = next;
        }
    }
    return cur;
}

// Kdot_0 = 1, Kdot_1 = x_1, Kdot_n = x_n Kdot_{n-1} - Kdot_{n-2}. The digit 1
// is excluded.
inline BigInt continuant_semiregular(const DigitSequence& d) {
    for (long long x : d)
        if (x < 2) throw std::domain_error("semi-regular continuant needs digits >= 2");
    BigInt prev(1), cur(1);
    bool first = true;
    for (long long x : d) {
        if (first) {
            prev = BigInt(1);
            cur = BigInt(x);
            first = false;
        } else {
            BigInt next = BigInt(x) * cur - prev;
            prev = cur;
            cur = next;
        }
    }
    return cur;
}

using DigitAssignment = std::map<char, long long>;

// Maps letters to digits and evaluates the requested continuant. With
// require_order_preserving set, the assignment must be strictly increasing
// along the alphabet order.
inline BigInt evaluate_word(const Word& x, const DigitAssignment& assignment,
                            ContinuantKind kind, bool require_order_preserving = true) {
    const OrderedAlphabet& a = x.alphabet();
    if (require_order_preserving) {
        for (int r = 0; r + 1 < a.size(); ++r) {
            auto lo = assignment.find(a.letter(r));
            auto hi = assignment.find(a.letter(r + 1));
            if (lo != assignment.end() && hi != assignment.end() && !(lo->second < hi->second))
                throw std::domain_error("digit assignment is not order-preserving");
        }
    }
    DigitSequence d;
    d.reserve(x.size());
    for (char c : x.view()) {
        auto it = assignment.find(c);
        if (it == assignment.end())
            throw std::domain_error(std::string("no digit assigned to letter '") + c + "'");
        d.push_back(it->second);
    }
    return kind == ContinuantKind::regular ? continuant_regular(d) : continuant_semiregular(d);
}

} // namespace singwords
