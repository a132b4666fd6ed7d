#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "singwords/balance.hpp"
#include "singwords/word.hpp"

namespace singwords {

// One-sided infinite word: preperiod followed by period repeated forever.
class Stream {
public:
    Stream(AlphabetPtr alphabet, std::string preperiod, std::string period)
        : alphabet_(std::move(alphabet)), pre_(std::move(preperiod)), per_(std::move(period)) {
        if (!alphabet_) throw std::invalid_argument("stream needs an alphabet");
        if (per_.empty()) throw std::invalid_argument("stream period must be nonempty");
        for (char c : pre_ + per_)
            if (!alphabet_->contains(c))
                throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
    }

    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    const OrderedAlphabet& alphabet() const { return *alphabet_; }
    const std::string& preperiod() const { return pre_; }
    const std::string& period() const { return per_; }

    char at(size_t i) const {
        if (i < pre_.size()) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }

    Stream shifted(size_t n) const {
        if (n <= pre_.size()) return Stream(alphabet_, pre_.substr(n), per_);
        size_t r = (n - pre_.size()) % per_.size();
        return Stream(alphabet_, "", per_.substr(r) + per_.substr(0, r));
    }

    std::string prefix(size_t n) const {
        std::string out;
        out.reserve(n);
        for (size_t i = 0; i < n; ++i) out.push_back(at(i));
        return out;
    }

private:
    AlphabetPtr alphabet_;
    std::string pre_;
    std::string per_;
};

struct StreamComparison {
    Ordering order;
    size_t first_difference; // valid when order != equal
};

// Exact: two eventually periodic streams agreeing on
// max(|pre1|,|pre2|) + lcm(|per1|,|per2|) positions are equal.
inline StreamComparison stream_compare_detail(const Stream& x, const Stream& y) {
    require_same_alphabet(x.alphabet(), y.alphabet());
    size_t bound = std::max(x.preperiod().size(), y.preperiod().size()) +
                   std::lcm(x.period().size(), y.period().size());
    for (size_t i = 0; i < bound; ++i) {
        char cx = x.at(i), cy = y.at(i);
        if (cx != cy)
            return {x.alphabet().rank(cx) < x.alphabet().rank(cy) ? Ordering::less
                                                                  : Ordering::greater,
                    i};
    }
    return {Ordering::equal, 0};
}

inline Ordering stream_compare(const Stream& x, const Stream& y) {
    return stream_compare_detail(x, y).order;
}

// Finite word against a stream: a finite proper prefix of a stream is greater
// than the stream.
inline Ordering lex_compare(const Word& x, const Stream& y) {
    require_same_alphabet(x.alphabet(), y.alphabet());
    for (size_t i = 0; i < x.size(); ++i) {
        char cx = x.at(i), cy = y.at(i);
        if (cx != cy)
            return x.alphabet().rank(cx) < x.alphabet().rank(cy) ? Ordering::less
                                                                 : Ordering::greater;
    }
    return Ordering::greater;
}

inline Ordering lex_compare(const Stream& x, const Word& y) { return flip(lex_compare(y, x)); }

// Eventually periodic bi-infinite word ...LLL.center.RRR... . The letter at
// position -1 is the last letter of the left period; position 0 starts the
// center (or the right tail when the center is empty).
class BiWord {
public:
    BiWord(AlphabetPtr alphabet, std::string left_period, std::string center,
           std::string right_period)
        : alphabet_(std::move(alphabet)), left_(std::move(left_period)),
          center_(std::move(center)), right_(std::move(right_period)) {
        if (!alphabet_) throw std::invalid_argument("bi-infinite word needs an alphabet");
        if (left_.empty() || right_.empty())
            throw std::invalid_argument("tail periods must be nonempty");
        for (char c : left_ + center_ + right_)
            if (!alphabet_->contains(c))
                throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
    }

    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    const OrderedAlphabet& alphabet() const { return *alphabet_; }
    const std::string& left_period() const { return left_; }
    const std::string& center() const { return center_; }
    const std::string& right_period() const { return right_; }

    char at(long long i) const {
        if (i < 0) {
            long long l = static_cast<long long>(left_.size());
            return left_[static_cast<size_t>(((i % l) + l) % l)];
        }
        if (i < static_cast<long long>(center_.size())) return center_[static_cast<size_t>(i)];
        size_t off = static_cast<size_t>(i) - center_.size();
        return right_[off % right_.size()];
    }

    std::string window(long long from, long long to) const { // [from, to)
        std::string out;
        out.reserve(static_cast<size_t>(to - from));
        for (long long i = from; i < to; ++i) out.push_back(at(i));
        return out;
    }

    // The stream x_j, x_{j+1}, x_{j+2}, ...
    Stream rightward_stream(long long j) const {
        long long m = static_cast<long long>(center_.size());
        if (j >= m) {
            size_t off = static_cast<size_t>(j - m) % right_.size();
            return Stream(alphabet_, "", right_.substr(off) + right_.substr(0, off));
        }
        return Stream(alphabet_, window(j, m), right_);
    }

    // The stream x_j, x_{j-1}, x_{j-2}, ...
    Stream leftward_stream(long long j) const {
        std::string rev_left = reverse_text(left_);
        if (j < 0) {
            long long l = static_cast<long long>(left_.size());
            size_t phase = static_cast<size_t>(l - 1 - (((j % l) + l) % l));
            return Stream(alphabet_, "", rev_left.substr(phase) + rev_left.substr(0, phase));
        }
        return Stream(alphabet_, reverse_text(window(0, j + 1)), rev_left);
    }

private:
    AlphabetPtr alphabet_;
    std::string left_;
    std::string center_;
    std::string right_;
};

struct MarkoffViolation {
    long long occurrence; // index i of the a'b' occurrence at (i, i+1)
    size_t difference;    // first index where the outward words differ
    char outward_left;    // letter of u at the difference
    char outward_right;   // letter of w at the difference
};

struct MarkoffResult {
    bool holds;
    std::optional<MarkoffViolation> violation;
};

// Markoff property (M) on a binary bi-infinite word: at every occurrence of
// ab or ba, the outward words either agree or first differ with u carrying b'
// and w carrying a'. Occurrence classes repeat with the tail periods, so a
// window of the center plus a few periods on each side decides the property.
inline MarkoffResult markoff_check(const BiWord& x) {
    if (x.alphabet().size() != 2)
        throw std::invalid_argument("the Markoff property applies to binary words");
    long long L = static_cast<long long>(x.left_period().size());
    long long R = static_cast<long long>(x.right_period().size());
    long long m = static_cast<long long>(x.center().size());
    long long lo = -3 * L - 2;
    long long hi = m + 3 * R + 2;
    for (long long i = lo; i < hi; ++i) {
        char ap = x.at(i), bp = x.at(i + 1);
        if (ap == bp) continue;
        Stream u = x.leftward_stream(i - 1);
        Stream w = x.rightward_stream(i + 2);
        StreamComparison cmp = stream_compare_detail(u, w);
        if (cmp.order == Ordering::equal) continue;
        char ul = u.at(cmp.first_difference), wl = w.at(cmp.first_difference);
        if (ul == bp && wl == ap) continue;
        return MarkoffResult{false,
                             MarkoffViolation{i, cmp.first_difference, ul, wl}};
    }
    return MarkoffResult{true, std::nullopt};
}

struct WindowWitness {
    long long v_begin; // v = x[v_begin .. v_end)
    long long v_end;
    Ordering v_vs_reversal;
    Ordering u_vs_w;
};

struct WindowVerdict {
    bool violation_found;
    long long radius;
    std::optional<WindowWitness> witness;
};

namespace detail {

inline Ordering compare_text_with_reversal(const OrderedAlphabet& a, std::string_view v) {
    size_t n = v.size();
    for (size_t t = 0; t < n; ++t) {
        if (v[t] != v[n - 1 - t])
            return a.rank(v[t]) < a.rank(v[n - 1 - t]) ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

} // namespace detail

// Searches for a reversible factorization whose middle part v lies inside
// [-radius, radius). Tail comparisons are exact, so a reported violation is
// definite; absence of one only certifies the inspected window.
inline WindowVerdict window_singular_check(const BiWord& x, long long radius) {
    if (radius < 1) throw std::domain_error("radius must be positive");
    for (long long len = 1; len <= 2 * radius; ++len) {
        for (long long i = -radius; i + len <= radius; ++i) {
            long long j = i + len;
            if (x.at(i) == x.at(j - 1)) continue; // only v with distinct endpoints
            std::string v = x.window(i, j);
            Ordering cv = detail::compare_text_with_reversal(x.alphabet(), v);
            if (cv == Ordering::equal) continue;
            StreamComparison cuw =
                stream_compare_detail(x.leftward_stream(i - 1), x.rightward_stream(j));
            if (cuw.order == Ordering::equal) continue;
            if (cv == cuw.order)
                return WindowVerdict{true, radius, WindowWitness{i, j, cv, cuw.order}};
        }
    }
    return WindowVerdict{false, radius, std::nullopt};
}

// One-sided variant: v lies inside [0, radius); u is the reversed finite
// prefix, w the infinite remainder.
inline WindowVerdict window_singular_check(const Stream& x, long long radius) {
    if (radius < 1) throw std::domain_error("radius must be positive");
    const OrderedAlphabet& a = x.alphabet();
    std::string head = x.prefix(static_cast<size_t>(radius));
    for (long long len = 1; len <= radius; ++len) {
        for (long long i = 0; i + len <= radius; ++i) {
            long long j = i + len;
            std::string_view v = std::string_view(head).substr(static_cast<size_t>(i),
                                                               static_cast<size_t>(len));
            if (v.front() == v.back()) continue;
            Ordering cv = detail::compare_text_with_reversal(a, v);
            if (cv == Ordering::equal) continue;
            Word u(x.alphabet_ptr(), reverse_text(std::string_view(head).substr(0, static_cast<size_t>(i))));
            Ordering cuw = lex_compare(u, x.shifted(static_cast<size_t>(j)));
            if (cv == cuw)
                return WindowVerdict{true, radius, WindowWitness{i, j, cv, cuw}};
        }
    }
    return WindowVerdict{false, radius, std::nullopt};
}

struct LyndonCheck {
    bool consistent;
    std::optional<size_t> violating_shift;
};

// Verifies x <= shift^i(x) for 1 <= i <= horizon, exactly.
inline LyndonCheck lyndon_prefix_check(const Stream& x, size_t horizon) {
    for (size_t i = 1; i <= horizon; ++i) {
        if (stream_compare(x, x.shifted(i)) == Ordering::greater)
            return LyndonCheck{false, i};
    }
    return LyndonCheck{true, std::nullopt};
}

struct BiWordBalanceReport {
    bool balanced;
    size_t max_len;
    std::optional<BalanceViolation> violation;
    std::optional<std::string> palindrome_witness;
};

// Checks balance of all factors of length <= max_len. A window of the center
// flanked by enough tail periods contains every such factor.
inline BiWordBalanceReport balance_check_biword(const BiWord& x, size_t max_len) {
    size_t L = x.left_period().size(), R = x.right_period().size();
    long long reps_l = static_cast<long long>(max_len / L + 2);
    long long reps_r = static_cast<long long>(max_len / R + 2);
    std::string t = x.window(-reps_l * static_cast<long long>(L),
                             static_cast<long long>(x.center().size()) +
                                 reps_r * static_cast<long long>(R));
    auto violation = detail::find_balance_violation(x.alphabet(), t, max_len);
    BiWordBalanceReport rep{!violation.has_value(), max_len, violation, std::nullopt};
    if (violation && x.alphabet().size() == 2)
        rep.palindrome_witness = detail::find_binary_palindrome_witness(x.alphabet(), t, max_len);
    return rep;
}

} // namespace singwords
