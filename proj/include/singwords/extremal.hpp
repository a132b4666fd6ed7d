#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "singwords/bigint.hpp"
#include "singwords/continuant.hpp"
#include "singwords/ternary_singular.hpp"

namespace singwords {

// A finite multiset of positive digits.
class Multiset {
public:
    Multiset() = default;

    explicit Multiset(const std::vector<long long>& digits) {
        for (long long d : digits) add(d, 1);
    }

    void add(long long digit, long long multiplicity) {
        if (digit < 1) throw std::domain_error("multiset digits must be >= 1");
        if (multiplicity < 1) throw std::domain_error("multiplicities must be >= 1");
        entries_[digit] += multiplicity;
    }

    const std::map<long long, long long>& entries() const { return entries_; }

    long long total() const {
        long long t = 0;
        for (auto& [d, m] : entries_) t += m;
        return t;
    }

    long long min_digit() const {
        if (entries_.empty()) throw std::domain_error("empty multiset");
        return entries_.begin()->first;
    }

    std::vector<long long> sorted_digits() const {
        std::vector<long long> out;
        out.reserve(static_cast<size_t>(total()));
        for (auto& [d, m] : entries_)
            for (long long i = 0; i < m; ++i) out.push_back(d);
        return out;
    }

private:
    std::map<long long, long long> entries_;
};

enum class Objective { regular_max, regular_min, semi_max, semi_min };

inline bool objective_is_semi(Objective o) {
    return o == Objective::semi_max || o == Objective::semi_min;
}
inline bool objective_is_max(Objective o) {
    return o == Objective::regular_max || o == Objective::semi_max;
}

inline std::string objective_name(Objective o) {
    switch (o) {
    case Objective::regular_max: return "regular-max";
    case Objective::regular_min: return "regular-min";
    case Objective::semi_max: return "semi-max";
    case Objective::semi_min: return "semi-min";
    }
    return "?";
}

inline Objective parse_objective(std::string_view s) {
    if (s == "regular-max") return Objective::regular_max;
    if (s == "regular-min") return Objective::regular_min;
    if (s == "semi-max") return Objective::semi_max;
    if (s == "semi-min") return Objective::semi_min;
    throw std::invalid_argument("unknown objective: " + std::string(s));
}

namespace detail {

// w is the representative of its reversal pair when w <= reverse(w) in the
// natural order on digits.
inline bool is_reversal_canonical(const std::vector<long long>& w) {
    size_t n = w.size();
    for (size_t i = 0; i < n / 2; ++i) {
        if (w[i] != w[n - 1 - i]) return w[i] < w[n - 1 - i];
    }
    return true;
}

inline std::vector<long long> reversal_canonical(std::vector<long long> w) {
    if (!is_reversal_canonical(w)) std::reverse(w.begin(), w.end());
    return w;
}

} // namespace detail

// Visits one representative per reversal pair, in increasing natural order of
// the representative.
template <class Fn>
void for_each_arrangement(const Multiset& m, Fn&& fn) {
    std::vector<long long> digits = m.sorted_digits();
    if (digits.empty()) throw std::domain_error("empty multiset");
    do {
        if (detail::is_reversal_canonical(digits)) fn(digits);
    } while (std::next_permutation(digits.begin(), digits.end()));
}

inline std::vector<std::vector<long long>> enumerate_arrangements(const Multiset& m) {
    std::vector<std::vector<long long>> out;
    for_each_arrangement(m, [&](const std::vector<long long>& w) { out.push_back(w); });
    return out;
}

struct ExtremalResult {
    Objective objective;
    BigInt value;
    std::vector<std::vector<long long>> argext; // canonical, sorted, deduplicated
    bool unique_up_to_reversal;
};

struct SearchOptions {
    long long cap = 12;
    int threads = 1;
};

namespace detail {

// All continuant values of arrangements of m fit below prod(d_i + 1); when
// that bound fits comfortably in int64 the whole search runs on native
// integers, otherwise on BigInt. Both paths use the same recurrences.
inline bool int64_bound_ok(const std::vector<long long>& digits) {
    unsigned __int128 bound = 1;
    for (long long d : digits) {
        bound *= static_cast<unsigned __int128>(d) + 1;
        if (bound > (static_cast<unsigned __int128>(1) << 62)) return false;
    }
    return true;
}

inline long long eval_int64(const std::vector<long long>& w, bool semi) {
    long long prev = 1, cur = 1;
    bool first = true;
    for (long long x : w) {
        if (first) {
            cur = x;
            first = false;
        } else {
            long long next = semi ? x * cur - prev : x * cur + prev;
            prev = cur;
            cur = next;
        }
    }
    return cur;
}

struct BlockResult {
    bool any = false;
    BigInt value;
    std::vector<std::vector<long long>> argext;
};

inline void block_update_big(BlockResult& r, const BigInt& val, const std::vector<long long>& w,
                             bool maximize) {
    if (!r.any) {
        r.any = true;
        r.value = val;
        r.argext = {w};
        return;
    }
    int c = compare(val, r.value);
    if ((maximize && c > 0) || (!maximize && c < 0)) {
        r.value = val;
        r.argext = {w};
    } else if (c == 0) {
        r.argext.push_back(w);
    }
}

} // namespace detail

// Exhaustive exact search over one representative per reversal pair.
inline ExtremalResult brute_extremal(const Multiset& m, Objective objective,
                                     const SearchOptions& options = {}) {
    std::vector<long long> digits = m.sorted_digits();
    if (digits.empty()) throw std::domain_error("empty multiset");
    if (static_cast<long long>(digits.size()) > options.cap)
        throw std::length_error("multiset size exceeds the search cap");
    bool semi = objective_is_semi(objective);
    bool maximize = objective_is_max(objective);
    if (semi && digits.front() < 2)
        throw std::domain_error("semi-regular objectives need digits >= 2");

    bool use_int64 = detail::int64_bound_ok(digits);

    // Partition by the value of the first digit; each block enumerates the
    // permutations of the remainder. Merging is a max/min plus a set union,
    // so the outcome is independent of scheduling.
    std::vector<long long> distinct;
    for (auto& [d, mult] : m.entries()) distinct.push_back(d);
    int threads = std::max(1, options.threads);

    std::vector<detail::BlockResult> blocks(distinct.size());
    auto run_block = [&](size_t bi) {
        long long head = distinct[bi];
        std::vector<long long> rest_digits = m.sorted_digits();
        rest_digits.erase(std::find(rest_digits.begin(), rest_digits.end(), head));
        detail::BlockResult& out = blocks[bi];
        std::vector<long long> w(rest_digits.size() + 1);
        w[0] = head;
        long long best64 = 0;
        bool any64 = false;
        std::vector<std::vector<long long>> arg64;
        auto consider = [&](const std::vector<long long>& cand) {
            if (!detail::is_reversal_canonical(cand)) return;
            if (use_int64) {
                long long val = detail::eval_int64(cand, semi);
                if (!any64 || (maximize ? val > best64 : val < best64)) {
                    any64 = true;
                    best64 = val;
                    arg64 = {cand};
                } else if (val == best64) {
                    arg64.push_back(cand);
                }
            } else {
                BigInt val = semi ? continuant_semiregular(cand) : continuant_regular(cand);
                detail::block_update_big(out, val, cand, maximize);
            }
        };
        if (rest_digits.empty()) {
            consider(w);
        } else {
            std::vector<long long> perm = rest_digits;
            do {
                std::copy(perm.begin(), perm.end(), w.begin() + 1);
                consider(w);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (use_int64 && any64) {
            out.any = true;
            out.value = BigInt(best64);
            out.argext = std::move(arg64);
        }
    };

    if (threads <= 1 || distinct.size() <= 1) {
        for (size_t bi = 0; bi < distinct.size(); ++bi) run_block(bi);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<size_t>(threads, distinct.size());
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t bi = next.fetch_add(1);
                    if (bi >= distinct.size()) return;
                    run_block(bi);
                }
            });
        for (auto& th : pool) th.join();
    }

    ExtremalResult result{objective, BigInt(0), {}, false};
    bool any = false;
    for (auto& b : blocks) {
        if (!b.any) continue;
        if (!any) {
            any = true;
            result.value = b.value;
            result.argext = b.argext;
            continue;
        }
        int c = compare(b.value, result.value);
        if ((maximize && c > 0) || (!maximize && c < 0)) {
            result.value = b.value;
            result.argext = b.argext;
        } else if (c == 0) {
            result.argext.insert(result.argext.end(), b.argext.begin(), b.argext.end());
        }
    }
    std::sort(result.argext.begin(), result.argext.end());
    result.argext.erase(std::unique(result.argext.begin(), result.argext.end()),
                        result.argext.end());
    result.unique_up_to_reversal = result.argext.size() == 1;
    return result;
}

// The closed-form maximizing arrangement for the regular continuant:
// a_k L_{k-1} a_{k-2} L_{k-3} ... a_1^{n_1} ... a_{k-3} L_{k-2} a_{k-1} L_k
// with L_i = a_i^{n_i - 1}. Every digit appears once as a bare letter and
// n_i - 1 times in its block, on opposite flanks, alternating with parity.
inline std::vector<long long> regular_max_pattern(const Multiset& m) {
    std::vector<long long> digit;
    std::vector<long long> mult;
    for (auto& [d, cnt] : m.entries()) {
        digit.push_back(d);
        mult.push_back(cnt);
    }
    if (digit.empty()) throw std::domain_error("empty multiset");
    int k = static_cast<int>(digit.size());
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(m.total()));
    for (int idx = k - 1; idx >= 0; --idx) {
        int offset = (k - 1) - idx;
        if (offset % 2 == 0) out.push_back(digit[static_cast<size_t>(idx)]);
        else out.insert(out.end(), static_cast<size_t>(mult[static_cast<size_t>(idx)] - 1),
                        digit[static_cast<size_t>(idx)]);
    }
    for (int idx = 0; idx < k; ++idx) {
        int offset = (k - 1) - idx;
        if (offset % 2 == 0)
            out.insert(out.end(), static_cast<size_t>(mult[static_cast<size_t>(idx)] - 1),
                       digit[static_cast<size_t>(idx)]);
        else out.push_back(digit[static_cast<size_t>(idx)]);
    }
    return out;
}

struct ConjectureViolation {
    ParikhTriple vector;
    std::string reason;
};

struct ConjectureReport {
    long long vectors_checked = 0;
    std::vector<ConjectureViolation> violations;
};

// Sweeps every ternary count vector with component sum <= max_total and
// checks that the brute-force semi-regular maximum is attained exactly at the
// constructed singular word (up to reversal).
inline ConjectureReport verify_ternary_conjecture(long long max_total,
                                                  const std::array<long long, 3>& assignment,
                                                  int threads = 1) {
    if (!(2 <= assignment[0] && assignment[0] < assignment[1] && assignment[1] < assignment[2]))
        throw std::domain_error("assignment must be strictly increasing with digits >= 2");
    AlphabetPtr abc = OrderedAlphabet::shared("abc");

    std::vector<ParikhTriple> vectors;
    for (long long na = 0; na <= max_total; ++na)
        for (long long nb = 0; na + nb <= max_total; ++nb)
            for (long long nc = (na + nb == 0 ? 1 : 0); na + nb + nc <= max_total; ++nc)
                vectors.push_back({na, nb, nc});

    std::vector<std::vector<ConjectureViolation>> found(vectors.size());
    auto check_vector = [&](size_t vi) {
        const ParikhTriple& v = vectors[vi];
        SingularPair pair = construct_ternary(v, abc);
        std::vector<long long> expected;
        expected.reserve(pair.word.size());
        for (char ch : pair.word.view())
            expected.push_back(assignment[static_cast<size_t>(abc->rank(ch))]);
        expected = detail::reversal_canonical(std::move(expected));

        Multiset mset;
        for (int r = 0; r < 3; ++r)
            if (v[static_cast<size_t>(r)] > 0) mset.add(assignment[static_cast<size_t>(r)], v[static_cast<size_t>(r)]);
        SearchOptions opt;
        opt.cap = max_total;
        ExtremalResult res = brute_extremal(mset, Objective::semi_max, opt);
        if (!res.unique_up_to_reversal)
            found[vi].push_back({v, "maximum attained at more than one reversal class"});
        else if (res.argext.front() != expected)
            found[vi].push_back({v, "maximum not attained at the constructed word"});
    };

    threads = std::max(1, threads);
    if (threads <= 1) {
        for (size_t vi = 0; vi < vectors.size(); ++vi) check_vector(vi);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t vi = next.fetch_add(1);
                    if (vi >= vectors.size()) return;
                    check_vector(vi);
                }
            });
        for (auto& th : pool) th.join();
    }

    ConjectureReport report;
    report.vectors_checked = static_cast<long long>(vectors.size());
    for (auto& per : found)
        report.violations.insert(report.violations.end(), per.begin(), per.end());
    return report;
}

} // namespace singwords
