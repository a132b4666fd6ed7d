#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "singwords/language.hpp"

namespace singwords {

struct ConditionVerdict {
    bool holds = true;
    std::string witness; // empty when the condition holds
    bool surrogate = false;
};

// Verdicts for the finite-language i.d.o.c. battery with pi_0 = identity and
// pi_1 = the order-reversing permutation. A sigma-interval of letters is the
// same thing as a set of consecutive letters, so both interval tests reduce
// to consecutivity of alphabet ranks.
struct HReport {
    ConditionVerdict h0; // all k letters occur
    ConditionVerdict h1; // minimality surrogate: uniform recurrence over spans
    ConditionVerdict h2; // bispecial w: A(w) is an interval
    ConditionVerdict h3; // bispecial w, a in A(w): D(aw) is an interval
    ConditionVerdict h4; // order compatibility across arrival-ordered pairs
    ConditionVerdict h5; // sigma-consecutive arrivals: D(aw) or D(bw) meet in one letter
    ConditionVerdict interval_property; // A(s), D(s) intervals for every s
    ConditionVerdict idoc_hypothesis;   // every w has some a with D(aw) = D(w)
    long long h1_span = 0;
};

namespace detail {

inline bool ranks_consecutive(const OrderedAlphabet& al, const std::set<char>& letters) {
    if (letters.empty()) return false;
    std::vector<int> rs;
    for (char c : letters) rs.push_back(al.rank(c));
    std::sort(rs.begin(), rs.end());
    for (size_t i = 0; i + 1 < rs.size(); ++i)
        if (rs[i + 1] != rs[i] + 1) return false;
    return true;
}

inline std::set<char> departures_of(const FactorLanguage& lang, const std::string& w) {
    std::set<char> out;
    for (char a : lang.alphabet().letters())
        if (lang.contains(w + a)) out.insert(a);
    return out;
}

inline std::set<char> arrivals_of(const FactorLanguage& lang, const std::string& w) {
    std::set<char> out;
    for (char a : lang.alphabet().letters())
        if (lang.contains(a + w)) out.insert(a);
    return out;
}

} // namespace detail

struct HOptions {
    long long h1_span = 256;
};

inline HReport h_conditions_check(const FactorLanguage& lang, int k,
                                  const HOptions& options = {}) {
    const OrderedAlphabet& al = lang.alphabet();
    if (al.size() != k) throw std::invalid_argument("alphabet size does not match k");
    HReport rep;
    rep.h1_span = options.h1_span;

    // H0
    auto present = lang.letters_present();
    if (static_cast<int>(present.size()) != k) {
        rep.h0 = {false, "missing letters", false};
    }

    // H1 surrogate: every factor of length max_len/2 occurs in every span of
    // the source window. A finite window cannot certify minimality, only
    // bounded-gap recurrence at this scale.
    rep.h1.surrogate = true;
    if (lang.source_window().empty()) {
        rep.h1.witness = "no source window; recurrence not evaluated";
    } else {
        const std::string& win = lang.source_window();
        long long span = options.h1_span;
        long long fl = std::max(1, lang.max_len() / 2);
        if (static_cast<long long>(win.size()) < 2 * span) {
            rep.h1.witness = "window shorter than two spans; recurrence not evaluated";
        } else {
            std::map<std::string, long long> last_seen;
            std::map<std::string, long long> worst_gap;
            for (long long i = 0; i + fl <= static_cast<long long>(win.size()); ++i) {
                std::string f = win.substr(static_cast<size_t>(i), static_cast<size_t>(fl));
                auto it = last_seen.find(f);
                long long gap = (it == last_seen.end()) ? i : i - it->second;
                auto& w = worst_gap[f];
                w = std::max(w, gap);
                last_seen[f] = i;
            }
            for (auto& [f, start] : last_seen) {
                long long tail_gap = static_cast<long long>(win.size()) - fl - start;
                worst_gap[f] = std::max(worst_gap[f], tail_gap);
            }
            for (auto& [f, gap] : worst_gap) {
                if (gap > span - fl) {
                    rep.h1.holds = false;
                    rep.h1.witness = "factor " + f + " recurs with gap beyond the span";
                    break;
                }
            }
        }
    }

    // Scan words up to max_len - 3 so every D(aw)-style query stays within
    // the collected factor lengths.
    int scan_max = lang.max_len() - 3;
    std::vector<std::string> words;
    words.push_back("");
    for (int m = 1; m <= scan_max; ++m)
        for (const auto& w : lang.of_length(m)) words.push_back(w);

    for (const std::string& w : words) {
        std::set<char> arrivals = detail::arrivals_of(lang, w);
        std::set<char> departures = detail::departures_of(lang, w);
        bool bispecial = arrivals.size() >= 2 && departures.size() >= 2;

        if (bispecial && rep.h2.holds && !detail::ranks_consecutive(al, arrivals))
            rep.h2 = {false, "A(" + w + ") is not an interval", false};
        if (bispecial && rep.h3.holds) {
            for (char a : arrivals) {
                if (!detail::ranks_consecutive(al, detail::departures_of(lang, a + w))) {
                    rep.h3 = {false, std::string("D(") + a + w + ") is not an interval", false};
                    break;
                }
            }
        }

        if (arrivals.size() >= 2) {
            std::vector<char> sorted(arrivals.begin(), arrivals.end());
            if (rep.h4.holds) {
                // a <_sigma b means rank(a) > rank(b); then max D(aw) <= min D(bw).
                for (char a : sorted) {
                    for (char b : sorted) {
                        if (al.rank(a) <= al.rank(b)) continue;
                        std::set<char> da = detail::departures_of(lang, a + w);
                        std::set<char> db = detail::departures_of(lang, b + w);
                        if (da.empty() || db.empty()) continue;
                        if (al.rank(*da.rbegin()) > al.rank(*db.begin())) {
                            rep.h4 = {false,
                                      std::string("arrivals ") + a + "," + b + " at w=" + w +
                                          " send departures out of order",
                                      false};
                        }
                    }
                }
            }
            if (rep.h5.holds) {
                for (size_t t = 0; t + 1 < sorted.size(); ++t) {
                    char a = sorted[t], b = sorted[t + 1];
                    std::set<char> da = detail::departures_of(lang, a + w);
                    std::set<char> db = detail::departures_of(lang, b + w);
                    std::vector<char> inter;
                    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                                          std::back_inserter(inter));
                    if (inter.size() != 1) {
                        rep.h5 = {false,
                                  std::string("D(") + a + w + ") and D(" + b + w + ") meet in " +
                                      std::to_string(inter.size()) + " letters",
                                  false};
                        break;
                    }
                }
            }
        }

        if (rep.interval_property.holds && !w.empty()) {
            if (!detail::ranks_consecutive(al, arrivals) ||
                !detail::ranks_consecutive(al, departures))
                rep.interval_property = {false, "A/D of " + w + " is not an interval", false};
        }

        if (rep.idoc_hypothesis.holds && !w.empty()) {
            bool some = false;
            for (char a : arrivals) {
                if (detail::departures_of(lang, a + w) == departures) {
                    some = true;
                    break;
                }
            }
            if (!some)
                rep.idoc_hypothesis = {false, "no letter a with D(a" + w + ") = D(" + w + ")",
                                       false};
        }
    }

    return rep;
}

} // namespace singwords
