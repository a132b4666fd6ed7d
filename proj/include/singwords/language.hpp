#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "singwords/word.hpp"

namespace singwords {

// A factorial set of factors up to a stated maximum length, usually collected
// from a finite window of an infinite word.
class FactorLanguage {
public:
    static FactorLanguage collect(const Word& window, int max_len) {
        if (max_len < 1) throw std::invalid_argument("max factor length must be >= 1");
        if (static_cast<long long>(window.size()) < 2LL * max_len)
            throw std::invalid_argument("window shorter than twice the max factor length");
        FactorLanguage lang;
        lang.alphabet_ = window.alphabet_ptr();
        lang.max_len_ = max_len;
        lang.source_window_ = window.text();
        lang.by_len_.assign(static_cast<size_t>(max_len) + 1, {});
        std::string_view s = window.view();
        for (int m = 1; m <= max_len; ++m)
            for (size_t i = 0; i + static_cast<size_t>(m) <= s.size(); ++i)
                lang.by_len_[static_cast<size_t>(m)].insert(std::string(s.substr(i, static_cast<size_t>(m))));
        lang.check_extendability();
        return lang;
    }

    // Exact set, no closure; for hand-built languages in tests and callers
    // that already have a factor set.
    static FactorLanguage from_factors(AlphabetPtr alphabet, const std::set<std::string>& factors) {
        FactorLanguage lang;
        lang.alphabet_ = std::move(alphabet);
        size_t longest = 1;
        for (const auto& f : factors) longest = std::max(longest, f.size());
        lang.max_len_ = static_cast<int>(longest);
        lang.by_len_.assign(longest + 1, {});
        for (const auto& f : factors) {
            if (f.empty()) continue;
            lang.by_len_[f.size()].insert(f);
        }
        lang.check_extendability();
        return lang;
    }

    const OrderedAlphabet& alphabet() const { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    int max_len() const { return max_len_; }
    const std::string& source_window() const { return source_window_; }
    bool extendable() const { return extendable_; }

    bool contains(std::string_view w) const {
        if (w.empty()) return true;
        if (w.size() > static_cast<size_t>(max_len_)) return false;
        const auto& s = by_len_[w.size()];
        return s.find(std::string(w)) != s.end();
    }

    const std::set<std::string>& of_length(int m) const {
        if (m < 1 || m > max_len_) throw std::out_of_range("no factors of that length");
        return by_len_[static_cast<size_t>(m)];
    }

    std::vector<char> letters_present() const {
        std::vector<char> out;
        for (const auto& f : by_len_[1]) out.push_back(f[0]);
        return out;
    }

private:
    void check_extendability() {
        extendable_ = true;
        for (int m = 1; m < max_len_; ++m) {
            for (const auto& f : by_len_[static_cast<size_t>(m)]) {
                bool left = false, right = false;
                for (char a : alphabet_->letters()) {
                    if (!left && contains(a + f)) left = true;
                    if (!right && contains(f + a)) right = true;
                }
                if (!left || !right) {
                    extendable_ = false;
                    return;
                }
            }
        }
    }

    AlphabetPtr alphabet_;
    int max_len_ = 0;
    std::vector<std::set<std::string>> by_len_;
    std::string source_window_;
    bool extendable_ = true;
};

// A(w): letters a with aw in the language. D(w): letters a with wa in it.
// Reliable only while the extended words stay within the collected length.
inline std::pair<std::set<char>, std::set<char>> arrival_departure(const FactorLanguage& lang,
                                                                   std::string_view w) {
    if (static_cast<int>(w.size()) > lang.max_len() - 2)
        throw std::domain_error("word too long for a reliable arrival/departure answer");
    if (!lang.contains(w)) throw std::domain_error("word not in the language");
    std::set<char> arrivals, departures;
    for (char a : lang.alphabet().letters()) {
        if (lang.contains(std::string(1, a) + std::string(w))) arrivals.insert(a);
        if (lang.contains(std::string(w) + a)) departures.insert(a);
    }
    return {arrivals, departures};
}

struct SocViolation {
    std::string s;
    char a, b, c, d; // asd and bsc in the language, a<b but not c<d (or conversely)
};

struct SocResult {
    bool holds;
    std::optional<SocViolation> violation;
};

// Symmetric order condition: whenever asd and bsc are factors with a != b and
// c != d, the orders of (a,b) and (c,d) agree.
inline SocResult soc_check(const FactorLanguage& lang) {
    const OrderedAlphabet& al = lang.alphabet();
    for (int n = 2; n <= lang.max_len(); ++n) {
        std::map<std::string, std::vector<std::pair<char, char>>> by_middle;
        for (const auto& wrd : lang.of_length(n))
            by_middle[wrd.substr(1, wrd.size() - 2)].push_back({wrd.front(), wrd.back()});
        for (auto& [mid, ends] : by_middle) {
            for (size_t i = 0; i < ends.size(); ++i) {
                for (size_t j = 0; j < ends.size(); ++j) {
                    auto [a, d] = ends[i];
                    auto [b, c] = ends[j];
                    if (a == b || c == d) continue;
                    bool ab = al.rank(a) < al.rank(b);
                    bool cd = al.rank(c) < al.rank(d);
                    if (ab != cd) return {false, SocViolation{mid, a, b, c, d}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

struct SymmetryResult {
    bool symmetric;
    std::optional<std::string> missing_reversal;
};

inline SymmetryResult symmetry_check(const FactorLanguage& lang) {
    for (int n = 1; n <= lang.max_len(); ++n)
        for (const auto& w : lang.of_length(n))
            if (!lang.contains(reverse_text(w))) return {false, w};
    return {true, std::nullopt};
}

} // namespace singwords
