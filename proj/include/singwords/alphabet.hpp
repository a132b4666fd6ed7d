#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singwords {

// A totally ordered finite alphabet. Letters are single characters listed in
// strictly increasing declared order; the declared order is the only order
// that matters, not the characters' code points.
class OrderedAlphabet {
public:
    explicit OrderedAlphabet(std::string_view letters) : letters_(letters) {
        if (letters_.empty())
            throw std::invalid_argument("alphabet must be nonempty");
        rank_.fill(-1);
        for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
            unsigned char c = static_cast<unsigned char>(letters_[i]);
            if (rank_[c] != -1)
                throw std::invalid_argument("alphabet has duplicate letter");
            rank_[c] = i;
        }
    }

    // Accepts "abc", "a<b<c" or "a,b,c".
    static OrderedAlphabet parse(std::string_view spec) {
        std::string letters;
        for (char c : spec)
            if (c != '<' && c != ',' && c != ' ')
                letters.push_back(c);
        return OrderedAlphabet(letters);
    }

    static std::shared_ptr<const OrderedAlphabet> shared(std::string_view spec) {
        return std::make_shared<const OrderedAlphabet>(parse(spec));
    }

    int size() const { return static_cast<int>(letters_.size()); }

    bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }

    int rank(char c) const {
        int r = rank_[static_cast<unsigned char>(c)];
        if (r < 0)
            throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet " + to_string());
        return r;
    }

    char letter(int rank) const {
        if (rank < 0 || rank >= size())
            throw std::out_of_range("alphabet rank out of range");
        return letters_[static_cast<size_t>(rank)];
    }

    char min_letter() const { return letters_.front(); }
    char max_letter() const { return letters_.back(); }

    const std::string& letters() const { return letters_; }

    // Serializes as "a<b<c".
    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < letters_.size(); ++i) {
            if (i) out.push_back('<');
            out.push_back(letters_[i]);
        }
        return out;
    }

    friend bool operator==(const OrderedAlphabet& a, const OrderedAlphabet& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const OrderedAlphabet& a, const OrderedAlphabet& b) {
        return !(a == b);
    }

private:
    std::string letters_;
    std::array<int, 256> rank_{};
};

using AlphabetPtr = std::shared_ptr<const OrderedAlphabet>;

inline void require_same_alphabet(const OrderedAlphabet& a, const OrderedAlphabet& b) {
    if (a != b)
        throw std::invalid_argument("operands use different alphabets: " + a.to_string() +
                                    " vs " + b.to_string());
}

} // namespace singwords
