#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "ans/errors.hpp"

namespace ans {

/// A word over an alphabet. Letters are single characters.
using Word = std::string;

/// Finite totally ordered alphabet. The listing order of the letters is
/// the order; it need not agree with character codes ("ba" puts b < a).
class OrderedAlphabet {
public:
    explicit OrderedAlphabet(std::string letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw ParseError("alphabet must not be empty");
        index_.fill(kAbsent);
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(letters_[i]);
            if (c <= ' ' || c >= 127)
                throw ParseError("alphabet letters must be printable non-space characters");
            if (index_[c] != kAbsent)
                throw ParseError(std::string("duplicate alphabet letter '") + letters_[i] + "'");
            index_[c] = i;
        }
    }

    std::size_t size() const { return letters_.size(); }

    char letter(std::size_t i) const {
        if (i >= letters_.size())
            throw DimensionError("letter index " + std::to_string(i) + " out of range");
        return letters_[i];
    }

    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] != kAbsent; }

    /// Position of a letter in the order (0 = least).
    std::size_t index_of(char c) const {
        std::size_t i = index_[static_cast<unsigned char>(c)];
        if (i == kAbsent)
            throw ForeignLetterError(std::string("letter '") + c + "' is not in alphabet \"" +
                                     letters_ + "\"");
        return i;
    }

    /// Validates every letter of a word; throws ForeignLetterError otherwise.
    void check_word(const Word& w) const {
        for (char c : w) index_of(c);
    }

    const std::string& letters() const { return letters_; }

    bool operator==(const OrderedAlphabet& o) const { return letters_ == o.letters_; }

private:
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    std::string letters_;
    std::array<std::size_t, 256> index_;
};

/// Radix order: shorter words first, equal lengths compared letterwise
/// in the alphabet order. This is the enumeration order everywhere.
inline std::strong_ordering radix_compare(const Word& u, const Word& v,
                                          const OrderedAlphabet& alphabet) {
    if (u.size() != v.size()) return u.size() <=> v.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::size_t a = alphabet.index_of(u[i]);
        std::size_t b = alphabet.index_of(v[i]);
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

inline bool radix_less(const Word& u, const Word& v, const OrderedAlphabet& alphabet) {
    return radix_compare(u, v, alphabet) == std::strong_ordering::less;
}

}  // namespace ans
