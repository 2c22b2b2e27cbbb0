#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lyapgap/error.hpp"

namespace lyapgap {

/// Letter in the genus-2 surface group alphabet. 0..3 are the generators
/// a1, b1, a2, b2; 4..7 their inverses. Printable form: "a b c d" for the
/// generators and "A B C D" for the inverses.
using Letter = std::uint8_t;

inline Letter inverse_letter(Letter l) { return static_cast<Letter>((l + 4) & 7); }
inline int generator_index(Letter l) { return l & 3; }
inline bool is_inverse(Letter l) { return l >= 4; }

char letter_char(Letter l);
Letter letter_from_char(char c);

/// Freely reduced word over the 8-letter alphabet.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters); // reduces on construction

    static Word parse(const std::string& text); // e.g. "abAB" or "a b A B"

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// append one letter, cancelling against the current last letter
    void push(Letter l);

    Word inverse() const;
    Word operator*(const Word& o) const; // concatenate + reduce

    bool cyclically_reduced() const;
    Word cyclic_reduction() const;

    /// lexicographically minimal cyclic rotation (input must be cyclically
    /// reduced); identity of an orbit in the thermo tables
    Word canonical_rotation() const;

    std::string str() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }

private:
    std::vector<Letter> letters_;
};

/// standard genus-2 relator a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1
Word genus2_relator();

} // namespace lyapgap
