#include "lyapgap/word.hpp"

#include <algorithm>

namespace lyapgap {

namespace {
const char kChars[8] = {'a', 'b', 'c', 'd', 'A', 'B', 'C', 'D'};
}

char letter_char(Letter l) { return kChars[l & 7]; }

Letter letter_from_char(char c) {
    for (Letter l = 0; l < 8; ++l)
        if (kChars[l] == c) return l;
    throw Error("word", "parse", std::string("unknown letter '") + c + "'");
}

Word::Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) push(l);
}

Word Word::parse(const std::string& text) {
    Word w;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        w.push(letter_from_char(c));
    }
    return w;
}

void Word::push(Letter l) {
    if (!letters_.empty() && letters_.back() == inverse_letter(l))
        letters_.pop_back();
    else
        letters_.push_back(l);
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(inverse_letter(*it));
    return w;
}

Word Word::operator*(const Word& o) const {
    Word w = *this;
    for (Letter l : o.letters_) w.push(l);
    return w;
}

bool Word::cyclically_reduced() const {
    if (letters_.size() < 2) return true;
    return letters_.front() != inverse_letter(letters_.back());
}

Word Word::cyclic_reduction() const {
    std::size_t i = 0, j = letters_.size();
    while (j - i >= 2 && letters_[i] == inverse_letter(letters_[j - 1])) {
        ++i;
        --j;
    }
    Word w;
    w.letters_.assign(letters_.begin() + i, letters_.begin() + j);
    return w;
}

Word Word::canonical_rotation() const {
    const std::size_t n = letters_.size();
    if (n < 2) return *this;
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t k = 0; k < n; ++k) {
            Letter x = letters_[(s + k) % n];
            Letter y = letters_[(best + k) % n];
            if (x != y) {
                if (x < y) best = s;
                break;
            }
        }
    }
    Word w;
    w.letters_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) w.letters_.push_back(letters_[(best + k) % n]);
    return w;
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(letter_char(l));
    return s;
}

Word genus2_relator() { return Word::parse("abABcdCD"); }

} // namespace lyapgap
