#pragma once

#include <string>
#include <vector>

#include "hypershell/linalg.hpp"

namespace hypershell {

struct TriangleGroup;  // families.hpp

/// A word in the generators R1, R2, R3 (letters 1,2,3) and J (letter 4),
/// with negative letters for inverses. The compact syntax mirrors the
/// conventions used for triangle-group words: digits and 'j' are generators,
/// '~' prefixes an inverse, parentheses group, '^' takes (possibly negative)
/// powers. Example: "(12)^3~2j" = (R1 R2)^3 R2^{-1} J.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    Word inverse() const;
    Word operator*(const Word&) const;
    Word conjugated_by(const Word& g) const;  // g * w * g^{-1}
    Word pow(long e) const;
    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }
    bool operator==(const Word&) const = default;
};

Word parse_word(const std::string& s);
std::string word_str(const Word& w);  // round-trips through parse_word

Mat3 evaluate(const Word& w, const TriangleGroup& G);

}  // namespace hypershell
