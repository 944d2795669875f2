#include "hypershell/words.hpp"

#include <stdexcept>

#include "hypershell/families.hpp"

namespace hypershell {

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

Word Word::operator*(const Word& o) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

Word Word::conjugated_by(const Word& g) const { return g * *this * g.inverse(); }

Word Word::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Word w;
    for (long i = 0; i < e; ++i) w = w * *this;
    return w;
}

namespace {

void parse_seq(const std::string& s, size_t& i, Word& out);

long parse_int(const std::string& s, size_t& i) {
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size() || !isdigit((unsigned char)s[i]))
        throw std::invalid_argument("word: expected integer at position " + std::to_string(i));
    long v = 0;
    while (i < s.size() && isdigit((unsigned char)s[i])) v = 10 * v + (s[i++] - '0');
    return neg ? -v : v;
}

int letter_of(char c) {
    if (c >= '1' && c <= '3') return c - '0';
    if (c == 'j' || c == 'J') return 4;
    throw std::invalid_argument(std::string("word: bad generator '") + c + "'");
}

void parse_seq(const std::string& s, size_t& i, Word& out) {
    while (i < s.size() && s[i] != ')') {
        char c = s[i];
        if (c == ' ') { ++i; continue; }
        Word piece;
        if (c == '(') {
            ++i;
            parse_seq(s, i, piece);
            if (i >= s.size() || s[i] != ')') throw std::invalid_argument("word: unbalanced parentheses");
            ++i;
        } else if (c == '~') {
            if (i + 1 >= s.size()) throw std::invalid_argument("word: dangling '~'");
            piece.letters.push_back(-letter_of(s[i + 1]));
            i += 2;
        } else {
            piece.letters.push_back(letter_of(c));
            ++i;
        }
        if (i < s.size() && s[i] == '^') {
            ++i;
            long e = parse_int(s, i);
            piece = piece.pow(e);
        }
        out = out * piece;
    }
}

}  // namespace

Word parse_word(const std::string& s) {
    Word w;
    size_t i = 0;
    parse_seq(s, i, w);
    if (i != s.size()) throw std::invalid_argument("word: trailing characters in '" + s + "'");
    return w;
}

std::string word_str(const Word& w) {
    std::string out;
    for (int l : w.letters) {
        if (l < 0) out += '~';
        int a = std::abs(l);
        out += (a == 4) ? 'j' : char('0' + a);
    }
    return out;
}

Mat3 evaluate(const Word& w, const TriangleGroup& G) {
    Mat3 m = Mat3::identity();
    for (int l : w.letters) {
        const Mat3& g = G.generator(std::abs(l));
        m = (l > 0) ? m * g : m * G.generator_inverse(std::abs(l));
    }
    return m;
}

}  // namespace hypershell
