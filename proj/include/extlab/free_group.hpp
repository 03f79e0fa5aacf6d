#pragma once

#include <compare>
#include <string>
#include <vector>

#include "extlab/coeff_module.hpp"

namespace extlab {

struct Letter {
    int symbol;
    int exp;  // +1 or -1

    friend auto operator<=>(const Letter&, const Letter&) = default;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word; the empty word is the identity.
struct FreeWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
    friend bool operator==(const FreeWord&, const FreeWord&) = default;

    std::string str() const {
        if (letters.empty()) return "1";
        std::string s;
        for (auto& l : letters) s += "s" + std::to_string(l.symbol) + (l.exp < 0 ? "^-1 " : " ");
        s.pop_back();
        return s;
    }
};

inline FreeWord word_reduce(const std::vector<Letter>& in) {
    FreeWord w;
    for (auto& l : in) {
        if (!w.letters.empty() && w.letters.back().symbol == l.symbol && w.letters.back().exp == -l.exp)
            w.letters.pop_back();
        else
            w.letters.push_back(l);
    }
    return w;
}

inline FreeWord word_mul(const FreeWord& a, const FreeWord& b) {
    std::vector<Letter> all = a.letters;
    all.insert(all.end(), b.letters.begin(), b.letters.end());
    return word_reduce(all);
}

inline FreeWord word_inv(const FreeWord& a) {
    FreeWord w;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) w.letters.push_back({it->symbol, -it->exp});
    return w;
}

inline FreeWord word_letter(int symbol, int exp = 1) { return FreeWord{{{symbol, exp}}}; }

// Element of Z x F.
struct MixedElement {
    ModElement z;
    FreeWord w;

    friend auto operator<=>(const MixedElement&, const MixedElement&) = default;
    friend bool operator==(const MixedElement&, const MixedElement&) = default;
};

inline MixedElement mixed_mul(const CoeffModule& Z, const MixedElement& a, const MixedElement& b) {
    return {Z.add(a.z, b.z), word_mul(a.w, b.w)};
}

inline MixedElement mixed_inv(const CoeffModule& Z, const MixedElement& a) { return {Z.neg(a.z), word_inv(a.w)}; }

// u x u^-1
inline MixedElement mixed_conj(const CoeffModule& Z, const MixedElement& u, const MixedElement& x) {
    return mixed_mul(Z, mixed_mul(Z, u, x), mixed_inv(Z, u));
}

} // namespace extlab
