#pragma once

#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// One-form letter: a == 0 is dt/t, otherwise dt/(1 - a t) with rational
// a != 0 (a = 1 is dt/(1-t), a = -1 is dt/(1+t)).
struct Letter {
    Rational a;

    bool is_omega0() const { return a == 0; }
    bool operator==(const Letter&) const = default;
};

// Iterated-integral word; leftmost letter is outermost (largest time).
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    Word prefix(int n) const;  // first n letters
    Word suffix(int n) const;  // letters from position n on

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const;

    std::string to_string() const;  // comma list, "0" for dt/t else the rational a
    static Word parse(const std::string& text);
};

// Positional view of a word: position j is (e_j - 1) copies of dt/t followed
// by one dt/(1 - alpha_j t). Every word not ending in dt/t parses uniquely.
// The word's integral is Li evaluated at the ratio arguments z_j =
// alpha_j / alpha_{j-1}, divided by prod alpha_j.
struct WordPositions {
    std::vector<int> exponents;
    std::vector<Rational> alphas;  // per-position a-values (cumulative args)
};

WordPositions word_positions(const Word& w);

// Admissible = word_to_index succeeds and the resulting argumented index is
// admissible (no divergence at either endpoint).
bool word_admissible(const Word& w);

// Eq-2.1 dictionary, word read right-to-left. prefactor multiplies the Li
// value: I(w) = prefactor * Li(index).
struct WordIndex {
    ArgumentedIndex index;  // ratio arguments
    Rational prefactor;
};

WordIndex word_to_index(const Word& w);
Word index_to_word(const ArgumentedIndex& idx);

// t -> 1-t change of variables: letters reversed, dt/t <-> dt/(1-t), and
// dt/(1-at) -> dt/(1 - (a/(a-1)) t) with the scalar 1/(1-a) collected into
// factor: I(w) = factor * I(word).
struct ReflectedWord {
    Rational factor;
    Word word;
};

ReflectedWord reflect_word(const Word& w);

// Word for a signed zeta index: position j carries exponent |s_j| and
// alpha_j = sign_1 ... sign_j. The integral equals the zeta value divided by
// prod alpha_j.
Word mzv_word(const SignedIndex& idx);

// Cumulative-argument word for exponents + per-position alphas.
Word word_from_positions(const std::vector<int>& exponents,
                         const std::vector<Rational>& alphas);

}  // namespace mzv
