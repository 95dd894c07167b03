#include "mzv/word.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

Word Word::prefix(int n) const {
    return Word(std::vector<Letter>(letters.begin(), letters.begin() + n));
}

Word Word::suffix(int n) const {
    return Word(std::vector<Letter>(letters.begin() + n, letters.end()));
}

bool Word::operator<(const Word& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    for (size_t i = 0; i < letters.size(); ++i) {
        if (letters[i].a != o.letters[i].a) return letters[i].a < o.letters[i].a;
    }
    return false;
}

std::string Word::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += format_rational(letters[i].a);
    }
    return out;
}

Word Word::parse(const std::string& text) {
    Word w;
    if (text.empty()) return w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.letters.push_back(Letter{parse_rational(tok)});
    return w;
}

WordPositions word_positions(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    if (w.letters.back().is_omega0())
        throw std::invalid_argument("word ends in dt/t (divergent at 0)");
    WordPositions out;
    int zeros = 0;
    for (const Letter& l : w.letters) {
        if (l.is_omega0()) {
            ++zeros;
        } else {
            out.exponents.push_back(zeros + 1);
            out.alphas.push_back(l.a);
            zeros = 0;
        }
    }
    return out;
}

bool word_admissible(const Word& w) {
    if (w.empty() || w.letters.back().is_omega0()) return false;
    WordPositions pos = word_positions(w);
    const Rational& a1 = pos.alphas.front();
    if (abs(a1) > 1) return false;
    if (a1 == 1 && pos.exponents.front() < 2) return false;
    return true;
}

WordIndex word_to_index(const Word& w) {
    if (!word_admissible(w)) throw std::invalid_argument("word not admissible");
    WordPositions pos = word_positions(w);
    WordIndex out;
    out.index.exponents = pos.exponents;
    out.prefactor = 1;
    Rational prev(1);
    for (const Rational& a : pos.alphas) {
        out.index.args.push_back(a / prev);
        prev = a;
        out.prefactor /= a;
    }
    return out;
}

Word word_from_positions(const std::vector<int>& exponents,
                         const std::vector<Rational>& alphas) {
    if (exponents.size() != alphas.size())
        throw std::invalid_argument("exponent/argument length mismatch");
    Word w;
    for (size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] < 1) throw std::invalid_argument("exponent must be >= 1");
        if (alphas[j] == 0) throw std::invalid_argument("zero argument");
        for (int i = 1; i < exponents[j]; ++i) w.letters.push_back(Letter{Rational(0)});
        w.letters.push_back(Letter{alphas[j]});
    }
    return w;
}

Word index_to_word(const ArgumentedIndex& idx) {
    if (!idx.admissible()) throw std::invalid_argument("index not admissible");
    std::vector<Rational> alphas;
    Rational cum(1);
    for (const Rational& z : idx.args) {
        cum *= z;
        alphas.push_back(cum);
    }
    return word_from_positions(idx.exponents, alphas);
}

ReflectedWord reflect_word(const Word& w) {
    ReflectedWord out;
    out.factor = 1;
    out.word.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        const Rational& a = it->a;
        if (a == 0) {
            out.word.letters.push_back(Letter{Rational(1)});
        } else if (a == 1) {
            out.word.letters.push_back(Letter{Rational(0)});
        } else {
            out.word.letters.push_back(Letter{a / (a - 1)});
            out.factor /= (1 - a);
        }
    }
    return out;
}

Word mzv_word(const SignedIndex& idx) {
    if (idx.empty()) throw std::invalid_argument("empty index has no word");
    std::vector<int> exps;
    std::vector<Rational> alphas;
    Rational cum(1);
    for (int j = 0; j < idx.depth(); ++j) {
        exps.push_back(idx.exponent(j));
        cum *= idx.sign(j);
        alphas.push_back(cum);
    }
    return word_from_positions(exps, alphas);
}

}  // namespace mzv
