#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/verify.hpp"
#include "mzv/word.hpp"

using namespace mzv;

namespace {
Word w_of(const std::string& s) { return Word::parse(s); }
}  // namespace

TEST_CASE("positions and admissibility") {
    Word w = w_of("0,1");  // the weight-2 chain
    WordPositions pos = word_positions(w);
    CHECK(pos.exponents == std::vector<int>{2});
    CHECK(pos.alphas == std::vector<Rational>{Rational(1)});
    CHECK(word_admissible(w));
    CHECK_FALSE(word_admissible(w_of("1,0")));   // ends in dt/t
    CHECK_FALSE(word_admissible(w_of("1,1")));   // leading dt/(1-t)
    CHECK(word_admissible(w_of("-1,1")));        // alternating head converges
    CHECK(word_admissible(w_of("1/2")));
}

TEST_CASE("word to index dictionary") {
    // single letter a = 1/2: Li_1(1/2) with prefactor 2
    WordIndex wi = word_to_index(w_of("1/2"));
    CHECK(wi.index.exponents == std::vector<int>{1});
    CHECK(wi.index.args == std::vector<Rational>{Rational(1, 2)});
    CHECK(wi.prefactor == 2);

    WordIndex w2 = word_to_index(w_of("0,1"));
    CHECK(w2.index.exponents == std::vector<int>{2});
    CHECK(w2.prefactor == 1);

    WordIndex w3 = word_to_index(w_of("0,0,1"));
    CHECK(w3.index.exponents == std::vector<int>{3});

    // ratio arguments: (w_{1/2}, w_{1/3}) -> args (1/2, 2/3)
    WordIndex w4 = word_to_index(w_of("1/2,1/3"));
    CHECK(w4.index.exponents == std::vector<int>{1, 1});
    CHECK(w4.index.args == std::vector<Rational>{Rational(1, 2), Rational(2, 3)});
    CHECK(w4.prefactor == 6);
}

TEST_CASE("round trip on the dictionary domain") {
    IndexSampler rng(31);
    const std::vector<Rational> pool{Rational(1), Rational(-1), Rational(1, 2),
                                     Rational(-1, 2), Rational(1, 3)};
    for (int t = 0; t < 50; ++t) {
        int r = rng.next_int(1, 4);
        std::vector<int> exps;
        std::vector<Rational> alphas;
        for (int j = 0; j < r; ++j) {
            exps.push_back(rng.next_int(1, 3));
            Rational a = pool[static_cast<size_t>(rng.next_int(0, 4))];
            // avoid a repeated alpha collapsing two positions into one run
            if (!alphas.empty() && alphas.back() == a && exps.back() == 1 && j > 0) {
                exps.back() = 2;
            }
            alphas.push_back(a);
        }
        if (alphas.front() == 1 && exps.front() == 1) exps.front() = 2;
        Word w = word_from_positions(exps, alphas);
        if (!word_admissible(w)) continue;
        WordIndex wi = word_to_index(w);
        CHECK(index_to_word(wi.index) == w);
    }
}

TEST_CASE("m1 = 0 leading collapse") {
    // a leading dt/t run parses as an exponent >= 2 head
    Word w = w_of("0,1/2,1");
    WordPositions pos = word_positions(w);
    CHECK(pos.exponents == std::vector<int>{2, 1});
    CHECK(pos.alphas[0] == Rational(1, 2));
}

TEST_CASE("reflection") {
    // the weight-2 chain is self-dual
    ReflectedWord r = reflect_word(w_of("0,1"));
    CHECK(r.factor == 1);
    CHECK(r.word == w_of("0,1"));

    // a = -1 reflects to 1/2 with factor 1/2
    ReflectedWord r2 = reflect_word(w_of("-1"));
    CHECK(r2.factor == Rational(1, 2));
    CHECK(r2.word == w_of("1/2"));

    // double reflection is the identity with reciprocal factors
    IndexSampler rng(32);
    const std::vector<Rational> pool{Rational(0), Rational(1), Rational(-1),
                                     Rational(1, 2), Rational(1, 3), Rational(-1, 2)};
    for (int t = 0; t < 60; ++t) {
        std::vector<Letter> ls;
        int len = rng.next_int(1, 6);
        for (int i = 0; i < len; ++i)
            ls.push_back(Letter{pool[static_cast<size_t>(rng.next_int(0, 5))]});
        Word w{ls};
        ReflectedWord once = reflect_word(w);
        ReflectedWord twice = reflect_word(once.word);
        CHECK(twice.word == w);
        CHECK(once.factor * twice.factor == 1);
    }
}

TEST_CASE("zeta words") {
    // zeta(2bar): word is (dt/t, dt/(1+t))
    Word w = mzv_word(parse_index("-2"));
    CHECK(w == w_of("0,-1"));
    // alternating signs cumulate: (2bar, 3, 1bar) -> alphas (-1, -1, 1)
    Word w2 = mzv_word(parse_index("-2,3,-1"));
    WordPositions pos = word_positions(w2);
    CHECK(pos.alphas == std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)});
}

TEST_CASE("word parse and print") {
    Word w = w_of("0,-1,1/2");
    CHECK(w.to_string() == "0,-1,1/2");
    CHECK(Word::parse(w.to_string()) == w);
}
