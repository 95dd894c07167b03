#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/finite_sums.hpp"
#include "mzv/harmonic.hpp"
#include "mzv/verify.hpp"

using namespace mzv;

TEST_CASE("smallest stuffle") {
    FormalSum fs = stuffle(parse_index("1"), parse_index("1"));
    CHECK(fs.to_string() == "2*(1,1) + (2)");
}

TEST_CASE("plain times star gives the eight-term expansion") {
    // zeta_n(k1) zetastar_n(k2,k3) with distinct primes to avoid collisions
    const int k1 = 2, k2 = 3, k3 = 5;
    FormalSum total;
    const FormalSum st = star_expand(SignedIndex({k2, k3}));
    for (const auto& [t, c] : st.terms()) total += stuffle(SignedIndex({k1}), t).scaled(c);
    FormalSum expect;
    expect.add(SignedIndex({k1, k2, k3}), 1);
    expect.add(SignedIndex({k1 + k2, k3}), 1);
    expect.add(SignedIndex({k2, k1, k3}), 1);
    expect.add(SignedIndex({k2, k1 + k3}), 1);
    expect.add(SignedIndex({k2, k3, k1}), 1);
    expect.add(SignedIndex({k1, k2 + k3}), 1);
    expect.add(SignedIndex({k1 + k2 + k3}), 1);
    expect.add(SignedIndex({k2 + k3, k1}), 1);
    CHECK(total == expect);
    CHECK(total.coefficient_mass() == 8);
}

TEST_CASE("signed smallest case") {
    FormalSum fs = stuffle(parse_index("-1"), parse_index("-1"));
    FormalSum expect;
    expect.add(parse_index("-1,-1"), 2);
    expect.add(parse_index("2"), 1);
    CHECK(fs == expect);
    // finite check at n = 2: (-1/2)^2 = 2*(-1/2) + 5/4
    CHECK(eval_formal_sum(2, fs) == mhs_eval(2, parse_index("-1")) * mhs_eval(2, parse_index("-1")));
}

TEST_CASE("stuffle homomorphism against finite sums") {
    IndexSampler rng(11);
    for (int t = 0; t < 40; ++t) {
        SignedIndex u = rng.next_signed(3, 6);
        SignedIndex v = rng.next_signed(3, 6);
        FormalSum fs = stuffle(u, v);
        for (int n = 1; n <= 12; ++n)
            CHECK(eval_formal_sum(n, fs) == mhs_eval(n, u) * mhs_eval(n, v));
    }
}

TEST_CASE("stuffle is commutative and associative") {
    IndexSampler rng(12);
    for (int t = 0; t < 20; ++t) {
        SignedIndex u = rng.next_signed(2, 4);
        SignedIndex v = rng.next_signed(2, 4);
        SignedIndex w = rng.next_signed(2, 4);
        CHECK(stuffle(u, v) == stuffle(v, u));
        CHECK(stuffle(stuffle(u, v), FormalSum(w)) == stuffle(FormalSum(u), stuffle(v, w)));
    }
}

TEST_CASE("star expansion") {
    CHECK(star_expand(parse_index("2,1")).to_string() == "(2,1) + (3)");
    CHECK(star_expand(parse_index("1,1,1")).to_string() == "(1,1,1) + (2,1) + (1,2) + (3)");
    CHECK(star_expand(SignedIndex{}) == FormalSum(SignedIndex{}));
    IndexSampler rng(13);
    for (int t = 0; t < 30; ++t) {
        SignedIndex k = rng.next_signed(4, 8);
        FormalSum st = star_expand(k);
        CHECK(st.coefficient_mass() == rat_pow(Rational(2), k.depth() - 1));
        for (int n = 0; n <= 10; ++n) CHECK(mhss_eval(n, k) == eval_formal_sum(n, st));
    }
}

TEST_CASE("circled product") {
    CHECK(circled_star(parse_index("2"), parse_index("1")).to_string() == "(3)");
    FormalSum fs = circled_star(parse_index("2,1"), parse_index("1,1"));
    FormalSum expect;
    expect.add(parse_index("3,1,1"), 2);
    expect.add(parse_index("3,2"), 1);
    CHECK(fs == expect);
    CHECK_THROWS(circled_star(SignedIndex{}, parse_index("1")));
    // single-entry l collapses to one index
    CHECK(circled_star(parse_index("3,2,1"), parse_index("4")).to_string() == "(7,2,1)");
    // term count = stuffle count of the tails
    IndexSampler rng(14);
    for (int t = 0; t < 20; ++t) {
        SignedIndex k = rng.next_signed(3, 6);
        SignedIndex l = rng.next_signed(3, 6);
        CHECK(circled_star(k, l).coefficient_mass() ==
              stuffle(k.tail(), l.tail()).coefficient_mass());
    }
}

TEST_CASE("arakawa-kaneko shaped circled product") {
    // (k) (*) (1, {1}_{p-1}): head k+1, tail the remaining ones
    FormalSum fs = circled_star(parse_index("3"), SignedIndex({1, 1, 1}));
    FormalSum expect;
    expect.add(SignedIndex({4, 1, 1}), 1);
    CHECK(fs == expect);
}

TEST_CASE("ky expansion matches truncated series exactly") {
    IndexSampler rng(15);
    for (int t = 0; t < 25; ++t) {
        SignedIndex k = rng.next_signed(3, 6);
        SignedIndex l = rng.next_signed(3, 6);
        FormalSum fs = ky_expand(k, l.exponent(0), l.sign(0), l.tail());
        for (int N : {1, 2, 7, 19})
            CHECK(eval_formal_sum(N, fs) ==
                  ky_truncated(N, k, l.exponent(0), l.sign(0), l.tail()));
    }
    // zero-headed l
    FormalSum fs = ky_expand(parse_index("3,2"), 0, 1, parse_index("2,2"));
    for (int N : {3, 11})
        CHECK(eval_formal_sum(N, fs) == ky_truncated(N, parse_index("3,2"), 0, 1, parse_index("2,2")));
}
