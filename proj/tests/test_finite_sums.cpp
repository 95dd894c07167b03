#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "mzv/finite_sums.hpp"
#include "mzv/harmonic.hpp"
#include "mzv/verify.hpp"

using namespace mzv;

namespace {

// brute-force enumeration oracle, strict or star
Rational brute(int n, const SignedIndex& idx, bool strict) {
    std::function<Rational(int, int)> rec = [&](int j, int hi) -> Rational {
        if (j == idx.depth()) return 1;
        Rational acc = 0;
        for (int v = strict ? hi - 1 : hi; v >= 1; --v) {
            Rational t = rec(j + 1, v) / rat_pow(Rational(v), idx.exponent(j));
            if (idx.sign(j) < 0 && v % 2) t = -t;
            acc += t;
        }
        return acc;
    };
    return rec(0, strict ? n + 1 : n);
}

}  // namespace

TEST_CASE("frozen strict values") {
    CHECK(mhs_eval(3, parse_index("2,1")) == Rational(5, 12));
    CHECK(mhs_eval(2, parse_index("-1,1")) == Rational(1, 2));
    CHECK(mhs_eval(1, parse_index("2,1")) == 0);
    CHECK(mhs_eval(0, SignedIndex{}) == 1);
    CHECK(mhs_eval(17, SignedIndex{}) == 1);
}

TEST_CASE("frozen star values") {
    CHECK(mhss_eval(2, parse_index("1,1")) == Rational(7, 4));
    CHECK(mhss_eval(2, parse_index("2,1")) == Rational(11, 8));
    CHECK(mhss_eval(2, parse_index("2,1")) ==
          mhs_eval(2, parse_index("2,1")) + mhs_eval(2, parse_index("3")));
    CHECK(mhss_eval(0, parse_index("3")) == 0);
    CHECK(mhss_eval(5, SignedIndex{}) == 1);
}

TEST_CASE("against brute force") {
    IndexSampler rng(21);
    for (int t = 0; t < 30; ++t) {
        SignedIndex idx = rng.next_signed(3, 7);
        for (int n = 0; n <= 7; ++n) {
            CHECK(mhs_eval(n, idx) == brute(n, idx, true));
            CHECK(mhss_eval(n, idx) == brute(n, idx, false));
        }
    }
}

TEST_CASE("parametric star sum") {
    const Rational half(1, 2);
    CHECK(parametric_star_eval(4, SignedIndex{}, half) == Rational(1, 16));
    CHECK(parametric_star_eval(2, parse_index("1"), half) == Rational(5, 8));
    IndexSampler rng(22);
    for (int t = 0; t < 20; ++t) {
        SignedIndex idx = rng.next_positive(3, 6);
        int n = rng.next_int(0, 10);
        CHECK(parametric_star_eval(n, idx, Rational(1)) == mhss_eval(n, idx));
    }
    // brute force at x = 1/3, depth 2
    SignedIndex idx = parse_index("2,1");
    Rational x(1, 3);
    Rational acc = 0;
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2)
            acc += rat_pow(x, n2) / (Rational(n1) * Rational(n1) * Rational(n2));
    CHECK(parametric_star_eval(4, idx, x) == acc);
}

TEST_CASE("formal sum evaluation") {
    FormalSum fs;
    fs.add(parse_index("1,1"), 2);
    fs.add(parse_index("2"), 1);
    CHECK(eval_formal_sum(2, fs) == Rational(9, 4));
    CHECK(eval_formal_sum(5, FormalSum{}) == 0);
    FormalSum fs2;
    fs2.add(parse_index("2,1"), 1);
    fs2.add(parse_index("3"), 1);
    CHECK(eval_formal_sum(2, fs2) == Rational(11, 8));
}

TEST_CASE("monotone growth for positive indices") {
    IndexSampler rng(23);
    for (int t = 0; t < 15; ++t) {
        SignedIndex idx = rng.next_positive(3, 6);
        std::vector<Rational> pre = mhs_prefix(20, idx);
        for (int n = 1; n <= 20; ++n) CHECK(pre[n] >= pre[n - 1]);
    }
}

TEST_CASE("pinned star sums sum to the plain star sum") {
    IndexSampler rng(24);
    for (int t = 0; t < 15; ++t) {
        SignedIndex idx = rng.next_positive(3, 6);
        int n = rng.next_int(1, 9);
        Rational total = 0;
        for (int v = 1; v <= n; ++v) total += mhss_pinned(n, idx, v);
        CHECK(total == mhss_eval(n, idx));
    }
}

TEST_CASE("cap is enforced") {
    CHECK_THROWS(mhs_eval(201, parse_index("2")));
    CHECK(mhs_eval(201, parse_index("2"), 300) > 0);
}

TEST_CASE("ky truncation signed weights") {
    // smallest signed case: heads -1, -1 merge to sign +1
    SignedIndex k = parse_index("-1"), l = parse_index("-1");
    Rational direct = 0;
    for (int n = 1; n <= 9; ++n) direct += Rational(1) / (Rational(n) * Rational(n));
    CHECK(ky_truncated(9, k, 1, -1, SignedIndex{}) == direct);
}
