#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mzv/bigfloat.hpp"

using namespace mzv;

TEST_CASE("construction and rounding error") {
    BigFloat x = BigFloat::from_rational(Rational(1, 3), 128);
    CHECK(std::abs(x.value_double() - 1.0 / 3.0) < 1e-15);
    CHECK(x.error_double() > 0);
    CHECK(x.error_double() < 1e-38);
    BigFloat z = BigFloat::from_long(7, 128);
    CHECK(z.error_double() == 0.0);  // exact
}

TEST_CASE("arithmetic propagates bounds soundly") {
    BigFloat a = BigFloat::from_rational(Rational(1, 3), 64);
    BigFloat b = BigFloat::from_rational(Rational(1, 7), 64);
    BigFloat s = a + b;
    CHECK(std::abs(s.value_double() - (1.0 / 3 + 1.0 / 7)) < 1e-14);
    CHECK(s.error_double() >= a.error_double());
    BigFloat p = a * b;
    CHECK(std::abs(p.value_double() - 1.0 / 21) < 1e-14);
    BigFloat d = a.div(b);
    CHECK(std::abs(d.value_double() - 7.0 / 3) < 1e-13);
    // halving the same value twice gives zero with a tiny bound
    BigFloat zero = s - s;
    CHECK(zero.value_double() == 0.0);
    CHECK(zero.within(1e-15));
}

TEST_CASE("constants") {
    BigFloat pi = BigFloat::pi(128);
    CHECK(std::abs(pi.value_double() - 3.14159265358979) < 1e-13);
    BigFloat l2 = BigFloat::log2(128);
    CHECK(std::abs(l2.value_double() - 0.693147180559945) < 1e-14);
    BigFloat lr = BigFloat::log_of_rational(Rational(3, 2), 128);
    CHECK(std::abs(lr.value_double() - std::log(1.5)) < 1e-14);
    CHECK(lr.error_double() < 1e-37);
}

TEST_CASE("fused updates match operators") {
    BigFloat acc(96);
    BigFloat x = BigFloat::from_rational(Rational(2, 5), 96);
    acc.add_product_q(x, Rational(3, 7));
    BigFloat ref = x.times_q(Rational(3, 7));
    CHECK(BigFloat::cmp(acc, ref) == 0);
    acc.div_z_inplace(mpz_class(4));
    CHECK(std::abs(acc.value_double() - (2.0 / 5) * (3.0 / 7) / 4) < 1e-16);
}

TEST_CASE("pow and error exponent") {
    BigFloat x = BigFloat::from_rational(Rational(1, 2), 128);
    BigFloat p = x.pow_int(10);
    CHECK(std::abs(p.value_double() - 1.0 / 1024) < 1e-12);
    BigFloat y(128);
    y.add_error_2exp(-100);
    CHECK(y.error_exponent() >= -100);
    CHECK(y.error_exponent() <= -98);
}

TEST_CASE("recomputation at higher precision stays within the bound") {
    for (long num = 1; num <= 30; ++num) {
        Rational q(num, 17);
        BigFloat lo = BigFloat::log_of_rational(q + 1, 96);
        BigFloat hi = BigFloat::log_of_rational(q + 1, 192);
        BigFloat diff = lo - hi;
        CHECK(diff.abs_value().value_double() <= lo.error_double() + hi.error_double() + 1e-60);
    }
}

TEST_CASE("upper bound helpers") {
    UpperBound a(0.5);
    UpperBound b = a.pow_ui(10);
    CHECK(b.to_double() <= 1.0 / 1024 * (1 + 1e-10));
    CHECK(b.less_than(1e-2));
    UpperBound c = UpperBound(8.0).pow_frac(-2, 3);
    CHECK(std::abs(c.to_double() - 0.25) < 1e-9);
}
