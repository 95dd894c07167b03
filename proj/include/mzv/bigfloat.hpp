#pragma once

#include <mpfr.h>

#include <string>

#include "mzv/rational.hpp"

namespace mzv {

// Arbitrary-precision float that carries a certified absolute error bound:
// the reported value differs from the true value by less than err(). Value
// arithmetic rounds to nearest at the working precision; bound arithmetic is
// 64-bit and always rounds up, so bounds stay sound.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec);
    static BigFloat from_long(long v, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat log2(mpfr_prec_t prec);
    static BigFloat sqrt_ui(unsigned long v, mpfr_prec_t prec);
    // log of a positive rational
    static BigFloat log_of_rational(const Rational& q, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);

    // *this += x * q ; *this += x * y  (fused, for series kernels)
    void add_product_q(const BigFloat& x, const Rational& q);
    void add_product(const BigFloat& x, const BigFloat& y);

    BigFloat times_q(const Rational& q) const;
    BigFloat div_by_z(const mpz_class& z) const;
    BigFloat div(const BigFloat& o) const;  // requires |o| well above its bound
    BigFloat abs_value() const;
    BigFloat pow_int(int k) const;  // k >= 0

    void mul_q_inplace(const Rational& q);
    void div_z_inplace(const mpz_class& z);
    void negate();

    // Inflate the carried bound.
    void add_error_2exp(long e);
    void add_error_from(const BigFloat& o);          // err += err(o)
    void add_error_abs_of(const BigFloat& o);        // err += |o| + err(o)

    bool value_is_zero() const { return mpfr_zero_p(v_); }
    double value_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double error_double() const;         // rounded up
    double upper_abs_double() const;     // |value| + err, rounded up
    long error_exponent() const;         // ceil(log2(err)), very negative if err = 0

    // |value| + err <= tol ?
    bool within(double tol) const;

    std::string to_string(int digits = 40) const;

    const __mpfr_struct* raw() const { return v_; }
    __mpfr_struct* raw() { return v_; }

    // -1, 0, +1 comparison of values (bounds ignored)
    static int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

private:
    mpfr_t v_;
    mpfr_t e_;  // 64-bit, RNDU, absolute bound

    void bump_half_ulp();
    // account for a correctly-rounded operation's error; t is the mpfr
    // ternary value (0 = exact, no bump needed)
    void bump_if_inexact(int t) {
        if (t != 0) bump_half_ulp();
    }
    friend class UpperBound;
};

// Tiny RAII helper for upper-bound arithmetic (64-bit, all ops round up).
class UpperBound {
public:
    UpperBound();
    explicit UpperBound(double d);
    UpperBound(const UpperBound& o);
    UpperBound& operator=(const UpperBound& o);
    ~UpperBound();

    static UpperBound abs_of(const BigFloat& x);   // |value| + err
    static UpperBound from_rational_abs(const Rational& q);

    UpperBound operator+(const UpperBound& o) const;
    UpperBound operator*(const UpperBound& o) const;
    UpperBound operator/(const UpperBound& o) const;  // o must be positive
    UpperBound pow_ui(unsigned long k) const;
    // x^(p/q) for positive x (rounded up)
    UpperBound pow_frac(long p, long q) const;

    bool less_than(double d) const;
    double to_double() const;

    const __mpfr_struct* raw() const { return v_; }
    __mpfr_struct* raw() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace mzv
