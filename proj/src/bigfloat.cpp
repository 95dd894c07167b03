#include "mzv/bigfloat.hpp"

#include <stdexcept>

namespace mzv {

namespace {
constexpr mpfr_prec_t kErrPrec = 64;
}

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
    mpfr_init2(e_, kErrPrec);
    mpfr_set_zero(e_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    mpfr_init2(e_, kErrPrec);
    mpfr_set(e_, o.e_, MPFR_RNDU);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    v_[0] = o.v_[0];
    e_[0] = o.e_[0];
    mpfr_init2(o.v_, MPFR_PREC_MIN);
    mpfr_init2(o.e_, MPFR_PREC_MIN);
    mpfr_set_zero(o.v_, 1);
    mpfr_set_zero(o.e_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        mpfr_set(e_, o.e_, MPFR_RNDU);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        mpfr_swap(e_, o.e_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
    mpfr_clear(e_);
}

void BigFloat::bump_half_ulp() {
    if (mpfr_zero_p(v_)) return;
    mpfr_exp_t ex = mpfr_get_exp(v_);
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    mpfr_set_ui_2exp(u, 1, ex - mpfr_get_prec(v_) - 1, MPFR_RNDU);
    mpfr_add(e_, e_, u, MPFR_RNDU);
    mpfr_clear(u);
}

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec) {
    BigFloat out(prec);
    out.bump_if_inexact(mpfr_set_q(out.v_, q.get_mpq_t(), MPFR_RNDN));
    return out;
}

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
    BigFloat out(prec);
    out.bump_if_inexact(mpfr_set_si(out.v_, v, MPFR_RNDN));
    return out;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat out(prec);
    out.bump_if_inexact(mpfr_const_pi(out.v_, MPFR_RNDN));
    return out;
}

BigFloat BigFloat::log2(mpfr_prec_t prec) {
    BigFloat out(prec);
    out.bump_if_inexact(mpfr_const_log2(out.v_, MPFR_RNDN));
    return out;
}

BigFloat BigFloat::sqrt_ui(unsigned long v, mpfr_prec_t prec) {
    BigFloat out(prec);
    out.bump_if_inexact(mpfr_sqrt_ui(out.v_, v, MPFR_RNDN));
    return out;
}

BigFloat BigFloat::log_of_rational(const Rational& q, mpfr_prec_t prec) {
    if (q <= 0) throw std::domain_error("log of nonpositive rational");
    BigFloat out(prec);
    mpfr_t x;
    mpfr_init2(x, prec + 32);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);  // err0 <= 2^(exp - prec - 33)
    out.bump_if_inexact(mpfr_log(out.v_, x, MPFR_RNDN));
    // Propagate the input rounding through |log'| = 1/x, x >= q/2 here.
    mpfr_t u, lo;
    mpfr_init2(u, kErrPrec);
    mpfr_init2(lo, kErrPrec);
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(x) - prec - 33, MPFR_RNDU);
    mpfr_set_q(lo, q.get_mpq_t(), MPFR_RNDD);
    mpfr_sub(lo, lo, u, MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) throw std::domain_error("log argument too close to zero");
    mpfr_div(u, u, lo, MPFR_RNDU);
    mpfr_add(out.e_, out.e_, u, MPFR_RNDU);
    mpfr_clear(u);
    mpfr_clear(lo);
    mpfr_clear(x);
    return out;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat out(std::max(precision(), o.precision()));
    int t = mpfr_add(out.v_, v_, o.v_, MPFR_RNDN);
    mpfr_add(out.e_, e_, o.e_, MPFR_RNDU);
    out.bump_if_inexact(t);
    return out;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat out(std::max(precision(), o.precision()));
    int t = mpfr_sub(out.v_, v_, o.v_, MPFR_RNDN);
    mpfr_add(out.e_, e_, o.e_, MPFR_RNDU);
    out.bump_if_inexact(t);
    return out;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat out(std::max(precision(), o.precision()));
    int tern = mpfr_mul(out.v_, v_, o.v_, MPFR_RNDN);
    // |a| eb + |b| ea + ea eb
    mpfr_t t, ab;
    mpfr_init2(t, kErrPrec);
    mpfr_init2(ab, kErrPrec);
    mpfr_abs(ab, v_, MPFR_RNDU);
    mpfr_mul(t, ab, o.e_, MPFR_RNDU);
    mpfr_add(out.e_, out.e_, t, MPFR_RNDU);
    mpfr_abs(ab, o.v_, MPFR_RNDU);
    mpfr_mul(t, ab, e_, MPFR_RNDU);
    mpfr_add(out.e_, out.e_, t, MPFR_RNDU);
    mpfr_mul(t, e_, o.e_, MPFR_RNDU);
    mpfr_add(out.e_, out.e_, t, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(ab);
    out.bump_if_inexact(tern);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    out.negate();
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    int t = mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    mpfr_add(e_, e_, o.e_, MPFR_RNDU);
    bump_if_inexact(t);
    return *this;
}

void BigFloat::add_product_q(const BigFloat& x, const Rational& q) {
    if (q == 0) return;
    mpfr_t t;
    mpfr_init2(t, precision());
    int t1 = mpfr_mul_q(t, x.v_, q.get_mpq_t(), MPFR_RNDN);
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    if (t1 != 0 && !mpfr_zero_p(t)) {
        mpfr_set_ui_2exp(u, 1, mpfr_get_exp(t) - mpfr_get_prec(t) - 1, MPFR_RNDU);
        mpfr_add(e_, e_, u, MPFR_RNDU);
    }
    Rational aq = abs(q);
    mpfr_set_q(u, aq.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(u, u, x.e_, MPFR_RNDU);
    mpfr_add(e_, e_, u, MPFR_RNDU);
    int t2 = mpfr_add(v_, v_, t, MPFR_RNDN);
    mpfr_clear(u);
    mpfr_clear(t);
    bump_if_inexact(t2);
}

void BigFloat::add_product(const BigFloat& x, const BigFloat& y) {
    BigFloat p = x * y;
    *this += p;
}

BigFloat BigFloat::times_q(const Rational& q) const {
    BigFloat out(precision());
    if (q == 0) return out;
    int tern = mpfr_mul_q(out.v_, v_, q.get_mpq_t(), MPFR_RNDN);
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    Rational aq = abs(q);
    mpfr_set_q(u, aq.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(u, u, e_, MPFR_RNDU);
    mpfr_set(out.e_, u, MPFR_RNDU);
    mpfr_clear(u);
    out.bump_if_inexact(tern);
    return out;
}

BigFloat BigFloat::div_by_z(const mpz_class& z) const {
    if (z == 0) throw std::domain_error("division by zero");
    BigFloat out(precision());
    int tern = mpfr_div_z(out.v_, v_, z.get_mpz_t(), MPFR_RNDN);
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    mpz_class az = ::abs(z);
    mpfr_set_z(u, az.get_mpz_t(), MPFR_RNDD);
    mpfr_div(u, e_, u, MPFR_RNDU);
    mpfr_set(out.e_, u, MPFR_RNDU);
    mpfr_clear(u);
    out.bump_if_inexact(tern);
    return out;
}

BigFloat BigFloat::div(const BigFloat& o) const {
    // (ea |b| + |a| eb) / (|b| (|b| - eb)) with |b| - eb > 0
    mpfr_t babs, lo;
    mpfr_init2(babs, kErrPrec);
    mpfr_init2(lo, kErrPrec);
    mpfr_abs(babs, o.v_, MPFR_RNDD);
    mpfr_sub(lo, babs, o.e_, MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) {
        mpfr_clear(babs);
        mpfr_clear(lo);
        throw std::domain_error("divisor not separated from zero");
    }
    BigFloat out(std::max(precision(), o.precision()));
    int tern = mpfr_div(out.v_, v_, o.v_, MPFR_RNDN);
    mpfr_t t, aabs;
    mpfr_init2(t, kErrPrec);
    mpfr_init2(aabs, kErrPrec);
    mpfr_abs(aabs, v_, MPFR_RNDU);
    mpfr_add(aabs, aabs, e_, MPFR_RNDU);
    mpfr_mul(t, aabs, o.e_, MPFR_RNDU);      // (|a|+ea) eb
    mpfr_t t2;
    mpfr_init2(t2, kErrPrec);
    mpfr_abs(t2, o.v_, MPFR_RNDU);
    mpfr_mul(t2, t2, e_, MPFR_RNDU);         // |b| ea
    mpfr_add(t, t, t2, MPFR_RNDU);
    mpfr_abs(t2, o.v_, MPFR_RNDD);
    mpfr_mul(t2, t2, lo, MPFR_RNDD);         // |b| (|b| - eb)
    mpfr_div(t, t, t2, MPFR_RNDU);
    mpfr_set(out.e_, t, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(t2);
    mpfr_clear(aabs);
    mpfr_clear(babs);
    mpfr_clear(lo);
    out.bump_if_inexact(tern);
    return out;
}

BigFloat BigFloat::abs_value() const {
    BigFloat out(*this);
    mpfr_abs(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow_int(int k) const {
    if (k < 0) throw std::invalid_argument("pow_int needs k >= 0");
    BigFloat out = from_long(1, precision());
    BigFloat base(*this);
    while (k > 0) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

void BigFloat::mul_q_inplace(const Rational& q) {
    *this = times_q(q);
}

void BigFloat::div_z_inplace(const mpz_class& z) {
    *this = div_by_z(z);
}

void BigFloat::negate() {
    mpfr_neg(v_, v_, MPFR_RNDN);
}

void BigFloat::add_error_2exp(long e) {
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
    mpfr_add(e_, e_, u, MPFR_RNDU);
    mpfr_clear(u);
}

void BigFloat::add_error_from(const BigFloat& o) {
    mpfr_add(e_, e_, o.e_, MPFR_RNDU);
}

void BigFloat::add_error_abs_of(const BigFloat& o) {
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    mpfr_abs(u, o.v_, MPFR_RNDU);
    mpfr_add(u, u, o.e_, MPFR_RNDU);
    mpfr_add(e_, e_, u, MPFR_RNDU);
    mpfr_clear(u);
}

double BigFloat::error_double() const {
    return mpfr_get_d(e_, MPFR_RNDU);
}

double BigFloat::upper_abs_double() const {
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    mpfr_abs(u, v_, MPFR_RNDU);
    mpfr_add(u, u, e_, MPFR_RNDU);
    double d = mpfr_get_d(u, MPFR_RNDU);
    mpfr_clear(u);
    return d;
}

long BigFloat::error_exponent() const {
    if (mpfr_zero_p(e_)) return -(1L << 40);
    return mpfr_get_exp(e_);
}

bool BigFloat::within(double tol) const {
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    mpfr_abs(u, v_, MPFR_RNDU);
    mpfr_add(u, u, e_, MPFR_RNDU);
    bool ok = mpfr_cmp_d(u, tol) <= 0;
    mpfr_clear(u);
    return ok;
}

std::string BigFloat::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// ---- UpperBound ----

UpperBound::UpperBound() {
    mpfr_init2(v_, kErrPrec);
    mpfr_set_zero(v_, 1);
}

UpperBound::UpperBound(double d) {
    mpfr_init2(v_, kErrPrec);
    mpfr_set_d(v_, d, MPFR_RNDU);
}

UpperBound::UpperBound(const UpperBound& o) {
    mpfr_init2(v_, kErrPrec);
    mpfr_set(v_, o.v_, MPFR_RNDU);
}

UpperBound& UpperBound::operator=(const UpperBound& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDU);
    return *this;
}

UpperBound::~UpperBound() {
    mpfr_clear(v_);
}

UpperBound UpperBound::abs_of(const BigFloat& x) {
    UpperBound out;
    mpfr_abs(out.v_, x.v_, MPFR_RNDU);
    mpfr_add(out.v_, out.v_, x.e_, MPFR_RNDU);
    return out;
}

UpperBound UpperBound::from_rational_abs(const Rational& q) {
    UpperBound out;
    Rational a = abs(q);
    mpfr_set_q(out.v_, a.get_mpq_t(), MPFR_RNDU);
    return out;
}

UpperBound UpperBound::operator+(const UpperBound& o) const {
    UpperBound out;
    mpfr_add(out.v_, v_, o.v_, MPFR_RNDU);
    return out;
}

UpperBound UpperBound::operator*(const UpperBound& o) const {
    UpperBound out;
    mpfr_mul(out.v_, v_, o.v_, MPFR_RNDU);
    return out;
}

UpperBound UpperBound::operator/(const UpperBound& o) const {
    if (mpfr_sgn(o.v_) <= 0) throw std::domain_error("upper-bound division by nonpositive");
    UpperBound out;
    mpfr_div(out.v_, v_, o.v_, MPFR_RNDU);
    return out;
}

UpperBound UpperBound::pow_ui(unsigned long k) const {
    UpperBound out;
    mpfr_pow_ui(out.v_, v_, k, MPFR_RNDU);
    return out;
}

UpperBound UpperBound::pow_frac(long p, long q) const {
    // x^(p/q) rounded up; requires x >= 1 so rounding the exponent up is the
    // conservative direction
    if (mpfr_cmp_ui(v_, 1) < 0)
        throw std::domain_error("fractional power needs base >= 1");
    UpperBound e;
    mpfr_set_si(e.v_, p, MPFR_RNDU);
    mpfr_div_si(e.v_, e.v_, q, MPFR_RNDU);
    UpperBound out;
    mpfr_pow(out.v_, v_, e.v_, MPFR_RNDU);
    return out;
}

bool UpperBound::less_than(double d) const {
    return mpfr_cmp_d(v_, d) < 0;
}

double UpperBound::to_double() const {
    return mpfr_get_d(v_, MPFR_RNDU);
}

}  // namespace mzv
