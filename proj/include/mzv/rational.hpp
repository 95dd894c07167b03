#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mzv {

// Exact arithmetic everywhere in the algebra layer; GMP keeps it canonical
// (reduced, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n", "-n", "n/d".
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

inline Rational rat_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("0^negative");
        Rational inv(q.get_den(), q.get_num());
        inv.canonicalize();
        return rat_pow(inv, -e);
    }
    Rational r(1), base(q);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline long binomial_l(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b.get_si();
}

inline mpz_class factorial_z(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace mzv
