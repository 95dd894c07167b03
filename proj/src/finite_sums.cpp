#include "mzv/finite_sums.hpp"

#include <stdexcept>

namespace mzv {

void check_finite_cap(int n, int cap) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > cap) throw std::invalid_argument("n exceeds finite-sum cap");
}

namespace {

Rational sign_pow(int sign, long n) {
    return (sign > 0 || n % 2 == 0) ? Rational(1) : Rational(-1);
}

// One DP layer: given inner[q] for q = 0..n, produce
//   strict:  out[q] = sum_{p<=q} sign^p / p^e * inner[p-1]
//   star:    out[q] = sum_{p<=q} sign^p / p^e * inner[p]
std::vector<Rational> dp_layer(const std::vector<Rational>& inner, int e, int sign,
                               bool strict) {
    const int n = static_cast<int>(inner.size()) - 1;
    std::vector<Rational> out(n + 1);
    out[0] = 0;
    for (int p = 1; p <= n; ++p) {
        Rational term = strict ? inner[p - 1] : inner[p];
        if (term != 0) {
            Rational pe = rat_pow(Rational(p), e);
            term /= pe;
            if (sign < 0 && p % 2) term = -term;
        }
        out[p] = out[p - 1] + term;
    }
    return out;
}

std::vector<Rational> prefix_impl(int n, const SignedIndex& idx, bool strict) {
    std::vector<Rational> layer(n + 1, Rational(1));  // empty index
    for (int j = idx.depth() - 1; j >= 0; --j)
        layer = dp_layer(layer, idx.exponent(j), idx.sign(j), strict);
    return layer;
}

}  // namespace

std::vector<Rational> mhs_prefix(int n, const SignedIndex& idx, int cap) {
    check_finite_cap(n, cap);
    return prefix_impl(n, idx, true);
}

Rational mhs_eval(int n, const SignedIndex& idx, int cap) {
    return mhs_prefix(n, idx, cap).back();
}

std::vector<Rational> mhss_prefix(int n, const SignedIndex& idx, int cap) {
    check_finite_cap(n, cap);
    return prefix_impl(n, idx, false);
}

Rational mhss_eval(int n, const SignedIndex& idx, int cap) {
    return mhss_prefix(n, idx, cap).back();
}

Rational parametric_star_eval(int n, const SignedIndex& idx, const Rational& x, int cap) {
    check_finite_cap(n, cap);
    if (abs(x) > 1) throw std::invalid_argument("parametric star sum needs |x| <= 1");
    for (int j = 0; j < idx.depth(); ++j)
        if (idx.parts[j] < 1)
            throw std::invalid_argument("parametric star sum needs a positive index");
    if (idx.empty()) return rat_pow(x, n);
    // Innermost layer carries x^p.
    std::vector<Rational> layer(n + 1);
    layer[0] = 0;
    Rational xp(1);
    for (int p = 1; p <= n; ++p) {
        xp *= x;
        layer[p] = layer[p - 1] + xp / rat_pow(Rational(p), idx.parts.back());
    }
    for (int j = idx.depth() - 2; j >= 0; --j)
        layer = dp_layer(layer, idx.exponent(j), idx.sign(j), false);
    return layer[n];
}

Rational eval_formal_sum(int n, const FormalSum& fs, int cap) {
    Rational out = 0;
    for (const auto& [idx, c] : fs.terms()) out += c * mhs_eval(n, idx, cap);
    return out;
}

Rational eval_formal_sum_star(int n, const FormalSum& fs, int cap) {
    Rational out = 0;
    for (const auto& [idx, c] : fs.terms()) out += c * mhss_eval(n, idx, cap);
    return out;
}

Rational ky_truncated(int N, const SignedIndex& k, int l_head_exp, int l_head_sign,
                      const SignedIndex& l_tail, int cap) {
    check_finite_cap(N, cap);
    if (k.empty()) throw std::invalid_argument("ky_truncated needs non-empty k");
    std::vector<Rational> plain = mhs_prefix(N, k.tail(), cap);
    std::vector<Rational> star = mhss_prefix(N, l_tail, cap);
    const int head_exp = k.exponent(0) + l_head_exp;
    const int head_sign = k.sign(0) * l_head_sign;
    Rational out = 0;
    for (int n = 1; n <= N; ++n) {
        Rational t = plain[n - 1] * star[n];
        if (t == 0) continue;
        t /= rat_pow(Rational(n), head_exp);
        if (head_sign < 0 && n % 2) t = -t;
        out += t;
    }
    return out;
}

Rational mhss_pinned(int n, const SignedIndex& idx, int v, int cap) {
    check_finite_cap(n, cap);
    if (idx.empty()) throw std::invalid_argument("pinned star sum needs depth >= 1");
    if (v < 1 || v > n) return 0;
    for (int p : idx.parts)
        if (p < 1) throw std::invalid_argument("pinned star sum needs a positive index");
    // Innermost variable fixed at v; remaining layers are star layers >= v.
    std::vector<Rational> layer(n + 1, Rational(0));
    Rational inner = 1 / rat_pow(Rational(v), idx.parts.back());
    for (int p = v; p <= n; ++p) layer[p] = inner;
    for (int j = idx.depth() - 2; j >= 0; --j)
        layer = dp_layer(layer, idx.exponent(j), idx.sign(j), false);
    return layer[n];
}

}  // namespace mzv
