#pragma once

#include <vector>

#include "mzv/formal_sum.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// Exact rational evaluation of finite (alternating, parametric) multiple
// harmonic sums. All functions run a depth-wise prefix recursion: O(n*r)
// rational operations instead of the naive r-fold loop.
//
// n is capped (default 200) because rational magnitudes explode; pass a
// larger cap explicitly when you mean it.
inline constexpr int kDefaultFiniteCap = 200;

void check_finite_cap(int n, int cap);

// Strict sum over n >= n1 > ... > nr >= 1 of prod sign^{n_j} / n_j^{|s_j|}.
// Returns 0 when n < depth; the empty index evaluates to 1.
Rational mhs_eval(int n, const SignedIndex& idx, int cap = kDefaultFiniteCap);

// Values for all 0..n at once (one DP pass); out[m] = mhs_eval(m, idx).
std::vector<Rational> mhs_prefix(int n, const SignedIndex& idx, int cap = kDefaultFiniteCap);

// Non-strict (star) variants.
Rational mhss_eval(int n, const SignedIndex& idx, int cap = kDefaultFiniteCap);
std::vector<Rational> mhss_prefix(int n, const SignedIndex& idx, int cap = kDefaultFiniteCap);

// Parametric star sum: x^{n_m} on the innermost variable; the empty index
// gives x^n. Positive exponents only.
Rational parametric_star_eval(int n, const SignedIndex& idx, const Rational& x,
                              int cap = kDefaultFiniteCap);

// Linear extension of mhs_eval over a formal sum.
Rational eval_formal_sum(int n, const FormalSum& fs, int cap = kDefaultFiniteCap);
Rational eval_formal_sum_star(int n, const FormalSum& fs, int cap = kDefaultFiniteCap);

// Exact truncation of the circled-product series: sum over 1 <= n <= N of
//   zeta_{n-1}(k tail) * zetastar_n(l tail) * (sign_k1 sign_l1)^n / n^(|k1|+|l1|).
// The l head exponent is passed separately so it may be 0.
Rational ky_truncated(int N, const SignedIndex& k, int l_head_exp, int l_head_sign,
                      const SignedIndex& l_tail, int cap = kDefaultFiniteCap);

// Star sum with the innermost variable pinned to v:
//   sum over n >= n_1 >= ... >= n_m = v of prod 1/n_j^{s_j}.
// Used to expand integrals of parametric star sums without quadrature.
Rational mhss_pinned(int n, const SignedIndex& idx, int v, int cap = kDefaultFiniteCap);

}  // namespace mzv
