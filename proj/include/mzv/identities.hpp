#pragma once

#include <string>
#include <vector>

#include "mzv/expression.hpp"
#include "mzv/index.hpp"
#include "mzv/word.hpp"

namespace mzv {

// One generator per identity family: integer (and rational) parameters in,
// (LHS, RHS) expression pair out. Generators only build expressions; the
// verification harness decides tolerances.
struct IdentityInstance {
    std::string family;
    std::string params;
    Expression lhs;
    Expression rhs;
    std::string note;  // attached diagnostics for known convention pitfalls
};

namespace identities {

// ---- index plumbing shared by the generators ----

// 2 [] {1}_{g1-1} [] 2 ... [] 2, {1}_{g_last-1}: the dual-shaped index built
// from heads joined by box gaps, with a trailing ones run.
std::vector<int> vee_index(const std::vector<int>& heads, const std::vector<int>& gaps,
                           int trail);

// E_i / F_i box-concatenations. F may start with a {1}_{p_1-1} block; when
// leading gaps are zero the merged head is pinned to the outer variable and
// contributes 1/n^pin instead of an index entry.
struct PinnedIndex {
    int pin = 0;
    SignedIndex idx;
};

SignedIndex build_E(int i, const std::vector<int>& p, const std::vector<int>& m,
                    bool primed);
PinnedIndex build_F(int i, const std::vector<int>& p, const std::vector<int>& m,
                    bool primed);

// ---- identity families ----

// Unit-exponent reductions of double-2 alternating values (cases 1..4).
IdentityInstance gen_bbb(int casenum, int m, int n);

// Substring-sign sums: which = 1 or 2.
IdentityInstance gen_substring_sum(int which, int m, int n);

// Single-variable polylog expanded over sigma-sign words.
// ms has k+1 entries (ms[0] may be 0), ps has k entries, a in [-1,0)u(0,1).
IdentityInstance gen_thm22(const std::vector<int>& ms, const std::vector<int>& ps,
                           const Rational& a);

// Reflection t -> 1-t in polylog form; a_l in [-1,1/2] \ {0}.
IdentityInstance gen_thm23(const std::vector<int>& ms, const std::vector<int>& ps,
                           const std::vector<Rational>& as);

// Values at 1/2 <-> unit-exponent alternating values.
IdentityInstance gen_b4(const std::vector<int>& ms, const std::vector<int>& ps);

// Log-weighted single integrals in closed form; variant 1 or 2.
// Variant 2 needs |a| <= 1/2.
IdentityInstance gen_b8(int variant, int m1, int m2, const Rational& a);

// Path-reversal identity for multi-argument polylogs (k >= 1; ps entries
// >= 1 -- the reversal argument is vacuous for p = 0).
IdentityInstance gen_thm24(const std::vector<int>& ms, const std::vector<int>& ps,
                           const std::vector<Rational>& as);

// The a = -1 specialization over alternating values and log-2 powers.
IdentityInstance gen_thm31(const std::vector<int>& ms, const std::vector<int>& ps);
IdentityInstance gen_cor32(const std::vector<int>& ps);

// Head-barred alternating values as zeta values plus geometric series atoms.
// ms has k+1 entries (all >= 1), ps has k entries (>= 0).
IdentityInstance gen_thm34(const std::vector<int>& ms, const std::vector<int>& ps);

// The depth-r generalization: ks (size r, entries >= 0), ms (m_2..m_{k+1},
// all >= 1), ps (size k).
IdentityInstance gen_thm51(const std::vector<int>& ks, const std::vector<int>& ms,
                           const std::vector<int>& ps);

// Dual-shaped zeta values against circled-product values.
// ks size r (k_r >= 1, others >= 0), ps size k, ms size k (m_k >= 1).
IdentityInstance gen_thm52(const std::vector<int>& ks, const std::vector<int>& ps,
                           const std::vector<int>& ms);

// Triangular inversion, closed form; exact on rationals.
// A[j][p] for 1 <= j <= p <= size, with A[p][p] = 1.
std::vector<Rational> invert_lemma54(const std::vector<std::vector<Rational>>& A,
                                     const std::vector<Rational>& C);

// Circled-product value expanded over dual-shaped zeta values and zeta
// factor chains. ks size r (k_r >= 1, others >= 0), ms size k (all >= 1).
IdentityInstance gen_thm55(const std::vector<int>& ks, const std::vector<int>& ms);

// Integral = series: 2-branch poset against the circled-product value.
// k signed, l positive with l[0] >= 0; the last l entry must be >= 2 unless
// l has depth 1 (label-1 maxima are inadmissible).
IdentityInstance gen_integral_series(const SignedIndex& k, const std::vector<int>& l);

// Path-reversal identity over convergent letters (no dt/t, no dt/(1-t)).
IdentityInstance gen_lemma26(const std::vector<Letter>& letters);

// Integrated parametric star sums; p >= 1, positive index s (may be empty),
// n >= 1, rational t in (0, 3/5].
IdentityInstance gen_lemma33(int p, const SignedIndex& s, int n, const Rational& t);

}  // namespace identities

// Path-reversal pair for a word over convergent letters (module surface for
// the iterated-integral layer).
inline IdentityInstance reversal_identity(const Word& w) {
    return identities::gen_lemma26(w.letters);
}

}  // namespace mzv
