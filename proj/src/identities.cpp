#include "mzv/identities.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "mzv/finite_sums.hpp"
#include "mzv/harmonic.hpp"

namespace mzv::identities {

namespace {

using IV = std::vector<int>;
using RV = std::vector<Rational>;

IV cat(IV a, const IV& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

IV ones_v(int n) {
    return IV(static_cast<size_t>(std::max(n, 0)), 1);
}

RV one_args(int n) {
    return RV(static_cast<size_t>(std::max(n, 0)), Rational(1));
}

RV rcat(RV a, const RV& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// x <> {1}_{q-1} <> y on rational arguments: (x, {1}_{q-1}, y) for q >= 1,
// the single product xy for q = 0.
RV arg_diamond(const Rational& x, int q, const Rational& y) {
    if (q == 0) return {x * y};
    RV out{x};
    for (int i = 1; i < q; ++i) out.push_back(1);
    out.push_back(y);
    return out;
}

int isign(int e) { return e % 2 == 0 ? 1 : -1; }

std::string fmt_iv(const IV& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string fmt_rv(const RV& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_rational(v[i]);
    }
    return s + ")";
}

int sum_range(const IV& v, int count) {
    int s = 0;
    for (int i = 0; i < count; ++i) s += v[static_cast<size_t>(i)];
    return s;
}

// append a box gap + head onto an index under construction
void box_append(IV& seq, int gap, int head) {
    if (gap >= 1) {
        IV ones = ones_v(gap - 1);
        seq.insert(seq.end(), ones.begin(), ones.end());
        seq.push_back(head);
    } else {
        if (seq.empty()) throw std::logic_error("box merge with empty prefix");
        seq.back() += head - 1;
    }
}

}  // namespace

std::vector<int> vee_index(const std::vector<int>& heads, const std::vector<int>& gaps,
                           int trail) {
    if (heads.empty()) return {};
    if (gaps.size() + 1 != heads.size())
        throw std::invalid_argument("vee_index: gap/head arity mismatch");
    IV seq{heads[0]};
    for (size_t i = 1; i < heads.size(); ++i) box_append(seq, gaps[i - 1], heads[i]);
    return cat(seq, ones_v(trail - 1));
}

SignedIndex build_E(int i, const std::vector<int>& p, const std::vector<int>& m,
                    bool primed) {
    // unprimed (m has k+1 entries m_1..m_{k+1}):
    //   E_i = {m_{k+1}+1} [] {1}_{p_k-1} [] ... [] {1}_{p_{i+1}-1} [] {m_{i+1}+1}
    // primed (m has k entries m_1..m_k):
    //   E'_i = {m_k+1} [] {1}_{p_k-1} [] ... [] {1}_{p_{i+1}-1} [] {m_i+1}
    const int k = static_cast<int>(p.size());
    if (i < 1 || i > k) throw std::invalid_argument("build_E: i out of range");
    auto mval = [&](int j) { return m[static_cast<size_t>(j - 1)]; };  // m_j, 1-based
    int top = primed ? k : k + 1;
    int bottom = primed ? i : i + 1;
    IV seq{mval(top) + 1};
    // unprimed: the gap before {m_j+1} is p_j; primed: it is p_{j+1}
    for (int j = top - 1; j >= bottom; --j) {
        int gap = p[static_cast<size_t>(primed ? j : j - 1)];
        box_append(seq, gap, mval(j) + 1);
    }
    return SignedIndex(seq);
}

PinnedIndex build_F(int i, const std::vector<int>& p, const std::vector<int>& m,
                    bool primed) {
    // unprimed: F_i = {1}_{p_1-1} [] {m_2+1} [] {1}_{p_2-1} [] ... [] {m_i+1}
    // primed:   F'_i = {1}_{p_1-1} [] {m_1+1} [] ... [] {m_{i-1}+1}
    const int k = static_cast<int>(p.size());
    if (i < 1 || i > k + 1) throw std::invalid_argument("build_F: i out of range");
    auto mval = [&](int t) { return m[static_cast<size_t>(primed ? t : t + 1)]; };
    // numbers m_{lo}..: unprimed uses m_2..m_i (q = i-1 numbers), primed m_1..m_{i-1}
    const int q = i - 1;
    PinnedIndex out;
    if (q == 0) return out;
    IV seq;
    int t = 0;
    // leading zero gaps merge numbers into the pinned head
    while (t < q && p[static_cast<size_t>(t)] == 0) {
        out.pin += mval(t);
        ++t;
    }
    if (t < q) {
        IV lead = ones_v(p[static_cast<size_t>(t)] - 1);
        seq.insert(seq.end(), lead.begin(), lead.end());
        seq.push_back(mval(t) + 1);
        ++t;
        for (; t < q; ++t) box_append(seq, p[static_cast<size_t>(t)], mval(t) + 1);
    }
    out.idx = SignedIndex(seq);
    return out;
}

IdentityInstance gen_bbb(int casenum, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("parameters must be nonnegative");
    auto z = [](const IV& parts) { return make_mzv(SignedIndex(parts)); };
    IdentityInstance out;
    out.family = "BBB-4." + std::to_string(casenum);
    out.params = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
    const IV M = ones_v(m), N = ones_v(n);
    switch (casenum) {
        case 1:
            out.lhs = z(cat(cat(cat({-1}, M), {2}), N));
            out.rhs = z(cat(cat(cat({-1}, N), {-1, -1}), M)) -
                      z(cat({-1}, ones_v(m + n + 2)));
            break;
        case 2:
            out.lhs = z(cat(cat(cat({-1, -1}, M), {2}), N));
            out.rhs = z(cat(cat(cat({-1, -1}, N), {-1, -1}), M)) -
                      z(cat({-1, -1}, ones_v(m + n + 2))) +
                      z(cat({-1, -1}, M)) * z({n + 2});
            break;
        case 3:
            out.lhs = z(cat(cat(cat({-1}, M), {2, 2}), N));
            out.rhs = z(cat(cat(cat({-1}, N), {-1, -1, -1, -1}), M)) +
                      z(cat({-1}, ones_v(m + n + 4))) -
                      z(cat(cat(cat({-1}, ones_v(n + 2)), {-1, -1}), M)) -
                      z(cat(cat(cat({-1}, N), {-1, -1}), ones_v(m + 2)));
            break;
        case 4:
            out.lhs = z(cat(cat(cat({-1, -1}, M), {2, 2}), N));
            out.rhs = z(cat(cat(cat({-1, -1}, N), {-1, -1, -1, -1}), M)) +
                      z(cat({-1, -1}, ones_v(m + n + 4))) -
                      z(cat(cat(cat({-1, -1}, ones_v(n + 2)), {-1, -1}), M)) -
                      z(cat(cat(cat({-1, -1}, N), {-1, -1}), ones_v(m + 2))) +
                      z(cat(cat({-1, -1}, M), {2})) * z({n + 2}) -
                      z(cat({-1, -1}, M)) * (z({n + 4}) + z({2, n + 2}));
            break;
        default:
            throw std::invalid_argument("case out of range");
    }
    return out;
}

IdentityInstance gen_substring_sum(int which, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("parameters must be nonnegative");
    if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
    auto z = [](const IV& parts) { return make_mzv(SignedIndex(parts)); };
    IdentityInstance out;
    out.family = which == 1 ? "A1" : "A2";
    out.params = "m=" + std::to_string(m) + ",n=" + std::to_string(n);

    Expression sum;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        IV sigma(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) sigma[static_cast<size_t>(j)] = (mask >> j) & 1 ? -1 : 1;
        // parity weight: product of signs at positions m, m-2, ...
        int eps = 1;
        for (int pos = m; pos >= 1; pos -= 2) eps *= sigma[static_cast<size_t>(pos - 1)];
        IV head = which == 1 ? IV{-1} : IV{-1, -1};
        sum += z(cat(cat(head, ones_v(n)), sigma)).scaled(eps);
    }
    sum = sum.scaled(isign(m));

    if (which == 1) {
        out.lhs = z(cat({-(m + 1)}, ones_v(n)));
        out.rhs = sum;
    } else {
        out.lhs = z(cat({-1, -(m + 1)}, ones_v(n)));
        Expression corr;
        for (int p = 1; p <= m; ++p)
            corr += (z(cat({m - p + 2}, ones_v(n))) * z({-p})).scaled(isign(p));
        out.rhs = sum - corr;
        out.note =
            "zeta(bar p) read as -eta(p) (so zeta(bar 1) = -log 2); a systematic "
            "failure here would indicate the opposite convention";
    }
    return out;
}

IdentityInstance gen_thm22(const std::vector<int>& ms, const std::vector<int>& ps,
                           const Rational& a) {
    const int k = static_cast<int>(ps.size());
    if (static_cast<int>(ms.size()) != k + 1)
        throw std::invalid_argument("need k+1 m-entries and k p-entries");
    if (ms[0] < 0) throw std::invalid_argument("m_1 must be >= 0");
    for (int j = 1; j <= k; ++j)
        if (ms[static_cast<size_t>(j)] < 1) throw std::invalid_argument("m_j >= 1 for j >= 2");
    for (int x : ps)
        if (x < 0) throw std::invalid_argument("p_i >= 0");
    if (a == 0 || a >= 1 || a < -1) throw std::invalid_argument("a in [-1,0)u(0,1)");

    IdentityInstance out;
    out.family = "THM-2.2";
    out.params = "m=" + fmt_iv(ms) + ",p=" + fmt_iv(ps) + ",a=" + format_rational(a);

    // LHS: Li_{{1}_{m1}, p1+1, {1}_{m2-1}, ...}(a)
    IV lidx = ones_v(ms[0]);
    for (int i = 0; i < k; ++i) {
        lidx.push_back(ps[static_cast<size_t>(i)] + 1);
        lidx = cat(lidx, ones_v(ms[static_cast<size_t>(i + 1)] - 1));
    }
    RV largs{a};
    for (size_t i = 1; i < lidx.size(); ++i) largs.push_back(1);
    out.lhs = make_li(lidx, largs);

    // RHS: sum over sigma in {1,a}^P with reverse-ordered blocks.
    const int P = sum_range(ps, k);
    // reverse partial sums: Pk[i] = p_{k+1-i} + ... + p_k  (1-based i)
    IV Pk(static_cast<size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i)
        Pk[static_cast<size_t>(i)] =
            Pk[static_cast<size_t>(i - 1)] + ps[static_cast<size_t>(k - i)];

    Expression rhs;
    for (unsigned mask = 0; mask < (1u << P); ++mask) {
        RV sigma(static_cast<size_t>(P));
        int acount = 0;
        for (int j = 0; j < P; ++j) {
            bool is_a = (mask >> j) & 1;
            sigma[static_cast<size_t>(j)] = is_a ? a : Rational(1);
            if (is_a) ++acount;
        }
        auto sig = [&](int j) { return sigma[static_cast<size_t>(j - 1)]; };  // 1-based
        RV args{a};
        args = rcat(args, one_args(ms[static_cast<size_t>(k)] - 1));
        for (int i = 1; i <= k; ++i) {
            const int pp = ps[static_cast<size_t>(k - i)];  // p_{k+1-i}
            const int lo = Pk[static_cast<size_t>(i - 1)] + 1, hi = Pk[static_cast<size_t>(i)];
            const bool last_block = (i == k);
            const bool collapse = last_block && ms[0] == 0;
            RV block;
            if (pp == 0) {
                if (!collapse) block.push_back(1);
            } else {
                block.push_back(sig(lo) / a);
                for (int j = lo + 1; j <= hi; ++j) block.push_back(sig(j) / sig(j - 1));
                if (!collapse) block.push_back(a / sig(hi));
            }
            args = rcat(args, block);
            int trailing = last_block ? ms[0] - 1 : ms[static_cast<size_t>(k - i)] - 1;
            args = rcat(args, one_args(trailing));
        }
        rhs += make_li(ones_v(static_cast<int>(args.size())), args)
                   .scaled(Rational(isign(acount)));
    }
    out.rhs = rhs;
    return out;
}

IdentityInstance gen_thm23(const std::vector<int>& ms, const std::vector<int>& ps,
                           const std::vector<Rational>& as) {
    const int k = static_cast<int>(ps.size());
    if (static_cast<int>(ms.size()) != k + 1 || static_cast<int>(as.size()) != k + 1)
        throw std::invalid_argument("need k+1 m-entries/arguments and k p-entries");
    if (ms[0] < 0) throw std::invalid_argument("m_1 must be >= 0");
    for (const Rational& a : as)
        if (a == 0 || a > Rational(1, 2) || a < -1)
            throw std::invalid_argument("arguments must lie in [-1,1/2] \\ {0}");

    IdentityInstance out;
    out.family = "THM-2.3";
    out.params = "m=" + fmt_iv(ms) + ",p=" + fmt_iv(ps) + ",a=" + fmt_rv(as);

    auto A = [&](int j) { return as[static_cast<size_t>(j - 1)]; };  // 1-based a_j
    const int msum = sum_range(ms, k + 1);

    // LHS
    IV lidx = ones_v(ms[0]);
    for (int i = 0; i < k; ++i) {
        lidx.push_back(ps[static_cast<size_t>(i)] + 1);
        lidx = cat(lidx, ones_v(ms[static_cast<size_t>(i + 1)] - 1));
    }
    RV largs = arg_diamond(A(1), ms[0], A(2) / A(1));
    if (ms[0] == 0) largs = {A(2)};  // a1 * (a2/a1)
    largs = rcat(largs, one_args(ms[1] - 1));
    for (int i = 2; i <= k; ++i) {
        largs.push_back(A(i + 1) / A(i));
        largs = rcat(largs, one_args(ms[static_cast<size_t>(i)] - 1));
    }
    out.lhs = make_li(lidx, largs);

    // RHS
    RV rargs{A(k + 1) / (A(k + 1) - 1)};
    for (int i = 1; i <= k; ++i) {
        const int mi = ms[static_cast<size_t>(k + 1 - i)];  // m_{k+2-i}
        rargs = rcat(rargs, one_args(mi - 1));
        const Rational x = (A(k + 2 - i) - 1) / A(k + 2 - i);
        const Rational y = A(k + 1 - i) / (A(k + 1 - i) - 1);
        const int pp = ps[static_cast<size_t>(k - i)];  // p_{k+1-i}
        const bool collapse = (i == k) && ms[0] == 0;
        if (!collapse) {
            rargs = rcat(rargs, arg_diamond(x, pp, y));
        } else if (pp >= 1) {
            rargs.push_back(x);
            rargs = rcat(rargs, one_args(pp - 1));
        }
    }
    if (ms[0] >= 1) rargs = rcat(rargs, one_args(ms[0] - 1));
    out.rhs = make_li(ones_v(static_cast<int>(rargs.size())), rargs).scaled(isign(msum));
    return out;
}

IdentityInstance gen_b4(const std::vector<int>& ms, const std::vector<int>& ps) {
    const int k = static_cast<int>(ps.size());
    if (static_cast<int>(ms.size()) != k + 1)
        throw std::invalid_argument("need k+1 m-entries and k p-entries");
    IdentityInstance out;
    out.family = "B4";
    out.params = "m=" + fmt_iv(ms) + ",p=" + fmt_iv(ps);

    IV lidx = ones_v(ms[0]);
    for (int i = 0; i < k; ++i) {
        lidx.push_back(ps[static_cast<size_t>(i)] + 1);
        lidx = cat(lidx, ones_v(ms[static_cast<size_t>(i + 1)] - 1));
    }
    RV largs{Rational(1, 2)};
    for (size_t i = 1; i < lidx.size(); ++i) largs.push_back(1);
    out.lhs = make_li(lidx, largs);

    IV ridx{-1};
    ridx = cat(ridx, ones_v(ms[static_cast<size_t>(k)] - 1));
    for (int i = k; i >= 1; --i) {
        const int pp = ps[static_cast<size_t>(i - 1)];
        const bool collapse = (i == 1) && ms[0] == 0;
        if (!collapse) {
            ridx = cat(ridx, diamond_join(-1, pp, -1));
            ridx = cat(ridx, ones_v(i == 1 ? ms[0] - 1 : ms[static_cast<size_t>(i - 1)] - 1));
        } else if (pp >= 1) {
            ridx.push_back(-1);
            ridx = cat(ridx, ones_v(pp - 1));
        }
    }
    out.rhs = make_mzv(SignedIndex(ridx)).scaled(isign(sum_range(ms, k + 1)));
    return out;
}

IdentityInstance gen_b8(int variant, int m1, int m2, const Rational& a) {
    if (m1 < 0 || m2 < 1) throw std::invalid_argument("need m1 >= 0, m2 >= 1");
    if (a == 0 || a > Rational(1, 2) || a < -1)
        throw std::invalid_argument("a must lie in [-1,1/2] \\ {0}");
    IdentityInstance out;
    out.family = variant == 1 ? "B8-1" : "B8-2";
    out.params = "m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2) +
                 ",a=" + format_rational(a);

    if (variant == 1) {
        IV lidx = cat(cat(ones_v(m1), {2}), ones_v(m2 - 1));
        RV largs{a};
        for (size_t i = 1; i < lidx.size(); ++i) largs.push_back(1);
        out.lhs = make_li(lidx, largs);
        Expression rhs;
        for (int j = 0; j <= m1; ++j) {
            IV idx = cat({2}, ones_v(m1 + m2 - j - 1));
            RV args{a};
            for (size_t i = 1; i < idx.size(); ++i) args.push_back(1);
            rhs += (make_log_pow(1 - a, j) * make_li(idx, args))
                       .scaled(Rational(binomial_l(m1 + m2 - j, m2)));
        }
        out.rhs = rhs.scaled(isign(m1));
        return out;
    }
    if (variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    if (abs(a) > Rational(1, 2))
        throw std::invalid_argument("variant 2 needs |a| <= 1/2");
    // LHS: unit polylog at (a, {1}_{m1-1}, -1, -1, {1}_{m2-1})
    RV largs{a};
    largs = rcat(largs, one_args(m1 - 1));
    largs.push_back(-1);
    largs.push_back(-1);
    largs = rcat(largs, one_args(m2 - 1));
    if (m1 == 0) {
        // leading block collapses: (a * 1 ... ) -- keep depth consistent
        largs = RV{-a, Rational(-1)};
        largs = rcat(largs, one_args(m2 - 1));
    }
    out.lhs = make_li(ones_v(static_cast<int>(largs.size())), largs);
    // RHS: sum_i (-1)^(m1+1) C(q_i, m2) a^(q_i+1) log^i(1-a)/i! I(w_{-a} w_a^{q_i})
    Expression rhs;
    for (int i = 0; i <= m1; ++i) {
        const int q = m1 - i + m2;
        std::vector<Letter> letters{Letter{-a}};
        for (int j = 0; j < q; ++j) letters.push_back(Letter{a});
        Expression w = make_word(Word(letters));
        Rational coef = Rational(binomial_l(q, m2)) * rat_pow(a, q + 1) * isign(m1 + 1);
        rhs += (make_log_pow(1 - a, i) * w).scaled(coef);
    }
    out.rhs = rhs;
    return out;
}

namespace {

// shared index pieces for the reversal families: ascending/descending runs
// [p_j+1] {1}_{m_{j+1}-1} [p_{j+1}+1] ... and [p_j+1] {1}_{m_j-1} ...
IV run_up(const IV& ms, const IV& ps, int j) {
    const int k = static_cast<int>(ps.size());
    IV out;
    for (int t = j; t <= k; ++t) {
        out.push_back(ps[static_cast<size_t>(t - 1)] + 1);
        out = cat(out, ones_v(ms[static_cast<size_t>(t)] - 1));
    }
    return out;
}

IV run_down(const IV& ms, const IV& ps, int j) {
    IV out;
    for (int t = j; t >= 1; --t) {
        out.push_back(ps[static_cast<size_t>(t - 1)] + 1);
        out = cat(out, ones_v(ms[static_cast<size_t>(t - 1)] - 1));
    }
    return out;
}

}  // namespace

IdentityInstance gen_thm24(const std::vector<int>& ms, const std::vector<int>& ps,
                           const std::vector<Rational>& as) {
    const int k = static_cast<int>(ps.size());
    if (static_cast<int>(ms.size()) != k + 1 || static_cast<int>(as.size()) != k + 1)
        throw std::invalid_argument("need k+1 m-entries/arguments and k p-entries");
    for (int x : ms)
        if (x < 1) throw std::invalid_argument("m_j >= 1");
    for (int x : ps)
        if (x < 1)
            throw std::invalid_argument("reversal family needs p_i >= 1");
    for (const Rational& a : as)
        if (a == 0 || a > Rational(1, 2) || a < -1)
            throw std::invalid_argument("arguments must lie in [-1,1/2] \\ {0}");

    IdentityInstance out;
    out.family = "THM-2.4";
    out.params = "m=" + fmt_iv(ms) + ",p=" + fmt_iv(ps) + ",a=" + fmt_rv(as);

    auto A = [&](int j) { return as[static_cast<size_t>(j - 1)]; };
    auto M = [&](int j) { return ms[static_cast<size_t>(j - 1)]; };
    const int psum = sum_range(ps, k);
    auto psum_to = [&](int j) { return sum_range(ps, j); };
    auto msum_to = [&](int j) { return sum_range(ms, j); };

    // reversed m/p views for the "B" side
    IV mrev(ms.rbegin(), ms.rend());
    IV prev_(ps.rbegin(), ps.rend());

    if (k == 1) {
        Expression lhs;
        for (int i = 0; i <= M(1); ++i) {
            IV idx = cat(cat(ones_v(M(1) - i), {ps[0] + 1}), ones_v(M(2) - 1));
            RV args = arg_diamond(A(1), M(1) - i, A(2) / A(1));
            args = rcat(args, one_args(M(2) - 1));
            lhs += make_log_pow(1 - A(1), i) * make_li(idx, args);
        }
        Expression lhs2;
        for (int i = 0; i <= M(2); ++i) {
            IV idx = cat(cat(ones_v(M(2) - i), {ps[0] + 1}), ones_v(M(1) - 1));
            RV args = arg_diamond(A(2), M(2) - i, A(1) / A(2));
            args = rcat(args, one_args(M(1) - 1));
            lhs2 += make_log_pow(1 - A(2), i) * make_li(idx, args);
        }
        out.lhs = lhs + lhs2.scaled(isign(ps[0] + M(1) + M(2)));
        Expression rhs;
        for (int i = 1; i <= ps[0] - 1; ++i) {
            IV ia = cat({i + 1}, ones_v(M(1) - 1));
            IV ib = cat({ps[0] - i + 1}, ones_v(M(2) - 1));
            RV aa{A(1)};
            for (size_t t = 1; t < ia.size(); ++t) aa.push_back(1);
            RV ab{A(2)};
            for (size_t t = 1; t < ib.size(); ++t) ab.push_back(1);
            rhs += (make_li(ia, aa) * make_li(ib, ab)).scaled(isign(i - 1));
        }
        out.rhs = rhs.scaled(isign(M(1)));
        return out;
    }

    // k >= 2: argument builders
    auto args_A = [&](int i) {
        RV v = arg_diamond(A(1), M(1) - i, A(2) / A(1));
        v = rcat(v, one_args(M(2) - 1));
        for (int j = 2; j <= k; ++j) {
            v.push_back(A(j + 1) / A(j));
            v = rcat(v, one_args(M(j + 1) - 1));
        }
        return v;
    };
    auto args_B = [&](int i) {
        RV v = arg_diamond(A(k + 1), M(k + 1) - i, A(k) / A(k + 1));
        v = rcat(v, one_args(M(k) - 1));
        for (int j = 2; j <= k; ++j) {
            v.push_back(A(k + 1 - j) / A(k + 2 - j));
            v = rcat(v, one_args(M(k + 1 - j) - 1));
        }
        return v;
    };
    auto args_C = [&](int j) {
        RV v{A(j)};
        v = rcat(v, one_args(M(j) - 1));
        for (int l = 1; l <= j - 1; ++l) {
            v.push_back(A(j - l) / A(j + 1 - l));
            v = rcat(v, one_args(M(j - l) - 1));
        }
        return v;
    };
    auto args_D = [&](int j) {
        RV v{A(j + 1)};
        v = rcat(v, one_args(M(j + 1) - 1));
        for (int l = j; l <= k - 1; ++l) {
            v.push_back(A(l + 2) / A(l + 1));
            v = rcat(v, one_args(M(l + 2) - 1));
        }
        return v;
    };
    auto args_Cp = [&](int j, int i) {  // C'_j with {1}_{i-1}
        RV v{A(j)};
        v = rcat(v, one_args(i - 1));
        for (int l = 1; l <= j - 1; ++l) {
            v.push_back(A(j - l) / A(j + 1 - l));
            v = rcat(v, one_args(M(j - l) - 1));
        }
        return v;
    };
    auto args_Dp = [&](int j, int i) {  // D'_j with {1}_{m_{j+1}-i-1}
        RV v{A(j + 1)};
        v = rcat(v, one_args(M(j + 1) - i - 1));
        for (int l = j; l <= k - 1; ++l) {
            v.push_back(A(l + 2) / A(l + 1));
            v = rcat(v, one_args(M(l + 2) - 1));
        }
        return v;
    };

    Expression lhs;
    for (int i = 0; i <= M(1); ++i) {
        IV idx = cat(ones_v(M(1) - i), run_up(ms, ps, 1));
        lhs += make_log_pow(1 - A(1), i) * make_li(idx, args_A(i));
    }
    {
        Expression t2;
        for (int i = 0; i <= M(k + 1); ++i) {
            IV idx = cat(ones_v(M(k + 1) - i), run_up(mrev, prev_, 1));
            t2 += make_log_pow(1 - A(k + 1), i) * make_li(idx, args_B(i));
        }
        lhs += t2.scaled(isign(psum + msum_to(k + 1)));
    }
    out.lhs = lhs;

    Expression rhs;
    for (int j = 2; j <= k - 1; ++j) {
        Expression s;
        for (int i = 0; i <= ps[static_cast<size_t>(j - 1)]; ++i) {
            IV ic = cat(cat({i + 1}, ones_v(M(j) - 1)), run_down(ms, ps, j - 1));
            IV id = cat(cat({ps[static_cast<size_t>(j - 1)] - i + 1}, ones_v(M(j + 1) - 1)),
                        run_up(ms, ps, j + 1));
            s += (make_li(ic, args_C(j)) * make_li(id, args_D(j))).scaled(isign(i));
        }
        rhs += s.scaled(isign(psum_to(j - 1) + msum_to(j) - 1));
    }
    for (int j = 1; j <= k - 1; ++j) {
        Expression s;
        for (int i = 1; i <= M(j + 1) - 1; ++i) {
            IV ic = cat(ones_v(i), run_down(ms, ps, j));
            IV id = cat(ones_v(M(j + 1) - i), run_up(ms, ps, j + 1));
            s += (make_li(ic, args_Cp(j + 1, i)) * make_li(id, args_Dp(j, i)))
                     .scaled(isign(i - 1));
        }
        rhs += s.scaled(isign(psum_to(j) + msum_to(j)));
    }
    {
        Expression s;
        for (int i = 1; i <= ps[0]; ++i) {
            IV ic = cat({i + 1}, ones_v(M(1) - 1));
            IV id = cat(cat({ps[0] - i + 1}, ones_v(M(2) - 1)), run_up(ms, ps, 2));
            s += (make_li(ic, args_C(1)) * make_li(id, args_D(1))).scaled(isign(i - 1));
        }
        rhs += s.scaled(isign(M(1)));
    }
    {
        Expression s;
        for (int i = 1; i <= ps[static_cast<size_t>(k - 1)]; ++i) {
            IV ic = cat(cat({ps[static_cast<size_t>(k - 1)] - i + 1}, ones_v(M(k) - 1)),
                        run_down(ms, ps, k - 1));
            IV id = cat({i + 1}, ones_v(M(k + 1) - 1));
            s += (make_li(ic, args_C(k)) * make_li(id, args_D(k))).scaled(isign(i - 1));
        }
        rhs += s.scaled(isign(psum + msum_to(k)));
    }
    out.rhs = rhs;
    return out;
}

IdentityInstance gen_thm31(const std::vector<int>& ms, const std::vector<int>& ps) {
    const int k = static_cast<int>(ps.size());
    if (static_cast<int>(ms.size()) != k + 1)
        throw std::invalid_argument("need k+1 m-entries and k p-entries");
    for (int x : ms)
        if (x < 1) throw std::invalid_argument("m_j >= 1");
    for (int x : ps)
        if (x < 1) throw std::invalid_argument("reversal family needs p_i >= 1");

    IdentityInstance out;
    out.family = "THM-3.1";
    out.params = "m=" + fmt_iv(ms) + ",p=" + fmt_iv(ps);

    auto z = [](const IV& parts) { return make_mzv(SignedIndex(parts)); };
    auto lg = [](int i) { return make_log_pow(Rational(2), i); };
    auto M = [&](int j) { return ms[static_cast<size_t>(j - 1)]; };
    const int psum = sum_range(ps, k);
    auto psum_to = [&](int j) { return sum_range(ps, j); };
    auto msum_to = [&](int j) { return sum_range(ms, j); };
    IV mrev(ms.rbegin(), ms.rend());
    IV prev_(ps.rbegin(), ps.rend());

    if (k == 1) {
        Expression lhs;
        for (int i = 0; i <= M(1) - 1; ++i)
            lhs += lg(i) * z(cat(cat(cat({-1}, ones_v(M(1) - i - 1)), {ps[0] + 1}),
                                 ones_v(M(2) - 1)));
        lhs += lg(M(1)) * z(cat({-(ps[0] + 1)}, ones_v(M(2) - 1)));
        Expression lhs2;
        for (int i = 0; i <= M(2) - 1; ++i)
            lhs2 += lg(i) * z(cat(cat(cat({-1}, ones_v(M(2) - i - 1)), {ps[0] + 1}),
                                  ones_v(M(1) - 1)));
        lhs2 += lg(M(2)) * z(cat({-(ps[0] + 1)}, ones_v(M(1) - 1)));
        out.lhs = lhs + lhs2.scaled(isign(ps[0] + M(1) + M(2)));
        Expression rhs;
        for (int i = 1; i <= ps[0] - 1; ++i)
            rhs += (z(cat({-(i + 1)}, ones_v(M(1) - 1))) *
                    z(cat({-(ps[0] - i + 1)}, ones_v(M(2) - 1))))
                       .scaled(isign(i - 1));
        out.rhs = rhs.scaled(isign(M(1)));
        return out;
    }

    Expression lhs;
    for (int i = 0; i <= M(1) - 1; ++i)
        lhs += lg(i) * z(cat(cat({-1}, ones_v(M(1) - i - 1)), run_up(ms, ps, 1)));
    {
        Expression t2;
        for (int i = 0; i <= M(k + 1) - 1; ++i)
            t2 += lg(i) * z(cat(cat({-1}, ones_v(M(k + 1) - i - 1)), run_up(mrev, prev_, 1)));
        lhs += t2.scaled(isign(psum + msum_to(k + 1)));
    }
    {
        IV idx = cat(cat({-(ps[0] + 1)}, ones_v(M(2) - 1)), run_up(ms, ps, 2));
        lhs += lg(M(1)) * z(idx);
        IV idx2 = cat(cat({-(ps[static_cast<size_t>(k - 1)] + 1)}, ones_v(M(k) - 1)),
                      run_down(ms, ps, k - 1));
        lhs += (lg(M(k + 1)) * z(idx2)).scaled(isign(psum + msum_to(k + 1)));
    }
    out.lhs = lhs;

    Expression rhs;
    for (int j = 2; j <= k - 1; ++j) {
        Expression s;
        for (int i = 0; i <= ps[static_cast<size_t>(j - 1)]; ++i) {
            IV ic = cat(cat({-(i + 1)}, ones_v(M(j) - 1)), run_down(ms, ps, j - 1));
            IV id = cat(cat({-(ps[static_cast<size_t>(j - 1)] - i + 1)}, ones_v(M(j + 1) - 1)),
                        run_up(ms, ps, j + 1));
            s += (z(ic) * z(id)).scaled(isign(i));
        }
        rhs += s.scaled(isign(psum_to(j - 1) + msum_to(j) - 1));
    }
    for (int j = 1; j <= k - 1; ++j) {
        Expression s;
        for (int i = 1; i <= M(j + 1) - 1; ++i) {
            IV ic = cat(cat({-1}, ones_v(i - 1)), run_down(ms, ps, j));
            IV id = cat(cat({-1}, ones_v(M(j + 1) - i - 1)), run_up(ms, ps, j + 1));
            s += (z(ic) * z(id)).scaled(isign(i - 1));
        }
        rhs += s.scaled(isign(psum_to(j) + msum_to(j)));
    }
    {
        Expression s;
        for (int i = 1; i <= ps[0]; ++i) {
            IV ia = cat(cat({-(ps[0] - i + 1)}, ones_v(M(2) - 1)), run_up(ms, ps, 2));
            IV ib = cat({-(i + 1)}, ones_v(M(1) - 1));
            s += (z(ia) * z(ib)).scaled(isign(i - 1));
        }
        rhs += s.scaled(isign(M(1)));
    }
    {
        Expression s;
        for (int i = 1; i <= ps[static_cast<size_t>(k - 1)]; ++i) {
            IV ia = cat(cat({-(ps[static_cast<size_t>(k - 1)] - i + 1)}, ones_v(M(k) - 1)),
                        run_down(ms, ps, k - 1));
            IV ib = cat({-(i + 1)}, ones_v(M(k + 1) - 1));
            s += (z(ia) * z(ib)).scaled(isign(i - 1));
        }
        rhs += s.scaled(isign(psum + msum_to(k)));
    }
    out.rhs = rhs;
    return out;
}

IdentityInstance gen_cor32(const std::vector<int>& ps) {
    const int k = static_cast<int>(ps.size());
    if (k < 1) throw std::invalid_argument("need at least one p");
    for (int x : ps)
        if (x < 1) throw std::invalid_argument("reversal family needs p_i >= 1");
    IdentityInstance out;
    out.family = "COR-3.2";
    out.params = "p=" + fmt_iv(ps);
    auto z = [](const IV& parts) { return make_mzv(SignedIndex(parts)); };
    auto P = [&](int j) { return ps[static_cast<size_t>(j - 1)]; };
    const int psum = sum_range(ps, k);
    auto psum_to = [&](int j) { return sum_range(ps, j); };
    Expression log2e = make_log_pow(Rational(2), 1);

    if (k == 1) {
        int c = 1 + isign(P(1));
        out.lhs = (z({-1, P(1) + 1}) + log2e * z({-(P(1) + 1)})).scaled(Rational(c));
        Expression rhs;
        for (int i = 1; i <= P(1) - 1; ++i)
            rhs += (z({-(i + 1)}) * z({-(P(1) - i + 1)})).scaled(isign(i));
        out.rhs = rhs;
        return out;
    }

    auto up = [&](int j) {  // p_j+1, ..., p_k+1
        IV v;
        for (int t = j; t <= k; ++t) v.push_back(P(t) + 1);
        return v;
    };
    auto down = [&](int j) {  // p_j+1, ..., p_1+1
        IV v;
        for (int t = j; t >= 1; --t) v.push_back(P(t) + 1);
        return v;
    };
    const int s = isign(psum + k - 1);
    out.lhs = z(cat({-1}, up(1))) + z(cat({-1}, down(k))).scaled(s) +
              log2e * z(cat({-(P(1) + 1)}, up(2))) +
              (log2e * z(cat({-(P(k) + 1)}, down(k - 1)))).scaled(s);
    Expression rhs;
    for (int j = 2; j <= k - 1; ++j) {
        Expression t;
        for (int i = 0; i <= P(j); ++i)
            t += (z(cat({-(i + 1)}, down(j - 1))) * z(cat({-(P(j) - i + 1)}, up(j + 1))))
                     .scaled(isign(i));
        rhs += t.scaled(isign(psum_to(j - 1) + j - 1));
    }
    for (int i = 1; i <= P(1); ++i)
        rhs += (z({-(i + 1)}) * z(cat({-(P(1) - i + 1)}, up(2)))).scaled(-isign(i - 1));
    for (int i = 1; i <= P(k); ++i)
        rhs += (z({-(i + 1)}) * z(cat({-(P(k) - i + 1)}, down(k - 1))))
                   .scaled(isign(psum + k + i - 1));
    out.rhs = rhs;
    return out;
}

IdentityInstance gen_thm34(const std::vector<int>& ms, const std::vector<int>& ps) {
    const int k = static_cast<int>(ps.size());
    if (static_cast<int>(ms.size()) != k + 1)
        throw std::invalid_argument("need k+1 m-entries and k p-entries");
    for (int x : ms)
        if (x < 1) throw std::invalid_argument("m_j >= 1");
    for (int x : ps)
        if (x < 0) throw std::invalid_argument("p_i >= 0");
    IdentityInstance out = gen_thm51(IV(static_cast<size_t>(ms[0]), 0),
                                     IV(ms.begin() + 1, ms.end()), ps);
    out.family = "THM-3.4";
    out.params = "m=" + fmt_iv(ms) + ",p=" + fmt_iv(ps);
    return out;
}

IdentityInstance gen_thm51(const std::vector<int>& ks, const std::vector<int>& ms,
                           const std::vector<int>& ps) {
    const int r = static_cast<int>(ks.size());
    const int k = static_cast<int>(ps.size());
    if (r < 1 || k < 1) throw std::invalid_argument("need r >= 1 and k >= 1");
    if (static_cast<int>(ms.size()) != k)
        throw std::invalid_argument("need k entries m_2..m_{k+1}");
    for (int x : ks)
        if (x < 0) throw std::invalid_argument("k_i >= 0");
    for (int x : ms)
        if (x < 1) throw std::invalid_argument("m_j >= 1");
    for (int x : ps)
        if (x < 0) throw std::invalid_argument("p_i >= 0");

    IdentityInstance out;
    out.family = "THM-5.1";
    out.params = "k=" + fmt_iv(ks) + ",m=" + fmt_iv(ms) + ",p=" + fmt_iv(ps);

    auto M = [&](int j) { return ms[static_cast<size_t>(j - 2)]; };  // m_j, j = 2..k+1

    // LHS index
    IV lidx{-1};
    for (int j = 1; j <= r - 1; ++j)
        lidx = cat(lidx, diamond_join(-1, ks[static_cast<size_t>(j - 1)], -1));
    lidx = cat(lidx, diamond_join(-1, ks[static_cast<size_t>(r - 1)], ps[0] + 1));
    for (int j = 2; j <= k; ++j) {
        lidx = cat(lidx, ones_v(M(j) - 1));
        lidx.push_back(ps[static_cast<size_t>(j - 1)] + 1);
    }
    lidx = cat(lidx, ones_v(M(k + 1) - 1));
    out.lhs = make_mzv(SignedIndex(lidx)).scaled(isign(r));

    // RHS: series atoms with u = (k_{r-1}+1, ..., k_1+1), head k_r+1.
    IV uparts;
    for (int j = r - 1; j >= 1; --j) uparts.push_back(ks[static_cast<size_t>(j - 1)] + 1);
    const SignedIndex u{uparts};
    const int head = ks[static_cast<size_t>(r - 1)] + 1;
    // m-vector in the E/F builders is 1-based m_1..m_{k+1}; m_1 unused
    IV mfull = cat({1}, ms);

    auto series = [&](const PinnedIndex& F, int extra_ones) {
        SignedIndex v = concat(F.idx, SignedIndex(ones_v(extra_ones)));
        return make_ky_series(head + F.pin, 1, u, v, Rational(1, 2));
    };

    Expression rhs;
    int psum_before = 0;
    for (int i = 1; i <= k; ++i) {
        PinnedIndex F = build_F(i, ps, mfull, false);
        Expression s;
        for (int j = 1; j <= ps[static_cast<size_t>(i - 1)]; ++j) {
            SignedIndex E = build_E(i, ps, mfull, false);
            IV eidx = cat(E.parts, ones_v(ps[static_cast<size_t>(i - 1)] - j));
            s += (make_mzv(SignedIndex(eidx)) * series(F, j - 1)).scaled(isign(j - 1));
        }
        rhs += s.scaled(isign(psum_before));
        psum_before += ps[static_cast<size_t>(i - 1)];
    }
    rhs += series(build_F(k + 1, ps, mfull, false), 0).scaled(isign(psum_before));
    out.rhs = rhs;
    return out;
}

IdentityInstance gen_thm52(const std::vector<int>& ks, const std::vector<int>& ps,
                           const std::vector<int>& ms) {
    const int r = static_cast<int>(ks.size());
    const int k = static_cast<int>(ps.size());
    if (r < 1 || k < 1) throw std::invalid_argument("need r >= 1 and k >= 1");
    if (static_cast<int>(ms.size()) != k) throw std::invalid_argument("need k m-entries");
    if (ks[static_cast<size_t>(r - 1)] < 1 || ms[static_cast<size_t>(k - 1)] < 1)
        throw std::invalid_argument("k_r >= 1 and m_k >= 1 required");
    for (int x : ks)
        if (x < 0) throw std::invalid_argument("k_i >= 0");
    for (int x : ms)
        if (x < 0) throw std::invalid_argument("m_i >= 0");
    for (int x : ps)
        if (x < 0) throw std::invalid_argument("p_i >= 0");

    IdentityInstance out;
    out.family = "THM-5.2";
    out.params = "k=" + fmt_iv(ks) + ",p=" + fmt_iv(ps) + ",m=" + fmt_iv(ms);

    // LHS: zeta(k^v, (p [] m)^v)
    IV kv = vee_index(IV(static_cast<size_t>(r), 2), IV(ks.begin(), ks.end() - 1),
                      ks[static_cast<size_t>(r - 1)]);
    IV pheads;
    for (int x : ps) pheads.push_back(x + 1);
    IV pmv = vee_index(pheads, IV(ms.begin(), ms.end() - 1), ms[static_cast<size_t>(k - 1)]);
    out.lhs = make_mzv(SignedIndex(cat(kv, pmv)));

    // RHS over circled-product values
    IV kparts;
    for (int j = r; j >= 1; --j) kparts.push_back(ks[static_cast<size_t>(j - 1)] + 1);
    const SignedIndex kidx{kparts};

    auto ky = [&](const PinnedIndex& F, int extra_ones) {
        SignedIndex v = concat(F.idx, SignedIndex(ones_v(extra_ones)));
        return make_ky(kidx, F.pin, 1, v);
    };

    Expression rhs;
    int psum_before = 0;
    for (int i = 1; i <= k; ++i) {
        PinnedIndex F = build_F(i, ps, ms, true);
        Expression s;
        for (int j = 1; j <= ps[static_cast<size_t>(i - 1)]; ++j) {
            SignedIndex E = build_E(i, ps, ms, true);
            IV eidx = cat(E.parts, ones_v(ps[static_cast<size_t>(i - 1)] - j));
            s += (make_mzv(SignedIndex(eidx)) * ky(F, j - 1)).scaled(isign(j - 1));
        }
        rhs += s.scaled(isign(psum_before));
        psum_before += ps[static_cast<size_t>(i - 1)];
    }
    rhs += ky(build_F(k + 1, ps, ms, true), 0).scaled(isign(psum_before));
    out.rhs = rhs;
    return out;
}

std::vector<Rational> invert_lemma54(const std::vector<std::vector<Rational>>& A,
                                     const std::vector<Rational>& C) {
    const int P = static_cast<int>(C.size());
    auto a = [&](int j, int p) -> const Rational& {
        if (j < 1 || p < j || p > P) throw std::invalid_argument("table entry missing");
        const auto& row = A[static_cast<size_t>(j - 1)];
        if (static_cast<int>(row.size()) < p) throw std::invalid_argument("table entry missing");
        return row[static_cast<size_t>(p - 1)];
    };
    for (int p = 1; p <= P; ++p)
        if (a(p, p) != 1) throw std::invalid_argument("diagonal must be 1");

    std::vector<Rational> B(static_cast<size_t>(P));
    for (int p = 1; p <= P; ++p) {
        Rational total = 0;
        for (int j = 1; j <= p; ++j) {
            // sum over chains j = i_0 < ... < i_l = p of (-1)^l prod A
            Rational chains = 0;
            if (j == p) {
                chains = 1;  // empty-chain convention
            } else {
                // enumerate strictly increasing chains from j to p
                std::vector<int> stack{j};
                std::function<void(Rational)> rec = [&](Rational prod) {
                    int last = stack.back();
                    for (int nxt = last + 1; nxt <= p; ++nxt) {
                        Rational np = prod * a(last, nxt);
                        if (nxt == p) {
                            int l = static_cast<int>(stack.size());
                            chains += np * isign(l);
                        } else {
                            stack.push_back(nxt);
                            rec(np);
                            stack.pop_back();
                        }
                    }
                };
                rec(Rational(1));
            }
            total += C[static_cast<size_t>(j - 1)] * chains;
        }
        B[static_cast<size_t>(p - 1)] = total * isign(p + 1);
    }
    return B;
}

IdentityInstance gen_thm55(const std::vector<int>& ks, const std::vector<int>& ms) {
    const int r = static_cast<int>(ks.size());
    const int k = static_cast<int>(ms.size());
    if (r < 1 || k < 1) throw std::invalid_argument("need r >= 1 and k >= 1");
    if (ks[static_cast<size_t>(r - 1)] < 1)
        throw std::invalid_argument("k_r >= 1 required");
    for (int x : ms)
        if (x < 1) throw std::invalid_argument("m_i >= 1");

    IdentityInstance out;
    out.family = "THM-5.5";
    out.params = "k=" + fmt_iv(ks) + ",m=" + fmt_iv(ms);

    IV kparts;
    for (int j = r; j >= 1; --j) kparts.push_back(ks[static_cast<size_t>(j - 1)] + 1);
    IV lparts;
    for (int x : ms) lparts.push_back(x + 1);
    out.lhs = make_ky(SignedIndex(kparts), 0, 1, SignedIndex(lparts));

    IV kv = vee_index(IV(static_cast<size_t>(r), 2), IV(ks.begin(), ks.end() - 1),
                      ks[static_cast<size_t>(r - 1)]);
    auto mzv_chain = [&](int a, int b) {  // zeta(m_{b-1}+1, ..., m_a+1)
        IV v;
        for (int t = b - 1; t >= a; --t) v.push_back(ms[static_cast<size_t>(t - 1)] + 1);
        return make_mzv(SignedIndex(v));
    };

    Expression rhs;
    for (int j = 1; j <= k + 1; ++j) {
        IV mv;
        if (j >= 2)
            mv = vee_index(
                [&] {
                    IV heads;
                    for (int t = 1; t <= j - 1; ++t) heads.push_back(2);
                    return heads;
                }(),
                IV(ms.begin(), ms.begin() + (j - 2)), ms[static_cast<size_t>(j - 2)]);
        Expression cj = make_mzv(SignedIndex(cat(kv, mv)));
        Expression w;
        if (j == k + 1) {
            w = Expression::constant(1);
        } else {
            // sum over chains j = i_0 < ... < i_l = k+1, weight (-1)^l
            std::vector<int> stack{j};
            std::function<void(Expression)> rec = [&](Expression prod) {
                int last = stack.back();
                for (int nxt = last + 1; nxt <= k + 1; ++nxt) {
                    Expression np = prod * mzv_chain(last, nxt);
                    if (nxt == k + 1) {
                        w += np.scaled(isign(static_cast<int>(stack.size())));
                    } else {
                        stack.push_back(nxt);
                        rec(np);
                        stack.pop_back();
                    }
                }
            };
            rec(Expression::constant(1));
        }
        rhs += cj * w;
    }
    out.rhs = rhs.scaled(isign(k));
    return out;
}

IdentityInstance gen_integral_series(const SignedIndex& k, const std::vector<int>& l) {
    const int r = k.depth();
    const int s = static_cast<int>(l.size());
    if (r < 1 || s < 1) throw std::invalid_argument("need non-empty indices");
    if (l[0] < 0) throw std::invalid_argument("l head >= 0");
    for (int i = 1; i < s; ++i)
        if (l[static_cast<size_t>(i)] < 1) throw std::invalid_argument("l entries >= 1");
    if (s >= 2 && l[static_cast<size_t>(s - 1)] < 2)
        throw std::invalid_argument("last l entry must be >= 2 (label-1 maxima)");
    if (k.exponent(0) + l[0] < 2 && k.sign(0) > 0)
        throw std::invalid_argument("combined head must converge");

    IdentityInstance out;
    out.family = "INT-SER";
    out.params = "k=" + format_index(k) + ",l=" + fmt_iv(l);

    // cumulative sign labels
    std::vector<Rational> alpha_cum(static_cast<size_t>(r));
    Rational prod(1);
    {
        int cum = 1;
        for (int j = 0; j < r; ++j) {
            cum *= k.sign(j);
            alpha_cum[static_cast<size_t>(j)] = cum;
            prod *= cum;
        }
    }

    Poset X;
    int counter = 0;
    auto fresh = [&](const Rational& label) {
        return X.add_node("n" + std::to_string(counter++), label);
    };
    int prev = -1;
    for (int j = r - 1; j >= 0; --j) {
        int base = fresh(alpha_cum[static_cast<size_t>(j)]);
        if (prev >= 0) X.add_cover(prev, base);
        prev = base;
        for (int i = 1; i < k.exponent(j); ++i) {
            int c = fresh(Rational(0));
            X.add_cover(prev, c);
            prev = c;
        }
    }
    for (int i = 0; i < l[0]; ++i) {
        int c = fresh(Rational(0));
        X.add_cover(prev, c);
        prev = c;
    }
    int branch_top = prev;
    for (int b = 1; b < s; ++b) {
        int valley = fresh(Rational(1));
        X.add_cover(valley, branch_top);
        int cur = valley;
        for (int i = 1; i < l[static_cast<size_t>(b)]; ++i) {
            int c = fresh(Rational(0));
            X.add_cover(cur, c);
            cur = c;
        }
        branch_top = cur;
    }
    X.freeze();

    out.lhs = make_poset(X);
    SignedIndex ltail(IV(l.begin() + 1, l.end()));
    out.rhs = make_ky(k, l[0], 1, ltail).scaled(1 / prod);
    return out;
}

IdentityInstance gen_lemma26(const std::vector<Letter>& letters) {
    const int m = static_cast<int>(letters.size());
    if (m < 1) throw std::invalid_argument("need at least one letter");
    for (const Letter& l : letters)
        if (l.a == 0 || l.a == 1)
            throw std::invalid_argument("reversal letters must avoid dt/t and dt/(1-t)");

    IdentityInstance out;
    out.family = "LEM-2.6";
    {
        Word w(letters);
        out.params = "w=" + w.to_string();
    }
    auto word_of = [&](int from, int to, int step) {
        std::vector<Letter> ls;
        for (int i = from; i != to; i += step) ls.push_back(letters[static_cast<size_t>(i)]);
        return make_word(Word(ls));
    };
    Expression fwd = word_of(0, m, 1);
    Expression bwd = word_of(m - 1, -1, -1);
    out.lhs = fwd + bwd.scaled(isign(m));
    Expression rhs;
    for (int i = 1; i <= m - 1; ++i) {
        Expression left = word_of(i - 1, -1, -1);   // f_i, ..., f_1
        Expression right = word_of(i, m, 1);        // f_{i+1}, ..., f_m
        rhs += (left * right).scaled(isign(i - 1));
    }
    out.rhs = rhs;
    return out;
}

IdentityInstance gen_lemma33(int p, const SignedIndex& s, int n, const Rational& t) {
    if (p < 1 || n < 1) throw std::invalid_argument("need p >= 1 and n >= 1");
    for (int j = 0; j < s.depth(); ++j)
        if (s.parts[static_cast<size_t>(j)] < 1)
            throw std::invalid_argument("s must be a positive index");
    if (t <= 0 || t > Rational(3, 5)) throw std::invalid_argument("t in (0, 3/5]");

    IdentityInstance out;
    out.family = "LEM-3.3";
    out.params = "p=" + std::to_string(p) + ",s=(" + format_index(s) +
                 "),n=" + std::to_string(n) + ",t=" + format_rational(t);

    Expression lhs;
    if (s.empty()) {
        lhs = make_ip(p, n, t);
    } else {
        for (int v = 1; v <= n; ++v) {
            Rational w = mhss_pinned(n, s, v);
            if (w != 0) lhs += make_ip(p, v, t).scaled(w);
        }
    }
    out.lhs = lhs;

    Expression rhs;
    for (int j = 1; j <= p; ++j) {
        Rational star = mhss_eval(n, concat(s, SignedIndex(ones_v(j - 1))));
        rhs += make_ip(p - j + 1, 0, t).scaled(star * isign(j - 1));
    }
    Rational pstar = parametric_star_eval(n, concat(s, SignedIndex(ones_v(p))), t);
    rhs += Expression::constant(pstar * isign(p));
    out.rhs = rhs;
    return out;
}

}  // namespace mzv::identities
