#include "mzv/evaluator.hpp"

#include <cmath>
#include <stdexcept>

#include "mzv/harmonic.hpp"

namespace mzv {

namespace {

// Bound on sum over n > N of n^d rho^n, rounded up. Requires the decay to
// dominate: rho (1 + 1/(N+1))^d must stay below 1.
UpperBound tail_geometric(long N, int d, const UpperBound& rho) {
    UpperBound ratio = rho;
    if (d > 0) {
        UpperBound grow(1.0 + 1.0 / static_cast<double>(N + 1));
        ratio = ratio * grow.pow_ui(static_cast<unsigned long>(d));
    }
    if (!ratio.less_than(0.97))
        throw std::runtime_error("geometric tail bound failed (ratio too close to 1)");
    UpperBound b = UpperBound(static_cast<double>(N + 1)).pow_ui(static_cast<unsigned long>(d)) *
                   rho.pow_ui(static_cast<unsigned long>(N + 1));
    // 1 - ratio, rounded down
    mpfr_t den;
    mpfr_init2(den, 64);
    mpfr_ui_sub(den, 1, ratio.raw(), MPFR_RNDD);
    UpperBound out;
    mpfr_div(out.raw(), b.raw(), den, MPFR_RNDU);
    mpfr_clear(den);
    return out;
}

// (1 + ln n) <= 1.55 n^(1/3) for n >= 1, so a coefficient (1+ln n)^U 2^V
// gives tail sum over n > N of coef / n^c <= 1.55^U 2^V N^(U/3-c+1)/(c-U/3-1),
// provided c - U/3 > 1.
UpperBound tail_polynomial(long N, int units, int twos, int c) {
    long num = 3 * (c - 1) - units;  // c - U/3 - 1 > 0  <=>  num > 0
    if (num <= 0) throw std::runtime_error("polynomial tail bound diverges at this cap");
    UpperBound coef = UpperBound(1.55).pow_ui(static_cast<unsigned long>(units)) *
                      UpperBound(2.0).pow_ui(static_cast<unsigned long>(twos));
    UpperBound npow = UpperBound(static_cast<double>(N)).pow_frac(units - 3 * (c - 1), 3);
    UpperBound den;
    mpfr_set_si(den.raw(), num, MPFR_RNDD);
    mpfr_div_ui(den.raw(), den.raw(), 3, MPFR_RNDD);
    return coef * npow / den;
}

struct IndexBoundCounts {
    int units = 0;
    int twos = 0;
};

IndexBoundCounts count_units(const SignedIndex& idx) {
    IndexBoundCounts out;
    for (int j = 0; j < idx.depth(); ++j)
        (idx.exponent(j) == 1 ? out.units : out.twos)++;
    return out;
}

// Strict-sum DP state over BigFloats: value(n) = zeta_n(idx) updated
// incrementally; signs fold in as (-1)^n flips.
class PlainSumState {
public:
    PlainSumState(const SignedIndex& idx, mpfr_prec_t prec)
        : idx_(idx), vals_(idx.depth() + 1, BigFloat(prec)) {
        vals_.back() = BigFloat::from_long(1, prec);
        n_ = 0;
    }

    // advance to n = n_+1; afterwards value() = zeta_n(idx)
    void step() {
        ++n_;
        mpz_class npow;
        for (int j = 0; j < idx_.depth(); ++j) {
            // vals_[j] += sign^n / n^e * vals_prev[j+1]; ascending j uses the
            // not-yet-updated deeper value, which is exactly zeta_{n-1}(tail).
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n_),
                          static_cast<unsigned long>(idx_.exponent(j)));
            BigFloat t = vals_[j + 1].div_by_z(npow);
            if (idx_.sign(j) < 0 && (n_ & 1)) t.negate();
            vals_[j] += t;
        }
    }

    const BigFloat& value() const { return vals_.front(); }

private:
    SignedIndex idx_;
    std::vector<BigFloat> vals_;
    long n_;
};

// Star-sum DP state: value(n) = zetastar_n(idx).
class StarSumState {
public:
    StarSumState(const SignedIndex& idx, mpfr_prec_t prec)
        : idx_(idx), vals_(idx.depth() + 1, BigFloat(prec)) {
        vals_.back() = BigFloat::from_long(1, prec);
        n_ = 0;
    }

    void step() {
        ++n_;
        mpz_class npow;
        // descending j: vals_[j] needs the already-updated deeper value at n
        for (int j = idx_.depth() - 1; j >= 0; --j) {
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n_),
                          static_cast<unsigned long>(idx_.exponent(j)));
            BigFloat t = vals_[j + 1].div_by_z(npow);
            if (idx_.sign(j) < 0 && (n_ & 1)) t.negate();
            vals_[j] += t;
        }
    }

    const BigFloat& value() const { return vals_.front(); }

private:
    SignedIndex idx_;
    std::vector<BigFloat> vals_;
    long n_;
};

}  // namespace

bool evaluable_letter(const Rational& a) {
    if (a == 0) return true;  // dt/t
    if (a == 1) return true;
    return a >= -1 && a <= Rational(1, 2);
}

Evaluator::Evaluator(Options opt) : opt_(opt) {
    if (opt_.prec < 16 || opt_.prec > 4096)
        throw std::invalid_argument("precision out of range");
}

long Evaluator::geometric_terms(double rho, int depth) const {
    double bits = static_cast<double>(opt_.prec + opt_.guard_bits) + 12.0 * depth + 48.0;
    double l = -std::log2(rho);
    long n = static_cast<long>(bits / l) + 16;
    if (n < 32 * depth) n = 32 * depth;
    return n;
}

BigFloat Evaluator::cumulative_series(const std::vector<int>& exps,
                                      const std::vector<Rational>& alphas, long terms) {
    const int r = static_cast<int>(exps.size());
    if (r == 0) return BigFloat::from_long(1, opt_.prec);
    Rational rho_q = 0;
    for (const Rational& a : alphas) {
        if (a == 0) throw std::invalid_argument("zero cumulative argument");
        if (abs(a) > rho_q) rho_q = abs(a);
    }
    double rho = std::abs(rho_q.get_d());
    bool geometric = rho <= 0.6;
    long N = terms;
    if (N <= 0) {
        if (!geometric)
            throw std::invalid_argument("non-geometric series needs an explicit term cap");
        N = geometric_terms(rho, r);
    }

    // ratio arguments z_j = alpha_j / alpha_{j-1}
    std::vector<Rational> z(r);
    Rational prev(1);
    for (int j = 0; j < r; ++j) {
        z[j] = alphas[j] / prev;
        prev = alphas[j];
    }

    std::vector<BigFloat> p(r + 1, BigFloat(opt_.prec));
    p[r] = BigFloat::from_long(1, opt_.prec);
    std::vector<BigFloat> zpow(r, BigFloat::from_long(1, opt_.prec));
    mpz_class npow;
    for (long n = 1; n <= N; ++n) {
        for (int j = 0; j < r; ++j) zpow[j].mul_q_inplace(z[j]);
        // ascending j: p[j+1] still holds its value at n-1
        for (int j = 0; j < r; ++j) {
            if (j + 1 < r && p[j + 1].value_is_zero() && n <= r) {
                // deeper sums vanish until enough terms exist; skip exact zeros
            }
            BigFloat t = zpow[j] * p[j + 1];
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(exps[j]));
            t.div_z_inplace(npow);
            p[j] += t;
        }
    }

    BigFloat out = p[0];
    UpperBound rho_ub = UpperBound::from_rational_abs(rho_q);
    if (geometric) {
        UpperBound tail = tail_geometric(N, r - 1, rho_ub);
        mpfr_t e;
        mpfr_init2(e, 64);
        mpfr_set(e, tail.raw(), MPFR_RNDU);
        out.add_error_2exp(mpfr_zero_p(e) ? -100000 : mpfr_get_exp(e));
        mpfr_clear(e);
    } else {
        // |alpha_j| <= 1 with s_1 >= head: per-term bound uses the head
        // exponent and unit counts of the tail.
        int units = 0, twos = 0;
        for (int j = 1; j < r; ++j) (exps[j] == 1 ? units : twos)++;
        if (rho > 1.0) throw std::invalid_argument("arguments exceed the unit disc");
        UpperBound tail = tail_polynomial(N, units, twos, exps[0]);
        out.add_error_2exp(mpfr_zero_p(tail.raw()) ? -100000 : mpfr_get_exp(tail.raw()));
    }
    return out;
}

BigFloat Evaluator::half_path_value(const Word& w) {
    if (w.empty()) return BigFloat::from_long(1, opt_.prec);
    WordPositions pos = word_positions(w);
    Rational denom(1);
    std::vector<Rational> scaled;
    scaled.reserve(pos.alphas.size());
    for (const Rational& a : pos.alphas) {
        scaled.push_back(a / 2);
        denom *= a;
    }
    BigFloat v = cumulative_series(pos.exponents, scaled, 0);
    return v.times_q(1 / denom);
}

BigFloat Evaluator::eval_word(const Word& w) {
    if (!word_admissible(w)) throw std::invalid_argument("word not admissible");
    for (const Letter& l : w.letters)
        if (!evaluable_letter(l.a))
            throw std::invalid_argument("letter outside the evaluable domain");
    const std::string key = "I[" + w.to_string() + "]@" + std::to_string(opt_.prec);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const int k = w.size();
    BigFloat total(opt_.prec);
    for (int j = 0; j <= k; ++j) {
        BigFloat upper(opt_.prec);
        Rational factor(1);
        if (j == 0) {
            upper = BigFloat::from_long(1, opt_.prec);
        } else {
            ReflectedWord refl = reflect_word(w.prefix(j));
            upper = half_path_value(refl.word);
            factor = refl.factor;
        }
        BigFloat lower = (j == k) ? BigFloat::from_long(1, opt_.prec)
                                  : half_path_value(w.suffix(j));
        BigFloat piece = upper * lower;
        if (factor != 1) piece.mul_q_inplace(factor);
        total += piece;
    }
    cache_.emplace(key, total);
    return total;
}

BigFloat Evaluator::eval_mzv(const SignedIndex& idx) {
    if (!is_admissible(idx)) throw std::invalid_argument("index not admissible");
    if (idx.empty()) return BigFloat::from_long(1, opt_.prec);
    Word w = mzv_word(idx);
    BigFloat v = eval_word(w);
    // zeta = I(word) * prod of the cumulative sign labels
    int cum = 1, prod = 1;
    for (int j = 0; j < idx.depth(); ++j) {
        cum *= idx.sign(j);
        prod *= cum;
    }
    if (prod != 1) v.negate();
    return v;
}

BigFloat Evaluator::zeta_single(int s, int sign) {
    if (s < 1 || (s == 1 && sign > 0))
        throw std::invalid_argument("single zeta needs s >= 2 or an alternating sign");
    const std::string key = "zeta(" + std::to_string(sign * s) + ")@" + std::to_string(opt_.prec);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    // eta(s) by alternating-series acceleration: error <= 2 (3+sqrt 8)^{-n}.
    const mpfr_prec_t prec = opt_.prec;
    long n = static_cast<long>((prec + opt_.guard_bits + 8) / 2.54) + 6;
    BigFloat d = (BigFloat::from_long(3, prec) + BigFloat::sqrt_ui(8, prec)).pow_int(static_cast<int>(n));
    d = (d + BigFloat::from_long(1, prec).div(d)).times_q(Rational(1, 2));
    BigFloat b = BigFloat::from_long(-1, prec);
    BigFloat c = -d;
    BigFloat acc(prec);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        acc.add_product_q(c, 1 / rat_pow(Rational(k + 1), s));
        Rational f = Rational(4 * (k + n) * (k - n)) / Rational((2 * k + 1) * (2 * k + 2));
        b.mul_q_inplace(f);
    }
    BigFloat eta = acc.div(d);
    // method error 2 (3+sqrt8)^{-n} < 2^(1 - 2.5 n)
    eta.add_error_2exp(1 - (5 * n) / 2);

    BigFloat out(prec);
    if (sign < 0) {
        out = -eta;  // zeta(s bar) = -eta(s)
    } else {
        Rational p2 = rat_pow(Rational(2), s - 1);
        out = eta.times_q(p2 / (p2 - 1));
    }
    cache_.emplace(key, out);
    return out;
}

BigFloat Evaluator::zeta_single_via_word(int s, int sign) {
    return eval_mzv(SignedIndex({sign * s}));
}

BigFloat Evaluator::eval_li_star(const std::vector<int>& exps, const Rational& z) {
    if (exps.empty()) return BigFloat::from_long(1, opt_.prec);
    if (abs(z) > Rational(1, 2))
        throw std::invalid_argument("star polylog series needs |z| <= 1/2");
    SignedIndex tail(std::vector<int>(exps.begin() + 1, exps.end()));
    return eval_ky_series(exps[0], 1, SignedIndex{}, tail, z, 0);
}

BigFloat Evaluator::eval_ky_series(int head_exp, int head_sign, const SignedIndex& u,
                                   const SignedIndex& v, const Rational& x, long terms) {
    if (x == 0 || abs(x) > 1) throw std::invalid_argument("series weight x must be in (0,1]");
    const Rational ax = abs(x);
    const bool geometric = ax <= Rational(3, 5);
    long N = terms;
    if (N <= 0) {
        if (geometric)
            N = geometric_terms(ax.get_d(), u.depth() + v.depth() + 1);
        else
            N = opt_.max_terms;
    }
    const int xsign = x > 0 ? 1 : -1;

    PlainSumState plain(u, opt_.prec);
    StarSumState star(v, opt_.prec);
    BigFloat acc(opt_.prec);
    BigFloat xpow = BigFloat::from_long(1, opt_.prec);
    mpz_class npow;
    for (long n = 1; n <= N; ++n) {
        star.step();  // now zetastar_n(v)
        xpow.mul_q_inplace(ax);
        // term = zeta_{n-1}(u) * zetastar_n(v) * (head_sign x)^n / n^head
        BigFloat t = plain.value() * star.value();
        t = t * xpow;
        mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(head_exp));
        t.div_z_inplace(npow);
        if ((head_sign * xsign) < 0 && (n & 1)) t.negate();
        acc += t;
        plain.step();  // now zeta_n(u)
    }

    IndexBoundCounts cu = count_units(u), cv = count_units(v);
    int units = cu.units + cv.units;
    int twos = cu.twos + cv.twos;
    if (geometric) {
        // (1+ln n)^U <= n^U; fold 2^V into the constant via extra degree
        UpperBound rho = UpperBound::from_rational_abs(ax);
        UpperBound tail = tail_geometric(N, units + twos, rho);
        UpperBound two = UpperBound(2.0).pow_ui(static_cast<unsigned long>(twos));
        tail = tail * two;
        acc.add_error_2exp(mpfr_zero_p(tail.raw()) ? -100000 : mpfr_get_exp(tail.raw()));
    } else {
        UpperBound tail = tail_polynomial(N, units, twos, head_exp);
        acc.add_error_2exp(mpfr_zero_p(tail.raw()) ? -100000 : mpfr_get_exp(tail.raw()));
    }
    return acc;
}

BigFloat Evaluator::eval_ky_reduced(const SignedIndex& k, int l_head_exp, int l_head_sign,
                                    const SignedIndex& l_tail) {
    FormalSum fs = ky_expand(k, l_head_exp, l_head_sign, l_tail);
    BigFloat acc(opt_.prec);
    for (const auto& [idx, c] : fs.terms()) acc.add_product_q(eval_mzv(idx), c);
    return acc;
}

BigFloat Evaluator::eval_ky(const SignedIndex& k, int l_head_exp, int l_head_sign,
                            const SignedIndex& l_tail, long terms) {
    if (k.empty()) throw std::invalid_argument("ky series needs non-empty k");
    int head = k.exponent(0) + l_head_exp;
    int hsign = k.sign(0) * l_head_sign;
    if (head < 2 && hsign > 0) throw std::invalid_argument("ky series diverges");
    return eval_ky_series(head, hsign, k.tail(), l_tail, Rational(1), terms);
}

BigFloat Evaluator::eval_poset(const Poset& p) {
    if (!p.admissible()) throw std::invalid_argument("poset not admissible");
    const std::string key = p.key() + "@" + std::to_string(opt_.prec);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    BigFloat acc(opt_.prec);
    for (const auto& [w, mult] : p.extension_words())
        acc.add_product_q(eval_word(w), Rational(static_cast<long>(mult)));
    cache_.emplace(key, acc);
    return acc;
}

BigFloat Evaluator::eval_ip(int p, int n, const Rational& t) {
    if (p < 1 || n < 0) throw std::invalid_argument("I_p needs p >= 1, n >= 0");
    if (t <= 0 || t > Rational(3, 5))
        throw std::invalid_argument("I_p evaluation needs t in (0, 3/5]");
    double td = t.get_d();
    long Q = static_cast<long>((opt_.prec + opt_.guard_bits + 12.0 * p + 48.0) /
                               -std::log2(td)) + n + 16;
    std::vector<BigFloat> c(static_cast<size_t>(Q) + 1, BigFloat(opt_.prec));
    c[static_cast<size_t>(n)] = BigFloat::from_long(1, opt_.prec);
    mpz_class q;
    for (int step = 0; step < p; ++step) {
        for (long i = 1; i <= Q; ++i) c[i] += c[i - 1];  // multiply by 1/(1-u)
        for (long i = Q; i >= 1; --i) {                  // integrate
            q = i;
            c[i] = c[i - 1].div_by_z(q);
        }
        c[0] = BigFloat(opt_.prec);
    }
    BigFloat acc(opt_.prec);
    BigFloat tpow = BigFloat::from_long(1, opt_.prec);
    for (long i = 1; i <= Q; ++i) {
        tpow.mul_q_inplace(t);
        if (!c[i].value_is_zero() || c[i].error_double() != 0.0) acc.add_product(c[i], tpow);
    }
    // true coefficients are bounded by (1+ln q)^(p-1) <= q^(p-1)
    UpperBound tail = tail_geometric(Q, p - 1, UpperBound::from_rational_abs(t));
    acc.add_error_2exp(mpfr_zero_p(tail.raw()) ? -100000 : mpfr_get_exp(tail.raw()));
    return acc;
}

BigFloat Evaluator::eval_polylog(const std::vector<int>& exps,
                                 const std::vector<Rational>& args, long terms) {
    if (exps.size() != args.size()) throw std::invalid_argument("polylog arity mismatch");
    if (exps.empty()) return BigFloat::from_long(1, opt_.prec);
    std::vector<Rational> alphas;
    Rational cum(1);
    Rational rho(0);
    bool all_unit = true;
    for (const Rational& zz : args) {
        cum *= zz;
        alphas.push_back(cum);
        if (abs(cum) > rho) rho = abs(cum);
        if (abs(cum) != 1) all_unit = false;
    }
    if (rho <= Rational(3, 5)) return cumulative_series(exps, alphas, terms);
    if (all_unit) {
        // a zeta value in disguise: per-position signs are the ratios
        std::vector<int> parts(exps.size());
        Rational prev(1);
        for (size_t j = 0; j < exps.size(); ++j) {
            Rational zj = alphas[j] / prev;
            prev = alphas[j];
            parts[j] = (zj == 1 ? exps[j] : -exps[j]);
        }
        return eval_mzv_direct(SignedIndex(parts), terms > 0 ? terms : opt_.max_terms);
    }
    throw std::invalid_argument("direct polylog series not certifiable for these arguments");
}

BigFloat Evaluator::eval_mzv_direct(const SignedIndex& idx, long terms) {
    if (!is_admissible(idx)) throw std::invalid_argument("index not admissible");
    if (idx.empty()) return BigFloat::from_long(1, opt_.prec);
    return eval_ky_series(idx.exponent(0), idx.sign(0), idx.tail(), SignedIndex{},
                          Rational(1), terms);
}

BigFloat Evaluator::eval_atom(const Atom& a) {
    const std::string key = atom_key(a) + "@" + std::to_string(opt_.prec);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    BigFloat out = std::visit(
        [&](const auto& x) -> BigFloat {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MzvAtom>) {
                return eval_mzv(x.idx);
            } else if constexpr (std::is_same_v<T, ZetaAtom>) {
                return zeta_single(x.s, x.sign);
            } else if constexpr (std::is_same_v<T, LiAtom>) {
                ArgumentedIndex ai{x.exps, x.args};
                Word w = index_to_word(ai);
                WordIndex wi = word_to_index(w);
                BigFloat v = eval_word(w);
                v.mul_q_inplace(1 / wi.prefactor);
                return v;
            } else if constexpr (std::is_same_v<T, LiStarAtom>) {
                return eval_li_star(x.exps, x.z);
            } else if constexpr (std::is_same_v<T, LogPowAtom>) {
                BigFloat l = BigFloat::log_of_rational(x.q, opt_.prec);
                BigFloat v = l.pow_int(x.i);
                v.mul_q_inplace(Rational(1) / Rational(factorial_z(static_cast<unsigned>(x.i))));
                return v;
            } else if constexpr (std::is_same_v<T, KYAtom>) {
                return eval_ky_reduced(x.k, x.l_head_exp, x.l_head_sign, x.l_tail);
            } else if constexpr (std::is_same_v<T, KYSeriesAtom>) {
                return eval_ky_series(x.head_exp, x.head_sign, x.u, x.v, x.x, 0);
            } else if constexpr (std::is_same_v<T, WordAtom>) {
                return eval_word(x.w);
            } else if constexpr (std::is_same_v<T, PosetAtom>) {
                return eval_poset(x.p);
            } else {
                return eval_ip(x.p, x.n, x.t);
            }
        },
        a);
    cache_.emplace(key, out);
    return out;
}

BigFloat Evaluator::eval(const Expression& e) {
    BigFloat acc(opt_.prec);
    for (const auto& [key, term] : e.terms()) {
        BigFloat prod = BigFloat::from_long(1, opt_.prec);
        for (const Atom& a : term.atoms) prod = prod * eval_atom(a);
        acc.add_product_q(prod, term.coef);
    }
    return acc;
}

}  // namespace mzv
