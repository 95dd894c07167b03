#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/bigfloat.hpp"
#include "mzv/expression.hpp"
#include "mzv/index.hpp"
#include "mzv/poset.hpp"
#include "mzv/word.hpp"

namespace mzv {

// High-precision numerical values for every identity atom, with certified
// error bounds.
//
// The default route for every limit value is path composition at 1/2: an
// iterated integral splits into half-path pieces, the upper piece is
// reflected by t -> 1-t into a lower piece, and every resulting series has
// all cumulative arguments of modulus <= 1/2, hence geometric convergence.
// Direct truncated series are kept as cross-check routes.
//
// Letters must have a = 1 or -1 <= a <= 1/2 (a != 0); that set is closed
// under the reflection a -> a/(a-1), so split pieces stay evaluable.
class Evaluator {
public:
    struct Options {
        mpfr_prec_t prec = 128;
        int guard_bits = 16;
        long max_terms = 200000;  // cap for non-geometric direct series
    };

    Evaluator() : Evaluator(Options{128, 16, 200000}) {}
    explicit Evaluator(Options opt);

    mpfr_prec_t precision() const { return opt_.prec; }
    const Options& options() const { return opt_; }

    BigFloat eval(const Expression& e);
    BigFloat eval_atom(const Atom& a);

    // primary routes
    BigFloat eval_word(const Word& w);
    BigFloat eval_mzv(const SignedIndex& idx);
    BigFloat zeta_single(int s, int sign);  // eta acceleration
    BigFloat eval_li_star(const std::vector<int>& exps, const Rational& z);
    BigFloat eval_ky_series(int head_exp, int head_sign, const SignedIndex& u,
                            const SignedIndex& v, const Rational& x, long terms = 0);
    // zeta(k (*) l-star) by exact expansion into zeta indices
    BigFloat eval_ky_reduced(const SignedIndex& k, int l_head_exp, int l_head_sign,
                             const SignedIndex& l_tail);
    // truncated series form of the same value (low-precision cross-check)
    BigFloat eval_ky(const SignedIndex& k, int l_head_exp, int l_head_sign,
                     const SignedIndex& l_tail, long terms);
    BigFloat eval_poset(const Poset& p);
    BigFloat eval_ip(int p, int n, const Rational& t);

    // cross-check routes
    BigFloat eval_polylog(const std::vector<int>& exps, const std::vector<Rational>& args,
                          long terms = 0);  // direct series
    BigFloat eval_mzv_direct(const SignedIndex& idx, long terms);
    BigFloat zeta_single_via_word(int s, int sign);

    size_t cache_size() const { return cache_.size(); }

private:
    Options opt_;
    std::map<std::string, BigFloat> cache_;

    BigFloat half_path_value(const Word& w);  // integral from 0 to 1/2
    // sum over n1 > ... > nr of prod alpha_j^(n_j - n_{j+1}) / n_j^(s_j);
    // rho = max |alpha_j| decides the tail regime
    BigFloat cumulative_series(const std::vector<int>& exps,
                               const std::vector<Rational>& alphas, long terms);
    long geometric_terms(double rho, int depth) const;
};

// evaluable letter domain (closed under reflection)
bool evaluable_letter(const Rational& a);

}  // namespace mzv
