#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mzv/formal_sum.hpp"
#include "mzv/index.hpp"
#include "mzv/poset.hpp"
#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzv {

// Evaluation atoms. Each knows its canonical key; expressions are kept in
// expanded normal form (sum of rational-coefficient products of atoms), so
// structural equality is literal equality of the term maps.

struct MzvAtom {
    SignedIndex idx;  // depth >= 2 after normalization
};

struct ZetaAtom {
    int s;
    int sign;  // +1 plain zeta, -1 alternating (eta-type)
};

struct LiAtom {
    std::vector<int> exps;
    std::vector<Rational> args;  // per-position z_j
};

struct LiStarAtom {
    std::vector<int> exps;
    Rational z;
};

// log^i(q) / i! for positive rational q
struct LogPowAtom {
    Rational q;
    int i;
};

// zeta(k (*) l-star); the l head exponent may be 0
struct KYAtom {
    SignedIndex k;
    int l_head_exp;
    int l_head_sign;
    SignedIndex l_tail;
};

// sum over n >= 1 of zeta_{n-1}(u) zetastar_n(v) sign^n x^n / n^head
struct KYSeriesAtom {
    int head_exp;
    int head_sign;
    SignedIndex u;
    SignedIndex v;
    Rational x;
};

struct WordAtom {
    Word w;
};

struct PosetAtom {
    Poset p;
};

// I_p(n; t): the p-fold dt/(1-t) chain with t^n weight at the innermost spot
struct IpAtom {
    int p;
    int n;
    Rational t;
};

using Atom = std::variant<MzvAtom, ZetaAtom, LiAtom, LiStarAtom, LogPowAtom, KYAtom,
                          KYSeriesAtom, WordAtom, PosetAtom, IpAtom>;

std::string atom_key(const Atom& a);

class Expression {
public:
    using Product = std::vector<std::string>;  // sorted atom keys
    struct Term {
        Rational coef;
        std::vector<Atom> atoms;
    };
    using Terms = std::map<Product, Term>;

    Expression() = default;

    static Expression constant(const Rational& c);
    static Expression atom(Atom a);

    Expression operator+(const Expression& o) const;
    Expression operator-(const Expression& o) const;
    Expression operator*(const Expression& o) const;
    Expression scaled(const Rational& c) const;
    Expression& operator+=(const Expression& o);

    const Terms& terms() const { return terms_; }
    bool operator==(const Expression& o) const;

    size_t term_count() const { return terms_.size(); }
    std::string to_string() const;

private:
    Terms terms_;
    void add_term(const Product& key, const Term& t);
};

// --- normalized atom builders ---

// Multi-variable polylog; unit +-1 data collapses to zeta atoms.
Expression make_li(std::vector<int> exps, std::vector<Rational> args);
// Alternating/plain zeta value from a signed index (must be admissible).
Expression make_mzv(const SignedIndex& idx);
Expression make_li_star(std::vector<int> exps, const Rational& z);
// Cumulative-argument polylog; normalizes to the ratio-argument Li atom.
Expression make_li_xi(std::vector<int> exps, std::vector<Rational> alphas);
Expression make_log_pow(const Rational& q, int i);
Expression make_ky(const SignedIndex& k, int l_head_exp, int l_head_sign,
                   const SignedIndex& l_tail);
Expression make_ky_series(int head_exp, int head_sign, const SignedIndex& u,
                          const SignedIndex& v, const Rational& x);
Expression make_word(const Word& w);
Expression make_poset(const Poset& p);
Expression make_ip(int p, int n, const Rational& t);

// Linear combination of zeta atoms from a formal sum of indices.
Expression expr_from_formal_sum(const FormalSum& fs);

}  // namespace mzv
