#include "mzv/expression.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_rats(const std::vector<Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_rational(v[i]);
    }
    return out;
}

}  // namespace

std::string atom_key(const Atom& a) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MzvAtom>) {
                return "z(" + format_index(x.idx) + ")";
            } else if constexpr (std::is_same_v<T, ZetaAtom>) {
                return "z(" + std::to_string(x.sign * x.s) + ")";
            } else if constexpr (std::is_same_v<T, LiAtom>) {
                return "li[" + join_ints(x.exps) + "](" + join_rats(x.args) + ")";
            } else if constexpr (std::is_same_v<T, LiStarAtom>) {
                return "li*[" + join_ints(x.exps) + "](" + format_rational(x.z) + ")";
            } else if constexpr (std::is_same_v<T, LogPowAtom>) {
                return "log^" + std::to_string(x.i) + "(" + format_rational(x.q) + ")/!";
            } else if constexpr (std::is_same_v<T, KYAtom>) {
                return "ky(" + format_index(x.k) + "|" + std::to_string(x.l_head_exp) +
                       "s" + std::to_string(x.l_head_sign) + ";" +
                       format_index(x.l_tail) + ")";
            } else if constexpr (std::is_same_v<T, KYSeriesAtom>) {
                return "kyser(h=" + std::to_string(x.head_sign * x.head_exp) + ";u=" +
                       format_index(x.u) + ";v=" + format_index(x.v) + ";x=" +
                       format_rational(x.x) + ")";
            } else if constexpr (std::is_same_v<T, WordAtom>) {
                return "I[" + x.w.to_string() + "]";
            } else if constexpr (std::is_same_v<T, PosetAtom>) {
                return "I{" + x.p.key() + "}";
            } else {
                return "ip(p=" + std::to_string(x.p) + ";n=" + std::to_string(x.n) +
                       ";t=" + format_rational(x.t) + ")";
            }
        },
        a);
}

void Expression::add_term(const Product& key, const Term& t) {
    if (t.coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, t);
    if (!inserted) {
        it->second.coef += t.coef;
        if (it->second.coef == 0) terms_.erase(it);
    }
}

Expression Expression::constant(const Rational& c) {
    Expression e;
    if (c != 0) e.terms_.emplace(Product{}, Term{c, {}});
    return e;
}

Expression Expression::atom(Atom a) {
    Expression e;
    Product key{atom_key(a)};
    e.terms_.emplace(key, Term{Rational(1), {std::move(a)}});
    return e;
}

Expression Expression::operator+(const Expression& o) const {
    Expression out(*this);
    out += o;
    return out;
}

Expression& Expression::operator+=(const Expression& o) {
    for (const auto& [key, t] : o.terms_) add_term(key, t);
    return *this;
}

Expression Expression::operator-(const Expression& o) const {
    return *this + o.scaled(-1);
}

Expression Expression::operator*(const Expression& o) const {
    Expression out;
    for (const auto& [ka, ta] : terms_) {
        for (const auto& [kb, tb] : o.terms_) {
            Product key;
            key.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(key));
            Term t;
            t.coef = ta.coef * tb.coef;
            t.atoms = ta.atoms;
            t.atoms.insert(t.atoms.end(), tb.atoms.begin(), tb.atoms.end());
            std::sort(t.atoms.begin(), t.atoms.end(),
                      [](const Atom& x, const Atom& y) { return atom_key(x) < atom_key(y); });
            out.add_term(key, t);
        }
    }
    return out;
}

Expression Expression::scaled(const Rational& c) const {
    Expression out;
    if (c == 0) return out;
    for (const auto& [key, t] : terms_) out.terms_.emplace(key, Term{t.coef * c, t.atoms});
    return out;
}

bool Expression::operator==(const Expression& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second.coef != jt->second.coef) return false;
    }
    return true;
}

std::string Expression::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, t] : terms_) {
        Rational a = abs(t.coef);
        if (first) {
            if (t.coef < 0) out += "-";
            first = false;
        } else {
            out += t.coef < 0 ? " - " : " + ";
        }
        bool need_coef = (a != 1) || key.empty();
        if (need_coef) out += format_rational(a);
        for (size_t i = 0; i < key.size(); ++i) {
            if (i || need_coef) out += "*";
            out += key[i];
        }
    }
    return out;
}

// ---- builders ----

Expression make_mzv(const SignedIndex& idx) {
    if (idx.empty()) return Expression::constant(1);
    if (!is_admissible(idx)) throw std::invalid_argument("zeta atom needs an admissible index: " + format_index(idx));
    if (idx.depth() == 1) return Expression::atom(ZetaAtom{idx.exponent(0), idx.sign(0)});
    return Expression::atom(MzvAtom{idx});
}

Expression make_li(std::vector<int> exps, std::vector<Rational> args) {
    if (exps.size() != args.size())
        throw std::invalid_argument("polylog atom: exponent/argument mismatch");
    if (exps.empty()) return Expression::constant(1);
    bool unit_args = true;
    for (const Rational& z : args) {
        if (z == 0) throw std::invalid_argument("polylog atom: zero argument");
        if (z != 1 && z != -1) unit_args = false;
    }
    if (unit_args) {
        // per-position signs are exactly the arguments
        std::vector<int> parts;
        for (size_t j = 0; j < exps.size(); ++j)
            parts.push_back(args[j] == 1 ? exps[j] : -exps[j]);
        return make_mzv(SignedIndex(parts));
    }
    ArgumentedIndex ai{exps, args};
    if (!ai.admissible()) throw std::invalid_argument("polylog atom not admissible");
    return Expression::atom(LiAtom{std::move(exps), std::move(args)});
}

Expression make_li_star(std::vector<int> exps, const Rational& z) {
    if (exps.empty()) return Expression::constant(1);
    for (int e : exps)
        if (e < 1) throw std::invalid_argument("star polylog needs positive exponents");
    if (abs(z) > Rational(1, 2))
        throw std::invalid_argument("star polylog restricted to |z| <= 1/2");
    return Expression::atom(LiStarAtom{std::move(exps), z});
}

Expression make_li_xi(std::vector<int> exps, std::vector<Rational> alphas) {
    if (exps.size() != alphas.size())
        throw std::invalid_argument("cumulative polylog: length mismatch");
    if (exps.empty()) return Expression::constant(1);
    // ratio arguments; reuse the Li normalization (also collapses +-1 data)
    std::vector<Rational> args;
    Rational prev(1);
    for (const Rational& a : alphas) {
        if (a == 0) throw std::invalid_argument("cumulative polylog: zero argument");
        args.push_back(a / prev);
        prev = a;
    }
    return make_li(std::move(exps), std::move(args));
}

Expression make_log_pow(const Rational& q, int i) {
    if (q <= 0) throw std::invalid_argument("log atom needs a positive rational");
    if (i < 0) throw std::invalid_argument("log atom needs i >= 0");
    if (i == 0 || q == 1) return i == 0 ? Expression::constant(1) : Expression::constant(0);
    return Expression::atom(LogPowAtom{q, i});
}

Expression make_ky(const SignedIndex& k, int l_head_exp, int l_head_sign,
                   const SignedIndex& l_tail) {
    if (k.empty()) throw std::invalid_argument("ky atom needs non-empty k");
    if (l_head_exp < 0) throw std::invalid_argument("ky atom: bad l head");
    int head = k.exponent(0) + l_head_exp;
    int hsign = k.sign(0) * l_head_sign;
    if (head < 2 && hsign > 0)
        throw std::invalid_argument("ky atom needs combined head >= 2 or alternating head");
    return Expression::atom(KYAtom{k, l_head_exp, l_head_sign, l_tail});
}

Expression make_ky_series(int head_exp, int head_sign, const SignedIndex& u,
                          const SignedIndex& v, const Rational& x) {
    if (head_exp < 0) throw std::invalid_argument("series atom: bad head");
    if (abs(x) > 1 || x == 0) throw std::invalid_argument("series atom: |x| in (0,1]");
    if (abs(x) == 1 && head_exp < 2 && head_sign * (x > 0 ? 1 : -1) > 0)
        throw std::invalid_argument("series atom diverges");
    return Expression::atom(KYSeriesAtom{head_exp, head_sign, u, v, x});
}

Expression make_word(const Word& w) {
    if (!word_admissible(w)) throw std::invalid_argument("word atom not admissible");
    return Expression::atom(WordAtom{w});
}

Expression make_poset(const Poset& p) {
    if (!p.admissible()) throw std::invalid_argument("poset atom not admissible");
    return Expression::atom(PosetAtom{p});
}

Expression make_ip(int p, int n, const Rational& t) {
    if (p < 1 || n < 0) throw std::invalid_argument("ip atom: need p >= 1, n >= 0");
    if (t <= 0 || t >= 1) throw std::invalid_argument("ip atom: t in (0,1)");
    return Expression::atom(IpAtom{p, n, t});
}

Expression expr_from_formal_sum(const FormalSum& fs) {
    Expression out;
    for (const auto& [idx, c] : fs.terms()) out += make_mzv(idx).scaled(c);
    return out;
}

}  // namespace mzv
