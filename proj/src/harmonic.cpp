#include "mzv/harmonic.hpp"

#include <stdexcept>

namespace mzv {

namespace {

// Signed entries merge by adding exponents and multiplying signs.
int merge_parts(int a, int b) {
    int e = std::abs(a) + std::abs(b);
    int s = (a > 0) == (b > 0) ? 1 : -1;
    return s * e;
}

}  // namespace

FormalSum stuffle(const SignedIndex& k, const SignedIndex& l) {
    if (k.empty()) return FormalSum(l);
    if (l.empty()) return FormalSum(k);
    FormalSum out;
    out += stuffle(k.tail(), l).prefixed(k.parts.front());
    out += stuffle(k, l.tail()).prefixed(l.parts.front());
    out += stuffle(k.tail(), l.tail()).prefixed(merge_parts(k.parts.front(), l.parts.front()));
    return out;
}

FormalSum stuffle(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            out += stuffle(u, v).scaled(cu * cv);
    return out;
}

FormalSum star_expand(const SignedIndex& k) {
    if (k.empty()) return FormalSum(k);
    const int r = k.depth();
    FormalSum out;
    // One bit per separator: set = collapse into the previous entry.
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::vector<int> parts{k.parts[0]};
        for (int j = 1; j < r; ++j) {
            if (mask & (1u << (j - 1)))
                parts.back() = merge_parts(parts.back(), k.parts[j]);
            else
                parts.push_back(k.parts[j]);
        }
        out.add(SignedIndex(std::move(parts)), 1);
    }
    return out;
}

FormalSum circled_star(const SignedIndex& k, const SignedIndex& l) {
    if (k.empty() || l.empty())
        throw std::invalid_argument("circled product needs non-empty indices");
    int head = merge_parts(k.parts.front(), l.parts.front());
    return stuffle(k.tail(), l.tail()).prefixed(head);
}

FormalSum circled_star_starred(const SignedIndex& k, const SignedIndex& l) {
    FormalSum out;
    const FormalSum st = star_expand(l);
    for (const auto& [t, c] : st.terms()) out += circled_star(k, t).scaled(c);
    return out;
}

FormalSum ky_expand(const SignedIndex& k, int l_head_exp, int l_head_sign,
                    const SignedIndex& l_tail) {
    if (k.empty()) throw std::invalid_argument("ky_expand needs non-empty k");
    if (l_head_exp < 0 || (l_head_sign != 1 && l_head_sign != -1))
        throw std::invalid_argument("bad l head");
    const int hk = k.parts.front();
    FormalSum out;
    if (l_tail.empty()) {
        int head = (k.sign(0) * l_head_sign) * (k.exponent(0) + l_head_exp);
        return FormalSum(k.tail(), 1).prefixed(head);
    }
    const FormalSum st = star_expand(l_tail);
    for (const auto& [t, c] : st.terms()) {
        // Separator after the l head kept: head joins k's head alone.
        int h1 = (hk > 0 ? 1 : -1) * l_head_sign * (std::abs(hk) + l_head_exp);
        out += stuffle(k.tail(), t).prefixed(h1).scaled(c);
        // Separator collapsed: the l head merges with t's first entry first.
        int merged = l_head_sign * (t.parts.front() > 0 ? 1 : -1) *
                     (l_head_exp + t.exponent(0));
        int h2 = merge_parts(hk, merged);
        out += stuffle(k.tail(), t.tail()).prefixed(h2).scaled(c);
    }
    return out;
}

}  // namespace mzv
