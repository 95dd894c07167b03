#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Composition with per-part signs. A part is stored as a nonzero integer:
// positive exponent = sign +1, negative = barred entry (sign -1), so the
// textual form "-2,3,-1,4" is the index (2bar, 3, 1bar, 4). The empty
// sequence is the valid index of depth 0.
struct SignedIndex {
    std::vector<int> parts;

    SignedIndex() = default;
    explicit SignedIndex(std::vector<int> p);

    int depth() const { return static_cast<int>(parts.size()); }
    int weight() const;
    bool empty() const { return parts.empty(); }

    int exponent(int j) const { return std::abs(parts[j]); }
    int sign(int j) const { return parts[j] > 0 ? 1 : -1; }

    SignedIndex tail() const;   // drop first part
    SignedIndex head() const;   // first part alone

    bool operator==(const SignedIndex&) const = default;
};

SignedIndex concat(const SignedIndex& u, const SignedIndex& v);

// Canonical ordering used by FormalSum: larger depth first, then entrywise
// larger exponent first, then plain sign before bar. This makes printed
// expansions come out in the conventional order, e.g. (1,1) before (2).
struct IndexOrder {
    bool operator()(const SignedIndex& a, const SignedIndex& b) const;
};

// {s1,...,sj}_d : the block repeated d times; d = 0 gives the empty sequence.
std::vector<int> repeat_block(const std::vector<int>& block, int d);

// a [] {1}_{p-1} [] b : (a, {1}_{p-1}, b) when p >= 1, the single entry
// a+b-1 when p = 0. Requires a, b >= 1.
std::vector<int> box_join(int a, int p, int b);

// a <> {1}_{p-1} <> b on signed entries: (a, {1}_{p-1}, b) when p >= 1 and
// the signed product a*b when p = 0.
std::vector<int> diamond_join(int a, int p, int b);

// True iff the infinite sum converges: false exactly when the leading part
// is a plain 1. The empty index is admissible (value 1).
bool is_admissible(const SignedIndex& idx);

SignedIndex parse_index(const std::string& text);
std::string format_index(const SignedIndex& idx);

// Helpers used throughout the identity generators.
inline SignedIndex ones(int n) { return SignedIndex(repeat_block({1}, n)); }
SignedIndex with_bar_head(const SignedIndex& idx);  // negate the first part

// Rational-argument index of Eq-(1.8) type: exponents plus per-position
// arguments z_1..z_r. Admissible iff |z_1| <= 1 and (z_1 = 1 implies
// s_1 >= 2); all arguments nonzero.
struct ArgumentedIndex {
    std::vector<int> exponents;
    std::vector<Rational> args;

    int depth() const { return static_cast<int>(exponents.size()); }
    int weight() const;
    bool admissible() const;
    bool operator==(const ArgumentedIndex&) const = default;
};

}  // namespace mzv
