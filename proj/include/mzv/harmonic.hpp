#pragma once

#include "mzv/formal_sum.hpp"
#include "mzv/index.hpp"

namespace mzv {

// The three-branch inductive harmonic product. Merged entries add exponents
// and multiply signs, so the signed and unsigned algebras share this one
// implementation (a plain index is the all-plus case).
FormalSum stuffle(const SignedIndex& k, const SignedIndex& l);
FormalSum stuffle(const FormalSum& a, const FormalSum& b);

// k-star: the 2^(r-1)-term formal sum with each separator kept or collapsed;
// collapsing adds exponents and multiplies signs. The empty index maps to
// itself.
FormalSum star_expand(const SignedIndex& k);

// Circled product: heads merge (exponents add, signs multiply) and the tails
// are stuffled. Both operands must be nonempty.
FormalSum circled_star(const SignedIndex& k, const SignedIndex& l);

// k (*) l-star as a formal sum of indices: circled product against every
// star-expansion term of l. This is the exact reduction of a
// Kaneko-Yamamoto value to plain (alternating) zeta indices.
FormalSum circled_star_starred(const SignedIndex& k, const SignedIndex& l);

// Same reduction with the l head given separately so it may carry exponent 0
// (the "0-headed" star factors; the 0 only ever merges into k's head).
FormalSum ky_expand(const SignedIndex& k, int l_head_exp, int l_head_sign,
                    const SignedIndex& l_tail);

}  // namespace mzv
