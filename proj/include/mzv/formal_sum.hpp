#pragma once

#include <map>
#include <string>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// Rational-coefficient linear combination of signed indices, kept canonical:
// equal indices merged, zero coefficients dropped.
class FormalSum {
public:
    using Terms = std::map<SignedIndex, Rational, IndexOrder>;

    FormalSum() = default;
    explicit FormalSum(const SignedIndex& idx, const Rational& c = 1) { add(idx, c); }

    void add(const SignedIndex& idx, const Rational& c);
    FormalSum& operator+=(const FormalSum& other);
    FormalSum operator+(const FormalSum& other) const;
    FormalSum scaled(const Rational& c) const;

    // Prepend a part to every term.
    FormalSum prefixed(int part) const;

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Sum of absolute coefficient values; counts interleavings with multiplicity.
    Rational coefficient_mass() const;

    bool operator==(const FormalSum& other) const { return terms_ == other.terms_; }

    // e.g. "2*(1,1) + (2)"
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace mzv
