#include "mzv/formal_sum.hpp"

namespace mzv {

void FormalSum::add(const SignedIndex& idx, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    for (const auto& [idx, c] : other.terms_) add(idx, c);
    return *this;
}

FormalSum FormalSum::operator+(const FormalSum& other) const {
    FormalSum out(*this);
    out += other;
    return out;
}

FormalSum FormalSum::scaled(const Rational& c) const {
    FormalSum out;
    if (c == 0) return out;
    for (const auto& [idx, q] : terms_) out.terms_.emplace(idx, q * c);
    return out;
}

FormalSum FormalSum::prefixed(int part) const {
    FormalSum out;
    for (const auto& [idx, c] : terms_) {
        std::vector<int> p;
        p.reserve(idx.parts.size() + 1);
        p.push_back(part);
        p.insert(p.end(), idx.parts.begin(), idx.parts.end());
        out.add(SignedIndex(std::move(p)), c);
    }
    return out;
}

Rational FormalSum::coefficient_mass() const {
    Rational m = 0;
    for (const auto& [idx, c] : terms_) m += abs(c);
    return m;
}

std::string FormalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (a != 1) out += format_rational(a) + "*";
        out += "(" + format_index(idx) + ")";
    }
    return out;
}

}  // namespace mzv
