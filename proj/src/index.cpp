#include "mzv/index.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

SignedIndex::SignedIndex(std::vector<int> p) : parts(std::move(p)) {
    for (int e : parts)
        if (e == 0) throw std::invalid_argument("index part must be nonzero");
}

int SignedIndex::weight() const {
    int w = 0;
    for (int e : parts) w += std::abs(e);
    return w;
}

SignedIndex SignedIndex::tail() const {
    if (parts.empty()) throw std::logic_error("tail of empty index");
    return SignedIndex(std::vector<int>(parts.begin() + 1, parts.end()));
}

SignedIndex SignedIndex::head() const {
    if (parts.empty()) throw std::logic_error("head of empty index");
    return SignedIndex({parts.front()});
}

SignedIndex concat(const SignedIndex& u, const SignedIndex& v) {
    std::vector<int> p(u.parts);
    p.insert(p.end(), v.parts.begin(), v.parts.end());
    return SignedIndex(std::move(p));
}

bool IndexOrder::operator()(const SignedIndex& a, const SignedIndex& b) const {
    if (a.depth() != b.depth()) return a.depth() > b.depth();
    for (int j = 0; j < a.depth(); ++j) {
        int ea = a.exponent(j), eb = b.exponent(j);
        if (ea != eb) return ea > eb;
        if (a.sign(j) != b.sign(j)) return a.sign(j) > b.sign(j);
    }
    return false;
}

std::vector<int> repeat_block(const std::vector<int>& block, int d) {
    if (d < 0) throw std::invalid_argument("repeat count must be nonnegative");
    std::vector<int> out;
    out.reserve(block.size() * static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) out.insert(out.end(), block.begin(), block.end());
    return out;
}

std::vector<int> box_join(int a, int p, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("box join needs a, b >= 1");
    if (p < 0) throw std::invalid_argument("box join needs p >= 0");
    if (p == 0) return {a + b - 1};
    std::vector<int> out{a};
    for (int i = 0; i < p - 1; ++i) out.push_back(1);
    out.push_back(b);
    return out;
}

std::vector<int> diamond_join(int a, int p, int b) {
    if (a == 0 || b == 0) throw std::invalid_argument("diamond join needs nonzero entries");
    if (p < 0) throw std::invalid_argument("diamond join needs p >= 0");
    if (p == 0) return {a * b};
    std::vector<int> out{a};
    for (int i = 0; i < p - 1; ++i) out.push_back(1);
    out.push_back(b);
    return out;
}

bool is_admissible(const SignedIndex& idx) {
    if (idx.empty()) return true;
    return idx.parts.front() != 1;
}

SignedIndex parse_index(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return SignedIndex{};
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed index entry: '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("malformed index entry: '" + tok + "'");
        if (v == 0) throw std::invalid_argument("index entries must be nonzero");
        parts.push_back(v);
    }
    if (text.back() == ',') throw std::invalid_argument("trailing comma in index");
    return SignedIndex(std::move(parts));
}

std::string format_index(const SignedIndex& idx) {
    std::string out;
    for (int j = 0; j < idx.depth(); ++j) {
        if (j) out += ',';
        out += std::to_string(idx.parts[j]);
    }
    return out;
}

SignedIndex with_bar_head(const SignedIndex& idx) {
    if (idx.empty()) throw std::invalid_argument("cannot bar the empty index");
    SignedIndex out = idx;
    out.parts[0] = -out.parts[0];
    return out;
}

int ArgumentedIndex::weight() const {
    int w = 0;
    for (int e : exponents) w += e;
    return w;
}

bool ArgumentedIndex::admissible() const {
    if (exponents.size() != args.size()) return false;
    if (exponents.empty()) return true;
    for (int e : exponents)
        if (e < 1) return false;
    for (const Rational& z : args)
        if (z == 0) return false;
    const Rational& z1 = args.front();
    if (abs(z1) > 1) return false;
    if (z1 == 1 && exponents.front() < 2) return false;
    return true;
}

}  // namespace mzv
