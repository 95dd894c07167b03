#include "mzv/poset.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace mzv {

int Poset::add_node(const std::string& id, const Rational& label) {
    if (frozen_) throw std::logic_error("poset already frozen");
    if (by_id_.count(id)) throw std::invalid_argument("duplicate node id: " + id);
    if (nodes_.size() >= 64) throw std::invalid_argument("poset too large (max 64 nodes)");
    by_id_[id] = static_cast<int>(nodes_.size());
    nodes_.push_back({id, label});
    return static_cast<int>(nodes_.size()) - 1;
}

void Poset::add_cover(const std::string& lo, const std::string& hi) {
    auto a = by_id_.find(lo), b = by_id_.find(hi);
    if (a == by_id_.end() || b == by_id_.end())
        throw std::invalid_argument("cover references unknown node");
    add_cover(a->second, b->second);
}

void Poset::add_cover(int lo, int hi) {
    if (frozen_) throw std::logic_error("poset already frozen");
    if (lo == hi) throw std::invalid_argument("cover must relate distinct nodes");
    covers_.push_back({lo, hi});
}

void Poset::freeze() {
    const int n = size();
    above_.assign(n, 0);
    for (auto [lo, hi] : covers_) above_[lo] |= (1ull << hi);
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (above_[i] & (1ull << k)) above_[i] |= above_[k];
    for (int i = 0; i < n; ++i)
        if (above_[i] & (1ull << i)) throw std::invalid_argument("poset order has a cycle");
    frozen_ = true;
}

void Poset::require_frozen() const {
    if (!frozen_) throw std::logic_error("poset not frozen");
}

bool Poset::less(int a, int b) const {
    require_frozen();
    return (above_[a] >> b) & 1;
}

bool Poset::admissible() const {
    require_frozen();
    const int n = size();
    for (int i = 0; i < n; ++i) {
        bool maximal = above_[i] == 0;
        bool minimal = true;
        for (int j = 0; j < n && minimal; ++j)
            if ((above_[j] >> i) & 1) minimal = false;
        if (maximal && nodes_[i].label == 1) return false;
        if (minimal && nodes_[i].label == 0) return false;
    }
    return true;
}

namespace {

// Nodes still unused whose upper set is already used: the candidates for the
// next (outermost) position.
uint64_t maximal_of(const std::vector<uint64_t>& above, uint64_t remaining) {
    uint64_t out = 0;
    uint64_t m = remaining;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if ((above[i] & remaining) == 0) out |= (1ull << i);
    }
    return out;
}

}  // namespace

long long Poset::extension_count() const {
    require_frozen();
    const int n = size();
    std::unordered_map<uint64_t, long long> memo;
    std::function<long long(uint64_t)> rec = [&](uint64_t remaining) -> long long {
        if (remaining == 0) return 1;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        long long total = 0;
        uint64_t cand = maximal_of(above_, remaining);
        uint64_t m = cand;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            total += rec(remaining & ~(1ull << i));
        }
        memo[remaining] = total;
        return total;
    };
    uint64_t all = n == 64 ? ~0ull : ((1ull << n) - 1);
    return rec(all);
}

std::map<Word, long long> Poset::extension_words(long long cap) const {
    require_frozen();
    long long count = extension_count();
    if (count > cap) throw std::runtime_error("too many linear extensions");
    const int n = size();
    std::map<Word, long long> out;
    std::vector<Letter> current;
    current.reserve(n);
    std::function<void(uint64_t)> rec = [&](uint64_t remaining) {
        if (remaining == 0) {
            ++out[Word(current)];
            return;
        }
        uint64_t cand = maximal_of(above_, remaining);
        uint64_t m = cand;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            current.push_back(Letter{nodes_[i].label});
            rec(remaining & ~(1ull << i));
            current.pop_back();
        }
    };
    uint64_t all = n == 64 ? ~0ull : ((1ull << n) - 1);
    rec(all);
    return out;
}

Poset Poset::chain(const std::vector<int>& exponents, const std::vector<Rational>& alphas) {
    if (exponents.size() != alphas.size())
        throw std::invalid_argument("exponent/alpha length mismatch");
    Poset p;
    // Bottom-to-top: block j (from the deepest position) is one labeled node
    // then exponent-1 circles; the word reads top-down.
    int prev = -1, counter = 0;
    for (int j = static_cast<int>(exponents.size()) - 1; j >= 0; --j) {
        int base = p.add_node("n" + std::to_string(counter++), alphas[j]);
        if (prev >= 0) p.add_cover(prev, base);
        prev = base;
        for (int i = 1; i < exponents[j]; ++i) {
            int c = p.add_node("n" + std::to_string(counter++), Rational(0));
            p.add_cover(prev, c);
            prev = c;
        }
    }
    p.freeze();
    return p;
}

Poset Poset::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::map<std::string, Rational> alphas;
    if (j.contains("alphas"))
        for (auto& [k, v] : j.at("alphas").items())
            alphas[k] = parse_rational(v.get<std::string>());
    Poset p;
    for (const auto& nj : j.at("nodes")) {
        std::string id = nj.at("id").get<std::string>();
        std::string label = nj.at("label").get<std::string>();
        Rational val;
        if (label == "0")
            val = 0;
        else if (label == "1")
            val = 1;
        else {
            auto it = alphas.find(label);
            if (it == alphas.end())
                throw std::invalid_argument("label '" + label + "' missing from alphas");
            val = it->second;
            if (val == 0) throw std::invalid_argument("alpha label must be nonzero");
        }
        p.add_node(id, val);
    }
    for (const auto& cj : j.at("cover"))
        p.add_cover(cj.at(0).get<std::string>(), cj.at(1).get<std::string>());
    p.freeze();
    return p;
}

std::string Poset::to_json() const {
    nlohmann::json j;
    nlohmann::json nodes = nlohmann::json::array();
    nlohmann::json alphas = nlohmann::json::object();
    int next_alpha = 1;
    std::map<Rational, std::string> names;
    for (const auto& n : nodes_) {
        std::string label;
        if (n.label == 0)
            label = "0";
        else if (n.label == 1)
            label = "1";
        else {
            auto it = names.find(n.label);
            if (it == names.end()) {
                label = "a" + std::to_string(next_alpha++);
                names[n.label] = label;
                alphas[label] = format_rational(n.label);
            } else {
                label = it->second;
            }
        }
        nodes.push_back({{"id", n.id}, {"label", label}});
    }
    nlohmann::json cover = nlohmann::json::array();
    for (auto [lo, hi] : covers_)
        cover.push_back({nodes_[lo].id, nodes_[hi].id});
    j["nodes"] = nodes;
    j["cover"] = cover;
    j["alphas"] = alphas;
    return j.dump();
}

std::string Poset::key() const {
    std::string out = "poset:";
    for (const auto& n : nodes_) out += format_rational(n.label) + ";";
    out += "|";
    for (auto [lo, hi] : covers_)
        out += std::to_string(lo) + "<" + std::to_string(hi) + ";";
    return out;
}

}  // namespace mzv
