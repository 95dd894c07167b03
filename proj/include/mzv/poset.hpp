#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzv {

// Finite labeled partial order for order-simplex integrals. Labels are the
// one-form parameters: 0 = dt/t, 1 = dt/(1-t), otherwise dt/(1-at).
// At most 64 nodes; the reachability closure is computed once on freeze.
class Poset {
public:
    struct Node {
        std::string id;
        Rational label;
    };

    int add_node(const std::string& id, const Rational& label);
    void add_cover(const std::string& lo, const std::string& hi);
    void add_cover(int lo, int hi);
    void freeze();  // compute closure; throws on cycles

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<Node>& nodes() const { return nodes_; }
    bool less(int a, int b) const;  // strict order after freeze

    // delta != 1 on maximal elements, delta != 0 on minimal elements.
    bool admissible() const;

    // Number of linear extensions (memoized down-set counting).
    long long extension_count() const;

    // One word per linear extension, maximal element first, with
    // multiplicities collected. Throws if the count exceeds the cap.
    std::map<Word, long long> extension_words(long long cap = 1000000) const;

    // Totally ordered diagram for exponents/alphas, bottom-to-top; its
    // integral is the cumulative-argument polylog over prod(alphas).
    static Poset chain(const std::vector<int>& exponents,
                       const std::vector<Rational>& alphas);

    static Poset from_json(const std::string& text);
    std::string to_json() const;

    std::string key() const;  // canonical serialization

private:
    std::vector<Node> nodes_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<uint64_t> above_;  // closure: bit j of above_[i] <=> i < j
    bool frozen_ = false;
    std::map<std::string, int> by_id_;

    void require_frozen() const;
};

}  // namespace mzv
