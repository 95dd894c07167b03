#include "mzv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "mzv/finite_sums.hpp"
#include "mzv/harmonic.hpp"

namespace mzv {

namespace {

long now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string body = s;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("unbalanced parens: " + s);
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<Rational> parse_rat_list(const std::string& s) {
    std::vector<Rational> out;
    std::string body = s;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("unbalanced parens: " + s);
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    return out;
}

InstanceReport exact_report(const std::string& family, const std::string& params,
                            bool pass, const std::string& notes = "") {
    InstanceReport r;
    r.family = family;
    r.params = params;
    r.lhs_value = r.rhs_value = "exact";
    r.residual = pass ? "0" : "nonzero";
    r.bound = "0";
    r.pass = pass;
    r.notes = notes;
    return r;
}

void sort_reports(std::vector<InstanceReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const InstanceReport& a, const InstanceReport& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.params < b.params;
    });
}

}  // namespace

// ---- deterministic sampler (splitmix64) ----

IndexSampler::IndexSampler(unsigned long seed) : state_(seed) {}

unsigned long long IndexSampler::next_raw() {
    unsigned long long z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int IndexSampler::next_int(int lo, int hi) {
    return lo + static_cast<int>(next_raw() % static_cast<unsigned long long>(hi - lo + 1));
}

SignedIndex IndexSampler::next_signed(int max_depth, int max_weight, bool allow_empty) {
    int depth = next_int(allow_empty ? 0 : 1, max_depth);
    std::vector<int> parts;
    int budget = max_weight;
    for (int j = 0; j < depth; ++j) {
        int remaining = depth - j - 1;
        int hi = std::max(1, budget - remaining);
        int e = next_int(1, std::min(hi, 4));
        budget -= e;
        int s = next_int(0, 1) ? 1 : -1;
        parts.push_back(s * e);
    }
    return SignedIndex(parts);
}

SignedIndex IndexSampler::next_positive(int max_depth, int max_weight, bool allow_empty) {
    SignedIndex idx = next_signed(max_depth, max_weight, allow_empty);
    for (int& e : idx.parts) e = std::abs(e);
    return idx;
}

// ---- single-instance runner ----

InstanceReport run_instance(const IdentityInstance& inst, const VerifyOptions& opt,
                            Evaluator* shared_eval) {
    InstanceReport r;
    r.family = inst.family;
    r.params = inst.params;
    r.notes = inst.note;
    r.lhs_terms = inst.lhs.term_count();
    r.rhs_terms = inst.rhs.term_count();
    long t0 = now_ms();
    try {
        Evaluator local({opt.prec, 16, opt.max_terms});
        Evaluator& ev = shared_eval ? *shared_eval : local;
        BigFloat lhs = ev.eval(inst.lhs);
        BigFloat rhs = ev.eval(inst.rhs);
        BigFloat diff = lhs - rhs;
        r.lhs_value = lhs.to_string(40);
        r.rhs_value = rhs.to_string(40);
        r.residual = diff.abs_value().to_string(6);
        {
            std::ostringstream os;
            os << diff.error_double();
            r.bound = os.str();
        }
        r.pass = diff.within(opt.tol);
    } catch (const std::exception& e) {
        r.pass = false;
        r.notes = r.notes.empty() ? e.what() : r.notes + "; " + e.what();
    }
    r.millis = now_ms() - t0;
    return r;
}

// ---- family dispatcher ----

IdentityInstance make_instance(const std::string& family,
                               const std::map<std::string, std::string>& params) {
    auto get = [&](const std::string& key) -> const std::string& {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("missing parameter '" + key + "' for " + family);
        return it->second;
    };
    auto geti = [&](const std::string& key) { return std::stoi(get(key)); };

    using namespace identities;
    if (family.rfind("BBB-4.", 0) == 0) {
        int c = std::stoi(family.substr(6));
        return gen_bbb(c, geti("m"), geti("n"));
    }
    if (family == "A1") return gen_substring_sum(1, geti("m"), geti("n"));
    if (family == "A2") return gen_substring_sum(2, geti("m"), geti("n"));
    if (family == "THM-2.2")
        return gen_thm22(parse_int_list(get("m")), parse_int_list(get("p")),
                         parse_rational(get("a")));
    if (family == "THM-2.3")
        return gen_thm23(parse_int_list(get("m")), parse_int_list(get("p")),
                         parse_rat_list(get("a")));
    if (family == "THM-2.4")
        return gen_thm24(parse_int_list(get("m")), parse_int_list(get("p")),
                         parse_rat_list(get("a")));
    if (family == "THM-3.1")
        return gen_thm31(parse_int_list(get("m")), parse_int_list(get("p")));
    if (family == "COR-3.2") return gen_cor32(parse_int_list(get("p")));
    if (family == "THM-3.4")
        return gen_thm34(parse_int_list(get("m")), parse_int_list(get("p")));
    if (family == "THM-5.1")
        return gen_thm51(parse_int_list(get("k")), parse_int_list(get("m")),
                         parse_int_list(get("p")));
    if (family == "THM-5.2")
        return gen_thm52(parse_int_list(get("k")), parse_int_list(get("p")),
                         parse_int_list(get("m")));
    if (family == "THM-5.5")
        return gen_thm55(parse_int_list(get("k")), parse_int_list(get("m")));
    if (family == "B4") return gen_b4(parse_int_list(get("m")), parse_int_list(get("p")));
    if (family == "B8-1")
        return gen_b8(1, geti("m1"), geti("m2"), parse_rational(get("a")));
    if (family == "B8-2")
        return gen_b8(2, geti("m1"), geti("m2"), parse_rational(get("a")));
    if (family == "INT-SER")
        return gen_integral_series(parse_index(get("k")), parse_int_list(get("l")));
    if (family == "LEM-2.6") {
        std::vector<Letter> letters;
        for (const Rational& a : parse_rat_list(get("w"))) letters.push_back(Letter{a});
        return gen_lemma26(letters);
    }
    if (family == "LEM-3.3")
        return gen_lemma33(geti("p"), parse_index(get("s")), geti("n"),
                           parse_rational(get("t")));
    throw std::invalid_argument("unknown identity family: " + family);
}

// ---- brute-force extension counter ----

long long brute_force_extension_count(const Poset& p) {
    const int n = p.size();
    if (n > 9) throw std::invalid_argument("brute-force counter limited to 9 nodes");
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    long long count = 0;
    do {
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (a != b && p.less(a, b) && pos[static_cast<size_t>(a)] >= pos[static_cast<size_t>(b)])
                    ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// ---- suites ----

namespace {

using identities::gen_b4;
using identities::gen_b8;
using identities::gen_bbb;
using identities::gen_cor32;
using identities::gen_integral_series;
using identities::gen_lemma26;
using identities::gen_lemma33;
using identities::gen_substring_sum;
using identities::gen_thm22;
using identities::gen_thm23;
using identities::gen_thm24;
using identities::gen_thm31;
using identities::gen_thm34;
using identities::gen_thm51;
using identities::gen_thm52;
using identities::gen_thm55;
using identities::invert_lemma54;

void run_numeric_batch(std::vector<IdentityInstance> instances, const VerifyOptions& opt,
                       std::vector<InstanceReport>& out) {
    int threads = opt.threads > 0 ? opt.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(instances.size()));
    std::mutex mu;
    size_t next = 0;
    std::vector<InstanceReport> local(instances.size());
    auto worker = [&]() {
        Evaluator ev({opt.prec, 16, opt.max_terms});
        while (true) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= instances.size()) return;
                i = next++;
            }
            local[i] = run_instance(instances[i], opt, &ev);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    out.insert(out.end(), local.begin(), local.end());
}

// exact checks -------------------------------------------------------------

InstanceReport check_stuffle_homomorphism(const VerifyOptions& opt, int pairs, int nmax) {
    IndexSampler rng(opt.seed);
    std::map<SignedIndex, std::vector<Rational>, IndexOrder> prefix_cache;
    auto prefix = [&](const SignedIndex& idx) -> const std::vector<Rational>& {
        auto it = prefix_cache.find(idx);
        if (it == prefix_cache.end())
            it = prefix_cache.emplace(idx, mhs_prefix(nmax, idx)).first;
        return it->second;
    };
    bool ok = true;
    for (int t = 0; t < pairs && ok; ++t) {
        SignedIndex u = rng.next_signed(3, 6);
        SignedIndex v = rng.next_signed(3, 6);
        FormalSum fs = stuffle(u, v);
        const auto& pu = prefix(u);
        const auto& pv = prefix(v);
        for (int n = 1; n <= nmax && ok; ++n) {
            Rational lhs = 0;
            for (const auto& [idx, c] : fs.terms()) lhs += c * prefix(idx)[static_cast<size_t>(n)];
            if (lhs != pu[static_cast<size_t>(n)] * pv[static_cast<size_t>(n)]) ok = false;
        }
    }
    return exact_report("EXACT-STUFFLE",
                        "pairs=" + std::to_string(pairs) + ",n<=" + std::to_string(nmax), ok);
}

InstanceReport check_star_expansion(const VerifyOptions& opt, int count, int nmax) {
    IndexSampler rng(opt.seed + 1);
    bool ok = true;
    for (int t = 0; t < count && ok; ++t) {
        SignedIndex k = rng.next_signed(4, 7);
        FormalSum st = star_expand(k);
        if (st.size() > 0 && st.coefficient_mass() != rat_pow(Rational(2), std::max(k.depth() - 1, 0)))
            ok = false;
        for (int n = 1; n <= nmax && ok; ++n)
            if (mhss_eval(n, k) != eval_formal_sum(n, st)) ok = false;
    }
    return exact_report("EXACT-STAR", "count=" + std::to_string(count) + ",n<=" + std::to_string(nmax), ok);
}

InstanceReport check_ky_truncation(const VerifyOptions& opt, int count, int N) {
    IndexSampler rng(opt.seed + 2);
    bool ok = true;
    for (int t = 0; t < count && ok; ++t) {
        SignedIndex k = rng.next_signed(3, 6);
        SignedIndex l = rng.next_signed(3, 6);
        FormalSum fs = ky_expand(k, l.exponent(0), l.sign(0), l.tail());
        Rational lhs = ky_truncated(N, k, l.exponent(0), l.sign(0), l.tail());
        if (lhs != eval_formal_sum(N, fs)) ok = false;
    }
    return exact_report("EXACT-KY-TRUNC",
                        "count=" + std::to_string(count) + ",N=" + std::to_string(N), ok);
}

InstanceReport check_lemma54(const VerifyOptions& opt, int count, int pmax) {
    IndexSampler rng(opt.seed + 3);
    bool ok = true;
    for (int t = 0; t < count && ok; ++t) {
        int P = rng.next_int(1, pmax);
        std::vector<std::vector<Rational>> A(static_cast<size_t>(P));
        for (int j = 1; j <= P; ++j) {
            A[static_cast<size_t>(j - 1)].resize(static_cast<size_t>(P));
            for (int p = j; p <= P; ++p)
                A[static_cast<size_t>(j - 1)][static_cast<size_t>(p - 1)] =
                    p == j ? Rational(1)
                           : rat(rng.next_int(-9, 9), rng.next_int(1, 7));
        }
        std::vector<Rational> C(static_cast<size_t>(P));
        for (int p = 0; p < P; ++p) C[static_cast<size_t>(p)] = rat(rng.next_int(-20, 20), rng.next_int(1, 9));
        std::vector<Rational> B = invert_lemma54(A, C);
        // forward substitution oracle: sum_j (-1)^{j+1} A_{j,p} B_j == C_p
        for (int p = 1; p <= P && ok; ++p) {
            Rational acc = 0;
            for (int j = 1; j <= p; ++j) {
                Rational term = A[static_cast<size_t>(j - 1)][static_cast<size_t>(p - 1)] *
                                B[static_cast<size_t>(j - 1)];
                acc += (j % 2 == 1) ? term : -term;
            }
            if (acc != C[static_cast<size_t>(p - 1)]) ok = false;
        }
    }
    return exact_report("EXACT-LEM-5.4",
                        "count=" + std::to_string(count) + ",p<=" + std::to_string(pmax), ok);
}

InstanceReport check_poset_counts(const VerifyOptions& opt, int count, int max_nodes) {
    IndexSampler rng(opt.seed + 4);
    bool ok = true;
    for (int t = 0; t < count && ok; ++t) {
        int n = rng.next_int(1, max_nodes);
        Poset p;
        for (int i = 0; i < n; ++i) p.add_node("x" + std::to_string(i), Rational(-1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_int(0, 3) == 0) p.add_cover(i, j);
        p.freeze();
        if (p.extension_count() != brute_force_extension_count(p)) ok = false;
    }
    return exact_report("POSET-COUNTS",
                        "count=" + std::to_string(count) + ",nodes<=" + std::to_string(max_nodes), ok);
}

// numeric families ----------------------------------------------------------

std::vector<IdentityInstance> bbb_grid(int mmax, int nmax) {
    std::vector<IdentityInstance> out;
    for (int c = 1; c <= 4; ++c)
        for (int m = 0; m <= mmax; ++m)
            for (int n = 0; n <= nmax; ++n) out.push_back(gen_bbb(c, m, n));
    return out;
}

std::vector<IdentityInstance> substring_grid(int mmax, int nmax) {
    std::vector<IdentityInstance> out;
    for (int w = 1; w <= 2; ++w)
        for (int m = 0; m <= mmax; ++m)
            for (int n = 0; n <= nmax; ++n) out.push_back(gen_substring_sum(w, m, n));
    return out;
}

std::vector<IdentityInstance> thm34_grid() {
    std::vector<IdentityInstance> out;
    for (int m1 = 1; m1 <= 2; ++m1)
        for (int m2 = 1; m2 <= 2; ++m2)
            for (int p1 = 0; p1 <= 2; ++p1) out.push_back(gen_thm34({m1, m2}, {p1}));
    for (int m1 = 1; m1 <= 2; ++m1)
        for (int m2 = 1; m2 <= 2; ++m2)
            for (int m3 = 1; m3 <= 2; ++m3)
                for (int p1 = 0; p1 <= 2; ++p1)
                    for (int p2 = 0; p2 <= 2; ++p2)
                        out.push_back(gen_thm34({m1, m2, m3}, {p1, p2}));
    return out;
}

std::vector<IdentityInstance> words_grid(const VerifyOptions& opt) {
    std::vector<IdentityInstance> out;
    const Rational half(1, 2), third(1, 3), mhalf(-1, 2), mone(-1);

    // polylog substitution expansion
    for (int m1 : {0, 1, 2})
        for (int m2 : {1, 2})
            for (int p1 : {0, 1, 2})
                out.push_back(gen_thm22({m1, m2}, {p1}, mone));
    out.push_back(gen_thm22({1, 1, 1}, {1, 1}, half));
    out.push_back(gen_thm22({0, 2, 1}, {2, 1}, half));
    out.push_back(gen_thm22({1, 2}, {2}, third));
    out.push_back(gen_thm22({2, 1}, {1}, mhalf));
    out.push_back(gen_thm22({0, 2}, {0}, half));  // double-collapse corner

    // reflection in polylog form
    for (int m1 : {0, 1, 2})
        for (int m2 : {1, 2})
            for (int p1 : {0, 1, 2}) out.push_back(gen_thm23({m1, m2}, {p1}, {half, half}));
    out.push_back(gen_thm23({1, 1}, {1}, {mone, half}));
    out.push_back(gen_thm23({1, 2}, {2}, {third, mhalf}));
    out.push_back(gen_thm23({1, 1, 1}, {1, 1}, {mone, mone, mone}));
    out.push_back(gen_thm23({0, 1, 2}, {1, 2}, {half, third, half}));

    // path reversal, general arguments
    for (int p1 : {1, 2})
        for (int m1 : {1, 2})
            for (int m2 : {1, 2}) out.push_back(gen_thm24({m1, m2}, {p1}, {mhalf, half}));
    out.push_back(gen_thm24({1, 1}, {2}, {mone, mone}));
    out.push_back(gen_thm24({1, 1, 1}, {1, 1}, {half, third, mhalf}));
    out.push_back(gen_thm24({1, 2, 1}, {2, 1}, {mone, half, third}));
    out.push_back(gen_thm24({1, 1, 1, 1}, {1, 1, 1}, {half, half, half, half}));
    out.push_back(gen_thm24({2, 1, 1}, {1, 2}, {mone, mone, mone}));

    // alternating specialization
    for (int p1 : {1, 2, 3})
        for (int m1 : {1, 2})
            for (int m2 : {1, 2}) out.push_back(gen_thm31({m1, m2}, {p1}));
    out.push_back(gen_thm31({1, 1, 1}, {1, 1}));
    out.push_back(gen_thm31({1, 2, 1}, {2, 1}));
    out.push_back(gen_thm31({2, 1, 2}, {1, 2}));
    out.push_back(gen_thm31({1, 1, 1, 1}, {1, 2, 1}));
    for (int p1 : {1, 2, 3, 4}) out.push_back(gen_cor32({p1}));
    out.push_back(gen_cor32({1, 1}));
    out.push_back(gen_cor32({2, 1}));
    out.push_back(gen_cor32({1, 2, 1}));

    // half-argument correspondence on sampled parameter words
    IndexSampler rng(opt.seed + 5);
    for (int t = 0; t < 20; ++t) {
        int k = rng.next_int(1, 3);
        std::vector<int> ms, ps;
        ms.push_back(rng.next_int(0, 2));
        for (int i = 0; i < k; ++i) {
            ps.push_back(rng.next_int(0, 2));
            ms.push_back(rng.next_int(1, 2));
        }
        out.push_back(gen_b4(ms, ps));
    }

    // log-weighted single integrals
    for (int m1 : {0, 1, 2})
        for (int m2 : {1, 2}) {
            out.push_back(gen_b8(1, m1, m2, mone));
            out.push_back(gen_b8(1, m1, m2, half));
            out.push_back(gen_b8(2, m1, m2, mhalf));
            out.push_back(gen_b8(2, m1, m2, half));
        }

    // reversal over convergent letters
    out.push_back(gen_lemma26({Letter{half}, Letter{half}}));
    out.push_back(gen_lemma26({Letter{half}, Letter{third}}));
    out.push_back(gen_lemma26({Letter{mhalf}, Letter{third}, Letter{half}}));
    out.push_back(gen_lemma26({Letter{mone}, Letter{half}, Letter{third}}));
    out.push_back(gen_lemma26({Letter{third}, Letter{mone}, Letter{mhalf}, Letter{half}}));
    return out;
}

std::vector<IdentityInstance> ky_grid() {
    std::vector<IdentityInstance> out;
    // circled-product reductions
    out.push_back(gen_thm55({1, 2}, {1, 1}));  // the printed closed-form case
    out.push_back(gen_thm55({1}, {1}));
    out.push_back(gen_thm55({2}, {1, 2}));
    out.push_back(gen_thm55({1, 1}, {2}));
    out.push_back(gen_thm55({0, 2}, {1, 1, 1}));
    out.push_back(gen_thm55({2, 1}, {2, 1}));
    out.push_back(gen_thm55({1, 1, 1}, {1, 1}));
    out.push_back(gen_thm55({0, 0, 3}, {2}));
    out.push_back(gen_thm55({3}, {1, 1}));
    out.push_back(gen_thm55({1, 2}, {2, 2}));
    // dual-shaped values against circled products
    out.push_back(gen_thm52({1}, {1}, {1}));
    out.push_back(gen_thm52({1, 2}, {1}, {1}));
    out.push_back(gen_thm52({2}, {2}, {1}));
    out.push_back(gen_thm52({1}, {1, 1}, {1, 1}));
    out.push_back(gen_thm52({1, 1}, {1, 2}, {0, 1}));
    out.push_back(gen_thm52({2}, {0, 1}, {1, 1}));
    out.push_back(gen_thm52({1, 2}, {2, 1}, {1, 2}));
    out.push_back(gen_thm52({1}, {2, 2}, {2, 1}));
    out.push_back(gen_thm52({0, 2}, {1, 1}, {1, 1}));
    out.push_back(gen_thm52({2, 1}, {1, 0, 1}, {1, 1, 1}));
    // the depth-r alternating generalization
    out.push_back(gen_thm51({0}, {1}, {1}));
    out.push_back(gen_thm51({1}, {1}, {1}));
    out.push_back(gen_thm51({1}, {2}, {2}));
    out.push_back(gen_thm51({0, 1}, {1}, {1}));
    out.push_back(gen_thm51({1, 1}, {1, 1}, {1, 1}));
    out.push_back(gen_thm51({2}, {1}, {0}));
    out.push_back(gen_thm51({0, 0}, {2}, {1}));
    out.push_back(gen_thm51({1, 0, 1}, {1}, {2}));
    out.push_back(gen_thm51({2, 1}, {2}, {1}));
    out.push_back(gen_thm51({1}, {1, 1}, {1, 0}));
    return out;
}

std::vector<IdentityInstance> poset_numeric_grid(const VerifyOptions& opt) {
    std::vector<IdentityInstance> out;
    out.push_back(gen_integral_series(parse_index("2,1"), {0, 2}));
    out.push_back(gen_integral_series(parse_index("-2,1"), {0, 2}));
    out.push_back(gen_integral_series(parse_index("2"), {1, 2}));
    out.push_back(gen_integral_series(parse_index("3"), {0, 2}));
    out.push_back(gen_integral_series(parse_index("2,1"), {1}));
    out.push_back(gen_integral_series(parse_index("-1,1"), {1, 2}));
    out.push_back(gen_integral_series(parse_index("-2"), {0, 3}));
    out.push_back(gen_integral_series(parse_index("2"), {0, 2, 2}));
    out.push_back(gen_integral_series(parse_index("-1,-1"), {1}));
    out.push_back(gen_integral_series(parse_index("1,2"), {1, 2}));

    // integrated parametric star sums
    const Rational half(1, 2), two5(2, 5);
    out.push_back(gen_lemma33(1, SignedIndex{}, 1, half));
    out.push_back(gen_lemma33(2, SignedIndex{}, 3, half));
    out.push_back(gen_lemma33(1, parse_index("2"), 4, half));
    out.push_back(gen_lemma33(2, parse_index("1,2"), 5, two5));
    out.push_back(gen_lemma33(3, parse_index("2,1"), 4, half));
    (void)opt;
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"exact-algebra", "bbb", "words", "thm34", "ky", "posets", "eval", "all"};
}

std::vector<InstanceReport> run_suite(const std::string& name, const VerifyOptions& opt) {
    std::vector<InstanceReport> out;
    bool all = name == "all";

    if (name == "exact-algebra" || all) {
        out.push_back(check_stuffle_homomorphism(opt, 200, 30));
        out.push_back(check_star_expansion(opt, 100, 30));
        out.push_back(check_ky_truncation(opt, 50, 30));
        out.push_back(check_lemma54(opt, 100, 8));
    }
    if (name == "bbb" || all) {
        auto grid = bbb_grid(2, 2);
        auto sub = substring_grid(3, 2);
        grid.insert(grid.end(), sub.begin(), sub.end());
        run_numeric_batch(std::move(grid), opt, out);
    }
    if (name == "words" || all) run_numeric_batch(words_grid(opt), opt, out);
    if (name == "thm34" || all) run_numeric_batch(thm34_grid(), opt, out);
    if (name == "ky" || all) run_numeric_batch(ky_grid(), opt, out);
    if (name == "posets" || all) {
        out.push_back(check_poset_counts(opt, 200, 7));
        run_numeric_batch(poset_numeric_grid(opt), opt, out);
    }
    if (name == "eval" || all) {
        // classical relations exercising independent evaluation routes
        std::vector<IdentityInstance> inst;
        auto classical = [&](const std::string& tag, Expression lhs, Expression rhs) {
            IdentityInstance i;
            i.family = "EVAL";
            i.params = tag;
            i.lhs = std::move(lhs);
            i.rhs = std::move(rhs);
            inst.push_back(std::move(i));
        };
        classical("zeta(2,1)=zeta(3)", make_mzv(parse_index("2,1")),
                  make_mzv(parse_index("3")));
        classical("zeta(2,1,1)=zeta(4)", make_mzv(parse_index("2,1,1")),
                  make_mzv(parse_index("4")));
        classical("zeta(2,2)=3/4 zeta(4)", make_mzv(parse_index("2,2")),
                  make_mzv(parse_index("4")).scaled(Rational(3, 4)));
        classical("zeta(bar2)=-1/2 zeta(2)", make_mzv(parse_index("-2")),
                  make_mzv(parse_index("2")).scaled(Rational(-1, 2)));
        classical("zeta(bar3)=-3/4 zeta(3)", make_mzv(parse_index("-3")),
                  make_mzv(parse_index("3")).scaled(Rational(-3, 4)));
        classical("stuffle square of zeta(2)",
                  make_mzv(parse_index("2")) * make_mzv(parse_index("2")),
                  expr_from_formal_sum(stuffle(parse_index("2"), parse_index("2"))));
        run_numeric_batch(std::move(inst), opt, out);
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
    sort_reports(out);
    return out;
}

std::string reports_to_json(const std::vector<InstanceReport>& reports,
                            const VerifyOptions& opt) {
    nlohmann::json j;
    j["prec"] = static_cast<long>(opt.prec);
    j["tol"] = opt.tol;
    j["seed"] = opt.seed;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json e;
        e["family"] = r.family;
        e["params"] = r.params;
        e["lhs_value"] = r.lhs_value;
        e["rhs_value"] = r.rhs_value;
        e["residual"] = r.residual;
        e["bound"] = r.bound;
        e["pass"] = r.pass;
        e["notes"] = r.notes;
        e["terms"] = r.lhs_terms + r.rhs_terms;
        arr.push_back(e);
    }
    j["instances"] = arr;
    j["all_pass"] = all_pass(reports);
    return j.dump(2);
}

bool all_pass(const std::vector<InstanceReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace mzv
