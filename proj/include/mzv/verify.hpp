#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/evaluator.hpp"
#include "mzv/identities.hpp"

namespace mzv {

struct VerifyOptions {
    mpfr_prec_t prec = 128;
    double tol = 1e-20;
    long max_terms = 200000;
    unsigned long seed = 20240915;
    int threads = 0;  // 0 = hardware concurrency
    std::string json_path;
};

struct InstanceReport {
    std::string family;
    std::string params;
    std::string lhs_value;
    std::string rhs_value;
    std::string residual;  // |lhs - rhs| as a decimal string
    std::string bound;     // certified bound on the residual error
    bool pass = false;
    std::string notes;
    long millis = 0;
    size_t lhs_terms = 0;
    size_t rhs_terms = 0;
};

// Evaluate one instance at the given precision/tolerance.
InstanceReport run_instance(const IdentityInstance& inst, const VerifyOptions& opt,
                            Evaluator* shared_eval = nullptr);

std::vector<std::string> suite_names();

// Run a named suite (exact checks run exact; numeric instances fan out to a
// worker pool). Reports come back sorted by (family, params).
std::vector<InstanceReport> run_suite(const std::string& name, const VerifyOptions& opt);

// Build a single instance from CLI-style parameters.
IdentityInstance make_instance(const std::string& family,
                               const std::map<std::string, std::string>& params);

std::string reports_to_json(const std::vector<InstanceReport>& reports,
                            const VerifyOptions& opt);

bool all_pass(const std::vector<InstanceReport>& reports);

// Independent linear-extension counter (permutation filter); oracle for the
// poset engine, usable up to ~8 nodes.
long long brute_force_extension_count(const Poset& p);

// Deterministic random index streams shared by suites and acceptance.
class IndexSampler {
public:
    explicit IndexSampler(unsigned long seed);
    SignedIndex next_signed(int max_depth, int max_weight, bool allow_empty = false);
    SignedIndex next_positive(int max_depth, int max_weight, bool allow_empty = false);
    int next_int(int lo, int hi);

private:
    unsigned long long state_;
    unsigned long long next_raw();
};

}  // namespace mzv
