#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzv/verify.hpp"

using namespace mzv;

TEST_CASE("instance construction from parameter maps") {
    IdentityInstance a = make_instance("BBB-4.1", {{"m", "0"}, {"n", "0"}});
    CHECK(a.family == "BBB-4.1");
    IdentityInstance b = make_instance("THM-2.2", {{"m", "(1,1)"}, {"p", "(1)"}, {"a", "-1"}});
    CHECK(b.family == "THM-2.2");
    CHECK_THROWS(make_instance("NOPE", {}));
    CHECK_THROWS(make_instance("BBB-4.1", {{"m", "0"}}));
}

TEST_CASE("reports are deterministic at fixed precision and seed") {
    VerifyOptions opt;
    opt.tol = 1e-20;
    IdentityInstance inst = make_instance("BBB-4.1", {{"m", "0"}, {"n", "0"}});
    InstanceReport r1 = run_instance(inst, opt);
    InstanceReport r2 = run_instance(inst, opt);
    CHECK(r1.pass);
    CHECK(r1.lhs_value == r2.lhs_value);
    CHECK(r1.rhs_value == r2.rhs_value);
    CHECK(r1.residual == r2.residual);
    std::string j1 = reports_to_json({r1}, opt);
    std::string j2 = reports_to_json({r2}, opt);
    CHECK(j1 == j2);
}

TEST_CASE("exact algebra suite") {
    VerifyOptions opt;
    auto reports = run_suite("exact-algebra", opt);
    for (const auto& r : reports) {
        CAPTURE(r.family);
        CHECK(r.pass);
    }
}

TEST_CASE("suite names are stable") {
    auto names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "bbb") != names.end());
    CHECK(std::find(names.begin(), names.end(), "exact-algebra") != names.end());
    VerifyOptions opt;
    CHECK_THROWS(run_suite("not-a-suite", opt));
}

TEST_CASE("sampler determinism") {
    IndexSampler a(99), b(99);
    for (int t = 0; t < 50; ++t) CHECK(a.next_signed(4, 8) == b.next_signed(4, 8));
}
