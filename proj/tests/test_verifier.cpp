#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "chen/invariants.hpp"
#include "chen/verifier.hpp"

using namespace chen;

namespace {

std::map<std::string, std::string> nonzero_traces(const CharacterTable& t,
                                                  const std::vector<Rational>& tv) {
    std::map<std::string, std::string> out;
    for (int i = 0; i < t.count(); ++i)
        if (!tv[i].is_zero()) out[t.character(i).label] = tv[i].str();
    return out;
}

}  // namespace

TEST_CASE("claim one: torus invariants away from the trivial line") {
    Verifier v(3);
    const CharacterTable& t = v.table();
    ConjugacyClaim c = v.build_claim_one();
    CHECK(c.left_idempotent);
    CHECK(c.right_idempotent);
    CHECK(c.conjugate);
    CHECK_FALSE(c.product_prerequisite.has_value());
    std::map<std::string, std::string> expect = {{"st(1)", "1"}, {"piL(2)", "1"}};
    CHECK(nonzero_traces(t, c.trace_left) == expect);
    CHECK(nonzero_traces(t, c.trace_right) == expect);
    // the left traces are exactly the nonsplit-torus invariant dimensions,
    // except at the trivial character where the complement cuts to zero
    for (int i = 0; i < t.count(); ++i) {
        long long d =
            (i == t.index_of_trivial()) ? 0 : dim_by_sum(t, SubgroupId::NonsplitTorus, i);
        CHECK(c.trace_left[i] == Rational(d));
    }
}

TEST_CASE("claim two: normalizer invariants split between the pieces") {
    Verifier v(3);
    const CharacterTable& t = v.table();
    ConjugacyClaim c = v.build_claim_two();
    CHECK(c.left_idempotent);
    CHECK(c.right_idempotent);
    CHECK(c.conjugate);
    REQUIRE(c.product_prerequisite.has_value());
    CHECK(*c.product_prerequisite);
    std::map<std::string, std::string> expect = {{"st(0)", "1"}, {"piL(2)", "1"}};
    CHECK(nonzero_traces(t, c.trace_left) == expect);
    CHECK(nonzero_traces(t, c.trace_right) == expect);
    for (int i = 0; i < t.count(); ++i) {
        bool triv = (i == t.index_of_trivial());
        long long left = triv ? 0
                              : dim_by_sum(t, SubgroupId::NonsplitNormalizer, i) +
                                    dim_by_sum(t, SubgroupId::BorelUpper, i);
        long long right = triv ? 0 : dim_by_sum(t, SubgroupId::SplitNormalizer, i);
        CHECK(c.trace_left[i] == Rational(left));
        CHECK(c.trace_right[i] == Rational(right));
    }
}

TEST_CASE("both claims hold at p = 5 with the expected trace support") {
    Verifier v(5);
    const CharacterTable& t = v.table();
    ConjugacyClaim one = v.build_claim_one();
    CHECK(one.conjugate);
    std::map<std::string, std::string> e1 = {
        {"st(2)", "1"}, {"pi(1,3)", "1"}, {"piL(4)", "1"}, {"piL(8)", "1"}};
    CHECK(nonzero_traces(t, one.trace_left) == e1);
    CHECK(nonzero_traces(t, one.trace_right) == e1);
    ConjugacyClaim two = v.build_claim_two();
    CHECK(two.conjugate);
    CHECK(two.product_prerequisite == std::optional<bool>(true));
    std::map<std::string, std::string> e2 = {{"st(0)", "1"}, {"st(2)", "1"}, {"piL(4)", "1"}};
    CHECK(nonzero_traces(t, two.trace_left) == e2);
    CHECK(nonzero_traces(t, two.trace_right) == e2);
}

TEST_CASE("the control pair is correctly reported as non-conjugate") {
    for (unsigned p : {3u, 5u}) {
        Verifier v(p);
        const CharacterTable& t = v.table();
        ConjugacyClaim c = v.build_negative_control();
        CHECK(c.left_idempotent);
        CHECK(c.right_idempotent);
        CHECK_FALSE(c.conjugate);
        CHECK_FALSE(c.certificate.has_value());
        // the Borel keeps one old vector, the torus keeps two
        int st0 = t.index_of_steinberg_trivial();
        CHECK(c.trace_left[st0] == Rational(1));
        CHECK(c.trace_right[st0] == Rational(2));
    }
}

TEST_CASE("conjugator certificates are found and verify exactly") {
    Verifier v(3);
    const GroupAlgebra& alg = v.algebra();
    for (int which : {1, 2}) {
        ConjugacyClaim c = which == 1 ? v.build_claim_one() : v.build_claim_two();
        SearchOutcome out = v.find_conjugator(c.left, c.right, 0, 50);
        CHECK_FALSE(out.trace_mismatch);
        CHECK(out.kernel_dimension == 42);
        REQUIRE(out.certificate.has_value());
        CHECK(out.certificate->attempts >= 1);
        CHECK(out.certificate->attempts <= 50);
        const AlgebraElement& u = out.certificate->u;
        const AlgebraElement& ui = out.certificate->u_inv;
        CHECK(alg.convolve(u, ui) == alg.identity());
        CHECK(alg.convolve(ui, u) == alg.identity());
        CHECK(alg.convolve(alg.convolve(u, c.left), ui) == c.right);
    }
}

TEST_CASE("searching an element against itself succeeds") {
    Verifier v(3);
    const GroupAlgebra& alg = v.algebra();
    AlgebraElement pr = alg.projector(SubgroupId::SplitTorus);
    SearchOutcome out = v.find_conjugator(pr, pr, 7, 50);
    REQUIRE(out.certificate.has_value());
    CHECK(alg.convolve(alg.convolve(out.certificate->u, pr), out.certificate->u_inv) == pr);
}

TEST_CASE("a trace mismatch short-circuits the search") {
    Verifier v(3);
    const GroupAlgebra& alg = v.algebra();
    SearchOutcome out = v.find_conjugator(alg.projector(SubgroupId::BorelUpper),
                                          alg.projector(SubgroupId::SplitTorus), 0, 50);
    CHECK(out.trace_mismatch);
    CHECK(out.attempts == 0);
    CHECK(out.kernel_dimension == -1);
    CHECK_FALSE(out.certificate.has_value());
}

TEST_CASE("verdicts do not depend on the choice of non-residue") {
    Verifier a(5, 2), b(5, 3);
    CHECK(a.group().epsilon() == 2);
    CHECK(b.group().epsilon() == 3);
    ConjugacyClaim ca = a.build_claim_one(), cb = b.build_claim_one();
    CHECK(ca.conjugate == cb.conjugate);
    CHECK(ca.trace_left == cb.trace_left);
    CHECK(ca.trace_right == cb.trace_right);
    ConjugacyClaim da = a.build_claim_two(), db = b.build_claim_two();
    CHECK(da.conjugate == db.conjugate);
    CHECK(da.trace_left == db.trace_left);
}

TEST_CASE("report assembly per task") {
    Verifier v(3);
    Options opt;
    opt.p = 3;

    opt.task = "tables";
    Report r = run_checks(v, opt);
    CHECK(!r.checks.empty());
    CHECK(r.claims.empty());
    for (const CheckResult& c : r.checks) CHECK(c.status == "pass");

    opt.task = "conjugacy";
    r = run_checks(v, opt);
    CHECK(r.claims.size() == 3);
    bool saw_control = false;
    for (const CheckResult& c : r.checks)
        if (c.name == "negative_control") {
            saw_control = true;
            CHECK(c.status == "pass");
        }
    CHECK(saw_control);

    opt.task = "all";
    r = run_checks(v, opt);
    bool saw_scope = false;
    for (const CheckResult& c : r.checks)
        if (c.name == "geometric_scope") {
            saw_scope = true;
            CHECK(c.status == "skipped");
            CHECK(c.detail.find("not machine-checked") != std::string::npos);
        }
    CHECK(saw_scope);
    // certificates are attached at this prime
    CHECK(r.claims[0].certificate.has_value());
    CHECK(r.claims[1].certificate.has_value());
    CHECK_FALSE(r.claims[2].certificate.has_value());
}

TEST_CASE("json output is deterministic and well formed") {
    Verifier v(3);
    Options opt;
    opt.p = 3;
    opt.task = "conjugacy";
    std::string s1 = render_json(run_checks(v, opt));
    std::string s2 = render_json(run_checks(v, opt));
    CHECK(s1 == s2);
    nlohmann::json j = nlohmann::json::parse(s1);
    CHECK(j["p"] == 3);
    CHECK(j["group_order"] == 48);
    CHECK(j["class_count"] == 8);
    CHECK(j["version"] == "1.0.0");
    CHECK(j["claims"].size() == 3);
    CHECK(j["claims"][0]["verdict"] == "conjugate");
    CHECK(j["claims"][2]["verdict"] == "not-conjugate");
    CHECK(j["claims"][0]["certificate"].is_null());  // not requested by this task
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("status"));
    }
    // trace vectors are printed as exact fractions
    const auto& tv = j["claims"][0]["trace_vector"];
    CHECK(tv.size() == 8);
    for (const auto& e : tv) {
        CHECK(e["left"].is_string());
        CHECK(e["left"].get<std::string>().find('/') != std::string::npos);
    }
}

TEST_CASE("text output carries a verdict footer") {
    Verifier v(3);
    Options opt;
    opt.p = 3;
    opt.task = "dims";
    std::string s = render_text(run_checks(v, opt));
    CHECK(s.find("result: PASS") != std::string::npos);
    CHECK(s.find("dims_three_way") != std::string::npos);
}

TEST_CASE("driver exit codes") {
    auto run = [](Options opt) {
        std::ostringstream out, err;
        int code = run_verifier(opt, out, err);
        return std::tuple<int, std::string, std::string>(code, out.str(), err.str());
    };
    Options opt;

    opt.p = 2;
    auto [c2, o2, e2] = run(opt);
    CHECK(c2 == 2);
    CHECK(e2.find("genus zero") != std::string::npos);

    opt.p = 9;
    CHECK(std::get<0>(run(opt)) == 2);
    opt.p = 17;
    CHECK(std::get<0>(run(opt)) == 2);

    opt.p = 3;
    opt.task = "bogus";
    CHECK(std::get<0>(run(opt)) == 2);
    opt.task = "tables";
    opt.output = "yaml";
    CHECK(std::get<0>(run(opt)) == 2);
    opt.output = "text";
    opt.max_attempts = 0;
    CHECK(std::get<0>(run(opt)) == 2);
    opt.max_attempts = 50;
    opt.epsilon = 4;  // a square mod 5
    opt.p = 5;
    CHECK(std::get<0>(run(opt)) == 2);
    opt.epsilon.reset();

    opt.p = 3;
    auto [c0, o0, e0] = run(opt);
    CHECK(c0 == 0);
    CHECK(o0.find("result: PASS") != std::string::npos);
    CHECK(e0.empty());

    opt.output = "json";
    auto [cj, oj, ej] = run(opt);
    CHECK(cj == 0);
    nlohmann::json j = nlohmann::json::parse(oj);
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("reports can be written to a file") {
    std::string path = "verifier_test_report.json";
    Options opt;
    opt.p = 3;
    opt.task = "tables";
    opt.output = "json";
    opt.out_path = path;
    std::ostringstream out, err;
    CHECK(run_verifier(opt, out, err) == 0);
    CHECK(out.str().empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["p"] == 3);
    in.close();
    std::remove(path.c_str());
}
