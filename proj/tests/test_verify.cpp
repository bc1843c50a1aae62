#include <catch_amalgamated.hpp>

#include <orbikit/verify.hpp>

using namespace orbikit;

namespace {

const Claim& find(const VerificationReport& r, const std::string& id)
{
    for (const auto& c : r.claims)
        if (c.id == id) return c;
    FAIL("no claim " << id);
    throw;
}

}  // namespace

TEST_CASE("all cases pass at both precisions")
{
    for (const auto& r : verify_all<128>()) {
        INFO(r.to_text());
        CHECK(r.pass());
    }
    for (const auto& r : verify_all<256>()) {
        INFO(r.to_text());
        CHECK(r.pass());
    }
}

TEST_CASE("sqrt21 orbifold case claims")
{
    auto r = verify_lemma51();
    CHECK(find(r, "iv.quadratic_residual").computed == "0");
    CHECK(find(r, "iv.minpoly").computed == "q^4 - 5*q^2 + 7");
    CHECK(find(r, "v.constant_term").computed == "7");
    CHECK(find(r, "v.obstruction").computed == "obstruction_report");
}

TEST_CASE("perturbing b breaks the unimodularity claim")
{
    auto r = verify_lemma51<128>({1e-3});
    CHECK_FALSE(r.pass());
    CHECK_FALSE(find(r, "i.abs_b").pass);
    CHECK(find(r, "iv.quadratic_residual").pass);
}

TEST_CASE("tetrahedral case claims")
{
    auto r = verify_lemma53();
    CHECK(find(r, "i.theta=0.modulus").pass);
    CHECK(find(r, "ii.nonunit.sqrt(3)").claim.find("q^2 - 3") != std::string::npos);
    CHECK(find(r, "ii.nonunit.omega sqrt(3)").claim.find("q^4 + 3*q^2 + 9") != std::string::npos);
    CHECK(find(r, "iii.case2_traces").pass);
}

TEST_CASE("degree and slope case claims")
{
    auto r = verify_thm2();
    CHECK(find(r, "i.n").computed == "{4}");
    CHECK(find(r, "ii.count").computed == "10");
    CHECK(find(r, "v.n=4").computed == "(1,0)");
}

TEST_CASE("reports are reproducible")
{
    auto dump = [] {
        std::string s;
        for (const auto& r : verify_all<128>()) s += r.to_json().dump(2);
        return s;
    };
    CHECK(dump() == dump());
}
