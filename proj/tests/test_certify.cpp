#include <doctest.h>

#include <sstream>

#include "mvspcurves/certify.hpp"

using namespace mvsp;

TEST_CASE("full certification of the smallest distinguished instance") {
    CertOutcome res = certify_instance(2, 3, {0, 2});
    CHECK(res.pass);
    CHECK(res.report["verdict"] == "pass");
    CHECK(res.report["curve"]["N_bruteforce"] == 33);
    CHECK(res.report["genus_agreement"]["gap_count"] == 6);
    CHECK(res.report["castle"] == true);
    CHECK(res.report["semigroup"]["gens"] == Json::array({4, 6, 10, 9, 13}));
    CHECK(res.report["field"]["modulus"] == Json::array({1, 1, 0, 1}));
    for (const auto& [name, v] : res.report["checks"].items()) {
        INFO(name);
        CHECK(v == "pass");
    }
}

TEST_CASE("reports are deterministic apart from timing") {
    CertifyOptions opt;
    opt.with_timing = false;
    Json a = certify_instance(2, 3, {}, opt).report;
    Json b = certify_instance(2, 3, {}, opt).report;
    CHECK(a.dump() == b.dump());

    CertifyOptions timed;
    Json c = certify_instance(2, 3, {}, timed).report;
    c.erase("timing_ms");
    CHECK(a.dump() == c.dump());
}

TEST_CASE("size bounds surface as skipped, never pass") {
    CertifyOptions opt;
    opt.bounds = EnumBounds::all(16);
    CertOutcome res = certify_instance(2, 5, {}, opt);
    CHECK(!res.pass);
    CHECK(!res.any_fail);
    CHECK(res.any_skipped);
    CHECK(res.report["verdict"] == "incomplete");
    CHECK(res.report["checks"]["point_count"] == "skipped");
    CHECK(res.report["checks"]["value_set"] == "skipped");
    // checks that need no enumeration still ran
    CHECK(res.report["checks"]["pole_orders"] == "pass");
    CHECK(res.report["checks"]["structure"] == "pass");
}

TEST_CASE("non-distinguished profiles certify the applicable battery") {
    CertOutcome res = certify_instance(3, 3, {0, 1, 2});
    CHECK(res.pass);
    CHECK(!res.report.contains("semigroup"));
    CHECK(!res.report.contains("valuation"));
    CHECK(res.report["checks"]["point_count"] == "pass");
}

TEST_CASE("sweep table") {
    SweepOptions so;
    so.q_list = {2};
    so.n_min = 3;
    so.n_max = 5;
    std::string csv = sweep_csv(so);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line ==
          "q,n,r_list,deg_f,deg_u,N_formula,N_bruteforce,genus_formula,genus_semigroup,"
          "mvsp_ok,symmetric,telescopic,castle,ratio_N_over_g");
    std::vector<std::string> rows;
    while (std::getline(is, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "2,3,[0;2],6,5,33,33,6,6,1,1,1,1,5.5");
    CHECK(rows[1] == "2,4,[0;3],12,9,129,129,28,28,1,1,1,1,4.607142857");
    CHECK(rows[2] == "2,5,[0;3],20,9,513,513,60,60,1,1,1,1,8.55");
}

TEST_CASE("sweep over all profiles includes the degenerate rows") {
    SweepOptions so;
    so.q_list = {2};
    so.n_min = 3;
    so.n_max = 3;
    so.all_profiles = true;
    std::string csv = sweep_csv(so);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    std::vector<std::string> rows;
    while (std::getline(is, line)) rows.push_back(line);
    REQUIRE(rows.size() == 4);  // subsets of {1, 2} prefixed with 0
    CHECK(rows[0].substr(0, 8) == "2,3,[0],");
    CHECK(rows[1].substr(0, 10) == "2,3,[0;1],");
    CHECK(rows[2].substr(0, 12) == "2,3,[0;1;2],");
    CHECK(rows[3].substr(0, 10) == "2,3,[0;2],");
    // gcd(delta, n) != 1 for [0]: genus columns degrade to NA
    CHECK(rows[0].find(",NA,") != std::string::npos);
}

TEST_CASE("empty sweep emits only the header") {
    SweepOptions so;
    std::string csv = sweep_csv(so);  // empty q list
    CHECK(csv.find('\n') == csv.size() - 1);
}

TEST_CASE("big integers serialize as strings only past 64 bits") {
    CHECK(json_int(Int(33)) == 33);
    Int big = int_pow(Int(2), 100);
    Json j = json_int(big);
    CHECK(j.is_string());
    CHECK(j == big.str());
}

TEST_CASE("text rendering derives from the report") {
    CertifyOptions opt;
    opt.with_timing = false;
    Json rep = certify_instance(2, 3, {}, opt).report;
    std::string text = render_text(rep);
    CHECK(text.find("verdict: pass") != std::string::npos);
    CHECK(text.find("N_bruteforce: 33") != std::string::npos);
}
