#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hypmet/harness.hpp"
#include "hypmet/numeric.hpp"
#include "hypmet/parallel.hpp"
#include "hypmet/sampling.hpp"

using namespace hypmet;

TEST_CASE("registry shape") {
    const auto& R = registry();
    CHECK(R.size() >= 18);
    std::set<std::string> ids;
    for (const auto& c : R) {
        CHECK(!c.anchor.empty());
        CHECK((c.section == 2 || c.section == 3));
        ids.insert(c.id);
    }
    CHECK(ids.size() == R.size()); // unique ids

    // convex-scope cases reject the punctured plane
    Domain punct = Domain::punctured_space(Point(0, 0));
    for (const auto& c : R)
        if (c.id.rfind("convex_", 0) == 0) CHECK(!c.in_scope(punct));
}

TEST_CASE("run_case on the ball") {
    const auto& R = registry();
    const InequalityCase* jstar_le_s = nullptr;
    for (const auto& c : R)
        if (c.id == "jstar_le_s") jstar_le_s = &c;
    REQUIRE(jstar_le_s != nullptr);

    Domain B = Domain::ball(Point(0, 0), 1.0);
    VerificationReport rep = run_case(*jstar_le_s, B, 2000, 42);
    CHECK(rep.pass);
    CHECK(rep.max_violation <= 0);
    CHECK(rep.samples == 2000);
    CHECK(rep.domain == "ball:c=0,0;r=1");

    // out-of-scope domain is rejected
    const InequalityCase* ball_case = nullptr;
    for (const auto& c : R)
        if (c.id == "ball_s_le_p") ball_case = &c;
    REQUIRE(ball_case != nullptr);
    CHECK_THROWS_AS(run_case(*ball_case, Domain::strip(), 100, 42), std::invalid_argument);
}

TEST_CASE("sharpness suite regressions") {
    auto reports = sharpness_suite();
    CHECK(reports.size() >= 9);
    for (const auto& r : reports) {
        CAPTURE(r.case_id);
        CHECK(r.pass);
    }
}

TEST_CASE("stratified sampler quotas") {
    for (const Domain& G :
         {Domain::ball(Point(0, 0), 1.0), Domain::strip(), Domain::half_space(2)}) {
        CAPTURE(G.descriptor());
        long near_b = 0, near_c = 0;
        const long n = 1000;
        for (long i = 0; i < n; ++i) {
            SplitMix64 rng = stream_for(42, "quota:" + G.descriptor(), i);
            auto pr = sample_pair(G, rng, stratum_for_index(i));
            double scale = G.scale();
            if (std::min(G.boundary_distance(pr.x), G.boundary_distance(pr.y)) < 0.01 * scale)
                ++near_b;
            if (dist(pr.x, pr.y) < 0.01 * scale) ++near_c;
        }
        CHECK(near_b >= n / 10);
        CHECK(near_c >= n / 10);
    }
}

TEST_CASE("reports are deterministic") {
    const auto& R = registry();
    const InequalityCase* c = nullptr;
    for (const auto& cc : R)
        if (cc.id == "s_le_2p") c = &cc;
    REQUIRE(c != nullptr);
    Domain B = Domain::ball(Point(0, 0), 1.0);

    thread_cap().store(2);
    VerificationReport a = run_case(*c, B, 500, 42);
    thread_cap().store(1);
    VerificationReport b = run_case(*c, B, 500, 42);
    thread_cap().store(0);
    VerificationReport d = run_case(*c, B, 500, 42);

    std::string ja = report_json({a});
    CHECK(ja == report_json({b}));
    CHECK(ja == report_json({d})); // byte-identical regardless of thread count
}

TEST_CASE("emit_report formats") {
    CHECK(report_json({}) == "[]\n");

    VerificationReport r;
    r.case_id = "demo";
    r.domain = "ball:c=0,0;r=1";
    r.samples = 10;
    r.seed = 42;
    r.max_violation = -0.123456789012345;
    r.pass = true;
    Witness w;
    w.x = Point(0.1, 0.2);
    w.y = Point(0.3, 0.4);
    w.lhs = 1.0 / 3.0;
    w.rhs = 0.5;
    r.witnesses.push_back(w);

    std::string js = report_json({r});
    auto parsed = nlohmann::json::parse(js);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["case"] == "demo");
    CHECK(parsed[0]["domain"] == "ball:c=0,0;r=1");
    CHECK(parsed[0]["samples"] == 10);
    CHECK(parsed[0]["seed"] == 42);
    CHECK(parsed[0]["verdict"] == "pass");
    REQUIRE(parsed[0]["witnesses"].size() == 1);
    CHECK(parsed[0]["witnesses"][0]["x"].size() == 2);
    CHECK(parsed[0]["witnesses"][0]["lhs"].get<double>() == doctest::Approx(1.0 / 3.0));

    // CSV and JSON carry the same numbers to 12 significant digits
    std::string cs = report_csv({r});
    std::istringstream lines(cs);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "case,domain,samples,seed,max_violation,witnesses,verdict");
    double csv_mv = 0;
    {
        // the quoted domain field may contain commas; count from the end
        std::vector<std::string> fields;
        std::istringstream fs(row);
        std::string tok;
        while (std::getline(fs, tok, ',')) fields.push_back(tok);
        REQUIRE(fields.size() >= 3);
        csv_mv = std::stod(fields[fields.size() - 3]);
    }
    double json_mv = parsed[0]["max_violation"].get<double>();
    // CSV rounds to 12 significant digits; half an ulp of the 12th digit
    CHECK(std::abs(csv_mv - json_mv) <= 5e-12 * std::abs(json_mv));

    emit_report({r}, "json", "harness_report_test.json");
    std::ifstream f("harness_report_test.json");
    CHECK(f.good());
    std::remove("harness_report_test.json");
    CHECK_THROWS_AS(emit_report({r}, "xml", "x.xml"), std::invalid_argument);
}

TEST_CASE("suite selection") {
    HarnessConfig cfg;
    cfg.samples = 400;
    cfg.seeds = {42};

    auto one = run_suite("s_le_2jstar", cfg);
    CHECK(one.size() == 6); // all six suite domains are in scope
    for (const auto& r : one) {
        CAPTURE(r.domain);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(run_suite("no_such_case", cfg), std::invalid_argument);

    auto sharp = run_suite("sharpness", cfg);
    for (const auto& r : sharp) CHECK(r.pass);
}

TEST_CASE("lawcos formula limits") {
    for (double t : {0.1, 0.5, 2.0})
        CHECK(lawcos_rhs(t, 0.0) == doctest::Approx(t / (2 + t)).epsilon(1e-15));
    CHECK(lawcos_rhs(0.7, kPi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lawcos_rhs(0.0, 1.0) == 0.0);
}

TEST_CASE("default suite domains") {
    auto doms = default_suite_domains();
    CHECK(doms.size() == 6);
    CHECK(doms[0].kind() == DomainKind::Ball);
    CHECK(doms[5].kind() == DomainKind::KochPolygon);
    CHECK(doms[5].koch_depth() == 6);
}
