#include "automorph/checks.hpp"
#include "doctest.h"

using namespace automorph;

TEST_CASE("pure suites run without fixtures and pass") {
    SuiteOptions o;
    o.fixture_file = "/nonexistent/fixture.jsonl";
    for (const char* s : {"exponents", "momentlab", "specfun"}) {
        RunReport r = run_suite(s, o);
        CHECK(r.passed());
        CHECK(r.checks.size() > 10);
        for (const auto& c : r.checks) CHECK_FALSE(c.oracle.empty());
    }
    CHECK_THROWS_AS(run_suite("forms", o), FixtureMissing);
    CHECK_THROWS_AS(run_suite("bogus", o), std::invalid_argument);
}

TEST_CASE("failed comparisons carry both sides") {
    Check c = compare_check("x", "oracle", 1.0, 2.0, 1e-3);
    CHECK_FALSE(c.pass);
    CHECK(c.detail.find("value") != std::string::npos);
    CHECK(c.detail.find("oracle") != std::string::npos);
    RunReport r{"demo", {c}, 0.0};
    CHECK(format_table(r).find("FAIL") != std::string::npos);
    CHECK(reports_json({r}).find("\"status\": \"fail\"") != std::string::npos);
}
