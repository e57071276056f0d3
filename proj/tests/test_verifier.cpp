#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "skewposet/sequences.hpp"
#include "skewposet/verifier.hpp"

using namespace skewposet;

namespace {

SkewClass C(const std::string& s) {
    return SkewClass::of(SkewDiagram::parse(s));
}

} // namespace

TEST_CASE("enumeration of basic classes") {
    auto one = enumerate_basic(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == C("1"));

    auto two = enumerate_basic(2);
    CHECK(std::set<SkewClass>(two.begin(), two.end()) ==
          std::set<SkewClass>{C("1"), C("2"), C("1,1"), SkewClass::staircase(2)});

    auto four = enumerate_basic(4);
    std::set<SkewClass> seen(four.begin(), four.end());
    CHECK(seen.size() == four.size());  // no duplicates
    CHECK(seen.count(C("2,1/1")) == 1);
    CHECK(seen.count(C("2,2/1")) == 1);
    CHECK(seen.count(SkewClass::staircase(4)) == 1);  // four disconnected boxes
    CHECK(seen.count(SkewClass::staircase(5)) == 0);
    for (const SkewClass& c : four) {
        CHECK(c.box_count() >= 1);
        CHECK(c.box_count() <= 4);
        for (const auto& comp : c.components())
            CHECK(comp.is_basic());
    }
    // every arrangement of every class re-canonicalizes to the class itself
    for (const SkewClass& c : four)
        for (const auto& arr : c.all_arrangements())
            CHECK(SkewClass::of(arr) == c);

    CHECK(enumerate_basic(3) == enumerate_basic(3));  // deterministic
    CHECK_THROWS_AS(enumerate_basic(0), Error);
}

TEST_CASE("enumeration is complete for two boxes") {
    // the only box sets with <= 2 boxes up to translation are: one box,
    // a domino (horizontal or vertical), two disconnected boxes
    CHECK(enumerate_basic(2).size() == 4);
}

TEST_CASE("lower cc bound") {
    CHECK(check_lower_cc(C("1")));
    CHECK(check_lower_cc(C("4,3,2,1/2,2")));
    CHECK(check_lower_cc(C("5,2")));
    for (int n = 1; n <= 5; ++n)
        CHECK(check_lower_cc(SkewClass::staircase(n)));
}

TEST_CASE("lower cc harness catches planted violations") {
    SkewClass c = SkewClass::staircase(3);  // needs cc >= (3, 4)
    std::map<Partition, std::int64_t> weak;
    weak[Partition::parse("3")] = 1;
    weak[Partition::parse("2,1")] = 2;
    std::string detail;
    CHECK_FALSE(check_lower_cc_against(c, SkewCharacter(3, std::move(weak)), &detail));
    CHECK(detail.find("cc = (2,3)") != std::string::npos);
    CHECK(detail.find("(3,4)") != std::string::npos);
}

TEST_CASE("pair bounds") {
    CHECK(check_pair_bounds(SkewClass::staircase(4)));
    CHECK(check_pair_bounds(C("4,3,2,1/2,2")));
    CHECK(check_pair_bounds(C("5,4,3,2,2/4,2,2,1")));
    CHECK_THROWS_AS(check_pair_bounds(C("5,2")), HypothesisNotMet);  // delta 1
    CHECK_THROWS_AS(check_pair_bounds(C("1")), HypothesisNotMet);
}

TEST_CASE("upper bounds, tight on the staircase classes") {
    for (int n = 1; n <= 5; ++n) {
        SkewClass c = SkewClass::staircase(n);
        CHECK(check_upper_bounds(c));
        SkewCharacter ch = decompose(c.arrangement());
        auto [a, b] = ch.cc_type();
        CHECK(a == p_count(n));
        CHECK(b == f_count(n));
        if (n >= 1)
            CHECK(ch.one_box_pairs() == g_count(n));
    }
    CHECK(check_upper_bounds(C("4,3,2,1/2,2")));
    CHECK(check_upper_bounds(C("3,1")));
}

TEST_CASE("reduction and symmetry checks on spot shapes") {
    CHECK(check_reduction(C("5,4,3,2,2/4,2,2,1")));
    CHECK(check_reduction(C("3,1")));
    CHECK(check_reduction(SkewClass::staircase(3)));
    CHECK(check_symmetry(C("4,3,2,1/2,2")));
    CHECK(check_symmetry(C("3,3,1/1")));
}

TEST_CASE("monotonicity sampling is seeded and clean") {
    std::vector<Violation> v1, v2;
    CHECK(check_monotonicity(42, 200, &v1));
    CHECK(check_monotonicity(42, 200, &v2));
    CHECK(v1 == v2);
    CHECK(v1.empty());
}

TEST_CASE("full sweep passes at five boxes") {
    SweepConfig cfg;
    cfg.max_boxes = 5;
    Report r = run_suite(cfg);
    CHECK(r.pass);
    CHECK(r.checks.size() == 6);
    for (const auto& c : r.checks)
        CHECK(c.violations.empty());
    // lower_cc examines every class; pairs skips delta < 2
    CHECK(r.checks[0].examined == static_cast<std::int64_t>(enumerate_basic(5).size()));
    CHECK(r.checks[1].examined < r.checks[0].examined);
    CHECK(r.to_text().find("PASS") != std::string::npos);
}

TEST_CASE("sweep reports are identical across job counts") {
    SweepConfig one, four;
    one.max_boxes = four.max_boxes = 4;
    one.parallel_jobs = 1;
    four.parallel_jobs = 4;
    Report a = run_suite(one), b = run_suite(four);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].examined == b.checks[i].examined);
        CHECK(a.checks[i].violations == b.checks[i].violations);
    }
    CHECK(a.pass == b.pass);
}

TEST_CASE("check subsets and json report") {
    SweepConfig cfg;
    cfg.max_boxes = 3;
    cfg.checks = {"lower_cc", "monotonicity"};
    cfg.monotonicity_samples = 50;
    Report r = run_suite(cfg);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].name == "lower_cc");
    CHECK(r.checks[1].name == "monotonicity");
    CHECK(r.checks[1].examined == 50);

    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["pass"] == true);
    CHECK(j["config"]["max_boxes"] == 3);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "lower_cc");
    CHECK(j["checks"][0]["violations"].empty());
}
