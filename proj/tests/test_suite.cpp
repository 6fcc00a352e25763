#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "sofic/suite.hpp"

using namespace sofic;

namespace {

Status status(const PropertyReport& r, std::string_view name) {
    const auto* p = r.find(name);
    REQUIRE(p);
    return p->status;
}

}  // namespace

TEST_CASE("even shift satisfies the AFT implications") {
    auto r = run_property_suite(fixtures::even(), "even");
    CHECK(r.count(Status::fail) == 0);
    CHECK_FALSE(r.reproducer);
    CHECK(status(r, "aft_implies_reducible_krieger") == Status::pass);
    CHECK(status(r, "aft_implies_reducible_past_set") == Status::pass);
    CHECK(status(r, "reducible_krieger_without_aft") == Status::skip);
    CHECK(status(r, "past_partition_oracle") == Status::pass);
}

TEST_CASE("bfg skips the AFT implications") {
    auto r = run_property_suite(fixtures::bfg(), "bfg");
    CHECK(r.count(Status::fail) == 0);
    CHECK(status(r, "aft_implies_reducible_krieger") == Status::skip);
    CHECK(status(r, "strictly_sofic_has_diverging_word") == Status::pass);
    CHECK(status(r, "diverging_word_not_synchronising") == Status::pass);
    CHECK(status(r, "diverging_word_class_repeats") == Status::pass);
}

TEST_CASE("jsb records a reducible Krieger cover without AFT") {
    auto r = run_property_suite(fixtures::jsb(), "jsb");
    CHECK(r.count(Status::fail) == 0);
    CHECK(status(r, "reducible_krieger_without_aft") == Status::pass);
}

TEST_CASE("one-sided inputs skip two-sided properties") {
    auto r = run_property_suite(fixtures::even().with_sidedness(Sidedness::one_sided), "even one-sided");
    CHECK(r.count(Status::fail) == 0);
    CHECK(status(r, "aft_implies_reducible_krieger") == Status::skip);
}

TEST_CASE("resource caps turn into skips") {
    SuiteOptions o;
    o.limits.max_subsets = 2;
    auto r = run_property_suite(fixtures::zshift(), "z", o);
    CHECK(r.count(Status::fail) == 0);
    CHECK(r.count(Status::skip) > 0);
    auto report = check_presentation(fixtures::zshift(), "z", o);
    CHECK(report.capped());
}

TEST_CASE("corpus check passes and serialises stably") {
    auto a = check_corpus();
    CHECK(a.ok());
    CHECK_FALSE(a.capped());
    CHECK(a.entries.size() == corpus().size());
    auto j = check_report_to_json(a);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["expectation_failures"] == 0);
    CHECK(check_report_to_json(check_corpus()).dump() == j.dump());
}

TEST_CASE("random batches pass") {
    auto general = check_random(40, 7);
    CHECK(general.ok());
    RandomSpec lr;
    lr.left_resolving = true;
    lr.edge_density = 0.15;
    auto resolving = check_random(40, 7, {}, lr);
    CHECK(resolving.ok());
    CHECK(check_report_to_json(general)["summary"]["subjects"] == 40);
}
