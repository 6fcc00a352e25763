#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <iterator>
#include <set>

#include "fixtures.hpp"
#include "sofic/corpus.hpp"
#include "sofic/error.hpp"
#include "sofic/io.hpp"

using namespace sofic;

TEST_CASE("corpus entries in order") {
    std::vector<std::string> names;
    for (const auto& e : corpus()) {
        names.push_back(e.name);
        CHECK(e.presentation.is_essential());
        CHECK_FALSE(e.description.empty());
    }
    CHECK(names == std::vector<std::string>{"full_shift", "golden_mean", "even_shift", "bfg", "jsb", "z_shift"});
    CHECK_FALSE(corpus_entry("nope"));
}

TEST_CASE("every expectation holds") {
    for (const auto& e : corpus()) {
        for (const auto& x : e.expected) {
            CAPTURE(e.name);
            CAPTURE(x.metric);
            CHECK(evaluate_metric(e, x.metric) == x.expected);
            CHECK_FALSE(x.source.empty());
        }
    }
}

TEST_CASE("presentations agree with their forbidden factors") {
    for (const auto& e : corpus()) {
        CAPTURE(e.name);
        if (e.ends_forbidden) {
            CHECK(e.validation_length > 0);
            CHECK_FALSE(validate_against_forbidden(e));
        }
    }
    auto z = fixtures::entry("z_shift");
    CHECK(z.validation_length >= 12);
}

TEST_CASE("forbidden-factor validation catches a wrong presentation") {
    auto e = fixtures::entry("even_shift");
    e.presentation = fixtures::golden();
    CHECK(validate_against_forbidden(e));
}

TEST_CASE("bundled data files match the corpus") {
    for (const auto& e : corpus()) {
        CAPTURE(e.name);
        std::ifstream in(std::string(SOFIC_DATA_DIR) + "/" + e.name + ".json");
        REQUIRE(in);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(parse_presentation(text) == e.presentation);
    }
}

TEST_CASE("metrics are known by name") {
    auto e = fixtures::entry("even_shift");
    for (const auto& m : metric_names()) {
        CAPTURE(m);
        CHECK_NOTHROW(evaluate_metric(e, m));
    }
    CHECK_THROWS_AS(evaluate_metric(e, "nope"), Error);
}

TEST_CASE("random presentations are reproducible and shaped") {
    RandomSpec spec;
    std::set<std::string> distinct;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        spec.seed = seed;
        auto p = random_presentation(spec);
        CHECK(to_json_text(p) == to_json_text(random_presentation(spec)));
        CHECK(p.is_essential());
        CHECK(p.vertex_count() <= spec.max_vertices);
        CHECK(p.alphabet().size() <= spec.max_symbols);
        CHECK(p.unused_symbols().empty());
        distinct.insert(to_json_text(p));
    }
    CHECK(distinct.size() > 25);
}

TEST_CASE("left-resolving random mode") {
    RandomSpec spec;
    spec.left_resolving = true;
    spec.edge_density = 0.15;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        spec.seed = seed;
        CHECK(resolving_check(random_presentation(spec), Side::left));
    }
}

TEST_CASE("random generator gives up after its retries") {
    RandomSpec spec;
    spec.edge_density = 0.0;
    spec.max_retries = 3;
    try {
        random_presentation(spec);
        FAIL("empty graphs accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_cap);
    }
}
