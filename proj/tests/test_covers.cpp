#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "sofic/covers.hpp"
#include "sofic/error.hpp"
#include "sofic/language.hpp"
#include "sofic/structure.hpp"

using namespace sofic;
using fixtures::make;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::internal;
}

CoverOptions exact() {
    CoverOptions o;
    o.exact_language = true;
    return o;
}

}  // namespace

TEST_CASE("even shift covers") {
    auto p = fixtures::even();
    auto k = left_krieger_cover(p, exact());
    CHECK(k.graph.vertex_count() == 3);
    CHECK(k.graph.edge_count() == 5);
    CHECK(resolving_check(k.graph, Side::left));
    CHECK(is_reducible(k.graph));
    auto ref = fixtures::entry("even_shift").reference_krieger;
    REQUIRE(ref);
    CHECK(labelled_isomorphic(k.graph, *ref));

    auto ps = past_set_cover(p, exact());
    CHECK(labelled_isomorphic(ps.graph, k.graph));

    auto f = left_fischer_cover(p, exact());
    CHECK(f.graph.vertex_count() == 2);
    CHECK(f.graph.edge_count() == 3);
    CHECK_FALSE(is_reducible(f.graph));
    for (std::size_t v = 0; v < f.graph.vertex_count(); ++v) {
        CHECK(f.synchronising[v]);
        CHECK(f.witness[v].has_value());
    }
}

TEST_CASE("vertex names use nonempty witnesses") {
    auto k = left_krieger_cover(fixtures::even());
    CHECK(k.graph.find_vertex("P(0)").has_value());
    CHECK(k.graph.find_vertex("P(1)").has_value());
    CHECK(k.graph.find_vertex("P(01)").has_value());
    CHECK_FALSE(k.graph.find_vertex("P(ε)").has_value());
}

TEST_CASE("bfg Krieger cover is its Fischer cover") {
    auto p = fixtures::bfg();
    auto k = left_krieger_cover(p, exact());
    auto f = left_fischer_cover(p, exact());
    CHECK(k.graph.vertex_count() == 2);
    CHECK(labelled_isomorphic(k.graph, f.graph));
    CHECK_FALSE(is_reducible(k.graph));
}

TEST_CASE("Z shift past set and Krieger covers differ") {
    auto p = fixtures::zshift();
    auto k = left_krieger_cover(p);
    auto ps = past_set_cover(p);
    CHECK(ps.graph.vertex_count() == 5);
    CHECK(is_reducible(ps.graph));
    CHECK(k.graph.vertex_count() == 4);
    CHECK_FALSE(is_reducible(k.graph));
    auto phi = subgraph_embedding(k, ps);
    REQUIRE(phi);
    for (std::size_t v = 0; v < phi->size(); ++v) {
        CHECK(k.representative_subset[v] == ps.representative_subset[(*phi)[v]]);
    }
}

TEST_CASE("covers of SFTs and the full shift") {
    auto full = left_krieger_cover(fixtures::full());
    CHECK(full.graph.vertex_count() == 1);
    CHECK(full.graph.edge_count() == 2);
    auto golden = left_fischer_cover(fixtures::golden(), exact());
    CHECK(golden.graph.vertex_count() == 2);
    CHECK(golden.graph.edge_count() == 3);
}

TEST_CASE("every cover is left-resolving and presents the same shift") {
    for (const auto& e : corpus()) {
        CAPTURE(e.name);
        for (auto kind : {CoverKind::left_krieger, CoverKind::past_set, CoverKind::left_fischer}) {
            auto c = build_cover(e.presentation, kind, exact());
            CHECK(resolving_check(c.graph, Side::left));
            CHECK_FALSE(language_mismatch(c.graph, e.presentation, std::nullopt));
        }
        for (auto kind : {CoverKind::right_krieger, CoverKind::right_fischer}) {
            auto c = build_cover(e.presentation, kind, exact());
            CHECK(resolving_check(c.graph, Side::right));
            CHECK_FALSE(language_mismatch(c.graph, e.presentation, std::nullopt));
        }
    }
}

TEST_CASE("right covers of the even shift") {
    auto f = right_cover(fixtures::even(), CoverKind::right_fischer);
    CHECK(f.graph.vertex_count() == 2);
    CHECK(f.kind == CoverKind::right_fischer);
    auto k = right_cover(fixtures::even(), CoverKind::right_krieger);
    CHECK(k.graph.vertex_count() == 3);
}

TEST_CASE("ray and word identifications") {
    auto p = fixtures::zshift();
    CHECK(labelled_isomorphic(ray_word_cover(p).graph, left_krieger_cover(p).graph));
    CHECK(labelled_isomorphic(word_ray_cover(p).graph, past_set_cover(p).graph));
    CHECK_FALSE(ray_word_cover(p).note.empty());
}

TEST_CASE("cover preconditions") {
    auto one = fixtures::even().with_sidedness(Sidedness::one_sided);
    CHECK(kind_of([&] { left_krieger_cover(one); }) == ErrorKind::precondition);
    CHECK(kind_of([] { left_fischer_cover(fixtures::reducible()); }) == ErrorKind::precondition);
    auto loose = make({"a"}, {{"s", "a", "v"}, {"v", "a", "v"}});
    CHECK(kind_of([&] { past_set_cover(loose); }) == ErrorKind::precondition);
    CHECK_NOTHROW(past_set_cover(fixtures::reducible()));
}

TEST_CASE("synchronising classes carry their shortest words") {
    auto p = fixtures::even();
    auto classes = synchronising_classes(p);
    REQUIRE(classes.size() == 2);
    CHECK(p.alphabet().format(classes[0].witness) == "1");
    CHECK(p.alphabet().format(classes[1].witness) == "01");
}

TEST_CASE("cover kind spellings") {
    CHECK(parse_cover_kind("krieger") == CoverKind::left_krieger);
    CHECK(parse_cover_kind("past-set") == CoverKind::past_set);
    CHECK(parse_cover_kind("fischer-left") == CoverKind::left_fischer);
    CHECK(parse_cover_kind("fischer-right") == CoverKind::right_fischer);
    CHECK(parse_cover_kind("krieger-right") == CoverKind::right_krieger);
    CHECK_FALSE(parse_cover_kind("nope"));
}

TEST_CASE("cover exports") {
    auto k = left_krieger_cover(fixtures::even());
    auto j = cover_to_json(k);
    CHECK(j["kind"] == "left-krieger");
    CHECK(j["vertices"].size() == 3);
    CHECK(j["edges"].size() == 5);
    auto dot = cover_to_dot(k);
    CHECK(dot.find("peripheries=2") != std::string::npos);
    CHECK(cover_to_json(k).dump() == j.dump());
}
