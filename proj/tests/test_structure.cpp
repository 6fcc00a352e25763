#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>

#include "fixtures.hpp"
#include "sofic/error.hpp"
#include "sofic/structure.hpp"

using namespace sofic;

namespace {

std::vector<std::vector<std::string>> named(const Presentation& p, const std::vector<std::vector<VertexId>>& sets) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : sets) {
        auto& row = out.emplace_back();
        for (auto v : s) {
            row.push_back(p.vertex_name(v));
        }
    }
    return out;
}

using Names = std::vector<std::vector<std::string>>;
using Arcs = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST_CASE("communication example") {
    auto p = communication_example();
    CHECK(named(p, communicating_classes(underlying_digraph(p))) == Names{{"v", "w"}, {"x"}, {"u"}, {"y"}});
    CHECK(named(p, proper_communication_sets(p)) == Names{{"v", "w"}, {"x"}, {"y"}});
    auto pc = pc_graph(p);
    CHECK(named(p, pc.nodes) == Names{{"v", "w"}, {"x"}, {"y"}});
    CHECK(pc.arcs == Arcs{{0, 1}, {0, 2}});
    CHECK(is_reducible(p));
    CHECK(transitional_edges(p).size() == 3);
}

TEST_CASE("pc graph arcs are transitively closed") {
    // Loops at 0 and 3 only; 1 and 2 lie on no circuit.
    Digraph g{{{0, 1}, {2}, {3}, {3}}};
    auto pc = pc_graph(g);
    CHECK(pc.nodes.size() == 2);
    CHECK(pc.arcs == Arcs{{0, 1}});
    Digraph chain{{{0, 1}, {1, 2}, {2}}};
    CHECK(pc_graph(chain).arcs == Arcs{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("strongly connected graphs are irreducible") {
    CHECK_FALSE(is_reducible(fixtures::even()));
    CHECK(transitional_edges(fixtures::even()).empty());
    CHECK(pc_graph(fixtures::even()).nodes.size() == 1);
}

TEST_CASE("long cycles do not exhaust the stack") {
    const std::size_t n = 200000;
    Digraph g;
    g.successors.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        g.successors[v].push_back(static_cast<VertexId>((v + 1) % n));
    }
    CHECK(communicating_classes(g).size() == 1);
    g.successors[n - 1].clear();
    CHECK(communicating_classes(g).size() == n);
    CHECK(proper_communication_sets(g).empty());
}

TEST_CASE("pc isomorphism ignores node order") {
    PCGraph a{{{0}, {1}, {2}}, {{0, 1}, {0, 2}}};
    PCGraph b{{{5}, {6}, {7}}, {{2, 0}, {2, 1}}};
    PCGraph c{{{0}, {1}, {2}}, {{0, 1}, {1, 2}}};
    CHECK(pc_isomorphic(a, a));
    CHECK(pc_isomorphic(a, b));
    CHECK_FALSE(pc_isomorphic(a, c));
    CHECK_FALSE(pc_isomorphic(a, PCGraph{{{0}, {1}}, {{0, 1}}}));
    try {
        pc_isomorphic(a, b, 2);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_cap);
    }
}

TEST_CASE("pc exports") {
    auto p = communication_example();
    auto pc = pc_graph(p);
    auto j = pc_to_json(p, pc);
    CHECK(j.dump() == R"({"nodes":[["v","w"],["x"],["y"]],"arcs":[[0,1],[0,2]]})");
    CHECK(pc_to_dot(p, pc).find("->") != std::string::npos);
}
