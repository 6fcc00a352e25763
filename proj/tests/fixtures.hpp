#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "sofic/corpus.hpp"
#include "sofic/presentation.hpp"
#include "sofic/vertex_set.hpp"

namespace fixtures {

using Triple = std::tuple<std::string, std::string, std::string>;  // src, label, dst

/// Vertices in order of first appearance; alphabet as given.
inline sofic::Presentation make(std::vector<std::string> alphabet, const std::vector<Triple>& edges,
                                sofic::Sidedness sidedness = sofic::Sidedness::two_sided) {
    std::vector<std::string> vertices;
    auto id = [&](const std::string& name) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] == name) {
                return static_cast<sofic::VertexId>(i);
            }
        }
        vertices.push_back(name);
        return static_cast<sofic::VertexId>(vertices.size() - 1);
    };
    sofic::Alphabet sigma(std::move(alphabet));
    std::vector<sofic::Edge> out;
    for (const auto& [src, label, dst] : edges) {
        auto s = id(src);
        auto d = id(dst);
        out.push_back({s, d, sigma.index(label)});
    }
    return sofic::Presentation(sigma, vertices, out, sidedness);
}

inline sofic::CorpusEntry entry(const std::string& name) {
    return sofic::corpus_entry(name).value();
}

inline sofic::Presentation even() { return entry("even_shift").presentation; }
inline sofic::Presentation golden() { return entry("golden_mean").presentation; }
inline sofic::Presentation bfg() { return entry("bfg").presentation; }
inline sofic::Presentation jsb() { return entry("jsb").presentation; }
inline sofic::Presentation zshift() { return entry("z_shift").presentation; }
inline sofic::Presentation full() { return entry("full_shift").presentation; }

/// Two loops joined one way: not an irreducible shift.
inline sofic::Presentation reducible() {
    return make({"a", "b", "c"}, {{"x", "a", "x"}, {"x", "c", "y"}, {"y", "b", "y"}});
}

inline sofic::VertexSet set_of(const sofic::Presentation& p, const std::vector<std::string>& names) {
    sofic::VertexSet s(p.vertex_count());
    for (const auto& n : names) {
        s.set(p.find_vertex(n).value());
    }
    return s;
}

}  // namespace fixtures
