#include "sofic/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sofic/error.hpp"

namespace sofic {

Presentation symbol_expand(const Presentation& p, std::string_view symbol, std::string_view star) {
    auto a = p.alphabet().index(symbol);
    if (p.alphabet().find(star)) {
        throw Error(ErrorKind::input, "expansion symbol '" + std::string(star) + "' already in alphabet");
    }
    auto symbols = p.alphabet().symbols();
    symbols.emplace_back(star);
    const auto star_id = static_cast<SymbolId>(symbols.size() - 1);

    auto names = p.vertex_names();
    std::set<std::string> taken(names.begin(), names.end());
    std::vector<Edge> edges;
    for (const auto& e : p.edges()) {
        if (e.label != a) {
            edges.push_back(e);
            continue;
        }
        std::string base = p.vertex_name(e.src) + "~" + std::string(symbol) + "~" + p.vertex_name(e.dst);
        std::string name = base;
        for (int k = 2; taken.count(name); ++k) {
            name = base + "#" + std::to_string(k);
        }
        taken.insert(name);
        auto x = static_cast<VertexId>(names.size());
        names.push_back(name);
        edges.push_back({e.src, x, a});
        edges.push_back({x, e.dst, star_id});
    }
    return Presentation(Alphabet(std::move(symbols)), std::move(names), std::move(edges), p.sidedness());
}

Presentation higher_block(const Presentation& p, std::size_t n, std::size_t max_edges) {
    if (n < 2) {
        throw Error(ErrorKind::input, "higher block order must be at least 2");
    }
    if (!p.is_essential()) {
        throw Error(ErrorKind::precondition, "presentation must be essential");
    }
    // Paths as edge-index sequences, in lexicographic order of edge indices.
    auto extend = [&](const std::vector<std::vector<std::uint32_t>>& paths) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& path : paths) {
            for (auto ei : p.out_edges(p.edge(path.back()).dst)) {
                out.push_back(path);
                out.back().push_back(ei);
                if (out.size() > max_edges) {
                    throw Error(ErrorKind::resource_cap, "resource cap: higher block presentation exceeds " +
                                                             std::to_string(max_edges) + " paths");
                }
            }
        }
        return out;
    };
    std::vector<std::vector<std::uint32_t>> short_paths;
    for (std::uint32_t e = 0; e < p.edge_count(); ++e) {
        short_paths.push_back({e});
    }
    // n = 2 uses edges as vertices; otherwise paths of length n-1.
    for (std::size_t k = 1; k + 1 < n; ++k) {
        short_paths = extend(short_paths);
    }
    auto long_paths = extend(short_paths);

    auto label_of = [&](const std::vector<std::uint32_t>& path) {
        std::string s;
        for (auto ei : path) {
            if (!s.empty() && !p.alphabet().single_character()) s += ".";
            s += p.alphabet().name(p.edge(ei).label);
        }
        return s;
    };
    auto name_of = [&](const std::vector<std::uint32_t>& path) {
        std::string s = p.vertex_name(p.edge(path.front()).src);
        for (auto ei : path) {
            s += "-" + p.alphabet().name(p.edge(ei).label) + "-" + p.vertex_name(p.edge(ei).dst);
        }
        return s;
    };

    std::map<std::vector<std::uint32_t>, VertexId> vertex_of;
    std::vector<std::string> names;
    std::set<std::string> taken;
    for (const auto& path : short_paths) {
        vertex_of.emplace(path, static_cast<VertexId>(names.size()));
        auto name = name_of(path);
        if (!taken.insert(name).second) {
            name += "#" + std::to_string(names.size());
            taken.insert(name);
        }
        names.push_back(name);
    }
    std::set<std::string> realised;
    for (const auto& path : long_paths) {
        realised.insert(label_of(path));
    }
    Alphabet alphabet(std::vector<std::string>(realised.begin(), realised.end()));
    std::vector<Edge> edges;
    for (const auto& path : long_paths) {
        std::vector<std::uint32_t> head(path.begin(), path.end() - 1);
        std::vector<std::uint32_t> tail(path.begin() + 1, path.end());
        edges.push_back({vertex_of.at(head), vertex_of.at(tail), alphabet.index(label_of(path))});
    }
    return trim_essential(Presentation(std::move(alphabet), std::move(names), std::move(edges), p.sidedness()));
}

}  // namespace sofic
