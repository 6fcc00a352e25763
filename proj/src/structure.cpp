#include "sofic/structure.hpp"

#include <algorithm>
#include <sstream>

#include "sofic/error.hpp"
#include "sofic/vertex_set.hpp"

namespace sofic {
namespace {

// Vertices reachable from s by a path of length >= 0.
VertexSet reach_from(const Digraph& g, VertexId s) {
    VertexSet seen(g.size());
    std::vector<VertexId> stack{s};
    seen.set(s);
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto d : g.successors[v]) {
            if (!seen.test(d)) {
                seen.set(d);
                stack.push_back(d);
            }
        }
    }
    return seen;
}

std::vector<std::uint32_t> class_index(const Digraph& g, const std::vector<std::vector<VertexId>>& classes) {
    std::vector<std::uint32_t> of(g.size());
    for (std::uint32_t c = 0; c < classes.size(); ++c) {
        for (auto v : classes[c]) {
            of[v] = c;
        }
    }
    return of;
}

}  // namespace

Digraph underlying_digraph(const Presentation& p) {
    Digraph g;
    g.successors.resize(p.vertex_count());
    for (const auto& e : p.edges()) {
        g.successors[e.src].push_back(e.dst);
    }
    for (auto& s : g.successors) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return g;
}

// Iterative Tarjan.
std::vector<std::vector<VertexId>> communicating_classes(const Digraph& g) {
    const auto n = g.size();
    constexpr auto unvisited = ~std::uint32_t{0};
    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::pair<VertexId, std::size_t>> frames;  // vertex, next successor
    std::vector<std::vector<VertexId>> classes;
    std::uint32_t counter = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            const auto& succ = g.successors[v];
            if (next < succ.size()) {
                auto d = succ[next++];
                if (index[d] == unvisited) {
                    index[d] = low[d] = counter++;
                    stack.push_back(d);
                    on_stack[d] = true;
                    frames.emplace_back(d, 0);
                } else if (on_stack[d]) {
                    low[v] = std::min(low[v], index[d]);
                }
                continue;
            }
            auto done = v;
            frames.pop_back();
            if (!frames.empty()) {
                auto parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::vector<VertexId> cls;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    cls.push_back(w);
                } while (w != done);
                std::sort(cls.begin(), cls.end());
                classes.push_back(std::move(cls));
            }
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return classes;
}

std::vector<std::vector<VertexId>> proper_communication_sets(const Digraph& g) {
    std::vector<std::vector<VertexId>> out;
    for (auto& cls : communicating_classes(g)) {
        bool cyclic = cls.size() > 1;
        if (!cyclic) {
            const auto& s = g.successors[cls[0]];
            cyclic = std::find(s.begin(), s.end(), cls[0]) != s.end();
        }
        if (cyclic) {
            out.push_back(std::move(cls));
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> proper_communication_sets(const Presentation& p) {
    return proper_communication_sets(underlying_digraph(p));
}

PCGraph pc_graph(const Digraph& g) {
    PCGraph pc{proper_communication_sets(g), {}};
    for (std::size_t i = 0; i < pc.nodes.size(); ++i) {
        // Members of one class reach the same vertices.
        auto r = reach_from(g, pc.nodes[i].front());
        for (std::size_t j = 0; j < pc.nodes.size(); ++j) {
            if (i != j && r.test(pc.nodes[j].front())) {
                pc.arcs.emplace_back(i, j);
            }
        }
    }
    return pc;
}

PCGraph pc_graph(const Presentation& p) {
    return pc_graph(underlying_digraph(p));
}

bool is_reducible(const Digraph& g) {
    return communicating_classes(g).size() > 1;
}

bool is_reducible(const Presentation& p) {
    return is_reducible(underlying_digraph(p));
}

std::vector<std::uint32_t> transitional_edges(const Presentation& p) {
    auto g = underlying_digraph(p);
    auto of = class_index(g, communicating_classes(g));
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < p.edge_count(); ++i) {
        if (of[p.edge(i).src] != of[p.edge(i).dst]) {
            out.push_back(i);
        }
    }
    return out;
}

bool pc_isomorphic(const PCGraph& a, const PCGraph& b, std::size_t max_nodes) {
    const auto n = a.nodes.size();
    if (n != b.nodes.size() || a.arcs.size() != b.arcs.size()) {
        return false;
    }
    if (n > max_nodes) {
        throw Error(ErrorKind::resource_cap, "resource cap: proper communication graph exceeds " +
                                                 std::to_string(max_nodes) + " nodes");
    }
    auto matrix = [n](const PCGraph& g) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (auto [i, j] : g.arcs) m[i][j] = true;
        return m;
    };
    auto ma = matrix(a);
    auto mb = matrix(b);
    auto degrees = [n](const std::vector<std::vector<bool>>& m) {
        std::vector<std::pair<std::size_t, std::size_t>> d(n, {0, 0});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m[i][j]) {
                    ++d[i].first;
                    ++d[j].second;
                }
        return d;
    };
    auto da = degrees(ma);
    auto db = degrees(mb);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::size_t> phi(n);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || da[i] != db[c]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) {
                ok = ma[i][k] == mb[c][phi[k]] && ma[k][i] == mb[phi[k]][c];
            }
            if (!ok) continue;
            phi[i] = c;
            used[c] = true;
            if (self(self, i + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

Json pc_to_json(const Presentation& p, const PCGraph& g) {
    Json nodes = Json::array();
    for (const auto& node : g.nodes) {
        Json members = Json::array();
        for (auto v : node) members.push_back(p.vertex_name(v));
        nodes.push_back(std::move(members));
    }
    Json arcs = Json::array();
    for (auto [i, j] : g.arcs) arcs.push_back({i, j});
    return Json{{"nodes", std::move(nodes)}, {"arcs", std::move(arcs)}};
}

std::string pc_to_dot(const Presentation& p, const PCGraph& g) {
    std::ostringstream out;
    out << "digraph \"pc\" {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        std::string members;
        for (auto v : g.nodes[i]) {
            members += (members.empty() ? "" : ", ") + p.vertex_name(v);
        }
        out << "  pc" << i << " [label=" << dot_quote("PC" + std::to_string(i + 1))
            << ", tooltip=" << dot_quote("{" + members + "}") << "];\n";
    }
    for (auto [i, j] : g.arcs) {
        out << "  pc" << i << " -> pc" << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sofic
