#include "sofic/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sofic/error.hpp"

namespace sofic {

const char* to_string(Sidedness s) {
    return s == Sidedness::one_sided ? "one-sided" : "two-sided";
}

Presentation::Presentation(Alphabet alphabet, std::vector<std::string> vertices,
                           std::vector<Edge> edges, Sidedness sidedness)
    : alphabet_(std::move(alphabet)), vertices_(std::move(vertices)), sidedness_(sidedness) {
    if (alphabet_.size() == 0) {
        throw Error(ErrorKind::input, "empty alphabet");
    }
    std::set<std::string_view> names;
    for (const auto& v : vertices_) {
        if (!names.insert(v).second) {
            throw Error(ErrorKind::input, "duplicate vertex name '" + v + "'");
        }
    }
    std::set<Edge> seen;
    for (const auto& e : edges) {
        if (e.src >= vertices_.size() || e.dst >= vertices_.size()) {
            throw Error(ErrorKind::input, "unknown vertex in edge");
        }
        if (e.label >= alphabet_.size()) {
            throw Error(ErrorKind::input, "unknown symbol in edge");
        }
        if (seen.insert(e).second) {
            edges_.push_back(e);
        }
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    by_label_.resize(alphabet_.size());
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        out_[edges_[i].src].push_back(i);
        in_[edges_[i].dst].push_back(i);
        by_label_[edges_[i].label].push_back(i);
    }
}

std::optional<VertexId> Presentation::find_vertex(std::string_view name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) {
        return std::nullopt;
    }
    return static_cast<VertexId>(it - vertices_.begin());
}

Presentation Presentation::with_sidedness(Sidedness s) const {
    return Presentation(alphabet_, vertices_, edges_, s);
}

bool Presentation::is_essential() const {
    if (vertices_.empty()) {
        return false;
    }
    for (VertexId v = 0; v < vertices_.size(); ++v) {
        if (out_[v].empty() || in_[v].empty()) {
            return false;
        }
    }
    return true;
}

std::vector<SymbolId> Presentation::unused_symbols() const {
    std::vector<SymbolId> unused;
    for (SymbolId a = 0; a < alphabet_.size(); ++a) {
        if (by_label_[a].empty()) {
            unused.push_back(a);
        }
    }
    return unused;
}

bool Presentation::operator==(const Presentation& other) const {
    if (!(alphabet_ == other.alphabet_) || vertices_ != other.vertices_ ||
        sidedness_ != other.sidedness_) {
        return false;
    }
    auto a = edges_;
    auto b = other.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Presentation trim_essential(const Presentation& p) {
    const auto n = p.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> in_degree(n, 0), out_degree(n, 0);
    for (const auto& e : p.edges()) {
        ++out_degree[e.src];
        ++in_degree[e.dst];
    }
    std::vector<VertexId> work;
    for (VertexId v = 0; v < n; ++v) {
        if (in_degree[v] == 0 || out_degree[v] == 0) {
            alive[v] = false;
            work.push_back(v);
        }
    }
    while (!work.empty()) {
        VertexId v = work.back();
        work.pop_back();
        for (auto ei : p.out_edges(v)) {
            VertexId d = p.edge(ei).dst;
            if (d != v && alive[d] && --in_degree[d] == 0) {
                alive[d] = false;
                work.push_back(d);
            }
        }
        for (auto ei : p.in_edges(v)) {
            VertexId s = p.edge(ei).src;
            if (s != v && alive[s] && --out_degree[s] == 0) {
                alive[s] = false;
                work.push_back(s);
            }
        }
    }
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < n; ++v) {
        if (alive[v]) {
            keep.push_back(v);
        }
    }
    if (keep.empty()) {
        throw Error(ErrorKind::precondition, "presents empty shift");
    }
    return induced_subgraph(p, keep);
}

Presentation transpose(const Presentation& p) {
    std::vector<Edge> edges;
    edges.reserve(p.edge_count());
    for (const auto& e : p.edges()) {
        edges.push_back({e.dst, e.src, e.label});
    }
    return Presentation(p.alphabet(), p.vertex_names(), std::move(edges), p.sidedness());
}

bool resolving_check(const Presentation& p, Side side) {
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
        auto incident = side == Side::left ? p.in_edges(v) : p.out_edges(v);
        std::vector<bool> seen(p.alphabet().size(), false);
        for (auto ei : incident) {
            auto a = p.edge(ei).label;
            if (seen[a]) {
                return false;
            }
            seen[a] = true;
        }
    }
    return true;
}

Presentation induced_subgraph(const Presentation& p, std::span<const VertexId> keep) {
    constexpr auto absent = ~VertexId{0};
    std::vector<VertexId> remap(p.vertex_count(), absent);
    std::vector<std::string> names;
    for (VertexId i = 0; i < keep.size(); ++i) {
        remap.at(keep[i]) = i;
        names.push_back(p.vertex_name(keep[i]));
    }
    std::vector<Edge> edges;
    for (const auto& e : p.edges()) {
        if (remap[e.src] != absent && remap[e.dst] != absent) {
            edges.push_back({remap[e.src], remap[e.dst], e.label});
        }
    }
    return Presentation(p.alphabet(), std::move(names), std::move(edges), p.sidedness());
}

}  // namespace sofic
