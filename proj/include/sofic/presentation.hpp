#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sofic/alphabet.hpp"

namespace sofic {

using VertexId = std::uint32_t;

struct Edge {
    VertexId src;
    VertexId dst;
    SymbolId label;

    auto operator<=>(const Edge&) const = default;
};

enum class Sidedness { one_sided, two_sided };
enum class Side { left, right };

const char* to_string(Sidedness s);

/// A finite labelled directed graph presenting a shift space.
///
/// Immutable after construction. Parallel edges with identical
/// (src, dst, label) are collapsed; the first occurrence keeps its position.
/// Vertex names are display metadata only, algorithms use dense ids.
class Presentation {
public:
    Presentation(Alphabet alphabet, std::vector<std::string> vertices, std::vector<Edge> edges,
                 Sidedness sidedness = Sidedness::two_sided);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    std::optional<VertexId> find_vertex(std::string_view name) const;

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::uint32_t e) const { return edges_.at(e); }

    // Edge indices, in edge order.
    std::span<const std::uint32_t> out_edges(VertexId v) const { return out_[v]; }
    std::span<const std::uint32_t> in_edges(VertexId v) const { return in_[v]; }
    std::span<const std::uint32_t> edges_labelled(SymbolId a) const { return by_label_[a]; }

    Sidedness sidedness() const noexcept { return sidedness_; }
    Presentation with_sidedness(Sidedness s) const;

    /// Every vertex emits and receives at least one edge.
    bool is_essential() const;
    std::vector<SymbolId> unused_symbols() const;

    /// Equality up to edge order.
    bool operator==(const Presentation& other) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    Sidedness sidedness_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<std::vector<std::uint32_t>> in_;
    std::vector<std::vector<std::uint32_t>> by_label_;
};

/// Repeatedly deletes vertices without in- or out-edges. Throws
/// ErrorKind::precondition ("presents empty shift") if nothing survives.
Presentation trim_essential(const Presentation& p);

/// Reverses every edge, keeping labels.
Presentation transpose(const Presentation& p);

/// left: edges entering each vertex carry distinct labels; right: leaving.
bool resolving_check(const Presentation& p, Side side);

/// Subgraph on `keep` (in the given order) with all edges between kept vertices.
Presentation induced_subgraph(const Presentation& p, std::span<const VertexId> keep);

/// Vertex bijection phi with (u -a-> v) an edge of p1 iff (phi(u) -a-> phi(v))
/// is an edge of p2, labels compared by symbol name. Throws
/// ErrorKind::resource_cap above `max_vertices`.
std::optional<std::vector<VertexId>> labelled_isomorphic(const Presentation& p1,
                                                         const Presentation& p2,
                                                         std::size_t max_vertices = 64);

/// Vertex injection mapping every edge of `inner` onto an edge of `outer`
/// with the same label name. `hint`, if given, is tried first.
std::optional<std::vector<VertexId>> labelled_embedding(
    const Presentation& inner, const Presentation& outer,
    const std::optional<std::vector<VertexId>>& hint = std::nullopt,
    std::size_t max_vertices = 64);

}  // namespace sofic
