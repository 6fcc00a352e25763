#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sofic/io.hpp"
#include "sofic/presentation.hpp"

namespace sofic {

/// Unlabelled directed graph on dense vertex ids.
struct Digraph {
    std::vector<std::vector<VertexId>> successors;

    std::size_t size() const noexcept { return successors.size(); }
};

Digraph underlying_digraph(const Presentation& p);

/// Strongly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> communicating_classes(const Digraph& g);

/// Components carrying at least one internal edge (vertices on circuits).
std::vector<std::vector<VertexId>> proper_communication_sets(const Digraph& g);
std::vector<std::vector<VertexId>> proper_communication_sets(const Presentation& p);

/// Nodes: proper communication sets. Arc (i, j): some vertex of node i
/// reaches node j. Arcs are sorted and transitively closed.
struct PCGraph {
    std::vector<std::vector<VertexId>> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

PCGraph pc_graph(const Digraph& g);
PCGraph pc_graph(const Presentation& p);

/// More than one communicating class.
bool is_reducible(const Digraph& g);
bool is_reducible(const Presentation& p);

/// Indices of edges whose endpoints lie in different communicating classes.
std::vector<std::uint32_t> transitional_edges(const Presentation& p);

/// Unlabelled isomorphism of the arc relations. Throws
/// ErrorKind::resource_cap above `max_nodes`.
bool pc_isomorphic(const PCGraph& a, const PCGraph& b, std::size_t max_nodes = 64);

Json pc_to_json(const Presentation& p, const PCGraph& g);
std::string pc_to_dot(const Presentation& p, const PCGraph& g);

}  // namespace sofic
