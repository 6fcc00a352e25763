#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "sofic/io.hpp"
#include "sofic/presentation.hpp"
#include "sofic/vertex_set.hpp"

namespace sofic {

using FamilyIndex = std::uint32_t;

struct EngineLimits {
    std::size_t max_subsets = 4096;
    std::size_t max_monoid = 65536;
};

/// Pre_a(S) = { v : some edge v -a-> u with u in S }.
VertexSet pre_step(const Presentation& p, const VertexSet& s, SymbolId a);
/// Post_a(S) = { u : some edge v -a-> u with v in S }.
VertexSet post_step(const Presentation& p, const VertexSet& s, SymbolId a);

/// Pre_w(S): start vertices of paths labelled w ending in S.
VertexSet pre_word(const Presentation& p, VertexSet s, const Word& w);
/// Post_w(S): end vertices of paths labelled w starting in S.
VertexSet post_word(const Presentation& p, VertexSet s, const Word& w);

/// I(w): start vertices of the representatives of w.
inline VertexSet predecessor_set(const Presentation& p, const Word& w) {
    return pre_word(p, VertexSet::full(p.vertex_count()), w);
}

/// Closure of the full vertex set under one-letter steps, in BFS order
/// (members first by discovery, then by symbol order).
///
/// For the Pre family, subsets[s] == I(witness[s]); for the Post family,
/// subsets[s] == Post_{witness[s]}(E). Index 0 is always the full set.
struct SubsetFamily {
    std::vector<VertexSet> subsets;
    std::vector<std::vector<FamilyIndex>> step;  // step[s][a]
    std::vector<Word> witness;
    std::optional<FamilyIndex> empty;

    std::size_t size() const noexcept { return subsets.size(); }
    std::optional<FamilyIndex> find(const VertexSet& s) const;

    std::unordered_map<VertexSet, FamilyIndex, VertexSetHash> index;
};

using PreFamily = SubsetFamily;

PreFamily pre_family(const Presentation& p, const EngineLimits& limits = {});
SubsetFamily post_family(const Presentation& p, const EngineLimits& limits = {});

/// Coarsest partition of a Pre family separating the empty set from the rest
/// and stable under every Pre_a. Two members share a class iff the sets of
/// words that can precede them coincide. Class ids are numbered by first
/// occurrence in family order.
struct PastPartition {
    std::vector<std::uint32_t> class_of;
    std::vector<FamilyIndex> representative;  // first member of each class
    std::optional<std::uint32_t> empty_class;

    std::size_t class_count() const noexcept { return representative.size(); }
};

PastPartition past_partition(const PreFamily& family);

/// Action of a word w on the family, S -> Pre_w(S), with its shortest witness.
struct MonoidElement {
    std::vector<FamilyIndex> map;
    Word witness;
};

/// Elements in BFS order from the identity; right[i][a] is the element of
/// witness(i)·a, i.e. map_i composed after the generator for a.
struct TransitionMonoid {
    std::vector<MonoidElement> elements;
    std::vector<std::vector<std::uint32_t>> right;
    /// Whether some nonempty word acts as the identity.
    bool identity_from_nonempty = false;
};

TransitionMonoid monoid_closure(const PreFamily& family, std::size_t cap = 65536);

/// f is synchronising iff f(E) is nonempty and every member is sent either
/// to the empty set or into the class of f(E).
bool is_synchronising_action(const MonoidElement& f, const PreFamily& family,
                             const PastPartition& partition);

/// Members of the family that occur as I(x+) for a right-ray x+, as sorted
/// family indices. These are exactly the sets Pre_v(L_u) with
/// L_u = lim Pre_{u^n}(E) over nonempty words u.
std::vector<FamilyIndex> ray_subsets(const PreFamily& family, const TransitionMonoid& monoid);
std::vector<FamilyIndex> ray_subsets(const PreFamily& family, const EngineLimits& limits = {});

/// Everything the covers and decision procedures share for one presentation.
struct SubsetAnalysis {
    PreFamily family;
    PastPartition partition;
    TransitionMonoid monoid;
    std::vector<FamilyIndex> rays;
    std::vector<bool> synchronising;  // per monoid element
};

/// Requires an essential presentation.
SubsetAnalysis analyse(const Presentation& p, const EngineLimits& limits = {});

/// Debug dump of a family and its partition.
Json family_to_json(const Presentation& p, const PreFamily& family, const PastPartition& partition);

}  // namespace sofic
