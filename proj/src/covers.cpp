#include "sofic/covers.hpp"

#include <algorithm>
#include <sstream>

#include "sofic/decisions.hpp"
#include "sofic/error.hpp"
#include "sofic/language.hpp"
#include "sofic/structure.hpp"

namespace sofic {
namespace {

std::string class_name(const Presentation& p, const Word& w) {
    return "P(" + (w.empty() ? std::string("ε") : p.alphabet().format(w)) + ")";
}

// Vertices are the classes of `members` (first occurrence in family order);
// for each member S and symbol a with Pre_a(S) nonempty there is an edge
// class(Pre_a(S)) -a-> class(S).
Cover cover_on_members(const Presentation& p, const SubsetAnalysis& an,
                       const std::vector<FamilyIndex>& members, CoverKind kind) {
    const auto& family = an.family;
    const auto& partition = an.partition;

    // Name each class by a shortest nonempty word w with I(w) in it, since
    // I(a u) = Pre_a(I(u)); fall back to the representative's witness.
    std::vector<std::optional<Word>> label(partition.class_count());
    for (FamilyIndex s = 0; s < family.size(); ++s) {
        for (SymbolId a = 0; a < p.alphabet().size(); ++a) {
            auto& slot = label[partition.class_of[family.step[s][a]]];
            Word w{a};
            w.insert(w.end(), family.witness[s].begin(), family.witness[s].end());
            if (!slot || w.size() < slot->size() || (w.size() == slot->size() && w < *slot)) {
                slot = std::move(w);
            }
        }
    }

    std::vector<std::uint32_t> vertex_of_class(partition.class_count(), ~0u);
    Cover c{kind, Presentation(p.alphabet(), {}, {}, p.sidedness()), {}, {}, {}, {}, {}};
    std::vector<std::string> names;
    for (auto s : members) {
        auto cls = partition.class_of[s];
        if (vertex_of_class[cls] != ~0u) {
            continue;
        }
        vertex_of_class[cls] = static_cast<std::uint32_t>(names.size());
        auto rep = partition.representative[cls];
        names.push_back(class_name(p, label[cls].value_or(family.witness[rep])));
        c.class_of_vertex.push_back(cls);
        c.representative_subset.push_back(family.subsets[rep]);
    }

    std::vector<Edge> edges;
    for (auto s : members) {
        for (SymbolId a = 0; a < p.alphabet().size(); ++a) {
            auto t = family.step[s][a];
            if (family.subsets[t].empty()) {
                continue;
            }
            auto src = vertex_of_class[partition.class_of[t]];
            if (src == ~0u) {
                throw Error(ErrorKind::internal, "cover vertex set is not closed under predecessor steps");
            }
            edges.push_back({src, vertex_of_class[partition.class_of[s]], a});
        }
    }

    std::vector<std::optional<Word>> sync_witness(partition.class_count());
    for (const auto& sc : synchronising_classes(an)) {
        sync_witness[sc.class_id] = sc.witness;
    }
    for (auto cls : c.class_of_vertex) {
        c.synchronising.push_back(sync_witness[cls].has_value());
        c.witness.push_back(sync_witness[cls]);
    }
    c.graph = Presentation(p.alphabet(), std::move(names), std::move(edges), p.sidedness());
    return c;
}

void verify_cover(const Presentation& source, const Cover& c, Side resolving, const CoverOptions& options) {
    if (!options.verify) {
        return;
    }
    if (!resolving_check(c.graph, resolving)) {
        throw Error(ErrorKind::internal, std::string(to_string(c.kind)) + " cover labelling is not well defined");
    }
    auto max_length = options.exact_language ? std::nullopt : std::optional<std::size_t>(options.block_bound);
    if (auto w = language_mismatch(source, c.graph, max_length)) {
        std::string word;
        for (const auto& s : *w) {
            word += s;
        }
        throw Error(ErrorKind::internal,
                    std::string(to_string(c.kind)) + " cover language differs from the source at '" + word + "'");
    }
}

Cover transpose_back(Cover c, CoverKind kind) {
    c.kind = kind;
    c.graph = transpose(c.graph);
    return c;
}

}  // namespace

const char* to_string(CoverKind k) {
    switch (k) {
        case CoverKind::left_krieger: return "left-krieger";
        case CoverKind::past_set: return "past-set";
        case CoverKind::left_fischer: return "left-fischer";
        case CoverKind::right_krieger: return "right-krieger";
        case CoverKind::right_fischer: return "right-fischer";
    }
    return "?";
}

std::optional<CoverKind> parse_cover_kind(std::string_view s) {
    if (s == "krieger" || s == "left-krieger") return CoverKind::left_krieger;
    if (s == "past-set") return CoverKind::past_set;
    if (s == "fischer-left" || s == "left-fischer" || s == "fischer") return CoverKind::left_fischer;
    if (s == "fischer-right" || s == "right-fischer") return CoverKind::right_fischer;
    if (s == "krieger-right" || s == "right-krieger") return CoverKind::right_krieger;
    return std::nullopt;
}

std::vector<SynchronisingClass> synchronising_classes(const SubsetAnalysis& an) {
    std::vector<std::optional<Word>> found(an.partition.class_count());
    for (std::size_t i = 0; i < an.monoid.elements.size(); ++i) {
        if (!an.synchronising[i]) {
            continue;
        }
        const auto& f = an.monoid.elements[i];
        auto cls = an.partition.class_of[f.map[0]];
        if (!found[cls]) {
            found[cls] = f.witness;
        }
    }
    std::vector<SynchronisingClass> out;
    for (std::uint32_t c = 0; c < found.size(); ++c) {
        if (found[c]) {
            out.push_back({c, *found[c]});
        }
    }
    return out;
}

std::vector<SynchronisingClass> synchronising_classes(const Presentation& p, const EngineLimits& limits) {
    return synchronising_classes(analyse(p, limits));
}

Cover left_krieger_cover(const Presentation& p, const SubsetAnalysis& an, const CoverOptions& options) {
    if (p.sidedness() == Sidedness::one_sided) {
        throw Error(ErrorKind::precondition, "left Krieger cover undefined for one-sided shifts");
    }
    auto c = cover_on_members(p, an, an.rays, CoverKind::left_krieger);
    verify_cover(p, c, Side::left, options);
    return c;
}

Cover left_krieger_cover(const Presentation& p, const CoverOptions& options) {
    if (p.sidedness() == Sidedness::one_sided) {
        throw Error(ErrorKind::precondition, "left Krieger cover undefined for one-sided shifts");
    }
    return left_krieger_cover(p, analyse(p, options.limits), options);
}

Cover past_set_cover(const Presentation& p, const SubsetAnalysis& an, const CoverOptions& options) {
    // I(w) over nonempty blocks w: the full set only counts when some
    // nonempty word reproduces it.
    std::vector<bool> realised(an.family.size(), false);
    for (const auto& row : an.family.step) {
        for (auto t : row) {
            realised[t] = true;
        }
    }
    std::vector<FamilyIndex> members;
    for (FamilyIndex s = 0; s < an.family.size(); ++s) {
        if (realised[s] && !an.family.subsets[s].empty()) {
            members.push_back(s);
        }
    }
    auto c = cover_on_members(p, an, members, CoverKind::past_set);
    verify_cover(p, c, Side::left, options);
    return c;
}

Cover past_set_cover(const Presentation& p, const CoverOptions& options) {
    return past_set_cover(p, analyse(p, options.limits), options);
}

Cover left_fischer_cover(const Presentation& p, const SubsetAnalysis& an, const CoverOptions& options) {
    if (!is_irreducible_shift(p, options.limits)) {
        throw Error(ErrorKind::precondition, "Fischer cover requires irreducible shift");
    }
    auto past = past_set_cover(p, an, CoverOptions{options.limits, options.block_bound, false, false});
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < past.graph.vertex_count(); ++v) {
        if (past.synchronising[v]) {
            keep.push_back(v);
        }
    }
    Cover c{CoverKind::left_fischer, induced_subgraph(past.graph, keep), {}, {}, {}, {}, {}};
    for (auto v : keep) {
        c.class_of_vertex.push_back(past.class_of_vertex[v]);
        c.representative_subset.push_back(past.representative_subset[v]);
        c.synchronising.push_back(true);
        c.witness.push_back(past.witness[v]);
    }
    if (options.verify && is_reducible(c.graph)) {
        throw Error(ErrorKind::internal, "left Fischer cover is not irreducible");
    }
    verify_cover(p, c, Side::left, options);
    return c;
}

Cover left_fischer_cover(const Presentation& p, const CoverOptions& options) {
    return left_fischer_cover(p, analyse(p, options.limits), options);
}

Cover right_cover(const Presentation& p, CoverKind kind, const CoverOptions& options) {
    auto t = transpose(p);
    auto inner = options;
    inner.verify = false;
    Cover c = [&] {
        switch (kind) {
            case CoverKind::right_krieger: return transpose_back(left_krieger_cover(t, inner), kind);
            case CoverKind::right_fischer: return transpose_back(left_fischer_cover(t, inner), kind);
            default: throw Error(ErrorKind::precondition, "right_cover builds right-krieger or right-fischer");
        }
    }();
    verify_cover(p, c, Side::right, options);
    return c;
}

Cover ray_word_cover(const Presentation& p, const CoverOptions& options) {
    auto c = left_krieger_cover(p.with_sidedness(Sidedness::two_sided), options);
    c.graph = c.graph.with_sidedness(p.sidedness());
    c.note = "finite pasts of right-rays: identified with the left Krieger cover";
    return c;
}

Cover word_ray_cover(const Presentation& p, const CoverOptions& options) {
    auto c = past_set_cover(p, options);
    c.note = "infinite pasts of blocks: identified with the past set cover";
    return c;
}

Cover build_cover(const Presentation& p, CoverKind kind, const CoverOptions& options) {
    switch (kind) {
        case CoverKind::left_krieger: return left_krieger_cover(p, options);
        case CoverKind::past_set: return past_set_cover(p, options);
        case CoverKind::left_fischer: return left_fischer_cover(p, options);
        case CoverKind::right_krieger:
        case CoverKind::right_fischer: return right_cover(p, kind, options);
    }
    throw Error(ErrorKind::precondition, "unknown cover kind");
}

std::optional<std::vector<VertexId>> subgraph_embedding(const Cover& inner, const Cover& outer) {
    std::optional<std::vector<VertexId>> hint(std::vector<VertexId>{});
    for (const auto& s : inner.representative_subset) {
        auto it = std::find(outer.representative_subset.begin(), outer.representative_subset.end(), s);
        if (it == outer.representative_subset.end()) {
            hint.reset();
            break;
        }
        hint->push_back(static_cast<VertexId>(it - outer.representative_subset.begin()));
    }
    return labelled_embedding(inner.graph, outer.graph, hint);
}

Json cover_to_json(const Cover& c) {
    Json doc = to_json(c.graph);
    doc["kind"] = to_string(c.kind);
    Json info = Json::array();
    for (VertexId v = 0; v < c.graph.vertex_count(); ++v) {
        Json item{{"vertex", c.graph.vertex_name(v)},
                  {"class", c.class_of_vertex[v]},
                  {"synchronising", static_cast<bool>(c.synchronising[v])}};
        if (c.witness[v]) {
            item["witness"] = c.graph.alphabet().format(*c.witness[v]);
        }
        info.push_back(std::move(item));
    }
    doc["classes"] = std::move(info);
    if (!c.note.empty()) {
        doc["note"] = c.note;
    }
    return doc;
}

std::string cover_to_dot(const Cover& c) {
    std::ostringstream out;
    const auto& g = c.graph;
    out << "digraph " << dot_quote(to_string(c.kind)) << " {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  n" << v << " [label=" << dot_quote(g.vertex_name(v)) << ", tooltip="
            << dot_quote("class " + std::to_string(c.class_of_vertex[v]) +
                         (c.witness[v] ? ", synchronising via " + g.alphabet().format(*c.witness[v]) : ""))
            << (c.synchronising[v] ? ", peripheries=2" : "") << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  n" << e.src << " -> n" << e.dst << " [label=" << dot_quote(g.alphabet().name(e.label)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sofic
