#include "sofic/decisions.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "sofic/covers.hpp"
#include "sofic/error.hpp"

namespace sofic {
namespace {

void require_essential(const Presentation& p) {
    if (!p.is_essential()) {
        throw Error(ErrorKind::precondition, "presentation must be essential");
    }
}

// reach[u] = vertices reachable from u by paths of length >= 0.
std::vector<VertexSet> reachability(const Presentation& p) {
    const auto n = p.vertex_count();
    std::vector<VertexSet> reach(n, VertexSet(n));
    for (VertexId s = 0; s < n; ++s) {
        std::vector<VertexId> stack{s};
        reach[s].set(s);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto ei : p.out_edges(v)) {
                auto d = p.edge(ei).dst;
                if (!reach[s].test(d)) {
                    reach[s].set(d);
                    stack.push_back(d);
                }
            }
        }
    }
    return reach;
}

// Pairs of vertices advanced along same-label edges.
struct PairGraph {
    std::size_t n;
    std::vector<std::vector<std::pair<std::uint32_t, SymbolId>>> arcs;

    std::uint32_t id(VertexId x, VertexId y) const { return static_cast<std::uint32_t>(x * n + y); }
    VertexId first(std::uint32_t i) const { return static_cast<VertexId>(i / n); }
    VertexId second(std::uint32_t i) const { return static_cast<VertexId>(i % n); }
};

PairGraph pair_graph(const Presentation& p, bool distinct_only) {
    PairGraph g{p.vertex_count(), {}};
    g.arcs.resize(g.n * g.n);
    for (VertexId x = 0; x < g.n; ++x) {
        for (VertexId y = 0; y < g.n; ++y) {
            if (distinct_only && x == y) {
                continue;
            }
            auto& out = g.arcs[g.id(x, y)];
            for (auto e1 : p.out_edges(x)) {
                for (auto e2 : p.out_edges(y)) {
                    const auto& a = p.edge(e1);
                    const auto& b = p.edge(e2);
                    if (a.label != b.label || (distinct_only && a.dst == b.dst)) {
                        continue;
                    }
                    out.emplace_back(g.id(a.dst, b.dst), a.label);
                }
            }
        }
    }
    return g;
}

ClosingReport right_closing(const Presentation& p) {
    auto g = pair_graph(p, false);
    const auto total = g.arcs.size();

    struct Seed {
        VertexId start;
        SymbolId label;
    };
    std::vector<std::optional<Seed>> seed_of(total);
    std::vector<std::uint32_t> seeds;
    for (VertexId s = 0; s < p.vertex_count(); ++s) {
        for (auto e1 : p.out_edges(s)) {
            for (auto e2 : p.out_edges(s)) {
                const auto& a = p.edge(e1);
                const auto& b = p.edge(e2);
                if (e1 == e2 || a.label != b.label) {
                    continue;
                }
                auto id = g.id(a.dst, b.dst);
                if (!seed_of[id]) {
                    seed_of[id] = Seed{s, a.label};
                    seeds.push_back(id);
                }
            }
        }
    }
    if (seeds.empty()) {
        return {true, 0, std::nullopt};
    }

    // Nodes reachable from the seeds, with BFS parents for the witness.
    std::vector<bool> reached(total, false);
    std::vector<std::optional<std::pair<std::uint32_t, SymbolId>>> parent(total);
    std::deque<std::uint32_t> queue;
    std::sort(seeds.begin(), seeds.end());
    for (auto s : seeds) {
        reached[s] = true;
        queue.push_back(s);
    }
    std::vector<std::uint32_t> order;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (auto [w, a] : g.arcs[v]) {
            if (!reached[w]) {
                reached[w] = true;
                parent[w] = std::make_pair(v, a);
                queue.push_back(w);
            }
        }
    }

    // Peel nodes without live successors; survivors lead into cycles.
    std::vector<std::size_t> live_out(total, 0);
    std::vector<std::vector<std::uint32_t>> preds(total);
    for (auto v : order) {
        for (auto [w, a] : g.arcs[v]) {
            ++live_out[v];
            preds[w].push_back(v);
        }
    }
    std::vector<bool> peeled(total, false);
    std::vector<std::size_t> longest(total, 0);
    std::vector<std::uint32_t> work;
    for (auto v : order) {
        if (live_out[v] == 0) {
            work.push_back(v);
        }
    }
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        peeled[v] = true;
        for (auto u : preds[v]) {
            longest[u] = std::max(longest[u], longest[v] + 1);
            if (--live_out[u] == 0) {
                work.push_back(u);
            }
        }
    }

    bool acyclic = std::all_of(order.begin(), order.end(), [&](auto v) { return peeled[v]; });
    if (acyclic) {
        std::size_t best = 0;
        for (auto s : seeds) {
            best = std::max(best, longest[s]);
        }
        return {true, best + 1, std::nullopt};
    }

    // Witness: seed -> first surviving node (BFS order) -> around until a repeat.
    std::uint32_t hit = *std::find_if(order.begin(), order.end(), [&](auto v) { return !peeled[v]; });
    std::vector<std::pair<std::uint32_t, SymbolId>> steps;  // (node reached, label)
    for (auto v = hit; parent[v]; v = parent[v]->first) {
        steps.emplace_back(v, parent[v]->second);
    }
    std::reverse(steps.begin(), steps.end());
    std::uint32_t root = steps.empty() ? hit : parent[steps.front().first]->first;
    std::vector<bool> on_walk(total, false);
    on_walk[hit] = true;
    for (auto v = hit;;) {
        auto it = std::find_if(g.arcs[v].begin(), g.arcs[v].end(), [&](auto& arc) { return !peeled[arc.first]; });
        steps.emplace_back(it->first, it->second);
        if (on_walk[it->first]) {
            break;
        }
        on_walk[it->first] = true;
        v = it->first;
    }

    PathPair w{seed_of[root]->start, {seed_of[root]->label}, {g.first(root)}, {g.second(root)}};
    for (auto [v, a] : steps) {
        w.label.push_back(a);
        w.first.push_back(g.first(v));
        w.second.push_back(g.second(v));
    }
    return {false, std::nullopt, std::move(w)};
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::no: return "false";
        case Verdict::yes: return "true";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

bool is_irreducible_shift(const Presentation& p, const EngineLimits& limits) {
    require_essential(p);
    auto pre = pre_family(p, limits);
    auto post = post_family(p, limits);
    auto reach = reachability(p);
    for (const auto& a : post.subsets) {
        if (a.empty()) {
            continue;
        }
        VertexSet from_a(p.vertex_count());
        for (auto v : a.members()) {
            from_a |= reach[v];
        }
        for (const auto& b : pre.subsets) {
            if (!b.empty() && !from_a.intersects(b)) {
                return false;
            }
        }
    }
    return true;
}

bool is_intrinsically_synchronising(const SubsetAnalysis& an, const Word& w) {
    const auto& family = an.family;
    MonoidElement f{{}, w};
    f.map.resize(family.size());
    for (FamilyIndex s = 0; s < family.size(); ++s) {
        FamilyIndex t = s;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            if (*it >= family.step[t].size()) {
                throw Error(ErrorKind::input, "unknown symbol in word");
            }
            t = family.step[t][*it];
        }
        f.map[s] = t;
    }
    if (family.subsets[f.map[0]].empty()) {
        throw Error(ErrorKind::precondition, "word is not a block of the shift");
    }
    return is_synchronising_action(f, family, an.partition);
}

bool is_intrinsically_synchronising(const Presentation& p, const Word& w, const EngineLimits& limits) {
    return is_intrinsically_synchronising(analyse(p, limits), w);
}

bool is_sft(const SubsetAnalysis& an) {
    const auto& m = an.monoid;
    const auto count = m.elements.size();
    // Subgraph of non-synchronising elements acting nonemptily on E.
    std::vector<bool> in(count, false);
    for (std::size_t i = 0; i < count; ++i) {
        in[i] = !an.synchronising[i] && !an.family.subsets[m.elements[i].map[0]].empty();
    }
    std::vector<std::size_t> indegree(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        if (!in[i]) continue;
        for (auto j : m.right[i]) {
            if (in[j]) ++indegree[j];
        }
    }
    std::vector<std::size_t> work;
    std::size_t alive = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (in[i]) {
            ++alive;
            if (indegree[i] == 0) work.push_back(i);
        }
    }
    while (!work.empty()) {
        auto i = work.back();
        work.pop_back();
        --alive;
        for (auto j : m.right[i]) {
            if (in[j] && --indegree[j] == 0) work.push_back(j);
        }
    }
    return alive == 0;
}

Verdict is_sft(const Presentation& p, const EngineLimits& limits) {
    try {
        return verdict(is_sft(analyse(p, limits)));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::resource_cap) {
            return Verdict::unknown;
        }
        throw;
    }
}

ClosingReport closing_delay(const Presentation& p, Side side) {
    return side == Side::right ? right_closing(p) : right_closing(transpose(p));
}

AftReport aft_report(const Presentation& p, const EngineLimits& limits) {
    auto an = analyse(p, limits);
    CoverOptions options;
    options.limits = limits;
    auto fischer = left_fischer_cover(p, an, options);
    AftReport r;
    r.closing = closing_delay(fischer.graph, Side::right);
    r.aft = r.closing.closing;
    if (is_sft(an)) {
        r.note = "not strictly sofic: shift of finite type";
    }
    return r;
}

bool is_aft(const Presentation& p, const EngineLimits& limits) {
    return aft_report(p, limits).aft;
}

std::optional<DivergingWord> diverging_periodic_word(const Presentation& p) {
    auto g = pair_graph(p, true);
    const auto n = g.n;
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = 0; y < n; ++y) {
            if (x == y) continue;
            auto start = g.id(x, y);
            // Shortest cycle through start.
            std::vector<std::optional<std::pair<std::uint32_t, SymbolId>>> parent(g.arcs.size());
            std::vector<bool> seen(g.arcs.size(), false);
            std::deque<std::uint32_t> queue{start};
            std::optional<std::pair<std::uint32_t, SymbolId>> closing;
            while (!queue.empty() && !closing) {
                auto v = queue.front();
                queue.pop_front();
                for (auto [w, a] : g.arcs[v]) {
                    if (w == start) {
                        closing = std::make_pair(v, a);
                        break;
                    }
                    if (!seen[w]) {
                        seen[w] = true;
                        parent[w] = std::make_pair(v, a);
                        queue.push_back(w);
                    }
                }
            }
            if (!closing) continue;
            std::vector<std::pair<std::uint32_t, SymbolId>> steps{{start, closing->second}};
            for (auto v = closing->first; v != start; v = parent[v]->first) {
                steps.emplace_back(v, parent[v]->second);
            }
            std::reverse(steps.begin(), steps.end());
            DivergingWord d{{}, {x}, {y}};
            for (auto [v, a] : steps) {
                d.word.push_back(a);
                d.first.push_back(g.first(v));
                d.second.push_back(g.second(v));
            }
            return d;
        }
    }
    return std::nullopt;
}

DecisionReport inspect(const Presentation& input, const EngineLimits& limits) {
    DecisionReport r;
    r.essential = input.is_essential();
    auto p = r.essential ? input : trim_essential(input);
    if (!r.essential) {
        r.notes.push_back("analysed the essential part (" + std::to_string(p.vertex_count()) + " of " +
                          std::to_string(input.vertex_count()) + " vertices)");
    }
    r.left_resolving = resolving_check(p, Side::left);
    r.right_resolving = resolving_check(p, Side::right);
    r.right_closing = closing_delay(p, Side::right);
    r.left_closing = closing_delay(p, Side::left);
    r.shift_irreducible = is_irreducible_shift(p, limits);

    std::optional<SubsetAnalysis> an;
    try {
        an = analyse(p, limits);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::resource_cap) throw;
        r.notes.push_back(e.what());
        return r;
    }
    bool sft = is_sft(*an);
    r.sft = verdict(sft);
    r.strictly_sofic = verdict(!sft);
    if (!r.shift_irreducible) {
        r.aft = Verdict::no;
        r.notes.push_back("aft: shift not irreducible");
        return r;
    }
    CoverOptions options;
    options.limits = limits;
    auto fischer = left_fischer_cover(p, *an, options);
    r.aft = verdict(closing_delay(fischer.graph, Side::right).closing);
    if (sft) {
        r.notes.push_back("aft: not strictly sofic, right-closing verdict of the left Fischer cover reported");
    }
    return r;
}

Json closing_to_json(const Presentation& p, const ClosingReport& r) {
    Json j;
    j["closing"] = r.closing;
    j["delay"] = r.delay ? Json(*r.delay) : Json(nullptr);
    if (r.witness) {
        auto names = [&](const std::vector<VertexId>& vs) {
            Json out = Json::array();
            for (auto v : vs) out.push_back(p.vertex_name(v));
            return out;
        };
        j["witness"] = {{"start", p.vertex_name(r.witness->start)},
                        {"label", p.alphabet().format(r.witness->label)},
                        {"first", names(r.witness->first)},
                        {"second", names(r.witness->second)}};
    }
    return j;
}

Json report_to_json(const Presentation& p, const DecisionReport& r) {
    auto q = r.essential ? p : trim_essential(p);
    Json j;
    j["essential"] = r.essential;
    j["left_resolving"] = r.left_resolving;
    j["right_resolving"] = r.right_resolving;
    j["shift_irreducible"] = r.shift_irreducible;
    j["sft"] = to_string(r.sft);
    j["strictly_sofic"] = to_string(r.strictly_sofic);
    j["aft"] = to_string(r.aft);
    j["right_closing"] = closing_to_json(q, r.right_closing);
    j["left_closing"] = closing_to_json(q, r.left_closing);
    j["notes"] = r.notes;
    return j;
}

std::string report_to_table(const DecisionReport& r) {
    auto delay = [](const ClosingReport& c) {
        return c.closing ? "yes (delay " + std::to_string(*c.delay) + ")" : std::string("no");
    };
    std::ostringstream out;
    auto row = [&](const char* key, const std::string& value) {
        out << key << std::string(20 - std::string_view(key).size(), ' ') << value << "\n";
    };
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    row("essential", b(r.essential));
    row("left_resolving", b(r.left_resolving));
    row("right_resolving", b(r.right_resolving));
    row("shift_irreducible", b(r.shift_irreducible));
    row("sft", to_string(r.sft));
    row("strictly_sofic", to_string(r.strictly_sofic));
    row("aft", to_string(r.aft));
    row("right_closing", delay(r.right_closing));
    row("left_closing", delay(r.left_closing));
    for (const auto& n : r.notes) {
        row("note", n);
    }
    return out.str();
}

}  // namespace sofic
