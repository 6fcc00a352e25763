#include "sofic/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "sofic/covers.hpp"
#include "sofic/decisions.hpp"
#include "sofic/error.hpp"
#include "sofic/language.hpp"
#include "sofic/moves.hpp"
#include "sofic/structure.hpp"

namespace sofic {
namespace {

// Thrown inside a property to mark it inapplicable.
struct Skip {
    std::string why;
};

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::vector<VertexSet> reach_from(const Presentation& p, bool strict) {
    const auto n = p.vertex_count();
    std::vector<VertexSet> reach(n, VertexSet(n));
    for (VertexId s = 0; s < n; ++s) {
        std::vector<VertexId> stack;
        if (!strict) reach[s].set(s);
        for (auto ei : p.out_edges(s)) {
            auto d = p.edge(ei).dst;
            if (!reach[s].test(d)) {
                reach[s].set(d);
                stack.push_back(d);
            }
        }
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

std::vector<Word> words_up_to(std::size_t symbols, std::size_t max_length) {
    std::vector<Word> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == max_length) continue;
        for (SymbolId a = 0; a < symbols; ++a) {
            auto w = out[i];
            w.push_back(a);
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<Word> blocks_up_to(const Presentation& p, std::size_t max_length) {
    std::vector<Word> out{{}};
    for (std::size_t n = 1; n <= max_length; ++n) {
        auto b = blocks(p, n);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::string fmt(const Presentation& p, const Word& w) {
    return w.empty() ? std::string("ε") : p.alphabet().format(w);
}

std::string set_name(const Presentation& p, const VertexSet& s) {
    std::string out = "{";
    for (auto v : s.members()) {
        out += (out.size() > 1 ? "," : "") + p.vertex_name(v);
    }
    return out + "}";
}

FamilyIndex follow(const PreFamily& f, FamilyIndex s, const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) s = f.step[s][*it];
    return s;
}

// Shortest word preceding exactly one of {u}, {v}.
bool predecessor_separated(const Presentation& p, VertexId u, VertexId v) {
    const auto n = p.vertex_count();
    VertexSet a(n), b(n);
    a.set(u);
    b.set(v);
    std::set<std::pair<std::vector<VertexId>, std::vector<VertexId>>> seen;
    std::vector<std::pair<VertexSet, VertexSet>> queue{{a, b}};
    seen.insert({a.members(), b.members()});
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (SymbolId s = 0; s < p.alphabet().size(); ++s) {
            auto na = pre_step(p, queue[i].first, s);
            auto nb = pre_step(p, queue[i].second, s);
            if (na.empty() != nb.empty()) return true;
            if (na.empty()) continue;
            if (seen.insert({na.members(), nb.members()}).second) queue.emplace_back(na, nb);
        }
    }
    return false;
}

Presentation renumbered(const Presentation& p) {
    const auto n = static_cast<VertexId>(p.vertex_count());
    std::vector<std::string> names(p.vertex_names().rbegin(), p.vertex_names().rend());
    std::vector<Edge> edges;
    for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) {
        edges.push_back({n - 1 - it->src, n - 1 - it->dst, it->label});
    }
    return Presentation(p.alphabet(), names, edges, p.sidedness());
}

bool pc_well_formed(const Presentation& g, std::string& why) {
    auto pc = pc_graph(g);
    std::set<std::pair<std::size_t, std::size_t>> arcs(pc.arcs.begin(), pc.arcs.end());
    for (auto [i, j] : arcs) {
        if (i == j || arcs.count({j, i})) {
            why = "arc relation has a circuit";
            return false;
        }
        for (auto [k, l] : arcs) {
            if (k == j && l != i && !arcs.count({i, l})) {
                why = "arc relation not transitive";
                return false;
            }
        }
    }
    auto strict = reach_from(g, true);
    std::vector<bool> covered(g.vertex_count(), false);
    for (const auto& node : pc.nodes) {
        for (auto v : node) {
            if (covered[v]) {
                why = "proper communication sets overlap";
                return false;
            }
            covered[v] = true;
            for (auto u : node) {
                if (!strict[v].test(u)) {
                    why = "vertex " + g.vertex_name(v) + " does not properly reach " + g.vertex_name(u);
                    return false;
                }
            }
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!covered[v] && strict[v].test(v)) {
            why = "vertex " + g.vertex_name(v) + " lies on a circuit but in no proper communication set";
            return false;
        }
    }
    return true;
}

class Suite {
public:
    Suite(const Presentation& input, std::string subject, const SuiteOptions& options)
        : input_(input), q_(input.is_essential() ? input : trim_essential(input)), options_(options) {
        report_.subject = std::move(subject);
        cover_options_.limits = options.limits;
        cover_options_.block_bound = options.block_bound;
    }

    PropertyReport run();

private:
    const Presentation& input_;
    Presentation q_;
    SuiteOptions options_;
    CoverOptions cover_options_;
    PropertyReport report_;

    std::optional<SubsetAnalysis> analysis_;
    std::optional<Cover> krieger_, past_, fischer_;
    std::optional<bool> irreducible_, sft_, aft_;

    void check(const std::string& name, const std::function<Outcome()>& body);

    bool two_sided() const { return q_.sidedness() == Sidedness::two_sided; }
    void need_two_sided() const {
        if (!two_sided()) throw Skip{"one-sided input"};
    }
    void need_irreducible() {
        if (!irreducible()) throw Skip{"shift not irreducible"};
    }

    const SubsetAnalysis& analysis() {
        if (!analysis_) analysis_ = analyse(q_, options_.limits);
        return *analysis_;
    }
    bool irreducible() {
        if (!irreducible_) irreducible_ = is_irreducible_shift(q_, options_.limits);
        return *irreducible_;
    }
    bool sft() {
        if (!sft_) sft_ = is_sft(analysis());
        return *sft_;
    }
    bool aft() {
        need_irreducible();
        if (!aft_) aft_ = closing_delay(fischer().graph, Side::right).closing;
        return *aft_;
    }
    const Cover& krieger() {
        need_two_sided();
        if (!krieger_) krieger_ = left_krieger_cover(q_, analysis(), cover_options_);
        return *krieger_;
    }
    const Cover& past() {
        if (!past_) past_ = past_set_cover(q_, analysis(), cover_options_);
        return *past_;
    }
    const Cover& fischer() {
        need_irreducible();
        if (!fischer_) fischer_ = left_fischer_cover(q_, analysis(), cover_options_);
        return *fischer_;
    }

    std::string star_symbol() const {
        std::string s = "*";
        while (q_.alphabet().find(s)) s += "'";
        return s;
    }

    void graph_core();
    void subset_engine();
    void covers();
    void decisions();
    void moves();
    void structure();
};

void Suite::check(const std::string& name, const std::function<Outcome()>& body) {
    PropertyResult r{name, Status::pass, {}};
    try {
        auto o = body();
        r.status = o.ok ? Status::pass : Status::fail;
        r.detail = std::move(o.detail);
    } catch (const Skip& s) {
        r.status = Status::skip;
        r.detail = s.why;
    } catch (const Error& e) {
        r.status = e.kind() == ErrorKind::resource_cap ? Status::skip : Status::fail;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.detail = e.what();
    }
    report_.results.push_back(std::move(r));
}

void Suite::graph_core() {
    check("trim_idempotent", [&] {
        auto once = trim_essential(input_);
        if (!(trim_essential(once) == once)) return fail("second trim changed the graph");
        if (!once.is_essential()) return fail("trimmed graph not essential");
        return pass();
    });
    check("transpose_involution", [&] {
        return transpose(transpose(q_)) == q_ ? pass() : fail("transpose twice differs");
    });
    check("resolving_duality", [&] {
        for (auto side : {Side::left, Side::right}) {
            auto other = side == Side::left ? Side::right : Side::left;
            if (resolving_check(q_, side) != resolving_check(transpose(q_), other)) {
                return fail("resolving check disagrees with the transpose");
            }
        }
        return pass();
    });
    check("isomorphism_reflexive_symmetric", [&] {
        auto r = renumbered(q_);
        if (!labelled_isomorphic(q_, q_)) return fail("not isomorphic to itself");
        if (!labelled_isomorphic(q_, r) || !labelled_isomorphic(r, q_)) return fail("renumbered copy not matched");
        return pass();
    });
}

void Suite::subset_engine() {
    check("pre_action_associative", [&] {
        const auto& f = analysis().family;
        auto words = words_up_to(q_.alphabet().size(), q_.alphabet().size() > 4 ? 1 : 2);
        for (const auto& s : f.subsets) {
            for (const auto& u : words) {
                for (const auto& v : words) {
                    Word uv = u;
                    uv.insert(uv.end(), v.begin(), v.end());
                    if (!(pre_word(q_, s, uv) == pre_word(q_, pre_word(q_, s, v), u))) {
                        return fail("Pre_" + fmt(q_, uv) + " differs from Pre_" + fmt(q_, u) + " after Pre_" +
                                    fmt(q_, v) + " on " + set_name(q_, s));
                    }
                }
            }
        }
        return pass();
    });
    check("pre_step_monotone", [&] {
        const auto& f = analysis().family;
        for (const auto& s : f.subsets)
            for (const auto& t : f.subsets)
                if (s.subset_of(t))
                    for (SymbolId a = 0; a < q_.alphabet().size(); ++a)
                        if (!pre_step(q_, s, a).subset_of(pre_step(q_, t, a)))
                            return fail("monotonicity fails on " + set_name(q_, s) + " within " + set_name(q_, t));
        return pass();
    });
    check("family_witnesses_reproduce", [&] {
        const auto& f = analysis().family;
        for (std::size_t s = 0; s < f.size(); ++s) {
            if (!(predecessor_set(q_, f.witness[s]) == f.subsets[s])) {
                return fail("I(" + fmt(q_, f.witness[s]) + ") differs from member " + std::to_string(s));
            }
            for (SymbolId a = 0; a < q_.alphabet().size(); ++a) {
                if (!(f.subsets[f.step[s][a]] == pre_step(q_, f.subsets[s], a))) {
                    return fail("step table wrong at member " + std::to_string(s));
                }
            }
        }
        return pass();
    });
    check("monoid_witnesses_reproduce", [&] {
        const auto& an = analysis();
        std::size_t limit = std::min<std::size_t>(an.monoid.elements.size(), 2000);
        for (std::size_t i = 0; i < limit; ++i) {
            const auto& e = an.monoid.elements[i];
            for (FamilyIndex s = 0; s < an.family.size(); ++s) {
                if (!(an.family.subsets[e.map[s]] == pre_word(q_, an.family.subsets[s], e.witness))) {
                    return fail("element " + fmt(q_, e.witness) + " does not act as its witness");
                }
            }
        }
        return pass();
    });
    check("partition_congruence", [&] {
        const auto& an = analysis();
        const auto& f = an.family;
        const auto& cls = an.partition.class_of;
        for (FamilyIndex s = 0; s < f.size(); ++s) {
            for (FamilyIndex t = s + 1; t < f.size(); ++t) {
                if (cls[s] != cls[t]) continue;
                if (f.subsets[s].empty() != f.subsets[t].empty()) return fail("empty set shares a class");
                for (SymbolId a = 0; a < q_.alphabet().size(); ++a) {
                    if (cls[f.step[s][a]] != cls[f.step[t][a]]) {
                        return fail("classes split under " + q_.alphabet().name(a));
                    }
                }
            }
        }
        return pass();
    });
    check("ray_subsets_closed", [&] {
        const auto& an = analysis();
        std::set<FamilyIndex> rays(an.rays.begin(), an.rays.end());
        for (auto r : an.rays)
            for (auto t : an.family.step[r])
                if (!an.family.subsets[t].empty() && !rays.count(t))
                    return fail("nonempty Pre step leaves the ray subsets");
        return pass();
    });
    check("ray_subsets_oracle", [&] {
        // I(v u^∞) by forward simulation: u^(n+1) readable forces a circuit.
        const auto& an = analysis();
        std::set<FamilyIndex> rays(an.rays.begin(), an.rays.end());
        const auto n = q_.vertex_count();
        auto us = words_up_to(q_.alphabet().size(), q_.alphabet().size() > 3 ? 2 : 3);
        auto vs = words_up_to(q_.alphabet().size(), 2);
        std::set<FamilyIndex> seen;
        for (const auto& u : us) {
            if (u.empty()) continue;
            Word tail;
            for (std::size_t k = 0; k <= n; ++k) tail.insert(tail.end(), u.begin(), u.end());
            for (const auto& v : vs) {
                Word w = v;
                w.insert(w.end(), tail.begin(), tail.end());
                VertexSet s(n);
                for (VertexId x = 0; x < n; ++x) {
                    VertexSet one(n);
                    one.set(x);
                    if (!post_word(q_, one, w).empty()) s.set(x);
                }
                if (s.empty()) continue;
                auto idx = an.family.find(s);
                if (!idx) return fail("I(" + fmt(q_, v) + "(" + fmt(q_, u) + ")^∞) is not a family member");
                if (!rays.count(*idx)) {
                    return fail("I(" + fmt(q_, v) + "(" + fmt(q_, u) + ")^∞) = " + set_name(q_, s) +
                                " missing from ray subsets");
                }
                seen.insert(*idx);
            }
        }
        return pass(std::to_string(seen.size()) + " of " + std::to_string(rays.size()) + " ray subsets sampled");
    });
    check("past_partition_oracle", [&] {
        if (q_.vertex_count() > options_.oracle_max_vertices) throw Skip{"more than " + std::to_string(options_.oracle_max_vertices) + " vertices"};
        const auto& an = analysis();
        const auto L = options_.oracle_length;
        // Membership of vw depends on v only through Post_v(E).
        std::vector<VertexSet> futures;
        {
            std::set<std::vector<VertexId>> distinct;
            for (const auto& v : blocks_up_to(q_, L)) {
                auto fset = post_word(q_, VertexSet::full(q_.vertex_count()), v);
                if (distinct.insert(fset.members()).second) futures.push_back(fset);
            }
        }
        std::map<std::vector<bool>, std::uint32_t> class_of_signature;
        std::map<std::uint32_t, std::vector<bool>> signature_of_class;
        for (const auto& w : blocks_up_to(q_, L)) {
            std::vector<bool> sig;
            for (const auto& fset : futures) sig.push_back(!post_word(q_, fset, w).empty());
            auto cls = an.partition.class_of[follow(an.family, 0, w)];
            auto [it, fresh] = class_of_signature.emplace(sig, cls);
            if (!fresh && it->second != cls) {
                return fail("words with equal bounded pasts lie in different classes (at " + fmt(q_, w) + ")");
            }
            auto [jt, fresh2] = signature_of_class.emplace(cls, sig);
            if (!fresh2 && jt->second != sig) {
                return fail("class " + std::to_string(cls) + " holds words with different bounded pasts (at " +
                            fmt(q_, w) + ")");
            }
        }
        return pass(std::to_string(class_of_signature.size()) + " past classes");
    });
}

void Suite::covers() {
    check("covers_resolving_same_language", [&] {
        std::vector<std::string> built;
        if (two_sided()) {
            krieger();
            built.push_back("left-krieger");
        }
        past();
        built.push_back("past-set");
        if (irreducible()) {
            fischer();
            right_cover(q_, CoverKind::right_fischer, cover_options_);
            built.push_back("left-fischer");
            built.push_back("right-fischer");
        }
        if (two_sided()) {
            right_cover(q_, CoverKind::right_krieger, cover_options_);
            built.push_back("right-krieger");
        }
        std::string list;
        for (const auto& b : built) list += (list.empty() ? "" : ", ") + b;
        return pass(list);
    });
    check("krieger_embeds_in_past_set", [&] {
        const auto& k = krieger();
        const auto& ps = past();
        std::set<std::uint32_t> classes(ps.class_of_vertex.begin(), ps.class_of_vertex.end());
        for (auto c : k.class_of_vertex) {
            if (!classes.count(c)) return fail("ray class " + std::to_string(c) + " is not a word class");
        }
        return subgraph_embedding(k, ps) ? pass() : fail("no embedding");
    });
    auto no_return = [&](const Cover& c) {
        auto reach = reach_from(c.graph, false);
        for (VertexId u = 0; u < c.graph.vertex_count(); ++u) {
            if (c.synchronising[u]) continue;
            for (VertexId v = 0; v < c.graph.vertex_count(); ++v) {
                if (c.synchronising[v] && reach[u].test(v)) {
                    return fail("non-synchronising " + c.graph.vertex_name(u) + " reaches synchronising " +
                                c.graph.vertex_name(v));
                }
            }
        }
        return pass();
    };
    check("krieger_no_path_to_synchronising", [&] { return no_return(krieger()); });
    check("past_set_no_path_to_synchronising", [&] { return no_return(past()); });
    check("synchronising_words_start_uniquely", [&] {
        const auto& k = krieger();
        const auto& an = analysis();
        std::vector<Word> words;
        for (const auto& sc : synchronising_classes(an)) words.push_back(sc.witness);
        auto small = blocks_up_to(q_, q_.alphabet().size() > 3 ? 2 : 3);
        for (const auto& w : small) {
            if (is_intrinsically_synchronising(an, w)) words.push_back(w);
        }
        for (const auto& w : words) {
            auto starts = predecessor_set(k.graph, w);
            if (starts.count() != 1) {
                return fail("synchronising word " + fmt(q_, w) + " starts at " + std::to_string(starts.count()) +
                            " Krieger vertices");
            }
        }
        return pass(std::to_string(words.size()) + " words");
    });
    check("synchronisation_cross_check", [&] {
        const auto& an = analysis();
        auto post = post_family(q_, options_.limits);
        auto small = blocks_up_to(q_, q_.alphabet().size() > 3 ? 3 : 4);
        for (const auto& w : small) {
            bool brute = true;
            for (const auto& x : post.subsets) {
                if (x.empty()) continue;
                auto after = post_word(q_, x, w);
                if (after.empty()) continue;
                for (const auto& y : an.family.subsets) {
                    if (y.empty() || pre_word(q_, y, w).empty()) continue;
                    if (!after.intersects(y)) {
                        brute = false;
                        break;
                    }
                }
                if (!brute) break;
            }
            if (brute != is_intrinsically_synchronising(an, w)) {
                return fail("verdicts differ on " + fmt(q_, w));
            }
        }
        return pass(std::to_string(small.size()) + " words");
    });
    check("fischer_minimal_separated", [&] {
        const auto& f = fischer().graph;
        if (!resolving_check(f, Side::left)) return fail("not left-resolving");
        if (is_reducible(f)) return fail("not irreducible");
        for (VertexId u = 0; u < f.vertex_count(); ++u)
            for (VertexId v = u + 1; v < f.vertex_count(); ++v)
                if (!predecessor_separated(f, u, v))
                    return fail("vertices " + f.vertex_name(u) + " and " + f.vertex_name(v) + " share their past");
        if (!labelled_isomorphic(left_fischer_cover(f, cover_options_).graph, f)) {
            return fail("Fischer cover of the Fischer cover differs");
        }
        if (resolving_check(q_, Side::left) && !is_reducible(q_) && q_.vertex_count() < f.vertex_count()) {
            return fail("a smaller irreducible left-resolving presentation exists");
        }
        return pass();
    });
    check("fischer_is_synchronising_part", [&] {
        const auto& f = fischer().graph;
        auto induced = [](const Cover& c) {
            std::vector<VertexId> keep;
            for (VertexId v = 0; v < c.graph.vertex_count(); ++v)
                if (c.synchronising[v]) keep.push_back(v);
            return induced_subgraph(c.graph, keep);
        };
        if (!labelled_isomorphic(f, induced(past()))) return fail("differs from the past set cover part");
        if (two_sided() && !labelled_isomorphic(f, induced(krieger()))) return fail("differs from the Krieger part");
        return pass();
    });
}

void Suite::decisions() {
    auto strictly_sofic_aft = [&] {
        need_irreducible();
        if (sft()) throw Skip{"shift of finite type"};
        if (!aft()) throw Skip{"not almost finite type"};
    };
    check("aft_implies_reducible_krieger", [&] {
        need_two_sided();
        strictly_sofic_aft();
        return is_reducible(krieger().graph) ? pass() : fail("irreducible Krieger cover for an AFT shift");
    });
    check("aft_implies_reducible_past_set", [&] {
        strictly_sofic_aft();
        return is_reducible(past().graph) ? pass() : fail("irreducible past set cover for an AFT shift");
    });
    check("reducible_krieger_without_aft", [&] {
        need_two_sided();
        need_irreducible();
        if (sft()) throw Skip{"shift of finite type"};
        if (aft()) throw Skip{"almost finite type"};
        if (!is_reducible(krieger().graph)) throw Skip{"Krieger cover irreducible"};
        return pass("observed: reducible Krieger cover without AFT");
    });
    auto word = [&]() -> std::optional<DivergingWord> {
        need_irreducible();
        return diverging_periodic_word(fischer().graph);
    };
    check("strictly_sofic_has_diverging_word", [&] {
        auto d = word();
        if (sft()) throw Skip{"shift of finite type"};
        return d ? pass(fmt(q_, d->word)) : fail("no diverging periodic word");
    });
    check("diverging_word_not_synchronising", [&] {
        auto d = word();
        if (!d) throw Skip{"no diverging periodic word"};
        return is_intrinsically_synchronising(analysis(), d->word)
                   ? fail(fmt(q_, d->word) + " is intrinsically synchronising")
                   : pass(fmt(q_, d->word));
    });
    check("diverging_word_class_repeats", [&] {
        auto d = word();
        if (!d) throw Skip{"no diverging periodic word"};
        const auto& an = analysis();
        auto power_class = [&](std::size_t k) {
            FamilyIndex s = 0;
            for (std::size_t i = 0; i < k; ++i) s = follow(an.family, s, d->word);
            return an.partition.class_of[s];
        };
        // Pigeonhole over the first |family|+1 powers, then periodicity from
        // the first repeat on.
        const auto span = an.family.size();
        std::optional<std::size_t> first;
        for (std::size_t k0 = 1; k0 <= span + 1 && !first; ++k0) {
            for (std::size_t k = k0 + 1; k <= span + 1; ++k) {
                if (power_class(k) == power_class(k0)) {
                    first = k0;
                    break;
                }
            }
        }
        if (!first) return fail("no repeated class among the first " + std::to_string(span + 1) + " powers");
        for (auto k0 = *first; k0 < *first + 4; ++k0) {
            bool found = false;
            for (std::size_t k = k0 + 1; k <= k0 + span && !found; ++k) {
                found = power_class(k) == power_class(k0);
            }
            if (!found) return fail("no repeat after power " + std::to_string(k0));
        }
        return pass("first repeat at power " + std::to_string(*first));
    });
    check("sft_has_no_diverging_word", [&] {
        auto d = word();
        if (!sft()) throw Skip{"strictly sofic"};
        return d ? fail("diverging word " + fmt(q_, d->word) + " in an SFT") : pass();
    });
    check("closing_duality", [&] {
        auto a = closing_delay(q_, Side::left);
        auto b = closing_delay(transpose(q_), Side::right);
        bool same = a.closing == b.closing && a.delay == b.delay;
        if (same && a.witness && b.witness) {
            same = a.witness->start == b.witness->start && a.witness->label == b.witness->label &&
                   a.witness->first == b.witness->first && a.witness->second == b.witness->second;
        }
        return same ? pass() : fail("left report differs from the transpose's right report");
    });
    check("aft_invariant_under_higher_block", [&] {
        need_irreducible();
        auto hb = higher_block(q_, 2, options_.max_higher_block_edges);
        bool here = aft();
        bool there = is_aft(hb, options_.limits);
        return here == there ? pass(here ? "aft" : "not aft") : fail("verdict changes under 2-block recoding");
    });
}

void Suite::moves() {
    const auto star = star_symbol();
    for (SymbolId a = 0; a < q_.alphabet().size(); ++a) {
        const auto& name = q_.alphabet().name(a);
        auto expanded = [&] { return symbol_expand(q_, name, star); };
        check("symbol_expansion_shape[" + name + "]", [&] {
            auto e = expanded();
            auto count = q_.edges_labelled(a).size();
            if (e.vertex_count() != q_.vertex_count() + count) return fail("vertex count");
            if (e.edge_count() != q_.edge_count() + count) return fail("edge count");
            if (!e.is_essential()) return fail("not essential");
            auto s = *e.alphabet().find(star);
            for (auto ei : e.edges_labelled(s)) {
                auto x = e.edge(ei).src;
                if (x < q_.vertex_count()) return fail("star edge leaves an original vertex");
                if (e.in_edges(x).size() != 1 || e.out_edges(x).size() != 1) return fail("new vertex degree");
                if (e.edge(e.in_edges(x)[0]).label != *e.alphabet().find(name)) return fail("new vertex entry label");
            }
            return pass();
        });
        check("symbol_expansion_language[" + name + "]", [&] {
            auto e = expanded();
            auto s = *e.alphabet().find(star);
            auto ea = *e.alphabet().find(name);
            for (const auto& u : blocks_up_to(q_, 5)) {
                Word x;
                for (auto c : u) {
                    x.push_back(*e.alphabet().find(q_.alphabet().name(c)));
                    if (c == a) x.push_back(s);
                }
                if (!contains_word(e, x)) return fail("expansion of " + fmt(q_, u) + " missing");
            }
            for (const auto& x : blocks_up_to(e, 6)) {
                Word u;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (x[i] == s) {
                        if (i > 0 && x[i - 1] != ea) return fail("star after another symbol in " + fmt(e, x));
                        continue;
                    }
                    if (x[i] == ea && i + 1 < x.size() && x[i + 1] != s) return fail("no star after symbol in " + fmt(e, x));
                    u.push_back(q_.alphabet().index(e.alphabet().name(x[i])));
                }
                if (!x.empty() && x[0] == s) u.insert(u.begin(), a);
                if (!contains_word(q_, u)) return fail(fmt(e, x) + " has no source block");
            }
            return pass();
        });
        check("symbol_expansion_pc_isomorphic[" + name + "]", [&] {
            need_two_sided();
            auto ke = left_krieger_cover(expanded(), cover_options_);
            return pc_isomorphic(pc_graph(krieger().graph), pc_graph(ke.graph))
                       ? pass()
                       : fail("proper communication graphs differ");
        });
        check("symbol_expansion_krieger_count[" + name + "]", [&] {
            need_two_sided();
            const auto& k = krieger().graph;
            std::set<VertexId> emitters;
            for (auto ei : k.edges_labelled(a)) emitters.insert(k.edge(ei).src);
            auto ke = left_krieger_cover(expanded(), cover_options_);
            auto expected = k.vertex_count() + emitters.size();
            if (ke.graph.vertex_count() != expected) {
                return fail(std::to_string(ke.graph.vertex_count()) + " vertices, expected " + std::to_string(expected));
            }
            return pass(std::to_string(k.vertex_count()) + " + " + std::to_string(emitters.size()));
        });
    }
    for (auto n : options_.higher_block_orders) {
        auto tag = "[" + std::to_string(n) + "]";
        check("higher_block_pc_isomorphic" + tag, [&] {
            need_two_sided();
            auto hb = higher_block(q_, n, options_.max_higher_block_edges);
            auto kh = left_krieger_cover(hb, cover_options_);
            return pc_isomorphic(pc_graph(krieger().graph), pc_graph(kh.graph))
                       ? pass()
                       : fail("proper communication graphs differ");
        });
        check("higher_block_language" + tag, [&] {
            auto hb = higher_block(q_, n, options_.max_higher_block_edges);
            for (std::size_t k = 1; k <= 3; ++k) {
                if (blocks(hb, k).size() != blocks(q_, k + n - 1).size()) {
                    return fail("block counts differ at length " + std::to_string(k));
                }
            }
            return pass();
        });
    }
}

void Suite::structure() {
    check("pc_graph_well_formed", [&] {
        std::string why;
        if (!pc_well_formed(q_, why)) return fail("input: " + why);
        if (two_sided() && !pc_well_formed(krieger().graph, why)) return fail("Krieger: " + why);
        if (!pc_well_formed(past().graph, why)) return fail("past set: " + why);
        return pass();
    });
    check("reducible_iff_several_classes", [&] {
        for (const Presentation* g : {static_cast<const Presentation*>(&q_), &past().graph}) {
            auto d = underlying_digraph(*g);
            bool single = communicating_classes(d).size() == 1 && pc_graph(d).nodes.size() <= 1;
            if (is_reducible(*g) == single) return fail("reducibility disagrees with the class count");
            if (!is_reducible(*g) && !transitional_edges(*g).empty()) return fail("transitional edge in irreducible graph");
        }
        return pass();
    });
    check("pc_isomorphism_reflexive", [&] {
        auto pc = pc_graph(q_);
        return pc_isomorphic(pc, pc) ? pass() : fail("not isomorphic to itself");
    });
}

PropertyReport Suite::run() {
    graph_core();
    subset_engine();
    covers();
    decisions();
    moves();
    structure();
    if (report_.count(Status::fail) > 0) {
        report_.reproducer = to_json(input_);
    }
    return std::move(report_);
}

}  // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "?";
}

std::size_t PropertyReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [s](const auto& r) { return r.status == s; }));
}

const PropertyResult* PropertyReport::find(std::string_view property) const {
    for (const auto& r : results) {
        if (r.property == property) return &r;
    }
    return nullptr;
}

PropertyReport run_property_suite(const Presentation& p, std::string subject, const SuiteOptions& options) {
    return Suite(p, std::move(subject), options).run();
}

bool CheckReport::ok() const {
    for (const auto& e : entries) {
        if (e.properties.count(Status::fail) > 0) return false;
        for (const auto& x : e.expectations) {
            if (!x.passed) return false;
        }
    }
    return true;
}

bool CheckReport::capped() const {
    for (const auto& e : entries) {
        for (const auto& r : e.properties.results) {
            if (r.status == Status::skip && r.detail.rfind("resource cap", 0) == 0) return true;
        }
    }
    return false;
}

EntryReport check_corpus_entry(const CorpusEntry& entry, const SuiteOptions& options) {
    EntryReport r;
    for (const auto& x : entry.expected) {
        Json actual;
        try {
            actual = evaluate_metric(entry, x.metric);
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        r.expectations.push_back({x.metric, x.expected, actual, x.source, actual == x.expected});
    }
    auto opts = options;
    opts.higher_block_orders = {2, 3};
    r.properties = run_property_suite(entry.presentation, entry.name, opts);
    bool expectation_failed = std::any_of(r.expectations.begin(), r.expectations.end(), [](auto& x) { return !x.passed; });
    if (expectation_failed && !r.properties.reproducer) {
        r.properties.reproducer = to_json(entry.presentation);
    }
    return r;
}

CheckReport check_corpus(const SuiteOptions& options) {
    CheckReport r;
    for (const auto& entry : corpus()) {
        r.entries.push_back(check_corpus_entry(entry, options));
    }
    return r;
}

CheckReport check_random(std::size_t count, std::uint64_t seed, const SuiteOptions& options, const RandomSpec& shape) {
    CheckReport r;
    for (std::size_t i = 0; i < count; ++i) {
        auto spec = shape;
        spec.seed = seed + i;
        auto p = random_presentation(spec);
        r.entries.push_back({{}, run_property_suite(p, "random seed " + std::to_string(spec.seed), options)});
    }
    return r;
}

CheckReport check_presentation(const Presentation& p, std::string subject, const SuiteOptions& options) {
    CheckReport r;
    r.entries.push_back({{}, run_property_suite(p, std::move(subject), options)});
    return r;
}

Json property_report_to_json(const PropertyReport& r) {
    Json results = Json::array();
    for (const auto& x : r.results) {
        Json item{{"property", x.property}, {"status", to_string(x.status)}};
        if (!x.detail.empty()) item["detail"] = x.detail;
        results.push_back(std::move(item));
    }
    Json j{{"subject", r.subject},
           {"pass", r.count(Status::pass)},
           {"fail", r.count(Status::fail)},
           {"skip", r.count(Status::skip)},
           {"results", std::move(results)}};
    if (r.reproducer) j["reproducer"] = *r.reproducer;
    return j;
}

Json check_report_to_json(const CheckReport& r) {
    Json entries = Json::array();
    std::size_t passed = 0, failed = 0, skipped = 0, expectation_failures = 0;
    for (const auto& e : r.entries) {
        Json item = property_report_to_json(e.properties);
        if (!e.expectations.empty()) {
            Json xs = Json::array();
            for (const auto& x : e.expectations) {
                xs.push_back({{"metric", x.metric},
                              {"expected", x.expected},
                              {"actual", x.actual},
                              {"source", x.source},
                              {"status", x.passed ? "pass" : "fail"}});
                expectation_failures += x.passed ? 0 : 1;
            }
            item["expectations"] = std::move(xs);
        }
        passed += e.properties.count(Status::pass);
        failed += e.properties.count(Status::fail);
        skipped += e.properties.count(Status::skip);
        entries.push_back(std::move(item));
    }
    return Json{{"summary",
                 {{"subjects", r.entries.size()},
                  {"pass", passed},
                  {"fail", failed},
                  {"skip", skipped},
                  {"expectation_failures", expectation_failures},
                  {"ok", r.ok()}}},
                {"entries", std::move(entries)}};
}

}  // namespace sofic
