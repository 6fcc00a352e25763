// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "sofic/cli.hpp"
#include "sofic/covers.hpp"
#include "sofic/decisions.hpp"
#include "sofic/structure.hpp"
#include "sofic/suite.hpp"

using namespace sofic;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

bool all_pass = true;

void criterion(const std::string& id, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream limit;
    limit << std::fixed << std::setprecision(3) << secs << " s, limit " << limit_seconds << " s";
    o.expect(secs < limit_seconds, "runtime " + limit.str());
    all_pass = all_pass && o.ok;
    std::cout << id << (o.ok ? " PASS " : " FAIL ") << "[" << limit.str() << "]";
    if (!o.summary.empty()) {
        std::cout << " " << o.summary;
    }
    for (const auto& f : o.failures) {
        std::cout << "\n    - " << f;
    }
    std::cout << std::endl;
}

std::vector<std::string> names(const Presentation& p, const std::vector<std::vector<VertexId>>& sets) {
    std::vector<std::string> out;
    for (const auto& s : sets) {
        std::string row = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            row += (i ? "," : "") + p.vertex_name(s[i]);
        }
        out.push_back(row + "}");
    }
    return out;
}

std::string base_name(const std::string& property) { return property.substr(0, property.find('[')); }

struct Tally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    std::vector<std::string> failed_subjects;
};

void ac6(Outcome& o) {
    SuiteOptions options;
    const std::size_t batch = 200;
    const std::uint64_t seed = 1;
    RandomSpec general;
    RandomSpec resolving;
    resolving.left_resolving = true;
    resolving.edge_density = 0.15;

    struct Subject {
        const PropertyReport* report;
        std::size_t vertices;
        bool corpus;
    };
    auto corpus_report = check_corpus(options);
    auto general_report = check_random(batch, seed, options, general);
    auto resolving_report = check_random(batch, seed, options, resolving);

    std::vector<Subject> subjects;
    auto entries = corpus();
    for (std::size_t i = 0; i < corpus_report.entries.size(); ++i) {
        subjects.push_back({&corpus_report.entries[i].properties, entries[i].presentation.vertex_count(), true});
        for (const auto& x : corpus_report.entries[i].expectations) {
            o.expect(x.passed, entries[i].name + " expectation " + x.metric);
        }
    }
    for (auto [report, shape] : {std::pair{&general_report, general}, std::pair{&resolving_report, resolving}}) {
        for (std::size_t i = 0; i < report->entries.size(); ++i) {
            auto spec = shape;
            spec.seed = seed + i;
            auto p = random_presentation(spec);
            o.expect(p.vertex_count() <= 6 && p.alphabet().size() <= 3, "random shape out of range");
            subjects.push_back({&report->entries[i].properties, p.vertex_count(), false});
        }
    }

    std::map<std::string, Tally> tally;
    std::size_t oracle_instances = 0;
    std::size_t oracle_passes = 0;
    for (const auto& s : subjects) {
        for (const auto& r : s.report->results) {
            auto& t = tally[base_name(r.property)];
            if (r.status == Status::pass) ++t.pass;
            if (r.status == Status::skip) ++t.skip;
            if (r.status == Status::fail) {
                ++t.fail;
                t.failed_subjects.push_back(s.report->subject + ": " + r.property + " " + r.detail);
            }
        }
        if (s.vertices <= 4) {
            ++oracle_instances;
            const auto* r = s.report->find("past_partition_oracle");
            if (r && r->status == Status::pass) {
                ++oracle_passes;
            }
        }
    }

    auto group = [&](const std::string& label, const std::vector<std::string>& props, bool need_pass) {
        std::size_t pass = 0;
        for (const auto& name : props) {
            const auto& t = tally[name];
            pass += t.pass;
            o.expect(t.fail == 0, label + " " + name + ": " + std::to_string(t.fail) + " counterexamples");
            for (const auto& f : t.failed_subjects) {
                o.failures.push_back("    " + f);
            }
            if (need_pass) {
                o.expect(t.pass > 0, label + " " + name + ": never applicable");
            }
        }
        return pass;
    };

    auto a = group("(a)", {"aft_implies_reducible_krieger", "aft_implies_reducible_past_set"}, true);
    auto b = group("(b)", {"symbol_expansion_pc_isomorphic", "symbol_expansion_krieger_count"}, true);
    std::size_t c = 0;
    for (std::size_t i = 0; i < corpus_report.entries.size(); ++i) {
        for (const auto* prop : {"higher_block_pc_isomorphic[2]", "higher_block_pc_isomorphic[3]"}) {
            const auto* r = corpus_report.entries[i].properties.find(prop);
            bool passed = r && r->status == Status::pass;
            o.expect(passed, std::string("(c) ") + entries[i].name + " " + prop);
            c += passed;
        }
    }
    auto d = group("(d)",
                   {"synchronising_words_start_uniquely", "krieger_no_path_to_synchronising",
                    "past_set_no_path_to_synchronising", "strictly_sofic_has_diverging_word",
                    "diverging_word_not_synchronising", "diverging_word_class_repeats",
                    "synchronisation_cross_check", "fischer_is_synchronising_part", "fischer_minimal_separated"},
                   true);
    group("(e)", {"past_partition_oracle"}, true);
    o.expect(oracle_passes == oracle_instances,
             "(e) oracle ran on " + std::to_string(oracle_passes) + " of " + std::to_string(oracle_instances) +
                 " instances with at most 4 vertices");

    std::size_t total_fail = 0;
    for (const auto& [name, t] : tally) {
        total_fail += t.fail;
    }
    o.expect(total_fail == 0, "property failures overall: " + std::to_string(total_fail));

    std::ostringstream s;
    s << "subjects=" << subjects.size() << " (corpus " << entries.size() << ", random " << 2 * batch << ")"
      << " applicable: (a) " << a << " (b) " << b << " (c) " << c << " (d) " << d << " (e) " << oracle_passes
      << "/" << oracle_instances << "; failures " << total_fail;
    o.summary = s.str();
}

}  // namespace

int main() {
    criterion("AC1", 1.0, [](Outcome& o) {
        auto p = fixtures::even();
        auto f = left_fischer_cover(p);
        auto k = left_krieger_cover(p);
        auto ps = past_set_cover(p);
        auto ref = fixtures::entry("even_shift").reference_krieger.value();
        o.expect(f.graph.vertex_count() == 2 && f.graph.edge_count() == 3, "Fischer cover is not 2 vertices / 3 edges");
        o.expect(k.graph.vertex_count() == 3 && k.graph.edge_count() == 5, "Krieger cover is not 3 vertices / 5 edges");
        o.expect(labelled_isomorphic(k.graph, ref).has_value(), "Krieger cover differs from the reference shape");
        o.expect(is_reducible(k.graph), "Krieger cover irreducible");
        o.expect(labelled_isomorphic(ps.graph, k.graph).has_value(), "past set cover differs from Krieger cover");
        o.expect(is_aft(p), "not AFT");
        o.expect(is_sft(p) == Verdict::no, "is_sft not false");
        o.expect(is_irreducible_shift(p), "shift not irreducible");
        o.summary = "even shift: Fischer 2/3, Krieger 3/5 reducible, past set = Krieger, AFT, not SFT, irreducible";
    });

    criterion("AC2", 1.0, [](Outcome& o) {
        auto p = fixtures::bfg();
        auto k = left_krieger_cover(p);
        auto f = left_fischer_cover(p);
        o.expect(f.graph.vertex_count() == 2, "Fischer cover does not have 2 vertices");
        o.expect(labelled_isomorphic(k.graph, f.graph).has_value(), "Krieger cover not isomorphic to Fischer cover");
        o.expect(!is_reducible(k.graph), "Krieger cover reducible");
        o.expect(!is_aft(p), "AFT");
        o.expect(is_sft(p) == Verdict::no, "is_sft not false");
        o.summary = "bfg: Krieger = Fischer (2 vertices), irreducible cover, not AFT, not SFT";
    });

    criterion("AC3", 1.0, [](Outcome& o) {
        auto p = fixtures::jsb();
        auto k = left_krieger_cover(p);
        auto even_k = left_krieger_cover(fixtures::even());
        o.expect(is_irreducible_shift(p), "shift not irreducible");
        o.expect(is_sft(p) == Verdict::no, "not strictly sofic");
        o.expect(!is_aft(p), "AFT");
        o.expect(is_reducible(k.graph), "Krieger cover irreducible");
        o.expect(subgraph_embedding(even_k, k).has_value(), "even-shift Krieger cover does not embed");
        o.summary = "jsb: irreducible, strictly sofic, not AFT, Krieger reducible, even Krieger embeds";
    });

    criterion("AC4", 5.0, [](Outcome& o) {
        auto e = fixtures::entry("z_shift");
        o.expect(e.validation_length >= 12, "validation length below 12");
        auto bad = validate_against_forbidden(e);
        o.expect(!bad, "presentation disagrees with the forbidden factors on " +
                           (bad ? e.presentation.alphabet().format(*bad) : std::string()));
        auto ps = past_set_cover(e.presentation);
        auto k = left_krieger_cover(e.presentation);
        o.expect(ps.graph.vertex_count() == 5, "past set cover has " + std::to_string(ps.graph.vertex_count()) + " vertices");
        o.expect(is_reducible(ps.graph), "past set cover irreducible");
        o.expect(k.graph.vertex_count() == 4, "Krieger cover has " + std::to_string(k.graph.vertex_count()) + " vertices");
        o.expect(!is_reducible(k.graph), "Krieger cover reducible");
        o.expect(subgraph_embedding(k, ps).has_value(), "Krieger cover does not embed in past set cover");
        o.summary = "Z: validated to length " + std::to_string(e.validation_length) +
                    ", past set 5 reducible, Krieger 4 irreducible, embeds";
    });

    criterion("AC5", 1.0, [](Outcome& o) {
        auto p = communication_example();
        auto pcs = names(p, proper_communication_sets(p));
        o.expect(pcs == std::vector<std::string>{"{v,w}", "{x}", "{y}"}, "proper communication sets differ");
        auto g = pc_graph(p);
        o.expect(g.nodes.size() == 3, "pc graph does not have 3 nodes");
        o.expect(g.arcs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}}, "pc graph arcs differ");
        o.summary = "PC sets {v,w}, {x}, {y}; arcs {v,w}->{x}, {v,w}->{y}";
    });

    criterion("AC6", 300.0, ac6);

    criterion("AC7", 60.0, [](Outcome& o) {
        auto run = [] {
            const char* argv[] = {"sofic", "check", "--corpus"};
            std::ostringstream out;
            std::ostringstream err;
            int code = cli::dispatch(3, argv, out, err);
            return std::pair{code, out.str()};
        };
        auto [c1, r1] = run();
        auto [c2, r2] = run();
        o.expect(c1 == 0 && c2 == 0, "check --corpus did not exit 0");
        o.expect(!r1.empty(), "empty report");
        o.expect(r1 == r2, "reports differ");
        o.summary = "two check --corpus reports byte-identical (" + std::to_string(r1.size()) + " bytes)";
    });

    return all_pass ? 0 : 1;
}
