#include "sofic/corpus.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "sofic/covers.hpp"
#include "sofic/decisions.hpp"
#include "sofic/error.hpp"
#include "sofic/structure.hpp"
#include "sofic/subset_engine.hpp"

namespace sofic {
namespace {

using EdgeSpec = std::tuple<std::string, std::string, std::string>;

Presentation make(std::vector<std::string> symbols, std::vector<std::string> vertices,
                  const std::vector<EdgeSpec>& edges) {
    Alphabet alphabet(std::move(symbols));
    Presentation shell(alphabet, vertices, {});
    std::vector<Edge> out;
    for (const auto& [src, dst, label] : edges) {
        out.push_back({*shell.find_vertex(src), *shell.find_vertex(dst), alphabet.index(label)});
    }
    return Presentation(std::move(alphabet), std::move(vertices), std::move(out));
}

Expectation expect(std::string metric, Json value, std::string source) {
    return {std::move(metric), std::move(value), std::move(source)};
}

// Scans back from position `i` (exclusive) over 2s; returns the index of the
// first non-2 letter, or -1.
long skip_twos(const std::string& w, long i) {
    while (i >= 0 && w[i] == '2') --i;
    return i;
}

// Forbidden factors 1 2^k 1, 3 2^k 1 2, 3 2^k 1 3, 4 2^k 1 4.
bool z_ends_forbidden(const std::string& w) {
    const long n = static_cast<long>(w.size());
    if (n < 2) return false;
    char last = w[n - 1];
    if (last == '1') {
        long j = skip_twos(w, n - 2);
        return j >= 0 && w[j] == '1';
    }
    if (w[n - 2] != '1') return false;
    long j = skip_twos(w, n - 3);
    if (j < 0) return false;
    if (last == '2' || last == '3') return w[j] == '3';
    return last == '4' && w[j] == '4';
}

std::function<bool(const Word&)> by_names(const Alphabet& alphabet, std::function<bool(const std::string&)> f) {
    return [alphabet, f](const Word& w) {
        std::string s;
        for (auto a : w) s += alphabet.name(a);
        return f(s);
    };
}

Presentation even_krieger_reference() {
    return make({"0", "1"}, {"K1", "K01", "K0"},
                {{"K1", "K1", "1"}, {"K1", "K01", "0"}, {"K01", "K1", "0"}, {"K1", "K0", "1"}, {"K0", "K0", "0"}});
}

}  // namespace

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;

    {
        CorpusEntry e{"full_shift", "full shift on {0,1}", make({"0", "1"}, {"v"}, {{"v", "v", "0"}, {"v", "v", "1"}}),
                      {}, {}, 0, std::nullopt};
        e.expected = {expect("krieger_vertices", 1, "definition"),
                      expect("past_set_vertices", 1, "definition"),
                      expect("fischer_vertices", 1, "definition"),
                      expect("sft", "true", "definition"),
                      expect("shift_irreducible", true, "definition")};
        out.push_back(std::move(e));
    }
    {
        auto p = make({"0", "1"}, {"g0", "g1"}, {{"g0", "g0", "0"}, {"g0", "g1", "1"}, {"g1", "g0", "0"}});
        CorpusEntry e{"golden_mean", "no two consecutive 1s", p, {}, {}, 10, std::nullopt};
        e.ends_forbidden = by_names(p.alphabet(), [](const std::string& w) {
            return w.size() >= 2 && w.compare(w.size() - 2, 2, "11") == 0;
        });
        e.expected = {expect("sft", "true", "hand computation: every 1-block is synchronising"),
                      expect("shift_irreducible", true, "hand computation"),
                      expect("fischer_vertices", 2, "hand computation"),
                      expect("language_matches_forbidden_factors", true, "brute-force filter, words up to 10")};
        out.push_back(std::move(e));
    }
    {
        auto p = make({"0", "1"}, {"v1", "v2"}, {{"v1", "v1", "1"}, {"v1", "v2", "0"}, {"v2", "v1", "0"}});
        CorpusEntry e{"even_shift", "runs of 0 between 1s have even length", p, {}, {}, 10, even_krieger_reference()};
        e.ends_forbidden = by_names(p.alphabet(), [](const std::string& w) {
            // 1 0^odd 1
            if (w.size() < 2 || w.back() != '1') return false;
            auto j = w.rfind('1', w.size() - 2);
            return j != std::string::npos && (w.size() - 2 - j) % 2 == 1;
        });
        e.expected = {expect("fischer_vertices", 2, "worked example figure"),
                      expect("fischer_edges", 3, "worked example figure"),
                      expect("krieger_vertices", 3, "worked example figure"),
                      expect("krieger_edges", 5, "worked example figure"),
                      expect("krieger_shape", true, "worked example figure"),
                      expect("krieger_reducible", true, "worked example"),
                      expect("past_set_equals_krieger", true, "hand computation"),
                      expect("aft", "true", "worked example"),
                      expect("sft", "false", "worked example"),
                      expect("shift_irreducible", true, "worked example"),
                      expect("language_matches_forbidden_factors", true, "brute-force filter, words up to 10")};
        out.push_back(std::move(e));
    }
    {
        auto p = make({"a", "b", "c"}, {"u", "w"},
                      {{"u", "u", "a"}, {"u", "u", "b"}, {"u", "w", "a"}, {"w", "w", "b"}, {"w", "u", "c"}});
        CorpusEntry e{"bfg", "two vertices, b-loops at both, a splits at u", p, {}, {}, 0, std::nullopt};
        e.expected = {expect("krieger_vertices", 2, "worked example"),
                      expect("krieger_isomorphic_fischer", true, "worked example"),
                      expect("fischer_isomorphic_input", true, "worked example figure"),
                      expect("krieger_reducible", false, "worked example"),
                      expect("aft", "false", "worked example"),
                      expect("sft", "false", "worked example"),
                      expect("shift_irreducible", true, "hand computation")};
        out.push_back(std::move(e));
    }
    {
        auto p = make({"a", "b", "c", "0", "1", "A", "B"}, {"u", "w", "p", "q"},
                      {{"u", "u", "a"}, {"u", "u", "b"}, {"u", "w", "a"}, {"w", "w", "b"}, {"w", "u", "c"},
                       {"p", "p", "1"}, {"p", "q", "0"}, {"q", "p", "0"}, {"q", "w", "A"}, {"w", "q", "B"}});
        CorpusEntry e{"jsb", "bfg and even shift components joined by connectors A and B (reconstructed)", p, {}, {},
                      0, std::nullopt};
        e.expected = {expect("shift_irreducible", true, "worked example text"),
                      expect("strictly_sofic", "true", "worked example text"),
                      expect("aft", "false", "worked example text"),
                      expect("krieger_reducible", true, "worked example text"),
                      expect("even_krieger_embeds_in_krieger", true, "worked example text")};
        out.push_back(std::move(e));
    }
    {
        auto raw = make({"1", "2", "3", "4"}, {"N", "A1", "A3", "A4", "B3", "B4"},
                        {{"N", "N", "2"}, {"N", "A1", "1"}, {"N", "A3", "3"}, {"N", "A4", "4"},
                         {"A1", "A1", "2"}, {"A1", "A3", "3"}, {"A1", "A4", "4"},
                         {"A3", "A3", "2"}, {"A3", "B3", "1"}, {"A3", "A3", "3"}, {"A3", "A4", "4"},
                         {"A4", "A4", "2"}, {"A4", "B4", "1"}, {"A4", "A3", "3"}, {"A4", "A4", "4"},
                         {"B3", "A4", "4"},
                         {"B4", "A1", "2"}, {"B4", "A3", "3"}});
        auto p = trim_essential(raw);
        CorpusEntry e{"z_shift", "forbidden factors 1 2^k 1, 3 2^k 1 2, 3 2^k 1 3, 4 2^k 1 4", p, {}, {}, 12,
                      std::nullopt};
        e.ends_forbidden = by_names(p.alphabet(), z_ends_forbidden);
        e.expected = {expect("past_set_vertices", 5, "worked remark"),
                      expect("past_set_reducible", true, "worked remark"),
                      expect("krieger_vertices", 4, "worked remark"),
                      expect("krieger_reducible", false, "worked remark"),
                      expect("krieger_embeds_in_past_set", true, "worked remark"),
                      expect("language_matches_forbidden_factors", true, "brute-force filter, words up to 12")};
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<CorpusEntry> corpus_entry(std::string_view name) {
    for (auto& e : corpus()) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

Presentation communication_example() {
    return make({"e"}, {"v", "w", "x", "u", "y"},
                {{"v", "v", "e"}, {"v", "w", "e"}, {"w", "v", "e"}, {"v", "x", "e"}, {"x", "x", "e"},
                 {"w", "u", "e"}, {"u", "y", "e"}, {"y", "y", "e"}});
}

std::vector<std::string> metric_names() {
    return {"krieger_vertices", "krieger_edges", "past_set_vertices", "past_set_edges",
            "fischer_vertices", "fischer_edges", "krieger_reducible", "past_set_reducible",
            "fischer_reducible", "past_set_equals_krieger", "krieger_isomorphic_fischer",
            "fischer_isomorphic_input", "krieger_embeds_in_past_set", "even_krieger_embeds_in_krieger",
            "krieger_shape", "shift_irreducible", "sft", "strictly_sofic", "aft",
            "language_matches_forbidden_factors"};
}

Json evaluate_metric(const CorpusEntry& entry, const std::string& metric) {
    const auto& p = entry.presentation;
    auto krieger = [&] { return left_krieger_cover(p).graph; };
    auto past = [&] { return past_set_cover(p).graph; };
    auto fischer = [&] { return left_fischer_cover(p).graph; };

    if (metric == "krieger_vertices") return krieger().vertex_count();
    if (metric == "krieger_edges") return krieger().edge_count();
    if (metric == "past_set_vertices") return past().vertex_count();
    if (metric == "past_set_edges") return past().edge_count();
    if (metric == "fischer_vertices") return fischer().vertex_count();
    if (metric == "fischer_edges") return fischer().edge_count();
    if (metric == "krieger_reducible") return is_reducible(krieger());
    if (metric == "past_set_reducible") return is_reducible(past());
    if (metric == "fischer_reducible") return is_reducible(fischer());
    if (metric == "past_set_equals_krieger") return labelled_isomorphic(past(), krieger()).has_value();
    if (metric == "krieger_isomorphic_fischer") return labelled_isomorphic(krieger(), fischer()).has_value();
    if (metric == "fischer_isomorphic_input") return labelled_isomorphic(fischer(), p).has_value();
    if (metric == "krieger_embeds_in_past_set") {
        return subgraph_embedding(left_krieger_cover(p), past_set_cover(p)).has_value();
    }
    if (metric == "even_krieger_embeds_in_krieger") {
        auto even = corpus_entry("even_shift");
        return labelled_embedding(left_krieger_cover(even->presentation).graph, krieger()).has_value();
    }
    if (metric == "krieger_shape") {
        if (!entry.reference_krieger) throw Error(ErrorKind::input, "no reference cover for " + entry.name);
        return labelled_isomorphic(krieger(), *entry.reference_krieger).has_value();
    }
    if (metric == "shift_irreducible") return is_irreducible_shift(p);
    if (metric == "sft") return to_string(is_sft(p));
    if (metric == "strictly_sofic") {
        auto v = is_sft(p);
        return to_string(v == Verdict::unknown ? v : verdict(v == Verdict::no));
    }
    if (metric == "aft") return to_string(verdict(is_aft(p)));
    if (metric == "language_matches_forbidden_factors") {
        if (!entry.ends_forbidden) throw Error(ErrorKind::input, "no forbidden-factor description for " + entry.name);
        return !validate_against_forbidden(entry).has_value();
    }
    throw Error(ErrorKind::input, "unknown metric '" + metric + "'");
}

std::optional<Word> validate_against_forbidden(const CorpusEntry& entry) {
    const auto& p = entry.presentation;
    std::optional<Word> mismatch;
    Word w;
    // Joint depth-first walk: graph reachability against the forbidden filter.
    auto walk = [&](auto&& self, const VertexSet& ends) -> void {
        if (w.size() == entry.validation_length || mismatch) return;
        for (SymbolId a = 0; a < p.alphabet().size() && !mismatch; ++a) {
            auto next = post_step(p, ends, a);
            w.push_back(a);
            bool allowed = !entry.ends_forbidden(w);
            if (allowed != !next.empty()) {
                mismatch = w;
            } else if (allowed) {
                self(self, next);
            }
            w.pop_back();
        }
    };
    walk(walk, VertexSet::full(p.vertex_count()));
    return mismatch;
}

Presentation random_presentation(const RandomSpec& spec) {
    if (spec.max_vertices == 0 || spec.max_symbols == 0) {
        throw Error(ErrorKind::input, "random presentation bounds must be positive");
    }
    std::mt19937_64 rng(spec.seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (std::size_t attempt = 0; attempt < spec.max_retries; ++attempt) {
        auto nv = 1 + rng() % spec.max_vertices;
        auto ns = 1 + rng() % spec.max_symbols;
        std::vector<std::string> vertices, symbols;
        for (std::size_t v = 0; v < nv; ++v) vertices.push_back("r" + std::to_string(v));
        for (std::size_t a = 0; a < ns; ++a) symbols.push_back(std::string(1, static_cast<char>('a' + a)));
        std::vector<Edge> edges;
        if (spec.left_resolving) {
            // At most one incoming edge per (vertex, label), same expected edge count.
            const double p = std::min(1.0, spec.edge_density * static_cast<double>(nv));
            for (VertexId v = 0; v < nv; ++v)
                for (SymbolId a = 0; a < ns; ++a)
                    if (unit() < p) edges.push_back({static_cast<VertexId>(rng() % nv), v, a});
        } else {
            for (VertexId u = 0; u < nv; ++u)
                for (VertexId v = 0; v < nv; ++v)
                    for (SymbolId a = 0; a < ns; ++a)
                        if (unit() < spec.edge_density) edges.push_back({u, v, a});
        }
        Presentation raw(Alphabet(symbols), vertices, edges);
        std::optional<Presentation> trimmed;
        try {
            trimmed = trim_essential(raw);
        } catch (const Error&) {
            continue;
        }
        // Keep only the symbols that label surviving edges.
        std::vector<SymbolId> remap(ns, ~0u);
        std::vector<std::string> used;
        for (const auto& e : trimmed->edges()) {
            if (remap[e.label] == ~0u) remap[e.label] = 0;
        }
        for (SymbolId a = 0; a < ns; ++a) {
            if (remap[a] != ~0u) {
                remap[a] = static_cast<SymbolId>(used.size());
                used.push_back(symbols[a]);
            }
        }
        std::vector<Edge> relabelled;
        for (auto e : trimmed->edges()) relabelled.push_back({e.src, e.dst, remap[e.label]});
        return Presentation(Alphabet(used), trimmed->vertex_names(), relabelled);
    }
    throw Error(ErrorKind::resource_cap, "random presentation: retries exhausted");
}

}  // namespace sofic
