#include "sofic/language.hpp"

#include <deque>
#include <map>
#include <unordered_set>

#include "sofic/error.hpp"
#include "sofic/subset_engine.hpp"

namespace sofic {

bool contains_word(const Presentation& p, const Word& w) {
    if (!p.is_essential()) {
        throw Error(ErrorKind::precondition, "presentation must be essential");
    }
    return !predecessor_set(p, w).empty();
}

std::vector<Word> blocks(const Presentation& p, std::size_t n) {
    std::vector<Word> out;
    Word current;
    auto extend = [&](auto&& self, const VertexSet& ends) -> void {
        if (current.size() == n) {
            out.push_back(current);
            return;
        }
        for (SymbolId a = 0; a < p.alphabet().size(); ++a) {
            auto next = post_step(p, ends, a);
            if (next.empty()) {
                continue;
            }
            current.push_back(a);
            self(self, next);
            current.pop_back();
        }
    };
    extend(extend, VertexSet::full(p.vertex_count()));
    return out;
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<VertexSet, VertexSet>& s) const noexcept {
        return s.first.hash() * 31 + s.second.hash();
    }
};

}  // namespace

std::optional<std::vector<std::string>> language_mismatch(const Presentation& a_in, const Presentation& b_in,
                                                          std::optional<std::size_t> max_length,
                                                          std::size_t max_states) {
    auto a = trim_essential(a_in);
    auto b = trim_essential(b_in);

    // Union of symbol names, in sorted order for a deterministic witness.
    std::map<std::string, std::pair<std::optional<SymbolId>, std::optional<SymbolId>>> symbols;
    for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
        symbols[a.alphabet().name(s)].first = s;
    }
    for (SymbolId s = 0; s < b.alphabet().size(); ++s) {
        symbols[b.alphabet().name(s)].second = s;
    }

    struct Node {
        VertexSet in_a, in_b;
        std::size_t parent;
        std::string symbol;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::pair<VertexSet, VertexSet>, PairHash> seen;
    nodes.push_back({VertexSet::full(a.vertex_count()), VertexSet::full(b.vertex_count()), 0, {}, 0});
    seen.insert({nodes[0].in_a, nodes[0].in_b});

    auto witness = [&](std::size_t i) {
        std::vector<std::string> w;
        while (i != 0) {
            w.push_back(nodes[i].symbol);
            i = nodes[i].parent;
        }
        return std::vector<std::string>(w.rbegin(), w.rend());
    };

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (max_length && nodes[i].depth >= *max_length) {
            continue;
        }
        for (const auto& [name, ids] : symbols) {
            VertexSet next_a = ids.first ? post_step(a, nodes[i].in_a, *ids.first) : VertexSet(a.vertex_count());
            VertexSet next_b = ids.second ? post_step(b, nodes[i].in_b, *ids.second) : VertexSet(b.vertex_count());
            bool ea = next_a.empty();
            bool eb = next_b.empty();
            if (ea && eb) {
                continue;
            }
            if (!seen.insert({next_a, next_b}).second) {
                continue;
            }
            if (nodes.size() >= max_states) {
                throw Error(ErrorKind::resource_cap,
                            "resource cap: language comparison exceeds " + std::to_string(max_states) + " states");
            }
            nodes.push_back({std::move(next_a), std::move(next_b), i, name, nodes[i].depth + 1});
            if (ea != eb) {
                return witness(nodes.size() - 1);
            }
        }
    }
    return std::nullopt;
}

}  // namespace sofic
