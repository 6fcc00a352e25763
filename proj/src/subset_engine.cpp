#include "sofic/subset_engine.hpp"

#include <map>

#include "sofic/error.hpp"

namespace sofic {
namespace {

struct MapHash {
    std::size_t operator()(const std::vector<FamilyIndex>& m) const noexcept {
        std::size_t h = m.size();
        for (auto x : m) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

template <class StepFn, class ExtendFn>
SubsetFamily close_family(const Presentation& p, const EngineLimits& limits, StepFn step,
                          ExtendFn extend) {
    SubsetFamily f;
    const auto k = p.alphabet().size();
    auto add = [&](VertexSet s, Word w) {
        if (f.subsets.size() >= limits.max_subsets) {
            throw Error(ErrorKind::resource_cap, "resource cap: subset family exceeds " +
                                                     std::to_string(limits.max_subsets) + " members");
        }
        auto id = static_cast<FamilyIndex>(f.subsets.size());
        if (s.empty()) {
            f.empty = id;
        }
        f.index.emplace(s, id);
        f.subsets.push_back(std::move(s));
        f.witness.push_back(std::move(w));
        f.step.emplace_back();
        return id;
    };
    add(VertexSet::full(p.vertex_count()), {});
    for (FamilyIndex i = 0; i < f.subsets.size(); ++i) {
        std::vector<FamilyIndex> row(k);
        for (SymbolId a = 0; a < k; ++a) {
            VertexSet next = step(p, f.subsets[i], a);
            auto it = f.index.find(next);
            if (it != f.index.end()) {
                row[a] = it->second;
            } else {
                Word w = extend(f.witness[i], a);
                row[a] = add(std::move(next), std::move(w));
            }
        }
        f.step[i] = std::move(row);
    }
    return f;
}

}  // namespace

VertexSet pre_step(const Presentation& p, const VertexSet& s, SymbolId a) {
    if (a >= p.alphabet().size()) {
        throw Error(ErrorKind::input, "unknown symbol");
    }
    VertexSet out(p.vertex_count());
    for (auto ei : p.edges_labelled(a)) {
        const auto& e = p.edge(ei);
        if (s.test(e.dst)) {
            out.set(e.src);
        }
    }
    return out;
}

VertexSet post_step(const Presentation& p, const VertexSet& s, SymbolId a) {
    if (a >= p.alphabet().size()) {
        throw Error(ErrorKind::input, "unknown symbol");
    }
    VertexSet out(p.vertex_count());
    for (auto ei : p.edges_labelled(a)) {
        const auto& e = p.edge(ei);
        if (s.test(e.src)) {
            out.set(e.dst);
        }
    }
    return out;
}

VertexSet pre_word(const Presentation& p, VertexSet s, const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        s = pre_step(p, s, *it);
    }
    return s;
}

VertexSet post_word(const Presentation& p, VertexSet s, const Word& w) {
    for (auto a : w) {
        s = post_step(p, s, a);
    }
    return s;
}

std::optional<FamilyIndex> SubsetFamily::find(const VertexSet& s) const {
    auto it = index.find(s);
    if (it == index.end()) {
        return std::nullopt;
    }
    return it->second;
}

PreFamily pre_family(const Presentation& p, const EngineLimits& limits) {
    return close_family(p, limits, pre_step, [](const Word& w, SymbolId a) {
        Word out;
        out.reserve(w.size() + 1);
        out.push_back(a);
        out.insert(out.end(), w.begin(), w.end());
        return out;
    });
}

SubsetFamily post_family(const Presentation& p, const EngineLimits& limits) {
    return close_family(p, limits, post_step, [](const Word& w, SymbolId a) {
        Word out = w;
        out.push_back(a);
        return out;
    });
}

PastPartition past_partition(const PreFamily& family) {
    const auto n = family.size();
    const auto k = n == 0 ? 0 : family.step[0].size();
    std::vector<std::uint32_t> cls(n, 0);
    std::size_t count = 0;

    auto renumber = [&](auto signature_of) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> next(n);
        for (FamilyIndex s = 0; s < n; ++s) {
            auto [it, _] = ids.emplace(signature_of(s), static_cast<std::uint32_t>(ids.size()));
            next[s] = it->second;
        }
        cls = std::move(next);
        return ids.size();
    };

    count = renumber([&](FamilyIndex s) {
        return std::vector<std::uint32_t>{family.subsets[s].empty() ? 1u : 0u};
    });
    for (;;) {
        auto refined = renumber([&](FamilyIndex s) {
            std::vector<std::uint32_t> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[s]);
            for (std::size_t a = 0; a < k; ++a) {
                sig.push_back(cls[family.step[s][a]]);
            }
            return sig;
        });
        if (refined == count) {
            break;
        }
        count = refined;
    }

    // Class ids by first occurrence in family order.
    PastPartition out;
    std::vector<std::uint32_t> relabel(count, ~0u);
    out.class_of.resize(n);
    for (FamilyIndex s = 0; s < n; ++s) {
        auto& r = relabel[cls[s]];
        if (r == ~0u) {
            r = static_cast<std::uint32_t>(out.representative.size());
            out.representative.push_back(s);
        }
        out.class_of[s] = r;
    }
    if (family.empty) {
        out.empty_class = out.class_of[*family.empty];
    }
    return out;
}

TransitionMonoid monoid_closure(const PreFamily& family, std::size_t cap) {
    TransitionMonoid m;
    const auto n = family.size();
    const auto k = n == 0 ? 0 : family.step[0].size();
    std::unordered_map<std::vector<FamilyIndex>, std::uint32_t, MapHash> index;

    MonoidElement identity;
    identity.map.resize(n);
    for (FamilyIndex s = 0; s < n; ++s) {
        identity.map[s] = s;
    }
    index.emplace(identity.map, 0);
    m.elements.push_back(std::move(identity));

    for (std::uint32_t i = 0; i < m.elements.size(); ++i) {
        std::vector<std::uint32_t> row(k);
        for (SymbolId a = 0; a < k; ++a) {
            std::vector<FamilyIndex> composed(n);
            const auto& f = m.elements[i].map;
            for (FamilyIndex s = 0; s < n; ++s) {
                composed[s] = f[family.step[s][a]];
            }
            auto it = index.find(composed);
            if (it != index.end()) {
                row[a] = it->second;
                if (it->second == 0) {
                    m.identity_from_nonempty = true;
                }
                continue;
            }
            if (m.elements.size() >= cap) {
                throw Error(ErrorKind::resource_cap,
                            "resource cap: transition monoid exceeds " + std::to_string(cap) + " elements");
            }
            auto id = static_cast<std::uint32_t>(m.elements.size());
            Word w = m.elements[i].witness;
            w.push_back(a);
            index.emplace(composed, id);
            m.elements.push_back({std::move(composed), std::move(w)});
            row[a] = id;
        }
        m.right.push_back(std::move(row));
    }
    return m;
}

bool is_synchronising_action(const MonoidElement& f, const PreFamily& family,
                             const PastPartition& partition) {
    auto image = f.map[0];
    if (family.subsets[image].empty()) {
        return false;
    }
    auto c = partition.class_of[image];
    for (auto t : f.map) {
        if (!family.subsets[t].empty() && partition.class_of[t] != c) {
            return false;
        }
    }
    return true;
}

std::vector<FamilyIndex> ray_subsets(const PreFamily& family, const TransitionMonoid& monoid) {
    std::vector<bool> is_ray(family.size(), false);
    std::vector<FamilyIndex> work;
    auto mark = [&](FamilyIndex s) {
        if (!family.subsets[s].empty() && !is_ray[s]) {
            is_ray[s] = true;
            work.push_back(s);
        }
    };
    // Limits L_u = f_u^n(E) of the decreasing chains E ⊇ f_u(E) ⊇ ...
    for (std::size_t i = 0; i < monoid.elements.size(); ++i) {
        if (i == 0 && !monoid.identity_from_nonempty) {
            continue;
        }
        const auto& f = monoid.elements[i].map;
        FamilyIndex s = 0;
        while (f[s] != s) {
            s = f[s];
        }
        mark(s);
    }
    // Closed under nonempty Pre steps: I(a x+) = Pre_a(I(x+)).
    while (!work.empty()) {
        auto s = work.back();
        work.pop_back();
        for (auto t : family.step[s]) {
            mark(t);
        }
    }
    std::vector<FamilyIndex> out;
    for (FamilyIndex s = 0; s < family.size(); ++s) {
        if (is_ray[s]) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<FamilyIndex> ray_subsets(const PreFamily& family, const EngineLimits& limits) {
    return ray_subsets(family, monoid_closure(family, limits.max_monoid));
}

SubsetAnalysis analyse(const Presentation& p, const EngineLimits& limits) {
    if (!p.is_essential()) {
        throw Error(ErrorKind::precondition, "presentation must be essential");
    }
    SubsetAnalysis a;
    a.family = pre_family(p, limits);
    a.partition = past_partition(a.family);
    a.monoid = monoid_closure(a.family, limits.max_monoid);
    a.rays = ray_subsets(a.family, a.monoid);
    a.synchronising.reserve(a.monoid.elements.size());
    for (const auto& f : a.monoid.elements) {
        a.synchronising.push_back(is_synchronising_action(f, a.family, a.partition));
    }
    return a;
}

Json family_to_json(const Presentation& p, const PreFamily& family, const PastPartition& partition) {
    Json members = Json::array();
    for (FamilyIndex s = 0; s < family.size(); ++s) {
        Json vs = Json::array();
        for (auto v : family.subsets[s].members()) {
            vs.push_back(p.vertex_name(v));
        }
        Json steps = Json::object();
        for (SymbolId a = 0; a < p.alphabet().size(); ++a) {
            steps[p.alphabet().name(a)] = family.step[s][a];
        }
        members.push_back({{"index", s},
                           {"vertices", std::move(vs)},
                           {"witness", p.alphabet().format(family.witness[s])},
                           {"class", partition.class_of[s]},
                           {"pre", std::move(steps)}});
    }
    return Json{{"members", std::move(members)}, {"classes", partition.class_count()}};
}

}  // namespace sofic
