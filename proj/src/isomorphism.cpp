#include <algorithm>
#include <map>

#include "sofic/error.hpp"
#include "sofic/presentation.hpp"

namespace sofic {
namespace {

enum class Mode { bijection, injection };

using LabelSet = std::vector<std::uint32_t>;

// Label sets per ordered vertex pair, labels renumbered by name into a
// shared id space so graphs over differently ordered alphabets compare.
class LabelMatrix {
public:
    LabelMatrix(const Presentation& p, std::map<std::string, std::uint32_t>& ids)
        : n_(p.vertex_count()), cells_(n_ * n_) {
        for (const auto& e : p.edges()) {
            const auto& name = p.alphabet().name(e.label);
            auto id = ids.emplace(name, static_cast<std::uint32_t>(ids.size())).first->second;
            cells_[e.src * n_ + e.dst].push_back(id);
        }
        for (auto& c : cells_) {
            std::sort(c.begin(), c.end());
        }
    }

    const LabelSet& at(VertexId u, VertexId v) const { return cells_[u * n_ + v]; }

    LabelSet out_labels(VertexId u) const { return collect(u, true); }
    LabelSet in_labels(VertexId u) const { return collect(u, false); }

private:
    LabelSet collect(VertexId u, bool outgoing) const {
        LabelSet all;
        for (VertexId v = 0; v < n_; ++v) {
            const auto& c = outgoing ? at(u, v) : at(v, u);
            all.insert(all.end(), c.begin(), c.end());
        }
        std::sort(all.begin(), all.end());
        return all;
    }

    std::size_t n_;
    std::vector<LabelSet> cells_;
};

bool includes(const LabelSet& small, const LabelSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

class Matcher {
public:
    Matcher(const Presentation& a, const Presentation& b, Mode mode)
        : a_(a), b_(b), mode_(mode), la_(a, ids_), lb_(b, ids_) {}

    bool fits(const LabelSet& x, const LabelSet& y) const {
        return mode_ == Mode::bijection ? x == y : includes(x, y);
    }

    std::optional<std::vector<VertexId>> run(const std::optional<std::vector<VertexId>>& hint) {
        const auto na = a_.vertex_count();
        const auto nb = b_.vertex_count();
        if (mode_ == Mode::bijection && (na != nb || a_.edge_count() != b_.edge_count())) {
            return std::nullopt;
        }
        if (na > nb) {
            return std::nullopt;
        }
        if (hint && verify(*hint)) {
            return hint;
        }
        candidates_.assign(na, {});
        for (VertexId u = 0; u < na; ++u) {
            auto out_u = la_.out_labels(u);
            auto in_u = la_.in_labels(u);
            for (VertexId x = 0; x < nb; ++x) {
                if (fits(la_.at(u, u), lb_.at(x, x)) && fits(out_u, lb_.out_labels(x)) &&
                    fits(in_u, lb_.in_labels(x))) {
                    candidates_[u].push_back(x);
                }
            }
            if (candidates_[u].empty()) {
                return std::nullopt;
            }
        }
        order_.resize(na);
        for (VertexId u = 0; u < na; ++u) {
            order_[u] = u;
        }
        std::stable_sort(order_.begin(), order_.end(), [&](VertexId x, VertexId y) {
            return candidates_[x].size() < candidates_[y].size();
        });
        phi_.assign(na, 0);
        used_.assign(nb, false);
        if (extend(0)) {
            return phi_;
        }
        return std::nullopt;
    }

private:
    bool verify(const std::vector<VertexId>& phi) const {
        if (phi.size() != a_.vertex_count()) {
            return false;
        }
        std::vector<bool> used(b_.vertex_count(), false);
        for (auto x : phi) {
            if (x >= b_.vertex_count() || used[x]) {
                return false;
            }
            used[x] = true;
        }
        for (VertexId u = 0; u < phi.size(); ++u) {
            for (VertexId v = 0; v < phi.size(); ++v) {
                if (!fits(la_.at(u, v), lb_.at(phi[u], phi[v]))) {
                    return false;
                }
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            return true;
        }
        VertexId u = order_[depth];
        for (VertexId x : candidates_[u]) {
            if (used_[x]) {
                continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                VertexId w = order_[k];
                ok = fits(la_.at(u, w), lb_.at(x, phi_[w])) && fits(la_.at(w, u), lb_.at(phi_[w], x));
            }
            if (!ok) {
                continue;
            }
            phi_[u] = x;
            used_[x] = true;
            if (extend(depth + 1)) {
                return true;
            }
            used_[x] = false;
        }
        return false;
    }

    const Presentation& a_;
    const Presentation& b_;
    Mode mode_;
    std::map<std::string, std::uint32_t> ids_;
    LabelMatrix la_;
    LabelMatrix lb_;
    std::vector<std::vector<VertexId>> candidates_;
    std::vector<VertexId> order_;
    std::vector<VertexId> phi_;
    std::vector<bool> used_;
};

void check_cap(const Presentation& p, std::size_t cap) {
    if (p.vertex_count() > cap) {
        throw Error(ErrorKind::resource_cap,
                    "resource cap: graph matching limited to " + std::to_string(cap) + " vertices");
    }
}

}  // namespace

std::optional<std::vector<VertexId>> labelled_isomorphic(const Presentation& p1,
                                                         const Presentation& p2,
                                                         std::size_t max_vertices) {
    check_cap(p1, max_vertices);
    check_cap(p2, max_vertices);
    return Matcher(p1, p2, Mode::bijection).run(std::nullopt);
}

std::optional<std::vector<VertexId>> labelled_embedding(
    const Presentation& inner, const Presentation& outer,
    const std::optional<std::vector<VertexId>>& hint, std::size_t max_vertices) {
    check_cap(inner, max_vertices);
    check_cap(outer, max_vertices);
    return Matcher(inner, outer, Mode::injection).run(hint);
}

}  // namespace sofic
