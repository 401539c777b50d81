#include "henson/core_ops.hpp"

#include <algorithm>
#include <map>

#include "henson/errors.hpp"

namespace henson {

std::size_t realize_extension(const Graph& g, const ExtensionQuery& q) {
    for (std::size_t d : q.D)
        if (d >= g.size()) throw PreconditionViolation("extension query: D index out of range");
    for (std::size_t f : q.F) {
        if (f >= g.size()) throw PreconditionViolation("extension query: F index out of range");
        if (std::find(q.D.begin(), q.D.end(), f) != q.D.end())
            throw PreconditionViolation("extension query: D and F overlap");
    }
    if (contains_clique(g, q.D, static_cast<std::size_t>(g.n())))
        throw PreconditionViolation("extension query: D already holds a maximal clique");
    std::size_t v = find_witness(g, q.D, q.F, q.floor);
    if (v >= g.size()) throw BudgetExhausted("no extension witness within prefix");
    return v;
}

std::pair<std::size_t, std::size_t> neighborhood_label(const Graph& g, std::size_t j) {
    if (j >= g.size()) throw PreconditionViolation("label query out of range");
    return g.label(j);
}

namespace {

// Member vertices grouped by label index m, in increasing m then index order.
std::map<std::size_t, std::vector<std::size_t>> levels_of(const CopyView& view,
                                                          std::size_t budget) {
    std::map<std::size_t, std::vector<std::size_t>> by_m;
    for (std::size_t i = 0; i < view.count(); ++i) {
        std::size_t v = view.vertex(i);
        if (v >= budget) break;
        by_m[view.label(v).first].push_back(v);
    }
    return by_m;
}

}  // namespace

std::optional<UpwardExtension> upward_extension(const CopyView& view,
                                                const std::vector<std::size_t>& H,
                                                std::size_t l, std::size_t count) {
    const Graph& g = view.graph();
    std::size_t lo = l;
    for (std::size_t h : H) {
        if (!view.has(h)) throw PreconditionViolation("upward extension: H not in the copy");
        lo = std::max(lo, h);
    }
    auto by_m = levels_of(view, g.size());
    for (auto& [m, members] : by_m) {
        if (m <= lo) continue;
        UpwardExtension ext{m, {}};
        for (std::size_t v : members) {
            bool clear = std::none_of(H.begin(), H.end(),
                                      [&](std::size_t h) { return v == h || g.edge(v, h); });
            if (clear) ext.witnesses.push_back(v);
        }
        if (ext.witnesses.size() >= count) return ext;
    }
    return std::nullopt;
}

std::optional<Anchor> anchor_search(const CopyView& view, std::size_t l0,
                                    std::size_t count, std::size_t budget) {
    if (count == 0) count = 1;
    const Graph& g = view.graph();
    auto by_m = levels_of(view, std::min(budget, g.size()));
    for (auto& [m, members] : by_m) {
        if (m <= l0 || members.size() < count) continue;
        // level m is populated; look for an anchor among its vertices
        for (std::size_t cand : members) {
            Anchor a{m, members, cand, {}};
            for (std::size_t i = 0; i < view.count(); ++i) {
                std::size_t u = view.vertex(i);
                if (u >= budget) break;
                if (u == cand || !g.edge(u, cand)) continue;
                std::size_t mu = view.label(u).first;
                if (mu > l0 && mu <= cand) a.anchor_neighbors.push_back(u);
            }
            if (a.anchor_neighbors.size() >= count) return a;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> downward_extension(const CopyView& view,
                                            const std::vector<std::size_t>& H0,
                                            const std::vector<bool>& pattern,
                                            const Anchor& anchor, std::size_t count) {
    if (pattern.size() != H0.size())
        throw PreconditionViolation("downward extension: pattern/H0 size mismatch");
    const Graph& g = view.graph();
    for (std::size_t h : H0) {
        if (!view.has(h)) throw PreconditionViolation("downward extension: H0 not in the copy");
        if (view.label(h).first <= anchor.n_bar)
            throw PreconditionViolation("downward extension: H0 touches a low neighborhood");
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < view.count() && out.size() < count; ++i) {
        std::size_t w = view.vertex(i);
        if (w == anchor.anchor || !g.edge(w, anchor.anchor)) continue;
        if (view.label(w).first > anchor.n_bar) continue;
        if (std::find(H0.begin(), H0.end(), w) != H0.end()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < H0.size() && ok; ++k)
            ok = g.edge(w, H0[k]) == pattern[k];
        if (ok) out.push_back(w);
    }
    if (out.size() < count) throw BudgetExhausted("downward extension: witnesses exhausted");
    return out;
}

}  // namespace henson
