#include "henson/build.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "henson/errors.hpp"

namespace henson {

namespace {

std::size_t default_plain_prefix(int n, std::size_t window) {
    return n == 2 ? window + 28 : window + 1;
}

// Safe to extend the prospective neighbor set L of a new vertex by d?
// Unsafe iff it completes a K_n inside L ∪ {d}, i.e. N(d) ∩ L holds K_{n-1}.
bool add_safe(const Graph& g, const std::vector<std::size_t>& L, std::size_t d) {
    std::vector<std::size_t> common;
    for (std::size_t x : L)
        if (x != d && g.edge(d, x)) common.push_back(x);
    return !contains_clique(g, common, static_cast<std::size_t>(g.n()) - 1);
}

bool trace_safe(const Graph& g, const std::vector<std::size_t>& L) {
    return !contains_clique(g, L, static_cast<std::size_t>(g.n()));
}

struct DenseQuery {
    std::uint32_t D, F;
};

struct DenseState {
    bool inited = false;
    std::size_t W = 0;
    std::vector<std::uint32_t> adjW;
    std::vector<DenseQuery> pending;
    std::size_t universe = 0;
    std::size_t head_age = 0;
    std::uint32_t head_key = 0;
    std::size_t done_at = 0;

    bool mask_kfree(int n, std::uint32_t D) const {
        if (n == 2) {
            for (std::uint32_t m = D; m;) {
                std::uint32_t d = static_cast<std::uint32_t>(__builtin_ctz(m));
                m &= m - 1;
                if (adjW[d] & D) return false;
            }
            return true;
        }
        if (n == 3) {
            for (std::uint32_t m = D; m;) {
                std::uint32_t d = static_cast<std::uint32_t>(__builtin_ctz(m));
                m &= m - 1;
                std::uint32_t c = adjW[d] & D;
                for (std::uint32_t cm = c; cm;) {
                    std::uint32_t x = static_cast<std::uint32_t>(__builtin_ctz(cm));
                    cm &= cm - 1;
                    if (adjW[x] & c) return false;
                }
            }
            return true;
        }
        return true;  // clique bounds above 3 fall back to per-adoption checks
    }

    void init(const Graph& g, std::size_t window, std::size_t support) {
        W = window;
        adjW.assign(W, 0);
        for (std::size_t a = 0; a < W; ++a)
            for (std::size_t b = 0; b < W; ++b)
                if (a != b && g.edge(a, b)) adjW[a] |= std::uint32_t(1) << b;

        // Supports U in canonical order (max element, size, mask), every
        // K_n-free split D ⊔ F = U.  D = F = empty is trivially witnessed.
        std::vector<std::uint32_t> supports;
        for (std::size_t top = 0; top < W; ++top) {
            std::vector<std::uint32_t> by_size[8];
            std::uint32_t below = (std::uint32_t(1) << top) - 1;
            for (std::uint32_t rest = 0;; rest = (rest - below) & below) {
                std::size_t k = static_cast<std::size_t>(__builtin_popcount(rest)) + 1;
                if (k <= support)
                    by_size[k].push_back(rest | (std::uint32_t(1) << top));
                if (rest == below) break;
            }
            for (std::size_t k = 1; k <= support; ++k) {
                std::sort(by_size[k].begin(), by_size[k].end());
                supports.insert(supports.end(), by_size[k].begin(), by_size[k].end());
            }
        }
        for (std::uint32_t U : supports) {
            for (std::uint32_t D = 0;; D = (D - U) & U) {
                if (mask_kfree(g.n(), D)) pending.push_back({D, U & ~D});
                if (D == U) break;
            }
        }
        universe = pending.size();
        inited = true;
    }

    std::uint32_t colmask(const Graph& g, std::size_t v) const {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < W; ++i)
            if (i != v && g.edge(v, i)) m |= std::uint32_t(1) << i;
        return m;
    }

    void sweep(const Graph& g, std::size_t v) {
        std::uint32_t col = colmask(g, v);
        std::uint32_t vbit = v < W ? (std::uint32_t(1) << v) : 0;
        auto answered = [&](const DenseQuery& q) {
            if ((q.D | q.F) & vbit) return false;
            return (col & (q.D | q.F)) == q.D;
        };
        pending.erase(std::remove_if(pending.begin(), pending.end(), answered),
                      pending.end());
        if (!pending.empty()) {
            if (pending.front().D == head_key)
                ++head_age;
            else {
                head_key = pending.front().D;
                head_age = 0;
            }
        }
    }
};

struct LaneState {
    std::size_t offset;
    std::size_t stages;
    std::optional<LabelClass> cls;
    std::vector<std::size_t> selected;
    std::size_t scan_from = 0;
    std::size_t pad_done = 0;

    bool done() const { return selected.size() >= stages; }

    Threshold threshold() const {
        std::size_t off = offset;
        return [off](std::size_t s) { return s + off; };
    }

    VertexPred constraint() const {
        if (!cls) return {};
        LabelClass c = *cls;
        return [c](const Graph& g, std::size_t v) { return c.admits(g, v); };
    }

    // Consume any witnesses already present in the prefix.
    void advance(const Graph& g) {
        while (!done()) {
            auto v = greedy_step(g, selected, threshold(), constraint(), scan_from,
                                 g.size());
            if (!v) {
                scan_from = g.size();
                return;
            }
            selected.push_back(*v);
            scan_from = 0;
            pad_done = 0;
        }
    }
};

struct Builder {
    const BuildOptions& opt;
    Graph g;
    DenseState dense;
    std::vector<LaneState> lanes;
    std::size_t replenish_cursor = 0;
    std::uint64_t code_cursor = 0;
    std::size_t code_blocked = 0;
    std::size_t plain_prefix;

    explicit Builder(const BuildOptions& o)
        : opt(o), g(o.n, o.size),
          plain_prefix(o.plain_prefix ? o.plain_prefix
                                      : default_plain_prefix(o.n, o.dense_window)) {
        std::size_t cstages = o.class_lane_stages
                                  ? o.class_lane_stages
                                  : (plain_prefix > 4 ? plain_prefix - 4 : 1);
        lanes.push_back({o.lane_offset, o.lane_stages, std::nullopt, {}, 0, 0});
        for (const LabelClass& c : o.class_lanes)
            lanes.push_back({o.lane_offset, cstages, c, {}, 0, 0});
    }

    std::vector<std::size_t> window(std::size_t j) const {
        std::vector<std::size_t> w;
        std::size_t n = static_cast<std::size_t>(opt.n);
        for (std::size_t i = j - (n - 1); i < j; ++i) w.push_back(i);
        return w;
    }

    std::vector<std::size_t> spacer(std::size_t j) const { return window(j); }

    // Greedy shared-witness coverage over the pending small-query universe.
    std::vector<std::size_t> dense_trace(std::size_t j) {
        std::vector<std::size_t> L = window(j);
        std::uint32_t T = 0, Fg = 0;
        bool exclusive = dense.head_age >= 4 && !dense.pending.empty();
        std::size_t limit = exclusive ? 1 : dense.pending.size();
        for (std::size_t qi = 0; qi < limit; ++qi) {
            const DenseQuery& q = dense.pending[qi];
            if (q.D & Fg) continue;
            if ((T | q.D) & q.F) continue;
            std::vector<std::size_t> added;
            bool ok = true;
            for (std::uint32_t m = q.D & ~T; m;) {
                std::size_t d = static_cast<std::size_t>(__builtin_ctz(m));
                m &= m - 1;
                if (!add_safe(g, L, d)) { ok = false; break; }
                L.push_back(d);
                added.push_back(d);
            }
            if (!ok) {
                L.resize(L.size() - added.size());
                continue;
            }
            T |= q.D;
            Fg |= q.F;
        }
        std::sort(L.begin(), L.end());
        L.erase(std::unique(L.begin(), L.end()), L.end());
        return L;
    }

    // Witness (or padding spacer) for the first unfinished lane.
    std::optional<std::vector<std::size_t>> lane_trace(std::size_t j) {
        for (LaneState& lane : lanes) {
            if (lane.done()) continue;
            std::size_t s = lane.selected.size();
            std::vector<std::size_t> D_pat, F_pat;
            for (std::size_t i = 0; i < s; ++i)
                (g.edge(s, i) ? D_pat : F_pat).push_back(lane.selected[i]);

            std::size_t need_pad = lane.cls ? lane.cls->modulus + 3 : 0;
            if (lane.pad_done < need_pad) {
                ++lane.pad_done;
                return spacer(j);
            }
            std::vector<std::size_t> w = window(j);
            bool w_conflict = false;
            for (std::size_t x : w)
                if (std::find(F_pat.begin(), F_pat.end(), x) != F_pat.end())
                    w_conflict = true;
            if (w_conflict) {
                ++lane.pad_done;
                return spacer(j);
            }

            std::vector<std::size_t> L = w;
            for (std::size_t d : D_pat)
                if (std::find(L.begin(), L.end(), d) == L.end()) L.push_back(d);

            if (lane.cls) {
                std::size_t lowE = s >= 2 ? lane.selected[s - 2] + 1 : 0;
                std::size_t highE =
                    D_pat.empty() ? j : *std::min_element(D_pat.begin(), D_pat.end());
                std::optional<std::size_t> e;
                for (int pass = 0; pass < 2 && !e; ++pass) {
                    std::size_t lo = pass == 0 ? lowE : 0;
                    for (std::size_t x = lo; x < highE; ++x) {
                        if (x % lane.cls->modulus != lane.cls->residue) continue;
                        if (std::find(lane.selected.begin(), lane.selected.end(), x) !=
                            lane.selected.end())
                            continue;
                        if (std::find(F_pat.begin(), F_pat.end(), x) != F_pat.end())
                            continue;
                        if (std::find(L.begin(), L.end(), x) != L.end()) continue;
                        if (!add_safe(g, L, x)) continue;
                        e = x;
                        break;
                    }
                }
                if (!e) {
                    ++lane.pad_done;
                    return spacer(j);
                }
                L.push_back(*e);
            }

            std::sort(L.begin(), L.end());
            L.erase(std::unique(L.begin(), L.end()), L.end());
            if (!trace_safe(g, L)) {
                ++lane.pad_done;
                return spacer(j);
            }
            lane.pad_done = 0;
            return L;
        }
        return std::nullopt;
    }

    // Interleaved-code round robin over general queries (indices < 32).
    std::optional<std::vector<std::size_t>> code_trace(std::size_t j) {
        for (int pops = 0; pops < 512; ++pops) {
            std::uint64_t c = code_cursor;
            std::uint64_t Dm = 0, Fm = 0;
            for (int b = 0; b < 32; ++b) {
                if ((c >> (2 * b)) & 1) Dm |= std::uint64_t(1) << b;
                if ((c >> (2 * b + 1)) & 1) Fm |= std::uint64_t(1) << b;
            }
            std::uint64_t all = Dm | Fm;
            std::size_t maxi = all ? 63 - static_cast<std::size_t>(__builtin_clzll(all)) : 0;
            if (all && maxi >= j) return std::nullopt;  // too large: wait, do not consume
            std::vector<std::size_t> D, F;
            for (std::size_t b = 0; b <= (all ? maxi : 0) && all; ++b) {
                if ((Dm >> b) & 1) D.push_back(b);
                if ((Fm >> b) & 1) F.push_back(b);
            }
            ++code_cursor;
            if (Dm & Fm) continue;
            if (contains_clique(g, D, static_cast<std::size_t>(opt.n))) continue;
            if (find_witness(g, D, F) < g.size()) continue;
            std::vector<std::size_t> w = window(j);
            bool conflict = false;
            for (std::size_t x : w)
                if (std::find(F.begin(), F.end(), x) != F.end()) conflict = true;
            std::vector<std::size_t> L = w;
            for (std::size_t d : D)
                if (std::find(L.begin(), L.end(), d) == L.end()) L.push_back(d);
            std::sort(L.begin(), L.end());
            if (conflict || !trace_safe(g, L)) {
                --code_cursor;  // retry the same code once the window shifts
                return std::nullopt;
            }
            return L;
        }
        return std::nullopt;
    }

    std::vector<std::size_t> replenish_trace(std::size_t j) {
        for (std::size_t tries = 0; tries < opt.replenish_range; ++tries) {
            std::size_t m = replenish_cursor++ % opt.replenish_range;
            if (m + 1 >= j) continue;
            std::vector<std::size_t> L = window(j);
            if (std::find(L.begin(), L.end(), m) != L.end()) continue;
            if (!add_safe(g, L, m)) continue;
            L.push_back(m);
            std::sort(L.begin(), L.end());
            return L;
        }
        return spacer(j);
    }

    std::vector<std::size_t> decide(std::size_t j) {
        std::size_t n = static_cast<std::size_t>(opt.n);
        if (j == 0) return {};
        if (j < n) {
            std::vector<std::size_t> all(j);
            for (std::size_t i = 0; i < j; ++i) all[i] = i;
            return all;
        }
        if (!dense.inited && j >= opt.dense_window) {
            dense.init(g, opt.dense_window, opt.dense_support);
            for (std::size_t v = 0; v < j; ++v) dense.sweep(g, v);
        }
        if (j < plain_prefix) return window(j);

        if (dense.inited && !dense.pending.empty()) return dense_trace(j);
        if (dense.inited && dense.done_at == 0) dense.done_at = j;

        if (auto t = lane_trace(j)) return *t;

        if (j % 2 == 0) return replenish_trace(j);
        if (auto t = code_trace(j)) return *t;
        return replenish_trace(j);
    }

    Graph run(BuildStats* stats) {
        for (std::size_t j = 0; j < opt.size; ++j) {
            for (LaneState& lane : lanes) lane.advance(g);
            std::vector<std::size_t> trace = decide(j);
            std::size_t v = g.append(trace);
            if (dense.inited && !dense.pending.empty()) dense.sweep(g, v);
        }
        for (LaneState& lane : lanes) lane.advance(g);
        if (stats) {
            stats->dense_universe = dense.universe;
            stats->dense_pending = dense.pending.size();
            stats->dense_done_at = dense.done_at;
            stats->lane_progress.clear();
            for (const LaneState& lane : lanes)
                stats->lane_progress.push_back(lane.selected.size());
        }
        return std::move(g);
    }
};

}  // namespace

Graph build_standard_copy(const BuildOptions& opt, BuildStats* stats) {
    if (opt.n < 2) throw PreconditionViolation("clique bound must be >= 2");
    if (opt.size == 0) throw PreconditionViolation("empty graph requested");
    Builder b(opt);
    return b.run(stats);
}

Graph build_standard_copy(int n, std::size_t size, std::uint64_t seed) {
    BuildOptions opt;
    opt.n = n;
    opt.size = size;
    opt.seed = seed;
    return build_standard_copy(opt);
}

Subcopy lane_subcopy(const Graph& host, const BuildOptions& opt) {
    std::size_t off = opt.lane_offset;
    return greedy_subcopy(host, opt.lane_stages,
                          [off](std::size_t s) { return s + off; });
}

Subcopy lane_subcopy(const Graph& host, const BuildOptions& opt, LabelClass c) {
    std::size_t off = opt.lane_offset;
    std::size_t pp = opt.plain_prefix ? opt.plain_prefix
                                      : (opt.n == 2 ? opt.dense_window + 28
                                                    : opt.dense_window + 1);
    std::size_t stages =
        opt.class_lane_stages ? opt.class_lane_stages : (pp > 4 ? pp - 4 : 1);
    return greedy_subcopy(
        host, stages, [off](std::size_t s) { return s + off; },
        [c](const Graph& g, std::size_t v) { return c.admits(g, v); });
}

}  // namespace henson
