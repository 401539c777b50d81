#include "henson/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace henson {

Graph::Graph(int n, std::size_t capacity)
    : n_(n), cap_(capacity), words_((capacity + 63) / 64) {
    if (n < 2) throw std::invalid_argument("clique bound must be >= 2");
    if (capacity == 0) throw std::invalid_argument("empty graph requested");
    bits_.assign(cap_ * words_, 0);
    label_m_.reserve(cap_);
}

std::size_t Graph::append(const std::vector<std::size_t>& trace) {
    if (size_ == cap_) throw std::length_error("graph capacity exceeded");
    std::size_t j = size_;
    for (std::size_t i : trace) {
        if (i >= j) throw std::invalid_argument("trace index out of range");
        bits_[j * words_ + (i >> 6)] |= std::uint64_t(1) << (i & 63);
        bits_[i * words_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    }
    label_m_.push_back(trace.empty() ? 0 : trace.front());
    ++size_;
    return j;
}

std::pair<std::size_t, std::size_t> Graph::label(std::size_t j) const {
    if (j >= size_) throw std::out_of_range("vertex index out of range");
    return {label_m_[j], j};
}

std::vector<std::size_t> Graph::neighbors_below(std::size_t v, std::size_t bound) const {
    std::vector<std::size_t> out;
    std::size_t lim = std::min(bound, size_);
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w * 64 < lim; ++w) {
        std::uint64_t word = r[w];
        if ((w + 1) * 64 > lim) word &= (std::uint64_t(1) << (lim & 63)) - 1;
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(word)));
            word &= word - 1;
        }
    }
    // v itself never appears: no self loops are ever set.
    return out;
}

std::string Graph::bitrow(std::size_t j) const {
    std::string s(j, '0');
    for (std::size_t i = 0; i < j; ++i)
        if (edge(j, i)) s[i] = '1';
    return s;
}

namespace {

bool clique_extend(const Graph& g, std::vector<std::size_t>& cand, std::size_t depth) {
    if (depth == 0) return true;
    if (cand.size() < depth) return false;
    for (std::size_t idx = 0; idx + depth <= cand.size(); ++idx) {
        std::size_t v = cand[idx];
        std::vector<std::size_t> next;
        for (std::size_t j = idx + 1; j < cand.size(); ++j)
            if (g.edge(v, cand[j])) next.push_back(cand[j]);
        if (clique_extend(g, next, depth - 1)) return true;
    }
    return false;
}

}  // namespace

bool contains_clique(const Graph& g, const std::vector<std::size_t>& vs, std::size_t k) {
    if (k == 0) return true;
    if (k == 1) return !vs.empty();
    std::vector<std::size_t> cand(vs);
    std::sort(cand.begin(), cand.end());
    return clique_extend(g, cand, k);
}

namespace {

// K_k search over `cand`; common-neighbor intersection keeps the scan
// near-linear in edges for sparse prefixes.
bool rooted_clique(const Graph& g, std::vector<std::size_t>& cand, std::size_t depth) {
    if (depth == 0) return true;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
        if (cand.size() - idx < depth) return false;
        std::size_t u = cand[idx];
        std::vector<std::size_t> next;
        for (std::size_t j = idx + 1; j < cand.size(); ++j)
            if (g.edge(u, cand[j])) next.push_back(cand[j]);
        if (rooted_clique(g, next, depth - 1)) return true;
    }
    return false;
}

bool vertex_has_clique(const Graph& g, std::size_t v, std::size_t k) {
    std::vector<std::size_t> nb = g.neighbors_below(v, v);
    return rooted_clique(g, nb, k - 1);
}

}  // namespace

bool clique_free(const Graph& g, std::size_t k, bool parallel) {
    if (k == 0) return false;
    if (k == 1) return g.size() == 0;
    bool found = false;
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16) shared(found)
        for (long long v = 0; v < static_cast<long long>(g.size()); ++v) {
            if (found) continue;
            if (vertex_has_clique(g, static_cast<std::size_t>(v), k)) {
#pragma omp critical
                found = true;
            }
        }
    } else {
        for (std::size_t v = 0; v < g.size() && !found; ++v)
            found = vertex_has_clique(g, v, k);
    }
    return !found;
}

std::size_t find_witness(const Graph& g, const std::vector<std::size_t>& D,
                         const std::vector<std::size_t>& F, std::size_t floor) {
    for (std::size_t v = floor; v < g.size(); ++v) {
        bool skip = false;
        for (std::size_t d : D)
            if (v == d || !g.edge(v, d)) { skip = true; break; }
        if (skip) continue;
        for (std::size_t f : F)
            if (v == f || g.edge(v, f)) { skip = true; break; }
        if (!skip) return v;
    }
    return g.size();
}

}  // namespace henson
