#include "henson/subcopy.hpp"

#include "henson/errors.hpp"

namespace henson {

bool Subcopy::order_isomorphic() const {
    for (std::size_t j = 0; j < selected.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (host->edge(selected[j], selected[i]) != host->edge(j, i)) return false;
    return true;
}

bool mirror_matches(const Graph& host, const std::vector<std::size_t>& selected,
                    std::size_t v) {
    std::size_t s = selected.size();
    for (std::size_t i = 0; i < s; ++i) {
        if (v == selected[i]) return false;
        if (host.edge(v, selected[i]) != host.edge(s, i)) return false;
    }
    return true;
}

std::optional<std::size_t> greedy_step(const Graph& host,
                                       const std::vector<std::size_t>& selected,
                                       const Threshold& threshold,
                                       const VertexPred& constraint,
                                       std::size_t from, std::size_t to) {
    std::size_t s = selected.size();
    std::size_t lo = from;
    if (threshold) lo = std::max(lo, threshold(s));
    if (!selected.empty()) lo = std::max(lo, selected.back() + 1);
    for (std::size_t v = lo; v < to; ++v) {
        if (constraint && !constraint(host, v)) continue;
        if (mirror_matches(host, selected, v)) return v;
    }
    return std::nullopt;
}

Subcopy greedy_subcopy(const Graph& host, std::size_t stages,
                       const Threshold& threshold, const VertexPred& constraint) {
    Subcopy sc;
    sc.host = &host;
    sc.selected.reserve(stages);
    for (std::size_t s = 0; s < stages; ++s) {
        auto v = greedy_step(host, sc.selected, threshold, constraint, 0, host.size());
        if (!v)
            throw BudgetExhausted("greedy subcopy stalled at stage " + std::to_string(s));
        sc.selected.push_back(*v);
    }
    return sc;
}

}  // namespace henson
