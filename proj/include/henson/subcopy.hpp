#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "henson/graph.hpp"

namespace henson {

// Order-isomorphic selection inside a host prefix.  The mirror pattern is
// the host's own enumeration: edge(selected[j], selected[i]) must equal
// edge(j, i) for all i < j < stages.
struct Subcopy {
    const Graph* host = nullptr;
    std::vector<std::size_t> selected;

    bool order_isomorphic() const;  // exhaustive pair check
};

// Residue-class constraint on a vertex's neighborhood label (m, j):
// admits v iff m % modulus == residue.
struct LabelClass {
    std::size_t modulus = 1;
    std::size_t residue = 0;
    bool admits(const Graph& g, std::size_t v) const {
        return g.label(v).first % modulus == residue;
    }
};

using Threshold = std::function<std::size_t(std::size_t)>;
using VertexPred = std::function<bool(const Graph&, std::size_t)>;

// True iff v can serve as stage selected.size() of the mirror pattern.
bool mirror_matches(const Graph& host, const std::vector<std::size_t>& selected,
                    std::size_t v);

// Least admissible vertex in [from, to) for the next stage, or nullopt.
// Admissible: v >= threshold(stage), v > selected.back(), mirror pattern
// matches, and the constraint (if any) admits v.
std::optional<std::size_t> greedy_step(const Graph& host,
                                       const std::vector<std::size_t>& selected,
                                       const Threshold& threshold,
                                       const VertexPred& constraint,
                                       std::size_t from, std::size_t to);

// Runs the greedy rule for `stages` stages; throws BudgetExhausted if some
// stage has no admissible vertex in the prefix.
Subcopy greedy_subcopy(const Graph& host, std::size_t stages,
                       const Threshold& threshold = {},
                       const VertexPred& constraint = {});

}  // namespace henson
