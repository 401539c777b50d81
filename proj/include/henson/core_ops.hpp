#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "henson/graph.hpp"
#include "henson/view.hpp"

namespace henson {

// One-point extension query: find a vertex adjacent to all of D and none
// of F, at index >= floor.
struct ExtensionQuery {
    std::vector<std::size_t> D;
    std::vector<std::size_t> F;
    std::size_t floor = 0;
};

// Least witness for the query inside the prefix.  Throws
// PreconditionViolation if D and F overlap, reference out-of-range
// vertices, or D already holds a K_n (the query is then unsatisfiable in
// any K_{n+1}-free graph); throws BudgetExhausted if the prefix holds no
// witness (the caller may build a larger prefix).
std::size_t realize_extension(const Graph& g, const ExtensionQuery& q);

// Range-checked neighborhood label.
std::pair<std::size_t, std::size_t> neighborhood_label(const Graph& g, std::size_t j);

// A fresh neighborhood level above an anticlique: index m together with
// member vertices labeled (m, .) that are disconnected from all of H.
struct UpwardExtension {
    std::size_t m = 0;
    std::vector<std::size_t> witnesses;
};

// Least m > l and > max(H) carrying at least `count` member vertices
// labeled (m, .) disconnected from every vertex of H.  H must consist of
// member vertices of the view.  nullopt when the prefix runs out.
std::optional<UpwardExtension> upward_extension(const CopyView& view,
                                                const std::vector<std::size_t>& H,
                                                std::size_t l, std::size_t count);

// Evidence of a locally rich neighborhood level: n_bar > l0 is populated
// by `level_witnesses`, and `anchor` (itself labeled n_bar) has at least
// `count` member neighbors whose labels lie in (l0, index(anchor)].
struct Anchor {
    std::size_t n_bar = 0;
    std::vector<std::size_t> level_witnesses;
    std::size_t anchor = 0;
    std::vector<std::size_t> anchor_neighbors;
};

// Budgeted search for an Anchor with ambient indices below `budget`.
// Failure (nullopt) is a legitimate outcome: adversarial copies make it
// unavoidable, so it is a result, not an error.
std::optional<Anchor> anchor_search(const CopyView& view, std::size_t l0,
                                    std::size_t count, std::size_t budget);

// Witnesses w below neighborhood level n_bar realizing a one-point
// extension pattern over H0: w is a member vertex adjacent to the anchor,
// label(w).m <= n_bar, and edge(w, H0[i]) == pattern[i] for all i.
// Preconditions: pattern.size() == H0.size() and every H0 vertex has
// label > n_bar (else PreconditionViolation).  Throws BudgetExhausted
// when fewer than `count` witnesses exist among the members.
std::vector<std::size_t> downward_extension(const CopyView& view,
                                            const std::vector<std::size_t>& H0,
                                            const std::vector<bool>& pattern,
                                            const Anchor& anchor, std::size_t count);

}  // namespace henson
