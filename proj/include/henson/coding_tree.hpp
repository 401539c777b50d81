#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "henson/graph.hpp"

namespace henson {

// The tree of 1-types over finite vertex prefixes.  A node of length k is
// a binary string whose 1-positions form a K_n-free vertex set among the
// first k vertices; equivalently, a possible adjacency row prefix.  The
// prefixes of actual vertex rows are the concrete realizations; abstract
// membership is decidable from the graph alone.
class CodingTree {
public:
    class Node {
    public:
        Node() = default;
        explicit Node(std::size_t len) : len_(len), bits_((len + 63) / 64, 0) {}

        std::size_t length() const { return len_; }
        bool bit(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
        void set(std::size_t i, bool v) {
            std::uint64_t mask = 1ull << (i & 63);
            if (v) bits_[i >> 6] |= mask;
            else bits_[i >> 6] &= ~mask;
        }
        Node extend(bool b) const;
        Node extend_zeros(std::size_t to_len) const;
        Node truncate(std::size_t len) const;
        std::vector<std::size_t> ones() const;
        bool extends(const Node& s) const;  // s is an initial segment
        bool operator==(const Node& o) const { return len_ == o.len_ && bits_ == o.bits_; }
        bool operator!=(const Node& o) const { return !(*this == o); }
        bool lex_less(const Node& o) const;
        std::string str() const;

    private:
        std::size_t len_ = 0;
        std::vector<std::uint64_t> bits_;
    };

    explicit CodingTree(const Graph& g) : g_(&g) {}

    const Graph& graph() const { return *g_; }
    int n() const { return g_->n(); }
    std::size_t depth() const { return g_->size(); }

    Node vertex_node(std::size_t j) const;                      // row of v_j, length j
    Node vertex_prefix(std::size_t j, std::size_t len) const;   // truncated row

    // Abstract tree membership: the 1-positions hold no K_n.  Requires
    // length(s) <= depth() (the positions must name built vertices).
    bool in_tree(const Node& s) const;
    // Both immediate extensions are in the tree; needs length(s) < depth().
    bool splitting(const Node& s) const;
    // s equals the row prefix of the vertex at its own level.
    bool is_vertex(const Node& s) const;
    // No concrete vertex beyond level(s) realizes a proper extension yet.
    bool provisional(const Node& s) const;

    // Concrete induced level: distinct row prefixes of vertices >= len,
    // in lexicographic order.
    std::vector<Node> level(std::size_t len) const;

    // All abstract nodes of the given length, lexicographic; count-only
    // variant for large levels.
    std::vector<Node> tree_level_nodes(std::size_t len) const;
    std::size_t tree_level_count(std::size_t len) const;

    // Lexicographic depth-first visit of every abstract node of length
    // <= max_len; fn receives the node's 1-positions and its length.
    void walk(std::size_t max_len,
              const std::function<void(const std::vector<std::size_t>&, std::size_t)>& fn) const;

private:
    const Graph* g_;
};

using Node = CodingTree::Node;

// The unique type node over the first k vertices: bit i = 1 iff i is in
// V1.  V0 and V1 must partition {0..k-1} and V1 must be K_n-free.
Node type_node(const CodingTree& t, std::size_t k, const std::vector<std::size_t>& V0,
               const std::vector<std::size_t>& V1);

struct AgeChangeClass {
    enum class Kind { None, AC, Con };
    Kind kind = Kind::None;
    std::size_t m = 0;
    std::size_t p = 0;
    std::vector<std::size_t> witness;
    std::string reason;
};

// Classification of level sets by the clique material beneath them.  The
// classifier memoizes consecutive-age-change verdicts, which recurse over
// truncations of subsets.
class Classifier {
public:
    explicit Classifier(const CodingTree& t) : t_(&t) {}

    // Lexicographically least m-clique {k_0<..<k_{m-1}} with k_{m-1} =
    // level-1 and all member bits 1 in every node of X; nullopt if X is
    // not in K(m).  m = 0 yields the empty witness (trivially in K(0)).
    std::optional<std::vector<std::size_t>> k_witness(const std::vector<Node>& X,
                                                      std::size_t m);
    bool in_K(const std::vector<Node>& X, std::size_t m) { return k_witness(X, m).has_value(); }
    // Age-change: in K(m) while no proper truncation is.
    bool in_AC(const std::vector<Node>& X, std::size_t m);
    // Consecutive age-change per the recursive subset/truncation clauses.
    bool in_Con(const std::vector<Node>& X, std::size_t m);
    // Some truncation of X (up to its own level) lies in Con(m, .).
    bool has_con(const std::vector<Node>& X, std::size_t m);

    // Full classification at the set's own level: the maximal m admitting
    // an age-change, upgraded to Con when consecutive.  None carries a
    // reason ("no age-change" or the p-bound violation).
    AgeChangeClass classify(const std::vector<Node>& X);

    // Reduction of x (length j+1, not extending the vertex node of j)
    // at vertex j: the maximal clique class relating x to v_j must be
    // witnessed strictly below level j.
    bool reduced(const Node& x, std::size_t j);

private:
    const CodingTree* t_;
    std::unordered_map<std::string, bool> con_memo_;
};

// Truncation of a level set with deduplication, preserving lex order.
std::vector<Node> truncate_set(const std::vector<Node>& X, std::size_t len);

}  // namespace henson
