#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace henson {

// Append-only graph over an index-ordered vertex prefix with packed
// symmetric adjacency rows.  `n` is the clique bound: the graph is
// kept K_{n+1}-free by its builders (the class itself only stores).
class Graph {
public:
    Graph(int n, std::size_t capacity);

    int n() const { return n_; }
    std::size_t size() const { return size_; }
    std::size_t capacity() const { return cap_; }
    std::size_t words() const { return words_; }

    bool edge(std::size_t a, std::size_t b) const {
        return (bits_[a * words_ + (b >> 6)] >> (b & 63)) & 1u;
    }

    const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * words_; }

    // Appends a vertex adjacent to exactly `trace` (strictly increasing,
    // all indices < size()).  Returns the new vertex index.
    std::size_t append(const std::vector<std::size_t>& trace);

    // Neighborhood label (m, j): m least with edge(j,m)=1; (0,0) for j=0.
    std::pair<std::size_t, std::size_t> label(std::size_t j) const;

    // Neighbors of v with index < bound, increasing.
    std::vector<std::size_t> neighbors_below(std::size_t v, std::size_t bound) const;

    // Adjacency row of j restricted to indices < j, as a 0/1 string
    // (position i = edge(j,i)); matches the JSON "adjacency" field.
    std::string bitrow(std::size_t j) const;

private:
    int n_;
    std::size_t cap_;
    std::size_t words_;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::size_t> label_m_;
};

// True if the vertex set `vs` (distinct indices) contains a k-clique.
bool contains_clique(const Graph& g, const std::vector<std::size_t>& vs, std::size_t k);

// Exhaustive K_k-freeness over the whole prefix.  `parallel` selects the
// OpenMP kernel; both variants must agree (see tests/bench).
bool clique_free(const Graph& g, std::size_t k, bool parallel = false);

// Least index v >= floor adjacent to all of D and none of F, skipping
// members of D and F themselves; returns size() if none in the prefix.
std::size_t find_witness(const Graph& g, const std::vector<std::size_t>& D,
                         const std::vector<std::size_t>& F, std::size_t floor = 0);

}  // namespace henson
