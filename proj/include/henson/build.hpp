#pragma once

#include <cstdint>
#include <vector>

#include "henson/graph.hpp"
#include "henson/subcopy.hpp"

namespace henson {

// Standard-enumeration builder knobs.  The construction is canonical given
// (n, size): the seed is recorded by callers for manifests and drives
// downstream sampled probes, not the builder itself.
struct BuildOptions {
    int n = 2;
    std::size_t size = 1;
    std::uint64_t seed = 0;
    std::size_t dense_window = 20;   // witness coverage window [0, W)
    std::size_t dense_support = 4;   // max |D ∪ F| of covered queries
    std::size_t plain_prefix = 0;    // 0 = pick by n (window-only head segment)
    std::size_t lane_offset = 25;    // greedy support lane threshold offset
    std::size_t lane_stages = 256;   // unconstrained lane length
    std::size_t class_lane_stages = 0;  // 0 = plain_prefix - 4
    std::vector<LabelClass> class_lanes = {{2, 0}, {3, 0}, {3, 1}};
    std::size_t replenish_range = 96;   // neighborhood indices kept populated
};

struct BuildStats {
    std::size_t dense_universe = 0;   // scheduled small-query count
    std::size_t dense_pending = 0;    // unanswered at end of build
    std::size_t dense_done_at = 0;    // stage at which coverage completed
    std::vector<std::size_t> lane_progress;  // selected count per lane
};

Graph build_standard_copy(const BuildOptions& opt, BuildStats* stats = nullptr);
Graph build_standard_copy(int n, std::size_t size, std::uint64_t seed = 0);

// Canonical lane replays: the subcopies whose witnesses the builder
// scheduled.  Must be called with the same options the host was built with.
Subcopy lane_subcopy(const Graph& host, const BuildOptions& opt);              // unconstrained
Subcopy lane_subcopy(const Graph& host, const BuildOptions& opt, LabelClass c);

}  // namespace henson
