#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "henson/graph.hpp"
#include "henson/subcopy.hpp"

namespace henson {

// Uniform view of a copy: either a whole graph prefix or the selected
// vertices of a Subcopy.  Vertices keep their ambient indices and ambient
// neighborhood labels; family extraction and the one-point extension
// searches all work in ambient indexing.
class CopyView {
public:
    explicit CopyView(const Graph& g) : g_(&g) {}
    explicit CopyView(const Subcopy& sc) : g_(sc.host), verts_(sc.selected) {
        for (std::size_t v : verts_)
            if (v >= member_.size()) member_.resize(v + 1, false), member_[v] = true;
            else member_[v] = true;
    }

    const Graph& graph() const { return *g_; }
    bool whole() const { return verts_.empty() && member_.empty(); }
    std::size_t count() const { return whole() ? g_->size() : verts_.size(); }
    std::size_t vertex(std::size_t i) const { return whole() ? i : verts_[i]; }
    bool has(std::size_t ambient) const {
        if (whole()) return ambient < g_->size();
        return ambient < member_.size() && member_[ambient];
    }
    std::pair<std::size_t, std::size_t> label(std::size_t ambient) const {
        return g_->label(ambient);
    }

private:
    const Graph* g_;
    std::vector<std::size_t> verts_;
    std::vector<bool> member_;
};

}  // namespace henson
