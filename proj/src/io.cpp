#include "henson/io.hpp"

#include <sstream>

#include "henson/errors.hpp"

namespace henson {

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json doc;
    doc["n"] = g.n();
    doc["size"] = g.size();
    auto& adj = doc["adjacency"] = nlohmann::json::array();
    auto& labels = doc["labels"] = nlohmann::json::array();
    for (std::size_t j = 0; j < g.size(); ++j) {
        adj.push_back(g.bitrow(j));
        auto [m, idx] = g.label(j);
        labels.push_back({m, idx});
    }
    return doc;
}

Graph graph_from_json(const nlohmann::json& doc) {
    int n = doc.at("n").get<int>();
    std::size_t size = doc.at("size").get<std::size_t>();
    const auto& adj = doc.at("adjacency");
    if (n < 2 || size == 0 || adj.size() != size)
        throw PreconditionViolation("graph document: bad header");
    Graph g(n, size);
    std::vector<std::size_t> trace;
    for (std::size_t j = 0; j < size; ++j) {
        const std::string row = adj[j].get<std::string>();
        if (row.size() != j) throw PreconditionViolation("graph document: bad row length");
        trace.clear();
        for (std::size_t i = 0; i < j; ++i)
            if (row[i] == '1') trace.push_back(i);
            else if (row[i] != '0') throw PreconditionViolation("graph document: bad row digit");
        g.append(trace);
    }
    return g;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph copy {\n  node [shape=circle];\n";
    for (std::size_t j = 0; j < g.size(); ++j) {
        auto [m, idx] = g.label(j);
        out << "  v" << m << "_" << idx << ";\n";
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
        auto [mj, ij] = g.label(j);
        for (std::size_t i = 0; i < j; ++i)
            if (g.edge(j, i)) {
                auto [mi, ii] = g.label(i);
                out << "  v" << mi << "_" << ii << " -- v" << mj << "_" << ij << ";\n";
            }
    }
    out << "}\n";
    return out.str();
}

}  // namespace henson
