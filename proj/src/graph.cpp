#include "leginet/graph.hpp"

#include <algorithm>

namespace leginet {

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& edges) : out_(n), in_(n) {
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        out_[static_cast<size_t>(u)].push_back(v);
    }
    for (auto& adj : out_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    for (int u = 0; u < n; ++u) {
        for (int v : out_[static_cast<size_t>(u)]) {
            in_[static_cast<size_t>(v)].push_back(u);
            ++m_;
        }
    }
    for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

bool Digraph::has_edge(int u, int v) const {
    const auto& adj = out_[static_cast<size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<int, int>> Digraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < num_nodes(); ++u) {
        for (int v : out(u)) edges.emplace_back(u, v);
    }
    return edges;
}

Digraph Digraph::remove_nodes(const std::vector<bool>& removed) const {
    std::vector<int> remap(static_cast<size_t>(num_nodes()), -1);
    int kept = 0;
    for (int v = 0; v < num_nodes(); ++v) {
        if (!removed[static_cast<size_t>(v)]) remap[static_cast<size_t>(v)] = kept++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < num_nodes(); ++u) {
        if (remap[static_cast<size_t>(u)] < 0) continue;
        for (int v : out(u)) {
            if (remap[static_cast<size_t>(v)] < 0) continue;
            edges.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
        }
    }
    return Digraph(kept, edges);
}

}  // namespace leginet
