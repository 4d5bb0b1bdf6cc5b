#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace leginet {

/// Compact directed graph over vertices [0, n). Self loops and duplicate
/// edges are dropped on construction; adjacency lists are kept sorted so
/// identical edge sets always produce identical structures.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(n), in_(n) {}
    Digraph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_nodes() const { return static_cast<int>(out_.size()); }
    int num_edges() const { return m_; }

    const std::vector<int>& out(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in(int v) const { return in_[static_cast<size_t>(v)]; }

    int out_degree(int v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }
    int total_degree(int v) const { return out_degree(v) + in_degree(v); }

    bool has_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edge_list() const;

    /// Graph with the flagged vertices removed; survivors are renumbered in
    /// ascending order of their original ids.
    Digraph remove_nodes(const std::vector<bool>& removed) const;

private:
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    int m_ = 0;
};

}  // namespace leginet
