#include "leginet/graphgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace leginet {

Digraph gnm_random_digraph(int n, int m, Rng& rng) {
    const uint64_t pairs = static_cast<uint64_t>(n) * (n - 1);
    if (static_cast<uint64_t>(m) > pairs) {
        throw std::invalid_argument("gnm_random_digraph: m exceeds n(n-1)");
    }
    auto codes = rng.sample_distinct(static_cast<uint64_t>(m), pairs);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (uint64_t code : codes) {
        int u = static_cast<int>(code / static_cast<uint64_t>(n - 1));
        int r = static_cast<int>(code % static_cast<uint64_t>(n - 1));
        int v = r >= u ? r + 1 : r;  // skip the diagonal
        edges.emplace_back(u, v);
    }
    return Digraph(n, edges);
}

Digraph preferential_attachment_digraph(int n, int edges_per_node, Rng& rng) {
    if (n < 2 || edges_per_node < 1) {
        throw std::invalid_argument("preferential_attachment_digraph: need n >= 2, k >= 1");
    }
    std::vector<std::pair<int, int>> edges;
    // Repeated-targets urn: every edge endpoint appears once per incident
    // edge, plus every node once, giving degree-plus-one proportional draws.
    std::vector<int> urn;
    urn.push_back(0);
    for (int v = 1; v < n; ++v) {
        int k = std::min(edges_per_node, v);
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < k) {
            int t = urn[static_cast<size_t>(rng.below(urn.size()))];
            targets.insert(t);
        }
        for (int t : targets) {
            edges.emplace_back(v, t);
            urn.push_back(t);
            urn.push_back(v);
        }
        urn.push_back(v);
    }
    return Digraph(n, edges);
}

Digraph ring_lattice_digraph(int n, int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        for (int d = 1; d <= k; ++d) edges.emplace_back(v, (v + d) % n);
    }
    return Digraph(n, edges);
}

Digraph watts_strogatz_digraph(int n, int k, double beta, Rng& rng) {
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        for (int d = 1; d <= k; ++d) edges.insert({v, (v + d) % n});
    }
    std::vector<std::pair<int, int>> rewired;
    for (const auto& [u, v] : edges) {
        if (rng.unit() < beta) {
            for (int attempt = 0; attempt < 100; ++attempt) {
                int w = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
                if (w != u && !edges.count({u, w}) &&
                    std::find(rewired.begin(), rewired.end(), std::make_pair(u, w)) ==
                        rewired.end()) {
                    rewired.emplace_back(u, w);
                    break;
                }
            }
        } else {
            rewired.emplace_back(u, v);
        }
    }
    return Digraph(n, rewired);
}

}  // namespace leginet
