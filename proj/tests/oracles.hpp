#pragma once

// Independent brute-force reference implementations used to check the
// library. These deliberately avoid sharing code paths with the library:
// full-matrix DP, Floyd-Warshall, explicit path enumeration, dense cubes.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "leginet/graph.hpp"
#include "leginet/util.hpp"

namespace oracles {

inline int edit_distance_matrix(const std::string& a, const std::string& b) {
    const size_t n = a.size(), m = b.size();
    std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
    for (size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
    for (size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= m; ++j) {
            int sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            d[i][j] = std::min({sub, d[i - 1][j] + 1, d[i][j - 1] + 1});
        }
    }
    return d[n][m];
}

struct PathOracle {
    double avg = 0.0;
    int diameter = 0;
};

inline PathOracle floyd_warshall(const leginet::Digraph& g) {
    const int n = g.num_nodes();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), inf));
    for (int u = 0; u < n; ++u) {
        d[static_cast<size_t>(u)][static_cast<size_t>(u)] = 0;
        for (int v : g.out(u)) d[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int via = d[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                          d[static_cast<size_t>(k)][static_cast<size_t>(j)];
                if (via < d[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                    d[static_cast<size_t>(i)][static_cast<size_t>(j)] = via;
                }
            }
        }
    }
    PathOracle out;
    long long count = 0, total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || d[static_cast<size_t>(i)][static_cast<size_t>(j)] >= inf) continue;
            ++count;
            total += d[static_cast<size_t>(i)][static_cast<size_t>(j)];
            out.diameter = std::max(out.diameter, d[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
    }
    if (count) out.avg = static_cast<double>(total) / static_cast<double>(count);
    return out;
}

// Enumerate every shortest s->t path explicitly and count interior visits.
inline std::vector<double> brute_betweenness(const leginet::Digraph& g) {
    const int n = g.num_nodes();
    std::vector<double> bc(static_cast<size_t>(n), 0.0);
    auto dists = [&](int s) {
        std::vector<int> d(static_cast<size_t>(n), -1);
        std::vector<int> q{s};
        d[static_cast<size_t>(s)] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int u = q[qi];
            for (int v : g.out(u)) {
                if (d[static_cast<size_t>(v)] < 0) {
                    d[static_cast<size_t>(v)] = d[static_cast<size_t>(u)] + 1;
                    q.push_back(v);
                }
            }
        }
        return d;
    };
    for (int s = 0; s < n; ++s) {
        auto d = dists(s);
        for (int t = 0; t < n; ++t) {
            if (t == s || d[static_cast<size_t>(t)] < 0) continue;
            // DFS over the shortest-path DAG from s to t.
            std::vector<std::vector<int>> paths;
            std::vector<int> cur{s};
            std::function<void(int)> walk = [&](int u) {
                if (u == t) {
                    paths.push_back(cur);
                    return;
                }
                for (int v : g.out(u)) {
                    if (d[static_cast<size_t>(v)] == d[static_cast<size_t>(u)] + 1 &&
                        d[static_cast<size_t>(v)] <= d[static_cast<size_t>(t)]) {
                        cur.push_back(v);
                        walk(v);
                        cur.pop_back();
                    }
                }
            };
            walk(s);
            if (paths.empty()) continue;
            std::vector<int> through(static_cast<size_t>(n), 0);
            for (const auto& p : paths) {
                for (size_t k = 1; k + 1 < p.size(); ++k) ++through[static_cast<size_t>(p[k])];
            }
            for (int v = 0; v < n; ++v) {
                if (through[static_cast<size_t>(v)]) {
                    bc[static_cast<size_t>(v)] += static_cast<double>(through[static_cast<size_t>(v)]) /
                                                  static_cast<double>(paths.size());
                }
            }
        }
    }
    return bc;
}

// Mean directed clustering via a dense (A+A^T) cube.
inline double clustering_cube(const leginet::Digraph& g) {
    const int n = g.num_nodes();
    if (n == 0) return 0.0;
    std::vector<std::vector<double>> s(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int u = 0; u < n; ++u) {
        for (int v : g.out(u)) {
            s[static_cast<size_t>(u)][static_cast<size_t>(v)] += 1.0;
            s[static_cast<size_t>(v)][static_cast<size_t>(u)] += 1.0;
        }
    }
    auto mul = [&](const std::vector<std::vector<double>>& a,
                   const std::vector<std::vector<double>>& b) {
        std::vector<std::vector<double>> c(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n), 0.0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    c[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                        a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                        b[static_cast<size_t>(k)][static_cast<size_t>(j)];
        return c;
    };
    auto s2 = mul(s, s);
    auto s3 = mul(s2, s);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        int din = g.in_degree(i), dout = g.out_degree(i);
        int d = din + dout;
        int b = 0;
        for (int v : g.out(i)) {
            if (g.has_edge(v, i)) ++b;
        }
        double denom = 2.0 * (static_cast<double>(d) * (d - 1) - 2.0 * b);
        if (denom <= 0.0) continue;
        sum += s3[static_cast<size_t>(i)][static_cast<size_t>(i)] / denom;
    }
    return sum / static_cast<double>(n);
}

inline leginet::Digraph random_digraph(int max_n, leginet::Rng& rng) {
    int n = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(max_n - 1)));
    std::vector<std::pair<int, int>> edges;
    double p = 0.05 + rng.unit() * 0.35;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && rng.unit() < p) edges.emplace_back(u, v);
        }
    }
    return leginet::Digraph(n, edges);
}

inline std::string random_string(size_t max_len, leginet::Rng& rng) {
    size_t len = rng.below(max_len + 1);
    std::string s;
    for (size_t i = 0; i < len; ++i) {
        s.push_back(static_cast<char>('a' + rng.below(6)));  // small alphabet: more collisions
    }
    return s;
}

}  // namespace oracles
