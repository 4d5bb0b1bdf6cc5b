#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "leginet/graph.hpp"
#include "leginet/network.hpp"
#include "leginet/util.hpp"

namespace leginet {

/// Scores aligned with digraph vertex indices.
using CentralityVector = std::vector<double>;

double average_degree(size_t n_nodes, size_t n_edges);
double average_degree(const LegislationNetwork& net);

/// Mean directed local clustering coefficient over all nodes:
/// cc_i = ((A+A^T)^3)_ii / (2 (d(d-1) - 2b)) with d the total degree and b
/// the number of bidirectional neighbours; undefined denominators count 0.
double directed_clustering(const Digraph& g);

struct PathStats {
    double avg_path_length = 0.0;  // mean over reachable ordered pairs
    int diameter = 0;              // longest finite shortest path
};

PathStats path_stats(const Digraph& g);

/// Katz prestige: x = attenuation * A^T x + baseline, solved by fixed-point
/// iteration. Without an explicit attenuation, 0.85 / spectral_radius(A) is
/// used (0.85 when the radius is zero).
CentralityVector katz_prestige(const Digraph& g, std::optional<double> attenuation = {},
                               double tol = 1e-10, int max_iter = 1000, double baseline = 1.0);

/// Directed shortest-path betweenness (Brandes), unnormalized.
CentralityVector betweenness(const Digraph& g);

CentralityVector in_degree_centrality(const Digraph& g);

/// Small-world sigma (C/C_rand)/(L/L_rand) against n_random uniform G(n,m)
/// digraphs with the same node and edge counts. Requires at least one edge.
double small_world_sigma(const Digraph& g, int n_random, uint64_t seed);

const std::set<std::string>& default_stopwords();

/// Token frequencies over the titles of the top_k nodes by centrality score.
/// Stopwords, the token "act", and 4-digit years are excluded; sorted by
/// descending count, then lexicographically.
std::vector<std::pair<std::string, int>> frequent_terms(
    const LegislationNetwork& net, const std::vector<std::pair<int, double>>& scores_by_node_id,
    int top_k, const std::set<std::string>& stopwords = default_stopwords());

struct MetricsRow {
    std::string label;  // snapshot year or "full"
    size_t n_nodes = 0;
    size_t n_edges = 0;
    double avg_degree = 0.0;
    double avg_path_length = 0.0;
    double directed_cc = 0.0;
    int diameter = 0;
    std::optional<double> sigma;
};

struct MetricsOptions {
    std::vector<int> snapshot_years;  // empty: single row over the whole network
    int sigma_samples = 50;
    uint64_t seed = 0;
};

std::vector<MetricsRow> compute_metrics(const LegislationNetwork& net,
                                        const MetricsOptions& options);

std::string metrics_csv(const std::vector<MetricsRow>& rows);
std::string metrics_json(const std::vector<MetricsRow>& rows);

}  // namespace leginet
