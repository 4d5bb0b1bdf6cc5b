#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leginet/graph.hpp"
#include "leginet/metrics.hpp"
#include "leginet/util.hpp"

namespace leginet {

enum class RemovalMode { failure, attack };

std::string_view to_string(RemovalMode m);

/// Node-removal experiment plan. Failure removes uniform random nodes and is
/// averaged over reps; attack removes the top nodes by total degree in one
/// batch and is deterministic (reps forced to 1).
struct RemovalPlan {
    RemovalMode mode = RemovalMode::failure;
    std::vector<double> fractions;  // ascending, each in [0, 1)
    int reps = 20;
    uint64_t seed = 0;
};

struct RemovalRow {
    RemovalMode mode;
    double fraction;
    double mean_diameter;
    double mean_avg_path_length;
    int reps;
};

std::vector<int> select_attack_nodes(const Digraph& g, int count);
std::vector<int> select_failure_nodes(const Digraph& g, int count, Rng& rng);

std::vector<RemovalRow> node_removal_experiment(const Digraph& g, const RemovalPlan& plan);

struct AgreementScores {
    double top1 = 0.0;
    double top3 = 0.0;
    double top10pct = 0.0;
    double top1_in_top10pct = 0.0;
    std::optional<double> pearson;  // missing when either vector has zero variance
};

/// Compare a perturbed centrality vector against the original one (same node
/// set). Rank ties break by node id ascending.
AgreementScores centrality_agreement(const CentralityVector& orig, const CentralityVector& pert);

enum class CentralityMeasure { katz, betweenness, in_degree };

std::string_view to_string(CentralityMeasure m);

CentralityVector compute_centrality(const Digraph& g, CentralityMeasure m);

struct StabilityReport {
    CentralityMeasure measure;
    double fraction;
    double top1_retention;
    double top3_overlap;
    double top10pct_overlap;
    double top1_in_top10pct;
    std::optional<double> pearson;  // mean over reps with a defined value
    int reps;
};

struct EdgeDeletionParams {
    std::vector<double> levels = {0.01, 0.05, 0.10, 0.20};
    int reps = 100;
    std::vector<CentralityMeasure> measures = {CentralityMeasure::katz,
                                               CentralityMeasure::betweenness,
                                               CentralityMeasure::in_degree};
    uint64_t seed = 0;
};

/// Delete ceil(f*|E|) uniform random edges per rep, recompute each measure,
/// and average the agreement scores against the unperturbed network. Each
/// rep's RNG stream derives from (seed, level index, rep index).
std::vector<StabilityReport> edge_deletion_experiment(const Digraph& g,
                                                      const EdgeDeletionParams& params = {});

Digraph delete_random_edges(const Digraph& g, int count, Rng& rng);

}  // namespace leginet
