#include "leginet/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace leginet {

std::string_view to_string(RemovalMode m) {
    return m == RemovalMode::failure ? "failure" : "attack";
}

std::string_view to_string(CentralityMeasure m) {
    switch (m) {
        case CentralityMeasure::katz: return "katz";
        case CentralityMeasure::betweenness: return "betweenness";
        case CentralityMeasure::in_degree: return "in_degree";
    }
    return "katz";
}

CentralityVector compute_centrality(const Digraph& g, CentralityMeasure m) {
    switch (m) {
        case CentralityMeasure::katz: return katz_prestige(g);
        case CentralityMeasure::betweenness: return betweenness(g);
        case CentralityMeasure::in_degree: return in_degree_centrality(g);
    }
    return {};
}

std::vector<int> select_attack_nodes(const Digraph& g, int count) {
    std::vector<int> order(static_cast<size_t>(g.num_nodes()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.total_degree(a), db = g.total_degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    order.resize(static_cast<size_t>(count));
    return order;
}

std::vector<int> select_failure_nodes(const Digraph& g, int count, Rng& rng) {
    auto idx = rng.sample_distinct(static_cast<uint64_t>(count),
                                   static_cast<uint64_t>(g.num_nodes()));
    return std::vector<int>(idx.begin(), idx.end());
}

std::vector<RemovalRow> node_removal_experiment(const Digraph& g, const RemovalPlan& plan) {
    if (g.num_nodes() == 0) throw std::invalid_argument("node_removal_experiment: empty graph");
    std::vector<RemovalRow> rows;
    const int n = g.num_nodes();
    const int reps = plan.mode == RemovalMode::attack ? 1 : std::max(1, plan.reps);

    for (size_t li = 0; li < plan.fractions.size(); ++li) {
        double f = plan.fractions[li];
        int count = static_cast<int>(std::ceil(f * n));
        if (count >= n) {
            throw std::invalid_argument("node_removal_experiment: fraction removes every node");
        }
        double diam_sum = 0.0, apl_sum = 0.0;
        for (int rep = 0; rep < reps; ++rep) {
            std::vector<int> victims;
            if (plan.mode == RemovalMode::attack) {
                victims = select_attack_nodes(g, count);
            } else {
                Rng rng = Rng::derive(plan.seed, li, static_cast<uint64_t>(rep));
                victims = select_failure_nodes(g, count, rng);
            }
            std::vector<bool> removed(static_cast<size_t>(n), false);
            for (int v : victims) removed[static_cast<size_t>(v)] = true;
            auto ps = path_stats(g.remove_nodes(removed));
            diam_sum += ps.diameter;
            apl_sum += ps.avg_path_length;
        }
        rows.push_back({plan.mode, f, diam_sum / reps, apl_sum / reps, reps});
    }
    return rows;
}

namespace {

/// Indices sorted by score descending, node id ascending on ties.
std::vector<int> ranking(const CentralityVector& scores) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double sa = scores[static_cast<size_t>(a)], sb = scores[static_cast<size_t>(b)];
        if (sa != sb) return sa > sb;
        return a < b;
    });
    return order;
}

std::optional<double> pearson_correlation(const CentralityVector& a, const CentralityVector& b) {
    const size_t n = a.size();
    double ma = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(n);
    double mb = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) return std::nullopt;
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

AgreementScores centrality_agreement(const CentralityVector& orig, const CentralityVector& pert) {
    if (orig.size() != pert.size() || orig.empty()) {
        throw std::invalid_argument("centrality_agreement: vectors must align and be non-empty");
    }
    const size_t n = orig.size();
    AgreementScores out;

    auto orig_rank = ranking(orig);
    auto pert_rank = ranking(pert);

    // Top-1: is the perturbed argmax in the original argmax set?
    double orig_max = orig[static_cast<size_t>(orig_rank[0])];
    int pert_top = pert_rank[0];
    out.top1 = orig[static_cast<size_t>(pert_top)] == orig_max ? 1.0 : 0.0;

    auto overlap = [&](size_t k) {
        std::set<int> a(orig_rank.begin(), orig_rank.begin() + static_cast<long>(k));
        std::set<int> b(pert_rank.begin(), pert_rank.begin() + static_cast<long>(k));
        size_t inter = 0;
        for (int v : b) inter += a.count(v);
        return static_cast<double>(inter) / static_cast<double>(k);
    };
    size_t k3 = std::min<size_t>(3, n);
    out.top3 = overlap(k3);
    size_t k10 = std::min(n, static_cast<size_t>(std::ceil(0.1 * static_cast<double>(n))));
    if (k10 == 0) k10 = 1;
    out.top10pct = overlap(k10);

    std::set<int> top10(orig_rank.begin(), orig_rank.begin() + static_cast<long>(k10));
    out.top1_in_top10pct = top10.count(pert_top) ? 1.0 : 0.0;

    out.pearson = pearson_correlation(orig, pert);
    return out;
}

Digraph delete_random_edges(const Digraph& g, int count, Rng& rng) {
    auto edges = g.edge_list();
    if (count > static_cast<int>(edges.size())) {
        throw std::invalid_argument("delete_random_edges: count exceeds edge count");
    }
    auto doomed = rng.sample_distinct(static_cast<uint64_t>(count), edges.size());
    std::vector<std::pair<int, int>> kept;
    kept.reserve(edges.size() - static_cast<size_t>(count));
    size_t di = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (di < doomed.size() && doomed[di] == i) {
            ++di;
            continue;
        }
        kept.push_back(edges[i]);
    }
    return Digraph(g.num_nodes(), kept);
}

std::vector<StabilityReport> edge_deletion_experiment(const Digraph& g,
                                                      const EdgeDeletionParams& params) {
    if (g.num_edges() < 10) {
        throw std::invalid_argument("edge_deletion_experiment: need at least 10 edges");
    }
    std::vector<CentralityVector> originals;
    originals.reserve(params.measures.size());
    for (auto m : params.measures) originals.push_back(compute_centrality(g, m));

    std::vector<StabilityReport> reports;
    for (size_t li = 0; li < params.levels.size(); ++li) {
        double f = params.levels[li];
        int count = static_cast<int>(std::ceil(f * g.num_edges()));
        std::vector<double> top1(params.measures.size(), 0.0);
        std::vector<double> top3(params.measures.size(), 0.0);
        std::vector<double> top10(params.measures.size(), 0.0);
        std::vector<double> top1in10(params.measures.size(), 0.0);
        std::vector<double> pearson_sum(params.measures.size(), 0.0);
        std::vector<int> pearson_n(params.measures.size(), 0);

        for (int rep = 0; rep < params.reps; ++rep) {
            Rng rng = Rng::derive(params.seed, li + 1, static_cast<uint64_t>(rep));
            Digraph pert = delete_random_edges(g, count, rng);
            for (size_t mi = 0; mi < params.measures.size(); ++mi) {
                CentralityVector pv = compute_centrality(pert, params.measures[mi]);
                AgreementScores sc = centrality_agreement(originals[mi], pv);
                top1[mi] += sc.top1;
                top3[mi] += sc.top3;
                top10[mi] += sc.top10pct;
                top1in10[mi] += sc.top1_in_top10pct;
                if (sc.pearson) {
                    pearson_sum[mi] += *sc.pearson;
                    pearson_n[mi] += 1;
                }
            }
        }
        for (size_t mi = 0; mi < params.measures.size(); ++mi) {
            StabilityReport r{params.measures[mi],
                              f,
                              top1[mi] / params.reps,
                              top3[mi] / params.reps,
                              top10[mi] / params.reps,
                              top1in10[mi] / params.reps,
                              std::nullopt,
                              params.reps};
            if (pearson_n[mi] > 0) r.pearson = pearson_sum[mi] / pearson_n[mi];
            reports.push_back(r);
        }
    }
    return reports;
}

}  // namespace leginet
