#include "leginet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "leginet/graphgen.hpp"

namespace leginet {

double average_degree(size_t n_nodes, size_t n_edges) {
    if (n_nodes == 0) return 0.0;
    return static_cast<double>(n_edges) / static_cast<double>(n_nodes);
}

double average_degree(const LegislationNetwork& net) {
    return average_degree(net.num_nodes(), net.num_edges());
}

double directed_clustering(const Digraph& g) {
    const int n = g.num_nodes();
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        // Union neighbourhood with A+A^T weights.
        std::map<int, int> w;  // neighbour -> a_ij + a_ji
        for (int v : g.out(i)) w[v] += 1;
        for (int v : g.in(i)) w[v] += 1;
        int d = g.total_degree(i);
        int b = 0;
        for (const auto& [v, weight] : w) {
            if (weight == 2) ++b;
        }
        long long denom = 2LL * (static_cast<long long>(d) * (d - 1) - 2LL * b);
        if (denom <= 0) continue;
        long long closed = 0;  // ((A+A^T)^3)_ii
        for (const auto& [j, wij] : w) {
            for (const auto& [k, wik] : w) {
                if (j == k) continue;
                int wjk = (g.has_edge(j, k) ? 1 : 0) + (g.has_edge(k, j) ? 1 : 0);
                if (wjk == 0) continue;
                closed += static_cast<long long>(wij) * wjk * wik;
            }
        }
        sum += static_cast<double>(closed) / static_cast<double>(denom);
    }
    return sum / static_cast<double>(n);
}

PathStats path_stats(const Digraph& g) {
    const int n = g.num_nodes();
    PathStats stats;
    long long pair_count = 0;
    long long dist_sum = 0;
    std::vector<int> dist(static_cast<size_t>(n));
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.out(u)) {
                if (dist[static_cast<size_t>(v)] >= 0) continue;
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
        for (int t = 0; t < n; ++t) {
            int d = dist[static_cast<size_t>(t)];
            if (t == s || d < 0) continue;
            ++pair_count;
            dist_sum += d;
            stats.diameter = std::max(stats.diameter, d);
        }
    }
    if (pair_count > 0) {
        stats.avg_path_length = static_cast<double>(dist_sum) / static_cast<double>(pair_count);
    }
    return stats;
}

namespace {

double spectral_radius_estimate(const Digraph& g) {
    const int n = g.num_nodes();
    if (n == 0 || g.num_edges() == 0) return 0.0;
    std::vector<double> x(static_cast<size_t>(n), 1.0), y(static_cast<size_t>(n));
    double radius = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        std::fill(y.begin(), y.end(), 0.0);
        for (int u = 0; u < n; ++u) {
            for (int v : g.out(u)) y[static_cast<size_t>(u)] += x[static_cast<size_t>(v)];
        }
        double norm = 0.0;
        for (double t : y) norm = std::max(norm, std::abs(t));
        if (norm < 1e-300) return 0.0;
        radius = norm;
        for (auto& t : y) t /= norm;
        x = y;
    }
    return radius;
}

}  // namespace

CentralityVector katz_prestige(const Digraph& g, std::optional<double> attenuation, double tol,
                               int max_iter, double baseline) {
    const int n = g.num_nodes();
    double alpha;
    if (attenuation) {
        alpha = *attenuation;
    } else {
        double radius = spectral_radius_estimate(g);
        alpha = radius > 1e-12 ? 0.85 / radius : 0.85;
    }
    CentralityVector x(static_cast<size_t>(n), baseline), next(static_cast<size_t>(n));
    for (int iter = 0; iter < max_iter; ++iter) {
        double delta = 0.0;
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            for (int u : g.in(v)) acc += x[static_cast<size_t>(u)];
            next[static_cast<size_t>(v)] = alpha * acc + baseline;
            delta = std::max(delta, std::abs(next[static_cast<size_t>(v)] - x[static_cast<size_t>(v)]));
        }
        x.swap(next);
        if (delta <= tol) return x;
    }
    throw std::runtime_error("katz_prestige did not converge with attenuation " +
                             std::to_string(alpha));
}

CentralityVector betweenness(const Digraph& g) {
    const int n = g.num_nodes();
    CentralityVector bc(static_cast<size_t>(n), 0.0);
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<double> sigma(static_cast<size_t>(n));
    std::vector<double> delta(static_cast<size_t>(n));
    std::vector<std::vector<int>> preds(static_cast<size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::deque<int> queue;

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();
        queue.clear();

        dist[static_cast<size_t>(s)] = 0;
        sigma[static_cast<size_t>(s)] = 1.0;
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (int v : g.out(u)) {
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                }
                if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(u)] + 1) {
                    sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(v)].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int u : preds[static_cast<size_t>(w)]) {
                delta[static_cast<size_t>(u)] += sigma[static_cast<size_t>(u)] /
                                                 sigma[static_cast<size_t>(w)] *
                                                 (1.0 + delta[static_cast<size_t>(w)]);
            }
            if (w != s) bc[static_cast<size_t>(w)] += delta[static_cast<size_t>(w)];
        }
    }
    return bc;
}

CentralityVector in_degree_centrality(const Digraph& g) {
    CentralityVector x(static_cast<size_t>(g.num_nodes()));
    for (int v = 0; v < g.num_nodes(); ++v) x[static_cast<size_t>(v)] = g.in_degree(v);
    return x;
}

double small_world_sigma(const Digraph& g, int n_random, uint64_t seed) {
    if (g.num_edges() < 1) throw std::invalid_argument("small_world_sigma: graph has no edges");
    if (n_random < 1) throw std::invalid_argument("small_world_sigma: n_random must be >= 1");
    const double c = directed_clustering(g);
    const double l = path_stats(g).avg_path_length;

    double c_rand_sum = 0.0, l_rand_sum = 0.0;
    for (int i = 0; i < n_random; ++i) {
        Rng rng = Rng::derive(seed, 0x5157ULL, static_cast<uint64_t>(i));
        Digraph r = gnm_random_digraph(g.num_nodes(), g.num_edges(), rng);
        c_rand_sum += directed_clustering(r);
        l_rand_sum += path_stats(r).avg_path_length;
    }
    double c_rand = c_rand_sum / n_random;
    double l_rand = l_rand_sum / n_random;
    if (c_rand <= 0.0) {
        // Declared fallback: expected density of the random ensemble.
        c_rand = static_cast<double>(g.num_edges()) /
                 (static_cast<double>(g.num_nodes()) * (g.num_nodes() - 1));
    }
    if (l <= 0.0 || l_rand <= 0.0) return 0.0;
    return (c / c_rand) / (l / l_rand);
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {"the", "of",  "and", "to",  "in", "for",
                                                "on",  "by",  "a",   "an",  "or", "with",
                                                "as",  "at",  "no",  "any", "its"};
    return words;
}

std::vector<std::pair<std::string, int>> frequent_terms(
    const LegislationNetwork& net, const std::vector<std::pair<int, double>>& scores_by_node_id,
    int top_k, const std::set<std::string>& stopwords) {
    if (top_k < 0 || static_cast<size_t>(top_k) > net.nodes.size()) {
        throw std::invalid_argument("frequent_terms: top_k must be in [0, |V|]");
    }
    auto ranked = scores_by_node_id;
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::map<int, const NodeRecord*> by_id;
    for (const auto& n : net.nodes) by_id[n.node_id] = &n;

    std::map<std::string, int> counts;
    for (int i = 0; i < top_k && i < static_cast<int>(ranked.size()); ++i) {
        auto it = by_id.find(ranked[static_cast<size_t>(i)].first);
        if (it == by_id.end()) continue;
        for (const auto& tok : split_ws(it->second->title)) {
            if (stopwords.count(tok) || tok == "act" || tok == "ordinance") continue;
            if (is_year_token(tok)) continue;
            ++counts[tok];
        }
    }
    std::vector<std::pair<std::string, int>> out(counts.begin(), counts.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

std::vector<MetricsRow> compute_metrics(const LegislationNetwork& net,
                                        const MetricsOptions& options) {
    std::vector<MetricsRow> rows;
    auto one_row = [&](const LegislationNetwork& n, const std::string& label) {
        MetricsRow row;
        row.label = label;
        row.n_nodes = n.num_nodes();
        row.n_edges = n.num_edges();
        row.avg_degree = average_degree(n);
        auto [g, ids] = n.to_digraph();
        auto ps = path_stats(g);
        row.avg_path_length = ps.avg_path_length;
        row.diameter = ps.diameter;
        row.directed_cc = directed_clustering(g);
        if (g.num_edges() >= 1) {
            row.sigma = small_world_sigma(g, options.sigma_samples, options.seed);
        }
        return row;
    };
    if (options.snapshot_years.empty()) {
        rows.push_back(one_row(net, "full"));
    } else {
        for (int year : options.snapshot_years) {
            rows.push_back(one_row(snapshot_at(net, year).network, std::to_string(year)));
        }
    }
    return rows;
}

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
    std::string out =
        "snapshot,nodes,edges,avg_degree,avg_path_length,directed_cc,diameter,sigma\n";
    for (const auto& r : rows) {
        out += r.label + "," + std::to_string(r.n_nodes) + "," + std::to_string(r.n_edges) + "," +
               fmt_double(r.avg_degree, 3) + "," + fmt_double(r.avg_path_length, 3) + "," +
               fmt_double(r.directed_cc, 3) + "," + std::to_string(r.diameter) + "," +
               (r.sigma ? fmt_double(*r.sigma, 3) : std::string("NA")) + "\n";
    }
    return out;
}

std::string metrics_json(const std::vector<MetricsRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["snapshot"] = r.label;
        row["nodes"] = r.n_nodes;
        row["edges"] = r.n_edges;
        row["avg_degree"] = r.avg_degree;
        row["avg_path_length"] = r.avg_path_length;
        row["directed_cc"] = r.directed_cc;
        row["diameter"] = r.diameter;
        if (r.sigma) row["sigma"] = *r.sigma;
        else row["sigma"] = nullptr;
        j.push_back(row);
    }
    return j.dump(2) + "\n";
}

}  // namespace leginet
