#include <doctest.h>

#include <cmath>

#include "leginet/graphgen.hpp"
#include "leginet/metrics.hpp"
#include "oracles.hpp"

using namespace leginet;

namespace {

Digraph path3() { return Digraph(3, {{0, 1}, {1, 2}}); }

Digraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) edges.emplace_back(u, v);
    return Digraph(n, edges);
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("average degree reproduces the reference ratios") {
    CHECK(std::round(average_degree(16385, 137751) * 1000.0) / 1000.0 == doctest::Approx(8.407));
    CHECK(std::round(average_degree(16199, 130969) * 1000.0) / 1000.0 == doctest::Approx(8.085));
    CHECK(average_degree(0, 0) == 0.0);
}

TEST_CASE("average degree times node count equals edge count") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        auto g = oracles::random_digraph(20, rng);
        LegislationNetwork net;
        for (int v = 0; v < g.num_nodes(); ++v) net.nodes.push_back({v, "t", 1900});
        for (auto [u, v] : g.edge_list()) net.edges.push_back({u, v, RelationType::CIT, 1900});
        CHECK(average_degree(net) * static_cast<double>(net.num_nodes()) ==
              doctest::Approx(static_cast<double>(net.num_edges())));
    }
}

TEST_CASE("directed clustering on canonical graphs") {
    CHECK(directed_clustering(complete(4)) == doctest::Approx(1.0));
    CHECK(directed_clustering(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})) == doctest::Approx(0.5));
    CHECK(directed_clustering(Digraph(5, {})) == 0.0);
}

TEST_CASE("directed clustering equals the dense-cube oracle") {
    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        auto g = oracles::random_digraph(20, rng);
        CHECK(directed_clustering(g) == doctest::Approx(oracles::clustering_cube(g)).epsilon(1e-9));
    }
}

TEST_CASE("path stats on canonical graphs") {
    auto ps = path_stats(path3());
    CHECK(ps.avg_path_length == doctest::Approx(4.0 / 3.0));
    CHECK(ps.diameter == 2);

    auto single = path_stats(Digraph(2, {{0, 1}}));
    CHECK(single.avg_path_length == doctest::Approx(1.0));
    CHECK(single.diameter == 1);

    auto none = path_stats(Digraph(4, {}));
    CHECK(none.avg_path_length == 0.0);
    CHECK(none.diameter == 0);
}

TEST_CASE("path stats equal Floyd-Warshall") {
    Rng rng(9);
    for (int i = 0; i < 60; ++i) {
        auto g = oracles::random_digraph(20, rng);
        auto got = path_stats(g);
        auto want = oracles::floyd_warshall(g);
        CHECK(got.diameter == want.diameter);
        CHECK(got.avg_path_length == doctest::Approx(want.avg).epsilon(1e-12));
    }
}

TEST_CASE("katz prestige basics") {
    auto scores = katz_prestige(Digraph(4, {}));
    for (double s : scores) CHECK(s == doctest::Approx(1.0));

    auto two = katz_prestige(Digraph(2, {{0, 1}}), 0.1);
    CHECK(two[0] == doctest::Approx(1.0));
    CHECK(two[1] == doctest::Approx(1.1));

    std::vector<std::pair<int, int>> spokes;
    for (int v = 1; v <= 6; ++v) spokes.emplace_back(v, 0);
    auto star = katz_prestige(Digraph(7, spokes));
    for (int v = 1; v <= 6; ++v) CHECK(star[0] > star[static_cast<size_t>(v)]);
}

TEST_CASE("katz argmax is invariant under rescaling the constant term") {
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
        auto g = oracles::random_digraph(15, rng);
        auto a = katz_prestige(g, 0.05, 1e-12, 2000, 1.0);
        auto b = katz_prestige(g, 0.05, 1e-12, 2000, 7.5);
        size_t arg_a = std::max_element(a.begin(), a.end()) - a.begin();
        size_t arg_b = std::max_element(b.begin(), b.end()) - b.begin();
        CHECK(arg_a == arg_b);
        CHECK(b[arg_b] == doctest::Approx(7.5 * a[arg_a]).epsilon(1e-6));
    }
}

TEST_CASE("katz scores never decrease when an in-edge is added") {
    Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        auto g = oracles::random_digraph(12, rng);
        auto edges = g.edge_list();
        int u = -1, v = -1;
        for (int a = 0; a < g.num_nodes() && u < 0; ++a) {
            for (int b = 0; b < g.num_nodes(); ++b) {
                if (a != b && !g.has_edge(a, b)) {
                    u = a;
                    v = b;
                    break;
                }
            }
        }
        if (u < 0) continue;
        auto before = katz_prestige(g, 0.04, 1e-12, 2000);
        edges.emplace_back(u, v);
        auto after = katz_prestige(Digraph(g.num_nodes(), edges), 0.04, 1e-12, 2000);
        for (size_t k = 0; k < before.size(); ++k) CHECK(after[k] >= before[k] - 1e-9);
    }
}

TEST_CASE("betweenness on canonical graphs") {
    auto bc = betweenness(path3());
    CHECK(bc[0] == 0.0);
    CHECK(bc[1] == doctest::Approx(1.0));
    CHECK(bc[2] == 0.0);

    for (double v : betweenness(Digraph(5, {}))) CHECK(v == 0.0);
    for (double v : betweenness(complete(5))) CHECK(v == 0.0);
}

TEST_CASE("betweenness equals exhaustive path enumeration") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        auto g = oracles::random_digraph(14, rng);
        auto got = betweenness(g);
        auto want = oracles::brute_betweenness(g);
        for (size_t v = 0; v < got.size(); ++v) {
            CHECK(got[v] == doctest::Approx(want[v]).epsilon(1e-9));
        }
    }
}

TEST_CASE("in-degree centrality counts unique in-edges") {
    auto x = in_degree_centrality(Digraph(3, {{0, 1}, {2, 1}}));
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 2.0);
    CHECK(x[2] == 0.0);

    for (double v : in_degree_centrality(Digraph(3, {}))) CHECK(v == 0.0);

    // duplicate pairs collapse on construction
    auto dup = in_degree_centrality(Digraph(2, {{0, 1}, {0, 1}, {0, 1}}));
    CHECK(dup[1] == 1.0);
}

TEST_CASE("small-world sigma is about 1 on a random graph") {
    Rng rng(41);
    auto g = gnm_random_digraph(500, 2500, rng);
    double sigma = small_world_sigma(g, 20, 99);
    CHECK(sigma > 0.7);
    CHECK(sigma < 1.3);
}

TEST_CASE("a rewired lattice is small-world (sigma above 1)") {
    Rng rng(43);
    auto g = watts_strogatz_digraph(300, 6, 0.1, rng);
    CHECK(small_world_sigma(g, 15, 7) > 1.0);
}

TEST_CASE("sigma rejects edgeless graphs and fixed seeds reproduce bit-for-bit") {
    CHECK_THROWS_AS(small_world_sigma(Digraph(5, {}), 10, 1), std::invalid_argument);
    Rng rng(47);
    auto g = gnm_random_digraph(80, 400, rng);
    CHECK(small_world_sigma(g, 10, 5) == small_world_sigma(g, 10, 5));
}

TEST_CASE("frequent terms rank topical words") {
    LegislationNetwork net;
    net.nodes = {{0, "land transfer act 1908", 1908},
                 {1, "land act 1924", 1924},
                 {2, "land drainage act 1904", 1904},
                 {3, "mining act 1926", 1926}};
    std::vector<std::pair<int, double>> scores{{0, 9.0}, {1, 8.0}, {2, 7.0}, {3, 6.0}};
    auto terms = frequent_terms(net, scores, 3);
    REQUIRE_FALSE(terms.empty());
    CHECK(terms[0].first == "land");
    CHECK(terms[0].second == 3);

    CHECK(frequent_terms(net, scores, 0).empty());

    // tie counts sort lexicographically
    auto all = frequent_terms(net, scores, 4);
    for (size_t i = 1; i < all.size(); ++i) {
        if (all[i - 1].second == all[i].second) CHECK(all[i - 1].first < all[i].first);
    }
}

TEST_CASE("metrics rows match table layout with one row per snapshot") {
    LegislationNetwork net;
    net.nodes = {{0, "a act 1850", 1850}, {1, "b act 1900", 1900}, {2, "c act 2000", 2000}};
    net.edges = {{1, 0, RelationType::CIT, 1900}, {2, 1, RelationType::CIT, 2000}};
    MetricsOptions opts;
    opts.snapshot_years = {1850, 1900, 2018};
    opts.sigma_samples = 5;
    auto rows = compute_metrics(net, opts);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n_nodes == 1);
    CHECK(rows[0].n_edges == 0);
    CHECK(rows[2].n_nodes == 3);
    CHECK(rows[2].n_edges == 2);
    auto csv = metrics_csv(rows);
    CHECK(csv.find("snapshot,nodes,edges") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}

}  // TEST_SUITE
