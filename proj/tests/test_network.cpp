#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "leginet/csvio.hpp"
#include "leginet/metrics.hpp"
#include "leginet/network.hpp"
#include "leginet/util.hpp"

using namespace leginet;
namespace fs = std::filesystem;

namespace {

MasterList tiny_master() {
    fs::path p = fs::temp_directory_path() / "leginet_net_master.txt";
    std::ofstream out(p);
    out << "Trade Marks Act 2002\nCompanies Act 1993\nLand Transfer Act 1908\n";
    out.close();
    return load_master_list(p);
}

EntityMention mention(const std::string& doc, const std::string& surface, size_t start,
                      std::optional<int> year) {
    EntityMention m;
    m.doc_id = doc;
    m.surface = surface;
    m.start = start;
    m.end = start + surface.size();
    m.year = year;
    return m;
}

MatchResult matched(int entry) {
    MatchResult r;
    r.entry_id = entry;
    r.method = MatchMethod::exact_edit;
    return r;
}

RelationMention relation(const EntityMention& target, RelationType t,
                         std::optional<int> event_year = {}) {
    RelationMention r;
    r.doc_id = target.doc_id;
    r.rtype = t;
    r.target = target;
    r.event_year = event_year;
    return r;
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("one citation builds two nodes and one edge") {
    auto master = tiny_master();
    DocExtraction doc;
    doc.doc_id = "tm2002";
    doc.year = 2002;
    doc.title_hint = "trade marks act 2002";
    auto m = mention("tm2002", "companies act 1993", 10, 1993);
    doc.mentions = {m};
    doc.match_results = {matched(1)};
    doc.relations = {relation(m, RelationType::CIT)};

    auto result = build_network({doc}, master);
    CHECK(result.network.num_nodes() == 2);
    REQUIRE(result.network.num_edges() == 1);
    const auto& e = result.network.edges[0];
    CHECK(e.src == 0);
    CHECK(e.dst == 1);
    CHECK(e.rtype == RelationType::CIT);
    CHECK(e.ts == 2002);
}

TEST_CASE("self-citations drop as self loops") {
    auto master = tiny_master();
    DocExtraction doc;
    doc.doc_id = "tm2002";
    doc.year = 2002;
    doc.title_hint = "trade marks act 2002";
    auto m = mention("tm2002", "trade marks act 2002", 5, 2002);
    doc.mentions = {m};
    doc.match_results = {matched(0)};
    doc.relations = {relation(m, RelationType::CIT)};

    auto result = build_network({doc}, master);
    CHECK(result.network.num_nodes() == 1);
    CHECK(result.network.num_edges() == 0);
    CHECK(result.stats.self_loops_dropped == 1);
}

TEST_CASE("two citing documents give three nodes and two edges") {
    auto master = tiny_master();
    auto make_doc = [&](const std::string& id, const std::string& hint, int year) {
        DocExtraction doc;
        doc.doc_id = id;
        doc.year = year;
        doc.title_hint = hint;
        auto m = mention(id, "land transfer act 1908", 3, 1908);
        doc.mentions = {m};
        doc.match_results = {matched(2)};
        doc.relations = {relation(m, RelationType::CIT)};
        return doc;
    };
    auto result = build_network(
        {make_doc("tm", "trade marks act 2002", 2002), make_doc("co", "companies act 1993", 1993)},
        master);
    CHECK(result.network.num_nodes() == 3);
    CHECK(result.network.num_edges() == 2);
    CHECK(average_degree(result.network) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("TIT matches pick the source node; event years stamp AMD edges") {
    auto master = tiny_master();
    DocExtraction doc;
    doc.doc_id = "d";
    doc.year = 2002;
    doc.title_hint = "trade marks act 2002";
    auto tit = mention("d", "trade marks act 2002", 0, 2002);
    auto amd = mention("d", "companies act 1993", 50, 1993);
    doc.mentions = {tit, amd};
    doc.match_results = {matched(0), matched(1)};
    doc.relations = {relation(tit, RelationType::TIT), relation(amd, RelationType::AMD, 1993)};

    auto result = build_network({doc}, master);
    REQUIRE(result.network.num_edges() == 1);
    CHECK(result.network.edges[0].rtype == RelationType::AMD);
    CHECK(result.network.edges[0].ts == 1993);  // the amending act's year, not the doc's
}

TEST_CASE("unresolvable documents are skipped with a warning") {
    auto master = tiny_master();
    DocExtraction doc;
    doc.doc_id = "mystery";
    doc.title_hint = "zzz qqq";
    auto result = build_network({doc}, master);
    CHECK(result.network.num_nodes() == 0);
    CHECK(result.stats.docs_skipped == 1);
    CHECK_FALSE(result.stats.warnings.empty());
}

TEST_CASE("duplicate edges collapse unless keep_multiedges") {
    auto master = tiny_master();
    DocExtraction doc;
    doc.doc_id = "d";
    doc.year = 2002;
    doc.title_hint = "trade marks act 2002";
    auto m1 = mention("d", "companies act 1993", 10, 1993);
    auto m2 = mention("d", "companies act 1993", 99, 1993);
    doc.mentions = {m1, m2};
    doc.match_results = {matched(1), matched(1)};
    doc.relations = {relation(m1, RelationType::CIT), relation(m2, RelationType::CIT)};

    auto collapsed = build_network({doc}, master);
    CHECK(collapsed.network.num_edges() == 1);
    CHECK(collapsed.stats.duplicate_edges_collapsed == 1);

    BuildOptions keep;
    keep.keep_multiedges = true;
    CHECK(build_network({doc}, master, keep).network.num_edges() == 2);
}

TEST_CASE("snapshots restrict cumulatively") {
    LegislationNetwork net;
    net.nodes = {{0, "a act 1850", 1850}, {1, "b act 1860", 1860}};
    net.edges = {{1, 0, RelationType::CIT, 1860}};

    auto early = snapshot_at(net, 1855);
    CHECK(early.network.num_nodes() == 1);
    CHECK(early.network.num_edges() == 0);

    auto before = snapshot_at(net, 1700);
    CHECK(before.network.num_nodes() == 0);

    auto full = snapshot_at(net, 1860);
    CHECK(full.network.num_nodes() == 2);
    CHECK(full.network.num_edges() == 1);
}

TEST_CASE("snapshot node and edge counts are nondecreasing in end_year") {
    LegislationNetwork net;
    for (int i = 0; i < 12; ++i) {
        net.nodes.push_back({i, "act " + std::to_string(1850 + 10 * i), 1850 + 10 * i});
    }
    for (int i = 1; i < 12; ++i) {
        net.edges.push_back({i, i - 1, RelationType::CIT, 1850 + 10 * i});
    }
    size_t prev_nodes = 0, prev_edges = 0;
    for (int year = 1840; year <= 1980; year += 7) {
        auto snap = snapshot_at(net, year);
        CHECK(snap.network.num_nodes() >= prev_nodes);
        CHECK(snap.network.num_edges() >= prev_edges);
        prev_nodes = snap.network.num_nodes();
        prev_edges = snap.network.num_edges();
    }
}

TEST_CASE("exports are byte-stable and round-trip") {
    LegislationNetwork net;
    net.nodes = {{0, "a act 1850", 1850}, {1, "b, \"quoted\" act 1860", 1860}};
    net.edges = {{1, 0, RelationType::CIT, 1860}};

    auto dir = (fs::temp_directory_path() / "leginet_export").string();
    fs::remove_all(dir);
    export_network(net, dir, true);
    auto nodes1 = read_text_file(dir + "/nodes.csv");
    auto edges1 = read_text_file(dir + "/edges.csv");
    CHECK(nodes1.substr(0, 19) == "node_id,title,year\n");
    CHECK(csv::parse_row("1,\"b, \"\"quoted\"\" act 1860\",1860")[1] ==
          "b, \"quoted\" act 1860");

    export_network(net, dir, true);
    CHECK(read_text_file(dir + "/nodes.csv") == nodes1);
    CHECK(read_text_file(dir + "/edges.csv") == edges1);
    CHECK(read_text_file(dir + "/graph.gexf").find("<gexf") != std::string::npos);

    auto loaded = load_network(dir + "/nodes.csv", dir + "/edges.csv");
    REQUIRE(loaded.num_nodes() == 2);
    CHECK(loaded.nodes[1].title == "b, \"quoted\" act 1860");
    REQUIRE(loaded.num_edges() == 1);
    CHECK(loaded.edges[0].ts == 1860);
}

TEST_CASE("empty networks export header-only files") {
    LegislationNetwork net;
    auto dir = (fs::temp_directory_path() / "leginet_export_empty").string();
    fs::remove_all(dir);
    export_network(net, dir);
    CHECK(read_text_file(dir + "/nodes.csv") == "node_id,title,year\n");
    CHECK(read_text_file(dir + "/edges.csv") == "src,dst,type,ts\n");
}

TEST_CASE("every exported edge endpoint appears among the nodes") {
    auto master = tiny_master();
    DocExtraction doc;
    doc.doc_id = "d";
    doc.year = 2002;
    doc.title_hint = "trade marks act 2002";
    auto m = mention("d", "land transfer act 1908", 4, 1908);
    doc.mentions = {m};
    doc.match_results = {matched(2)};
    doc.relations = {relation(m, RelationType::CIT)};
    auto net = build_network({doc}, master).network;

    std::set<int> ids;
    for (const auto& n : net.nodes) ids.insert(n.node_id);
    for (const auto& e : net.edges) {
        CHECK(ids.count(e.src));
        CHECK(ids.count(e.dst));
    }
}

}  // TEST_SUITE
