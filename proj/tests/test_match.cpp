#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "leginet/match.hpp"
#include "leginet/util.hpp"
#include "oracles.hpp"

using namespace leginet;

namespace {

MasterList make_master(const std::vector<std::string>& titles) {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "leginet_match_master.txt";
    std::ofstream out(p);
    for (const auto& t : titles) out << t << "\n";
    out.close();
    return load_master_list(p);
}

// Full-scan reference: first argmin edit distance and first argmax Jaccard,
// then Algorithm 1's decision rule, with no early exit at all.
MatchResult full_scan_reference(const std::string& surface, const MasterList& master,
                                const MatchConfig& cfg) {
    MatchResult res;
    if (master.empty()) return res;
    int y1 = 1 << 30, i2 = -1;
    double x1 = -1.0;
    int i1 = -1;
    for (const auto& e : master.entries()) {
        int n = oracles::edit_distance_matrix(surface, e.canonical_title);
        double m = jaccard_similarity(surface, e.canonical_title);
        if (n < y1) {
            y1 = n;
            i2 = e.node_id;
        }
        if (m > x1) {
            x1 = m;
            i1 = e.node_id;
        }
    }
    res.edit_dist = y1;
    res.jaccard = x1;
    res.scanned = static_cast<int>(master.size());
    if (y1 <= cfg.edit_threshold) {
        res.entry_id = i2;
        res.method = MatchMethod::exact_edit;
    } else if (x1 > cfg.jaccard_floor) {
        res.entry_id = i1;
        res.method = MatchMethod::jaccard;
    }
    return res;
}

}  // namespace

TEST_SUITE("match") {

TEST_CASE("edit_distance basics") {
    CHECK(edit_distance("abc", "abc") == 0);
    CHECK(edit_distance("kitten", "sitting") == 3);
    CHECK(edit_distance("", "act") == 3);
}

TEST_CASE("edit_distance agrees with the DP-matrix reference") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        auto a = oracles::random_string(40, rng);
        auto b = oracles::random_string(40, rng);
        CHECK(edit_distance(a, b) == oracles::edit_distance_matrix(a, b));
    }
}

TEST_CASE("edit_distance is a metric") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto a = oracles::random_string(40, rng);
        auto b = oracles::random_string(40, rng);
        auto c = oracles::random_string(40, rng);
        int ab = edit_distance(a, b), ba = edit_distance(b, a);
        CHECK(ab == ba);
        CHECK((ab == 0) == (a == b));
        CHECK(edit_distance(a, c) <= ab + edit_distance(b, c));
    }
}

TEST_CASE("jaccard_similarity basics") {
    CHECK(jaccard_similarity("trade marks act 2002", "trade marks act 2002") == 1.0);
    CHECK(jaccard_similarity("trade marks act 2002", "trade marks amendment act 2005") ==
          doctest::Approx(0.5));
    CHECK(jaccard_similarity("a b", "c d") == 0.0);
    CHECK(jaccard_similarity("", "") == 1.0);
}

TEST_CASE("jaccard_similarity is symmetric, bounded, and 1 iff equal token sets") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        std::string a, b;
        for (int w = 0; w < 4; ++w) {
            a += oracles::random_string(5, rng) + " ";
            b += oracles::random_string(5, rng) + " ";
        }
        double ab = jaccard_similarity(a, b);
        CHECK(ab == jaccard_similarity(b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK((ab == 1.0) == (token_set(a) == token_set(b)));
    }
}

TEST_CASE("the worked noisy-title example resolves to the right act") {
    auto master = make_master({
        "Police Magistrates Ordinance 1841",
        "Customs Tariff Act 1873",
        "Married Women Property Protection Act 1860",
        "Mining Act 1926",
        "Social Security Act 2018",
    });
    auto res = hybrid_match("married vomens propertyprotectio act 1860", master);
    REQUIRE(res.entry_id.has_value());
    CHECK(master.at(static_cast<size_t>(*res.entry_id)).canonical_title ==
          "married women property protection act 1860");
    CHECK(res.method == MatchMethod::exact_edit);
    CHECK(res.edit_dist <= 5);
}

TEST_CASE("an exact title exits early with zero distance") {
    auto master = make_master({"Aaa Act 1900", "Bbb Act 1910", "Ccc Act 1920"});
    auto res = hybrid_match("bbb act 1910", master);
    REQUIRE(res.entry_id == 1);
    CHECK(res.edit_dist == 0);
    CHECK(res.early_exit);
    CHECK(res.scanned == 2);
}

TEST_CASE("hopeless surfaces with a zero floor stay unmatched") {
    auto master = make_master({"Trade Marks Act 2002"});
    auto res = hybrid_match("zzz qqq", master);
    CHECK(res.method == MatchMethod::none);
    CHECK_FALSE(res.entry_id.has_value());
}

TEST_CASE("empty master list yields no match") {
    MasterList empty;
    CHECK(hybrid_match("anything", empty).method == MatchMethod::none);
}

TEST_CASE("batch_match keeps order, counts methods, and is deterministic") {
    auto master = make_master({"Aaa Act 1900", "Bbb Act 1910"});
    CHECK(batch_match({}, master).results.empty());

    std::vector<std::string> surfaces{"aaa act 1900", "bbb act 1910", "zzz qqq www eee rrr ttt"};
    auto batch = batch_match(surfaces, master);
    REQUIRE(batch.results.size() == 3);
    CHECK(batch.summary.exact_edit == 2);
    CHECK(batch.summary.none == 1);

    auto again = batch_match({"aaa act 1900", "aaa act 1900"}, master);
    CHECK(again.results[0].entry_id == again.results[1].entry_id);
    CHECK(again.results[0].edit_dist == again.results[1].edit_dist);
}

TEST_CASE("full scan (exit sentinel 1.01) equals the brute-force reference") {
    Rng rng(17);
    MatchConfig cfg;
    cfg.jaccard_exit = 1.01;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::string> titles;
        size_t list_len = 3 + rng.below(30);
        for (size_t i = 0; i < list_len; ++i) {
            std::string t;
            size_t words = 2 + rng.below(4);
            for (size_t w = 0; w < words; ++w) t += oracles::random_string(7, rng) + " ";
            t += "act " + std::to_string(1800 + rng.below(200)) + " #" + std::to_string(i);
            titles.push_back(t);
        }
        auto master = make_master(titles);
        for (int q = 0; q < 10; ++q) {
            size_t pick = rng.below(master.size());
            std::string surface = master.at(pick).canonical_title;
            if (rng.unit() < 0.7 && !surface.empty()) {
                surface[rng.below(surface.size())] = 'q';  // light corruption
            }
            auto got = hybrid_match(surface, master, cfg);
            auto want = full_scan_reference(surface, master, cfg);
            CHECK(got.entry_id == want.entry_id);
            CHECK(got.method == want.method);
            CHECK(got.edit_dist == want.edit_dist);
            CHECK(got.jaccard == doctest::Approx(want.jaccard));
        }
    }
}

TEST_CASE("early exit on a zero distance returns that entry") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::string> titles;
        for (int i = 0; i < 10; ++i) {
            titles.push_back(oracles::random_string(8, rng) + " act 19" +
                             std::to_string(10 + i));
        }
        auto master = make_master(titles);
        size_t pick = rng.below(master.size());
        auto res = hybrid_match(master.at(pick).canonical_title, master);
        if (res.early_exit && res.edit_dist == 0) {
            REQUIRE(res.entry_id.has_value());
            CHECK(master.at(static_cast<size_t>(*res.entry_id)).canonical_title ==
                  master.at(pick).canonical_title);
        }
    }
}

}  // TEST_SUITE
