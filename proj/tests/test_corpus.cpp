#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "leginet/corpus.hpp"
#include "leginet/util.hpp"

using namespace leginet;
namespace fs = std::filesystem;

namespace {

fs::path make_temp_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("load_corpus orders documents lexicographically by path") {
    auto dir = make_temp_dir("leginet_corpus_order");
    write_file(dir / "b.txt", "beta text");
    write_file(dir / "a.txt", "alpha text");
    auto load = load_corpus(dir);
    REQUIRE(load.documents.size() == 2);
    CHECK(load.documents[0].doc_id == "a");
    CHECK(load.documents[1].doc_id == "b");
    CHECK(load.warnings.empty());
}

TEST_CASE("load_corpus on an empty directory yields an empty list") {
    auto dir = make_temp_dir("leginet_corpus_empty");
    auto load = load_corpus(dir);
    CHECK(load.documents.empty());
}

TEST_CASE("load_corpus skips unreadable files with a warning") {
    auto dir = make_temp_dir("leginet_corpus_bad");
    write_file(dir / "a.txt", "one");
    write_file(dir / "c.txt", "three");
    fs::create_directories(dir / "b.txt");  // opens fail: it is a directory
    auto load = load_corpus(dir);
    CHECK(load.documents.size() == 2);
    CHECK(load.warnings.size() == 1);
}

TEST_CASE("load_corpus is deterministic") {
    auto dir = make_temp_dir("leginet_corpus_det");
    write_file(dir / "x.txt", "xx");
    write_file(dir / "y.txt", "yy");
    auto a = load_corpus(dir);
    auto b = load_corpus(dir);
    REQUIRE(a.documents.size() == b.documents.size());
    for (size_t i = 0; i < a.documents.size(); ++i) {
        CHECK(a.documents[i].doc_id == b.documents[i].doc_id);
        CHECK(a.documents[i].body == b.documents[i].body);
    }
}

TEST_CASE("manifest overrides doc_id and year") {
    auto dir = make_temp_dir("leginet_corpus_manifest");
    write_file(dir / "a.txt", "body");
    write_file(dir / "manifest.tsv", "doc-a\ta.txt\t1901\n");
    auto load = load_corpus(dir, dir / "manifest.tsv");
    REQUIRE(load.documents.size() == 1);
    CHECK(load.documents[0].doc_id == "doc-a");
    CHECK(load.documents[0].year == 1901);
}

TEST_CASE("infer_metadata extracts the hint and trailing year") {
    auto [hint, year] = infer_metadata("Married_Women_Property_Protection_Act_1860.txt");
    CHECK(hint == "married women property protection act 1860");
    CHECK(year == 1860);

    auto [hint2, year2] = infer_metadata("notes.txt");
    CHECK(hint2 == "notes");
    CHECK_FALSE(year2.has_value());

    auto [hint3, year3] = infer_metadata("Act_1987_v2.txt");
    CHECK(hint3 == "act 1987 v2");
    CHECK(year3 == 1987);
}

TEST_CASE("load_master_list canonicalizes and numbers lines") {
    auto dir = make_temp_dir("leginet_master");
    write_file(dir / "master.txt", "Trade Marks  Act 2002\nCompanies Act 1993\n");
    auto master = load_master_list(dir / "master.txt");
    REQUIRE(master.size() == 2);
    CHECK(master.at(0).node_id == 0);
    CHECK(master.at(0).canonical_title == "trade marks act 2002");
    CHECK(master.at(0).year == 2002);
    CHECK(master.at(1).node_id == 1);
    CHECK(master.at(1).canonical_title == "companies act 1993");
}

TEST_CASE("load_master_list: empty file gives an empty list") {
    auto dir = make_temp_dir("leginet_master_empty");
    write_file(dir / "master.txt", "\n\n");
    CHECK(load_master_list(dir / "master.txt").empty());
}

TEST_CASE("load_master_list rejects duplicates naming the line") {
    auto dir = make_temp_dir("leginet_master_dup");
    write_file(dir / "master.txt", "Same Act 1900\nsame  ACT 1900\n");
    CHECK_THROWS_WITH_AS(load_master_list(dir / "master.txt"),
                         doctest::Contains("line 2"), DataError);
}

TEST_CASE("node ids equal positions and years come from titles") {
    auto master = load_master_list(LEGINET_DATA_DIR "/golden/master_list.txt");
    for (size_t i = 0; i < master.size(); ++i) {
        CHECK(master.at(i).node_id == static_cast<int>(i));
        auto [hint, year] = infer_metadata(master.at(i).canonical_title + ".txt");
        CHECK(hint == master.at(i).canonical_title);
        CHECK(year == master.at(i).year);
    }
}

TEST_CASE("annotations referencing unknown titles are fatal") {
    auto dir = make_temp_dir("leginet_ann_bad");
    write_file(dir / "m.txt", "Known Act 1900\n");
    auto master = load_master_list(dir / "m.txt");
    fs::create_directories(dir / "ann");
    write_file(dir / "ann" / "d.json",
               R"({"doc_id":"d","entities":[{"surface":"x","canonical":"unknown act 1875"}]})");
    CHECK_THROWS_AS(load_annotations(dir / "ann", master), DataError);
}

TEST_CASE("annotations load entities, relations and misses") {
    auto dir = make_temp_dir("leginet_ann_ok");
    write_file(dir / "m.txt", "Known Act 1900\n");
    auto master = load_master_list(dir / "m.txt");
    fs::create_directories(dir / "ann");
    write_file(dir / "ann" / "d.json", R"({
        "doc_id": "d",
        "entities": [{"surface": "known act 1900", "canonical": "known act 1900"}],
        "relations": [{"type": "CIT", "target": "known act 1900"}],
        "misses": [{"canonical": "known act 1900", "cause": "typo"}]
    })");
    auto anns = load_annotations(dir / "ann", master);
    REQUIRE(anns.count("d") == 1);
    CHECK(anns["d"].entities.size() == 1);
    CHECK(anns["d"].relations.size() == 1);
    CHECK(anns["d"].misses.at(0).cause == "typo");
}

}  // TEST_SUITE
