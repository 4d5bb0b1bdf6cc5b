#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leginet/canonicalize.hpp"
#include "leginet/cli.hpp"
#include "leginet/corpus.hpp"
#include "leginet/eval.hpp"
#include "leginet/extract.hpp"
#include "leginet/graph.hpp"
#include "leginet/graphgen.hpp"
#include "leginet/match.hpp"
#include "leginet/metrics.hpp"
#include "leginet/robustness.hpp"

namespace py = pybind11;
using namespace leginet;

PYBIND11_MODULE(_leginet, m) {
    m.doc() = "Legislation network extraction and analysis";

    // ---- canonicalization ----
    py::class_<CanonConfig>(m, "CanonConfig")
        .def_static("defaults", &CanonConfig::defaults)
        .def_static("load", &load_canon_config, py::arg("path"));
    m.def(
        "canonicalize",
        [](const std::string& text, const CanonConfig* cfg) {
            return canonicalize_string(text, cfg ? *cfg : CanonConfig::defaults());
        },
        py::arg("text"), py::arg("config") = nullptr);
    m.def("strip_margin_phrases", &strip_margin_phrases, py::arg("text"), py::arg("phrases"),
          py::arg("max_edit"));

    // ---- corpus ----
    py::class_<MasterEntry>(m, "MasterEntry")
        .def_readonly("node_id", &MasterEntry::node_id)
        .def_readonly("canonical_title", &MasterEntry::canonical_title)
        .def_readonly("year", &MasterEntry::year);
    py::class_<MasterList>(m, "MasterList")
        .def("__len__", &MasterList::size)
        .def("entry", &MasterList::at, py::arg("index"), py::return_value_policy::copy)
        .def("titles", [](const MasterList& ml) {
            std::vector<std::string> out;
            for (const auto& e : ml.entries()) out.push_back(e.canonical_title);
            return out;
        });
    m.def("load_master_list",
          [](const std::string& path) { return load_master_list(path); }, py::arg("path"));
    m.def("infer_metadata", &infer_metadata, py::arg("filename"));

    // ---- matching ----
    py::class_<MatchConfig>(m, "MatchConfig")
        .def(py::init<>())
        .def_readwrite("edit_threshold", &MatchConfig::edit_threshold)
        .def_readwrite("jaccard_exit", &MatchConfig::jaccard_exit)
        .def_readwrite("jaccard_floor", &MatchConfig::jaccard_floor);
    py::class_<MatchResult>(m, "MatchResult")
        .def_readonly("entry_id", &MatchResult::entry_id)
        .def_readonly("edit_dist", &MatchResult::edit_dist)
        .def_readonly("jaccard", &MatchResult::jaccard)
        .def_readonly("early_exit", &MatchResult::early_exit)
        .def_readonly("scanned", &MatchResult::scanned)
        .def_property_readonly("method",
                               [](const MatchResult& r) { return std::string(to_string(r.method)); });
    m.def("edit_distance", &edit_distance, py::arg("a"), py::arg("b"));
    m.def("jaccard_similarity", &jaccard_similarity, py::arg("a"), py::arg("b"));
    m.def(
        "hybrid_match",
        [](const std::string& surface, const MasterList& master, const MatchConfig* cfg) {
            return hybrid_match(surface, master, cfg ? *cfg : MatchConfig{});
        },
        py::arg("surface"), py::arg("master"), py::arg("config") = nullptr);

    // ---- extraction ----
    py::class_<RuleSet>(m, "RuleSet");
    m.def("compile_rules", &compile_rules, py::arg("path"));
    py::class_<EntityMention>(m, "EntityMention")
        .def_readonly("doc_id", &EntityMention::doc_id)
        .def_readonly("surface", &EntityMention::surface)
        .def_readonly("start", &EntityMention::start)
        .def_readonly("end", &EntityMention::end)
        .def_readonly("year", &EntityMention::year)
        .def_readonly("rule_id", &EntityMention::rule_id);
    py::class_<RelationMention>(m, "RelationMention")
        .def_readonly("doc_id", &RelationMention::doc_id)
        .def_readonly("target", &RelationMention::target)
        .def_readonly("event_year", &RelationMention::event_year)
        .def_readonly("rule_id", &RelationMention::rule_id)
        .def_property_readonly(
            "type", [](const RelationMention& r) { return std::string(to_string(r.rtype)); });
    m.def(
        "extract_entities",
        [](const std::string& canonical_text, const std::string& doc_id,
           std::optional<int> doc_year, const RuleSet& rules) {
            CanonicalText ct;
            ct.doc_id = doc_id;
            ct.text = canonical_text;
            return extract_entities(ct, doc_year, rules);
        },
        py::arg("canonical_text"), py::arg("doc_id"), py::arg("doc_year"), py::arg("rules"));
    m.def(
        "extract_relations",
        [](const std::string& canonical_text, const std::string& doc_id,
           const std::vector<EntityMention>& mentions, const RuleSet& rules) {
            CanonicalText ct;
            ct.doc_id = doc_id;
            ct.text = canonical_text;
            return extract_relations(ct, mentions, rules);
        },
        py::arg("canonical_text"), py::arg("doc_id"), py::arg("mentions"), py::arg("rules"));

    // ---- graphs and metrics ----
    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("num_nodes", &Digraph::num_nodes)
        .def_property_readonly("num_edges", &Digraph::num_edges)
        .def("edge_list", &Digraph::edge_list);
    m.def(
        "gnm_random_digraph",
        [](int n, int m_, uint64_t seed) {
            Rng rng(seed);
            return gnm_random_digraph(n, m_, rng);
        },
        py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def(
        "preferential_attachment_digraph",
        [](int n, int k, uint64_t seed) {
            Rng rng(seed);
            return preferential_attachment_digraph(n, k, rng);
        },
        py::arg("n"), py::arg("edges_per_node"), py::arg("seed"));
    m.def("average_degree",
          [](size_t nodes, size_t edges) { return average_degree(nodes, edges); },
          py::arg("n_nodes"), py::arg("n_edges"));
    m.def("directed_clustering", &directed_clustering, py::arg("graph"));
    m.def(
        "path_stats",
        [](const Digraph& g) {
            auto ps = path_stats(g);
            return py::make_tuple(ps.avg_path_length, ps.diameter);
        },
        py::arg("graph"));
    m.def(
        "katz_prestige",
        [](const Digraph& g, std::optional<double> attenuation) {
            return katz_prestige(g, attenuation);
        },
        py::arg("graph"), py::arg("attenuation") = py::none());
    m.def("betweenness", &betweenness, py::arg("graph"));
    m.def("in_degree_centrality", &in_degree_centrality, py::arg("graph"));
    m.def("small_world_sigma", &small_world_sigma, py::arg("graph"), py::arg("n_random"),
          py::arg("seed"));

    // ---- robustness ----
    m.def(
        "centrality_agreement",
        [](const CentralityVector& orig, const CentralityVector& pert) {
            auto sc = centrality_agreement(orig, pert);
            py::dict d;
            d["top1"] = sc.top1;
            d["top3"] = sc.top3;
            d["top10pct"] = sc.top10pct;
            d["top1_in_top10pct"] = sc.top1_in_top10pct;
            d["pearson"] = sc.pearson ? py::cast(*sc.pearson) : py::none();
            return d;
        },
        py::arg("orig"), py::arg("pert"));

    // ---- evaluation ----
    m.def("precision_recall", &precision_recall, py::arg("alpha"), py::arg("beta"));

    // ---- pipeline ----
    m.def("run_cli", &run_cli, py::arg("args"),
          "Run a CLI subcommand; returns the process exit code.");
}
