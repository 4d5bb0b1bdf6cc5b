#include "leginet/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "leginet/canonicalize.hpp"
#include "leginet/corpus.hpp"
#include "leginet/csvio.hpp"
#include "leginet/eval.hpp"
#include "leginet/extract.hpp"
#include "leginet/log.hpp"
#include "leginet/metrics.hpp"
#include "leginet/network.hpp"
#include "leginet/robustness.hpp"
#include "leginet/util.hpp"

namespace fs = std::filesystem;

namespace leginet {

namespace {

void require_artifact(const std::string& path, const std::string& producing_stage) {
    if (!fs::exists(path)) {
        throw ConfigError("missing artifact " + path + "; run the '" + producing_stage +
                          "' stage first");
    }
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : threads) th.join();
}

CanonConfig resolve_canon_config(const PipelineConfig& cfg) {
    if (cfg.canon_config_path.empty()) return CanonConfig::defaults();
    return load_canon_config(cfg.canon_config_path);
}

struct DocMeta {
    std::string doc_id;
    std::string source_path;
    std::optional<int> year;
    std::string title_hint;
};

std::vector<DocMeta> load_docs_tsv(const std::string& path) {
    require_artifact(path, "canonicalize");
    std::vector<DocMeta> out;
    auto lns = csv::lines(read_text_file(path));
    for (size_t i = 1; i < lns.size(); ++i) {
        auto f = split_on(lns[i], '\t');
        if (f.size() != 4) throw DataError("bad docs.tsv row: " + lns[i]);
        DocMeta d;
        d.doc_id = f[0];
        d.source_path = f[1];
        if (!f[2].empty()) d.year = std::stoi(f[2]);
        d.title_hint = f[3];
        out.push_back(std::move(d));
    }
    return out;
}

struct MentionRow {
    std::string mention_id;
    EntityMention mention;
};

std::vector<MentionRow> load_mentions_csv(const std::string& path) {
    require_artifact(path, "extract");
    std::vector<MentionRow> out;
    auto lns = csv::lines(read_text_file(path));
    for (size_t i = 1; i < lns.size(); ++i) {
        auto f = csv::parse_row(lns[i]);
        if (f.size() != 7) throw DataError("bad mentions.csv row: " + lns[i]);
        MentionRow r;
        r.mention_id = f[0];
        r.mention.doc_id = f[1];
        r.mention.start = static_cast<size_t>(std::stoull(f[2]));
        r.mention.end = static_cast<size_t>(std::stoull(f[3]));
        r.mention.surface = f[4];
        if (!f[5].empty()) r.mention.year = std::stoi(f[5]);
        r.mention.rule_id = f[6];
        out.push_back(std::move(r));
    }
    return out;
}

struct RelationRow {
    std::string doc_id;
    std::string rtype;
    std::string mention_id;
    std::optional<int> event_year;
    std::string rule_id;
};

std::vector<RelationRow> load_relations_csv(const std::string& path) {
    require_artifact(path, "extract");
    std::vector<RelationRow> out;
    auto lns = csv::lines(read_text_file(path));
    for (size_t i = 1; i < lns.size(); ++i) {
        auto f = csv::parse_row(lns[i]);
        if (f.size() != 5) throw DataError("bad relations.csv row: " + lns[i]);
        RelationRow r;
        r.doc_id = f[0];
        r.rtype = f[1];
        r.mention_id = f[2];
        if (!f[3].empty()) r.event_year = std::stoi(f[3]);
        r.rule_id = f[4];
        out.push_back(std::move(r));
    }
    return out;
}

struct MatchRow {
    std::string mention_id;
    MatchResult result;
};

std::vector<MatchRow> load_matches_csv(const std::string& path) {
    require_artifact(path, "match");
    std::vector<MatchRow> out;
    auto lns = csv::lines(read_text_file(path));
    for (size_t i = 1; i < lns.size(); ++i) {
        auto f = csv::parse_row(lns[i]);
        if (f.size() != 11) throw DataError("bad matches.csv row: " + lns[i]);
        MatchRow r;
        r.mention_id = f[0];
        r.result.method = match_method_from_string(f[5]);
        if (!f[6].empty()) r.result.entry_id = std::stoi(f[6]);
        r.result.edit_dist = std::stoi(f[8]);
        r.result.jaccard = std::stod(f[9]);
        r.result.early_exit = f[10] == "1";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

namespace stages {

void canonicalize(const PipelineConfig& cfg) {
    if (cfg.corpus_dir.empty()) throw ConfigError("canonicalize requires --corpus");
    CanonConfig canon = resolve_canon_config(cfg);
    std::optional<fs::path> manifest;
    if (!cfg.manifest_path.empty()) manifest = cfg.manifest_path;
    CorpusLoad corpus = load_corpus(cfg.corpus_dir, manifest);

    fs::create_directories(cfg.out_dir + "/canonical");
    std::vector<std::string> texts(corpus.documents.size());
    parallel_for(corpus.documents.size(), cfg.jobs, [&](size_t i) {
        texts[i] = canonicalize_text(corpus.documents[i], canon).text;
    });

    std::string tsv = "doc_id\tsource_path\tyear\ttitle_hint\n";
    for (size_t i = 0; i < corpus.documents.size(); ++i) {
        const auto& d = corpus.documents[i];
        write_text_file(cfg.out_dir + "/canonical/" + d.doc_id + ".txt", texts[i]);
        tsv += d.doc_id + "\t" + d.source_path + "\t" +
               (d.year ? std::to_string(*d.year) : "") + "\t" + d.title_hint + "\n";
    }
    write_text_file(cfg.out_dir + "/canonical/docs.tsv", tsv);
    log::info("canonicalize: " + std::to_string(corpus.documents.size()) + " documents");
}

void extract(const PipelineConfig& cfg) {
    if (cfg.rules_path.empty()) throw ConfigError("extract requires --rules");
    RuleSet rules = compile_rules(cfg.rules_path);
    auto docs = load_docs_tsv(cfg.out_dir + "/canonical/docs.tsv");

    std::vector<std::vector<EntityMention>> mentions(docs.size());
    std::vector<std::vector<RelationMention>> relations(docs.size());
    parallel_for(docs.size(), cfg.jobs, [&](size_t i) {
        CanonicalText ct;
        ct.doc_id = docs[i].doc_id;
        ct.text = read_text_file(cfg.out_dir + "/canonical/" + docs[i].doc_id + ".txt");
        mentions[i] = extract_entities(ct, docs[i].year, rules);
        relations[i] = extract_relations(ct, mentions[i], rules);
    });

    fs::create_directories(cfg.out_dir + "/extract");
    std::string mcsv = "mention_id,doc_id,start,end,surface,year,rule_id\n";
    std::string rcsv = "doc_id,type,mention_id,event_year,rule_id\n";
    size_t total_mentions = 0, total_relations = 0;
    for (size_t i = 0; i < docs.size(); ++i) {
        std::map<std::pair<size_t, size_t>, std::string> id_by_span;
        for (size_t k = 0; k < mentions[i].size(); ++k) {
            const auto& m = mentions[i][k];
            std::string mid = m.doc_id + "#" + std::to_string(k);
            id_by_span[{m.start, m.end}] = mid;
            mcsv += csv::row({mid, m.doc_id, std::to_string(m.start), std::to_string(m.end),
                              csv::quote(m.surface, true),
                              m.year ? std::to_string(*m.year) : "", m.rule_id});
            ++total_mentions;
        }
        for (const auto& r : relations[i]) {
            rcsv += csv::row({r.doc_id, std::string(to_string(r.rtype)),
                              id_by_span.at({r.target.start, r.target.end}),
                              r.event_year ? std::to_string(*r.event_year) : "", r.rule_id});
            ++total_relations;
        }
    }
    write_text_file(cfg.out_dir + "/extract/mentions.csv", mcsv);
    write_text_file(cfg.out_dir + "/extract/relations.csv", rcsv);
    log::info("extract: " + std::to_string(total_mentions) + " mentions, " +
              std::to_string(total_relations) + " relations");
}

void match(const PipelineConfig& cfg) {
    if (cfg.master_path.empty()) throw ConfigError("match requires --master");
    MasterList master = load_master_list(cfg.master_path);
    auto mention_rows = load_mentions_csv(cfg.out_dir + "/extract/mentions.csv");

    std::vector<std::string> surfaces;
    surfaces.reserve(mention_rows.size());
    for (const auto& r : mention_rows) surfaces.push_back(r.mention.surface);
    BatchMatch batch = batch_match(surfaces, master, cfg.match_cfg);

    fs::create_directories(cfg.out_dir + "/match");
    std::string out =
        "mention_id,doc_id,surface,start,end,method,node_id,matched_title,edit_dist,jaccard,"
        "early_exit\n";
    for (size_t i = 0; i < mention_rows.size(); ++i) {
        const auto& m = mention_rows[i].mention;
        const auto& r = batch.results[i];
        out += csv::row({mention_rows[i].mention_id, m.doc_id, csv::quote(m.surface, true),
                         std::to_string(m.start), std::to_string(m.end),
                         std::string(to_string(r.method)),
                         r.entry_id ? std::to_string(*r.entry_id) : "",
                         r.entry_id ? csv::quote(master.at(static_cast<size_t>(*r.entry_id))
                                                     .canonical_title,
                                                 true)
                                    : "\"\"",
                         std::to_string(r.edit_dist), fmt_double(r.jaccard, 6),
                         r.early_exit ? "1" : "0"});
    }
    write_text_file(cfg.out_dir + "/match/matches.csv", out);

    nlohmann::json summary;
    summary["exact_edit"] = batch.summary.exact_edit;
    summary["jaccard"] = batch.summary.jaccard;
    summary["none"] = batch.summary.none;
    summary["matched"] = batch.summary.exact_edit + batch.summary.jaccard;
    summary["total"] = mention_rows.size();
    write_text_file(cfg.out_dir + "/match/summary.json", summary.dump(2) + "\n");
    log::info("match: " + std::to_string(batch.summary.exact_edit + batch.summary.jaccard) +
              "/" + std::to_string(mention_rows.size()) + " resolved");
}

namespace {

std::vector<DocExtraction> assemble_docs(const PipelineConfig& cfg, const MasterList& master) {
    auto docs = load_docs_tsv(cfg.out_dir + "/canonical/docs.tsv");
    auto mention_rows = load_mentions_csv(cfg.out_dir + "/extract/mentions.csv");
    auto relation_rows = load_relations_csv(cfg.out_dir + "/extract/relations.csv");
    auto match_rows = load_matches_csv(cfg.out_dir + "/match/matches.csv");
    if (match_rows.size() != mention_rows.size()) {
        throw DataError("matches.csv and mentions.csv disagree; re-run the match stage");
    }

    std::map<std::string, size_t> doc_index;
    std::vector<DocExtraction> out;
    for (const auto& d : docs) {
        DocExtraction x;
        x.doc_id = d.doc_id;
        x.year = d.year;
        x.title_hint = d.title_hint;
        doc_index[d.doc_id] = out.size();
        out.push_back(std::move(x));
    }
    std::map<std::string, EntityMention> mention_by_id;
    for (size_t i = 0; i < mention_rows.size(); ++i) {
        const auto& row = mention_rows[i];
        auto it = doc_index.find(row.mention.doc_id);
        if (it == doc_index.end()) throw DataError("mention for unknown doc: " + row.mention.doc_id);
        out[it->second].mentions.push_back(row.mention);
        out[it->second].match_results.push_back(match_rows[i].result);
        mention_by_id[row.mention_id] = row.mention;
    }
    for (const auto& r : relation_rows) {
        auto it = doc_index.find(r.doc_id);
        if (it == doc_index.end()) throw DataError("relation for unknown doc: " + r.doc_id);
        RelationMention rel;
        rel.doc_id = r.doc_id;
        rel.rtype = relation_type_from_string(r.rtype);
        rel.target = mention_by_id.at(r.mention_id);
        rel.event_year = r.event_year;
        rel.rule_id = r.rule_id;
        out[it->second].relations.push_back(std::move(rel));
    }
    (void)master;
    return out;
}

}  // namespace

void build(const PipelineConfig& cfg) {
    if (cfg.master_path.empty()) throw ConfigError("build requires --master");
    MasterList master = load_master_list(cfg.master_path);
    auto docs = assemble_docs(cfg, master);

    BuildOptions options;
    options.keep_multiedges = cfg.keep_multiedges;
    options.match_cfg = cfg.match_cfg;
    BuildResult result = build_network(docs, master, options);
    export_network(result.network, cfg.out_dir + "/network", cfg.gexf);
    log::info("build: " + std::to_string(result.network.num_nodes()) + " nodes, " +
              std::to_string(result.network.num_edges()) + " edges (" +
              std::to_string(result.stats.docs_skipped) + " docs skipped)");
}

void metrics(const PipelineConfig& cfg) {
    require_artifact(cfg.out_dir + "/network/nodes.csv", "build");
    LegislationNetwork net =
        load_network(cfg.out_dir + "/network/nodes.csv", cfg.out_dir + "/network/edges.csv");
    MetricsOptions options;
    options.snapshot_years = cfg.snapshot_years;
    options.sigma_samples = cfg.sigma_samples;
    options.seed = cfg.seed;
    auto rows = compute_metrics(net, options);
    fs::create_directories(cfg.out_dir + "/metrics");
    write_text_file(cfg.out_dir + "/metrics/metrics.csv", metrics_csv(rows));
    write_text_file(cfg.out_dir + "/metrics/metrics.json", metrics_json(rows));
    log::info("metrics: " + std::to_string(rows.size()) + " rows");
}

void robustness(const PipelineConfig& cfg) {
    require_artifact(cfg.out_dir + "/network/nodes.csv", "build");
    LegislationNetwork net =
        load_network(cfg.out_dir + "/network/nodes.csv", cfg.out_dir + "/network/edges.csv");
    auto [g, node_ids] = net.to_digraph();
    fs::create_directories(cfg.out_dir + "/robustness");

    std::string removal = "mode,fraction,mean_diameter,mean_avg_path_length,reps\n";
    for (RemovalMode mode : {RemovalMode::failure, RemovalMode::attack}) {
        RemovalPlan plan;
        plan.mode = mode;
        plan.fractions = cfg.node_fractions;
        plan.reps = cfg.node_reps;
        plan.seed = cfg.seed;
        for (const auto& row : node_removal_experiment(g, plan)) {
            removal += std::string(to_string(row.mode)) + "," + fmt_double(row.fraction, 4) +
                       "," + fmt_double(row.mean_diameter, 4) + "," +
                       fmt_double(row.mean_avg_path_length, 4) + "," + std::to_string(row.reps) +
                       "\n";
        }
    }
    write_text_file(cfg.out_dir + "/robustness/node_removal.csv", removal);

    EdgeDeletionParams params;
    params.levels = cfg.edge_levels;
    params.reps = cfg.edge_reps;
    params.seed = cfg.seed;
    std::string stability =
        "level,measure,top1,top3,top10pct,top1_in_top10pct,pearson,reps\n";
    for (const auto& r : edge_deletion_experiment(g, params)) {
        stability += fmt_double(r.fraction, 4) + "," + std::string(to_string(r.measure)) + "," +
                     fmt_double(r.top1_retention, 4) + "," + fmt_double(r.top3_overlap, 4) +
                     "," + fmt_double(r.top10pct_overlap, 4) + "," +
                     fmt_double(r.top1_in_top10pct, 4) + "," +
                     (r.pearson ? fmt_double(*r.pearson, 4) : std::string("NA")) + "," +
                     std::to_string(r.reps) + "\n";
    }
    write_text_file(cfg.out_dir + "/robustness/edge_stability.csv", stability);
    log::info("robustness: wrote node_removal.csv and edge_stability.csv");
}

void evaluate(const PipelineConfig& cfg) {
    if (cfg.master_path.empty()) throw ConfigError("evaluate requires --master");
    if (cfg.annotations_dir.empty()) throw ConfigError("evaluate requires --annotations");
    MasterList master = load_master_list(cfg.master_path);
    auto annotations = load_annotations(cfg.annotations_dir, master);
    auto docs = assemble_docs(cfg, master);

    std::vector<MatchCluster> clusters;
    std::vector<DocExtractionOutcome> outcomes;
    EvalReport report;
    for (const auto& doc : docs) {
        auto it = annotations.find(doc.doc_id);
        if (it == annotations.end()) continue;
        DocComparison cmp =
            compare_document(it->second, doc.mentions, doc.match_results, doc.relations, master);
        clusters.push_back(cmp.cluster);
        outcomes.push_back(cmp.outcome);
        report.spurious_mentions += cmp.spurious_mentions;
        if (!cmp.entities_exact || !cmp.relations_exact) report.all_exact = false;
        ++report.docs_evaluated;
    }
    if (report.docs_evaluated == 0) {
        throw DataError("no annotated documents found for evaluation");
    }
    auto [alpha1, beta1] = estimate_match_errors(clusters);
    auto [beta2, beta3] = estimate_extraction_errors(outcomes);
    report.errors = combine_errors(alpha1, beta1, beta2, beta3);
    auto [precision, recall] = precision_recall(report.errors.alpha, report.errors.beta);
    report.precision = precision;
    report.recall = recall;

    fs::create_directories(cfg.out_dir + "/eval");
    write_text_file(cfg.out_dir + "/eval/report.json", eval_json(report));
    write_text_file(cfg.out_dir + "/eval/table.csv", eval_csv(report));
    log::info("evaluate: precision " + fmt_double(report.precision, 4) + ", recall " +
              fmt_double(report.recall, 4));
}

void pipeline(const PipelineConfig& cfg) {
    canonicalize(cfg);
    extract(cfg);
    match(cfg);
    build(cfg);
    metrics(cfg);
    robustness(cfg);
    if (!cfg.annotations_dir.empty()) evaluate(cfg);
}

}  // namespace stages

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"leginet: legislation network extraction and analysis"};
    app.fallthrough(true);

    PipelineConfig cfg;
    std::string snapshots_arg, fractions_arg, levels_arg;

    app.add_option("--corpus", cfg.corpus_dir, "Directory of .txt documents");
    app.add_option("--manifest", cfg.manifest_path, "Optional doc_id<TAB>path<TAB>year manifest");
    app.add_option("--master", cfg.master_path, "Master title list, one title per line");
    app.add_option("--rules", cfg.rules_path, "Extraction rules JSON");
    app.add_option("--canon-config", cfg.canon_config_path, "Canonicalization config JSON");
    app.add_option("--annotations", cfg.annotations_dir, "Ground-truth annotations directory");
    app.add_option("--out", cfg.out_dir, "Output directory (default: out)");
    app.add_option("--edit-threshold", cfg.match_cfg.edit_threshold,
                   "Accept edit distances up to this value");
    app.add_option("--jaccard-exit", cfg.match_cfg.jaccard_exit,
                   "Stop scanning once Jaccard reaches this value");
    app.add_option("--jaccard-floor", cfg.match_cfg.jaccard_floor,
                   "Jaccard fallback requires a score strictly above this");
    app.add_option("--snapshots", snapshots_arg, "Comma-separated snapshot end years");
    app.add_option("--seed", cfg.seed, "Seed for every randomized step");
    app.add_option("--jobs", cfg.jobs, "Worker threads for per-document stages");
    app.add_flag("--gexf", cfg.gexf, "Also export graph.gexf");
    app.add_flag("--keep-multiedges", cfg.keep_multiedges,
                 "Keep duplicate (src,dst,type) edges instead of collapsing");
    app.add_option("--sigma-samples", cfg.sigma_samples,
                   "Random graphs for the small-world sigma");
    app.add_option("--node-fractions", fractions_arg,
                   "Comma-separated node removal fractions");
    app.add_option("--node-reps", cfg.node_reps, "Repetitions per failure fraction");
    app.add_option("--edge-levels", levels_arg, "Comma-separated edge deletion levels");
    app.add_option("--edge-reps", cfg.edge_reps, "Repetitions per edge deletion level");

    app.require_subcommand(0, 1);
    auto* sub_canon = app.add_subcommand("canonicalize", "Raw corpus -> canonical text files");
    auto* sub_extract = app.add_subcommand("extract", "Canonical text -> mentions and relations");
    auto* sub_match = app.add_subcommand("match", "Resolve mentions against the master list");
    auto* sub_build = app.add_subcommand("build", "Assemble the citation network CSVs");
    auto* sub_metrics = app.add_subcommand("metrics", "Network measures per snapshot");
    auto* sub_robust = app.add_subcommand("robustness", "Removal and edge-deletion experiments");
    auto* sub_eval = app.add_subcommand("evaluate", "Error estimation against annotations");
    auto* sub_pipeline = app.add_subcommand("pipeline", "All stages in order");

    std::vector<const char*> argv;
    argv.push_back("leginet");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (!snapshots_arg.empty()) {
            for (const auto& s : split_on(snapshots_arg, ',')) {
                cfg.snapshot_years.push_back(std::stoi(s));
            }
            if (!std::is_sorted(cfg.snapshot_years.begin(), cfg.snapshot_years.end())) {
                throw ConfigError("--snapshots years must be ascending");
            }
        }
        if (!fractions_arg.empty()) {
            cfg.node_fractions.clear();
            for (const auto& s : split_on(fractions_arg, ',')) {
                cfg.node_fractions.push_back(std::stod(s));
            }
        }
        if (!levels_arg.empty()) {
            cfg.edge_levels.clear();
            for (const auto& s : split_on(levels_arg, ',')) {
                cfg.edge_levels.push_back(std::stod(s));
            }
        }

        if (sub_canon->parsed()) stages::canonicalize(cfg);
        else if (sub_extract->parsed()) stages::extract(cfg);
        else if (sub_match->parsed()) stages::match(cfg);
        else if (sub_build->parsed()) stages::build(cfg);
        else if (sub_metrics->parsed()) stages::metrics(cfg);
        else if (sub_robust->parsed()) stages::robustness(cfg);
        else if (sub_eval->parsed()) stages::evaluate(cfg);
        else if (sub_pipeline->parsed()) stages::pipeline(cfg);
        else {
            std::fprintf(stderr, "%s\n", app.help().c_str());
            return 1;
        }
    } catch (const DataError& e) {
        log::error(e.what());
        return 2;
    } catch (const ConfigError& e) {
        log::error(e.what());
        return 1;
    } catch (const std::exception& e) {
        log::error(e.what());
        return 1;
    }
    return 0;
}

}  // namespace leginet
