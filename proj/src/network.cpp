#include "leginet/network.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "leginet/csvio.hpp"
#include "leginet/log.hpp"
#include "leginet/util.hpp"

namespace leginet {

namespace {

bool edge_less(const EdgeRecord& a, const EdgeRecord& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    if (a.rtype != b.rtype) return a.rtype < b.rtype;
    return a.ts < b.ts;
}

}  // namespace

std::pair<Digraph, std::vector<int>> LegislationNetwork::to_digraph() const {
    std::map<int, int> index_of;
    std::vector<int> node_ids;
    node_ids.reserve(nodes.size());
    for (const auto& n : nodes) {
        index_of.emplace(n.node_id, static_cast<int>(node_ids.size()));
        node_ids.push_back(n.node_id);
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.emplace_back(index_of.at(e.src), index_of.at(e.dst));
    return {Digraph(static_cast<int>(node_ids.size()), pairs), node_ids};
}

BuildResult build_network(const std::vector<DocExtraction>& docs, const MasterList& master,
                          const BuildOptions& options) {
    BuildResult out;
    auto& net = out.network;
    auto& stats = out.stats;
    stats.docs_total = static_cast<int>(docs.size());

    std::set<int> node_ids;
    std::vector<EdgeRecord> edges;

    for (const auto& doc : docs) {
        // Resolve the document's own act: prefer the TIT relation's match.
        std::optional<int> src_id;
        for (const auto& rel : doc.relations) {
            if (rel.rtype != RelationType::TIT) continue;
            for (size_t i = 0; i < doc.mentions.size(); ++i) {
                if (doc.mentions[i].start == rel.target.start &&
                    doc.mentions[i].end == rel.target.end && i < doc.match_results.size() &&
                    doc.match_results[i].entry_id) {
                    src_id = doc.match_results[i].entry_id;
                    break;
                }
            }
            if (src_id) break;
        }
        std::optional<int> hint_id;
        if (!doc.title_hint.empty()) {
            MatchResult hint = hybrid_match(doc.title_hint, master, options.match_cfg);
            hint_id = hint.entry_id;
        }
        if (src_id && hint_id && *src_id != *hint_id) {
            ++stats.tit_hint_disagreements;
            log::warn("doc " + doc.doc_id + ": TIT match and title hint disagree (" +
                      master.at(static_cast<size_t>(*src_id)).canonical_title + " vs " +
                      master.at(static_cast<size_t>(*hint_id)).canonical_title + ")");
        }
        if (!src_id) src_id = hint_id;
        if (!src_id) {
            ++stats.docs_skipped;
            stats.warnings.push_back("doc " + doc.doc_id +
                                     " could not be resolved to a master entry; skipped");
            log::warn(stats.warnings.back());
            continue;
        }
        node_ids.insert(*src_id);

        std::optional<int> doc_year = doc.year;
        if (!doc_year) doc_year = master.at(static_cast<size_t>(*src_id)).year;

        for (const auto& rel : doc.relations) {
            if (rel.rtype == RelationType::TIT) continue;  // consumed for node identity
            // Locate the mention's match by span alignment.
            std::optional<int> dst_id;
            for (size_t i = 0; i < doc.mentions.size(); ++i) {
                if (doc.mentions[i].start == rel.target.start &&
                    doc.mentions[i].end == rel.target.end) {
                    if (i < doc.match_results.size() && doc.match_results[i].entry_id) {
                        dst_id = doc.match_results[i].entry_id;
                    }
                    break;
                }
            }
            if (!dst_id) {
                ++stats.unmatched_mentions;
                continue;
            }
            if (*dst_id == *src_id) {
                ++stats.self_loops_dropped;
                continue;
            }
            std::optional<int> ts = rel.event_year;
            if (!ts) ts = doc_year;
            if (!ts) ts = master.at(static_cast<size_t>(*dst_id)).year;
            if (!ts) {
                ++stats.edges_without_timestamp;
                log::warn("doc " + doc.doc_id + ": edge with no derivable timestamp dropped");
                continue;
            }
            node_ids.insert(*dst_id);
            edges.push_back({*src_id, *dst_id, rel.rtype, *ts});
        }
    }

    std::sort(edges.begin(), edges.end(), edge_less);
    if (!options.keep_multiedges) {
        // Collapse duplicates on (src, dst, type); the earliest ts survives.
        std::vector<EdgeRecord> dedup;
        for (const auto& e : edges) {
            if (!dedup.empty() && dedup.back().src == e.src && dedup.back().dst == e.dst &&
                dedup.back().rtype == e.rtype) {
                ++stats.duplicate_edges_collapsed;
                continue;
            }
            dedup.push_back(e);
        }
        edges = std::move(dedup);
    }
    net.edges = std::move(edges);

    for (int id : node_ids) {
        const auto& entry = master.at(static_cast<size_t>(id));
        net.nodes.push_back({entry.node_id, entry.canonical_title, entry.year});
    }
    return out;
}

Snapshot snapshot_at(const LegislationNetwork& net, int end_year) {
    Snapshot snap;
    snap.end_year = end_year;
    std::set<int> kept;
    for (const auto& n : net.nodes) {
        if (n.year && *n.year <= end_year) {
            snap.network.nodes.push_back(n);
            kept.insert(n.node_id);
        }
    }
    for (const auto& e : net.edges) {
        if (e.ts <= end_year && kept.count(e.src) && kept.count(e.dst)) {
            snap.network.edges.push_back(e);
        }
    }
    return snap;
}

void export_network(const LegislationNetwork& net, const std::string& out_dir, bool gexf) {
    std::filesystem::create_directories(out_dir);

    std::string nodes_csv = "node_id,title,year\n";
    for (const auto& n : net.nodes) {
        nodes_csv += csv::row({std::to_string(n.node_id), csv::quote(n.title, true),
                               n.year ? std::to_string(*n.year) : ""});
    }
    write_text_file(out_dir + "/nodes.csv", nodes_csv);

    std::string edges_csv = "src,dst,type,ts\n";
    for (const auto& e : net.edges) {
        edges_csv += csv::row({std::to_string(e.src), std::to_string(e.dst),
                               std::string(to_string(e.rtype)), std::to_string(e.ts)});
    }
    write_text_file(out_dir + "/edges.csv", edges_csv);

    if (gexf) {
        std::ostringstream x;
        x << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
          << "  <graph mode=\"static\" defaultedgetype=\"directed\">\n"
          << "    <attributes class=\"node\">\n"
          << "      <attribute id=\"0\" title=\"year\" type=\"integer\"/>\n"
          << "    </attributes>\n"
          << "    <attributes class=\"edge\">\n"
          << "      <attribute id=\"1\" title=\"ts\" type=\"integer\"/>\n"
          << "    </attributes>\n"
          << "    <nodes>\n";
        for (const auto& n : net.nodes) {
            std::string title = n.title;
            std::string escaped;
            for (char c : title) {
                switch (c) {
                    case '&': escaped += "&amp;"; break;
                    case '<': escaped += "&lt;"; break;
                    case '>': escaped += "&gt;"; break;
                    case '"': escaped += "&quot;"; break;
                    default: escaped += c;
                }
            }
            x << "      <node id=\"" << n.node_id << "\" label=\"" << escaped << "\">";
            if (n.year) {
                x << "<attvalues><attvalue for=\"0\" value=\"" << *n.year
                  << "\"/></attvalues>";
            }
            x << "</node>\n";
        }
        x << "    </nodes>\n    <edges>\n";
        int eid = 0;
        for (const auto& e : net.edges) {
            x << "      <edge id=\"" << eid++ << "\" source=\"" << e.src << "\" target=\""
              << e.dst << "\" label=\"" << to_string(e.rtype)
              << "\"><attvalues><attvalue for=\"1\" value=\"" << e.ts
              << "\"/></attvalues></edge>\n";
        }
        x << "    </edges>\n  </graph>\n</gexf>\n";
        write_text_file(out_dir + "/graph.gexf", x.str());
    }
}

LegislationNetwork load_network(const std::string& nodes_csv, const std::string& edges_csv) {
    LegislationNetwork net;
    auto node_lines = csv::lines(read_text_file(nodes_csv));
    for (size_t i = 1; i < node_lines.size(); ++i) {
        auto f = csv::parse_row(node_lines[i]);
        if (f.size() != 3) throw DataError("bad nodes.csv row: " + node_lines[i]);
        NodeRecord n;
        n.node_id = std::stoi(f[0]);
        n.title = f[1];
        if (!f[2].empty()) n.year = std::stoi(f[2]);
        net.nodes.push_back(std::move(n));
    }
    auto edge_lines = csv::lines(read_text_file(edges_csv));
    for (size_t i = 1; i < edge_lines.size(); ++i) {
        auto f = csv::parse_row(edge_lines[i]);
        if (f.size() != 4) throw DataError("bad edges.csv row: " + edge_lines[i]);
        EdgeRecord e;
        e.src = std::stoi(f[0]);
        e.dst = std::stoi(f[1]);
        e.rtype = relation_type_from_string(f[2]);
        e.ts = std::stoi(f[3]);
        net.edges.push_back(e);
    }
    std::sort(net.nodes.begin(), net.nodes.end(),
              [](const NodeRecord& a, const NodeRecord& b) { return a.node_id < b.node_id; });
    std::sort(net.edges.begin(), net.edges.end(), edge_less);
    return net;
}

}  // namespace leginet
