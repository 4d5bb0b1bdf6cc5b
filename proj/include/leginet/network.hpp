#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leginet/corpus.hpp"
#include "leginet/extract.hpp"
#include "leginet/graph.hpp"
#include "leginet/match.hpp"

namespace leginet {

struct NodeRecord {
    int node_id = 0;  // master-list node id
    std::string title;
    std::optional<int> year;
};

struct EdgeRecord {
    int src = 0;
    int dst = 0;
    RelationType rtype = RelationType::CIT;
    int ts = 0;  // year in [1200, 2100]
};

/// Directed, typed, timestamped legislation network. Nodes are sorted by
/// node_id and edges by (src, dst, type, ts), so equal contents are always
/// byte-identical on export.
struct LegislationNetwork {
    std::vector<NodeRecord> nodes;
    std::vector<EdgeRecord> edges;

    size_t num_nodes() const { return nodes.size(); }
    size_t num_edges() const { return edges.size(); }

    /// Compact digraph over the nodes (index i = nodes[i]); parallel edges of
    /// different types between the same pair collapse in this view.
    std::pair<Digraph, std::vector<int>> to_digraph() const;
};

/// Per-document inputs to the network builder; match_results align with
/// mentions by index.
struct DocExtraction {
    std::string doc_id;
    std::optional<int> year;
    std::string title_hint;
    std::vector<EntityMention> mentions;
    std::vector<MatchResult> match_results;
    std::vector<RelationMention> relations;
};

struct BuildOptions {
    bool keep_multiedges = false;
    MatchConfig match_cfg;  // used when resolving a document via its title hint
};

struct BuildStats {
    int docs_total = 0;
    int docs_skipped = 0;
    int unmatched_mentions = 0;
    int self_loops_dropped = 0;
    int duplicate_edges_collapsed = 0;
    int edges_without_timestamp = 0;
    int tit_hint_disagreements = 0;
    std::vector<std::string> warnings;
};

struct BuildResult {
    LegislationNetwork network;
    BuildStats stats;
};

/// Source node comes from the document's TIT match when present, else from
/// matching the title hint. Edge timestamps use the relation's event year
/// when present, else the source document's year, else the source act's year.
BuildResult build_network(const std::vector<DocExtraction>& docs, const MasterList& master,
                          const BuildOptions& options = {});

struct Snapshot {
    int end_year = 0;
    LegislationNetwork network;
};

/// Cumulative snapshot: nodes with year <= end_year and edges with
/// ts <= end_year whose endpoints survive.
Snapshot snapshot_at(const LegislationNetwork& net, int end_year);

/// nodes.csv (node_id,title,year) and edges.csv (src,dst,type,ts); titles
/// quoted; byte-stable across runs. Optionally graph.gexf for visualizers.
void export_network(const LegislationNetwork& net, const std::string& out_dir, bool gexf = false);

LegislationNetwork load_network(const std::string& nodes_csv, const std::string& edges_csv);

}  // namespace leginet
