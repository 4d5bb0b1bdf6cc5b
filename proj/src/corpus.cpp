#include "leginet/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "leginet/csvio.hpp"
#include "leginet/log.hpp"
#include "leginet/util.hpp"

namespace fs = std::filesystem;

namespace leginet {

MasterList::MasterList(std::vector<MasterEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        by_title_.emplace(e.canonical_title, e.node_id);
        for (const auto& tok : e.tokens) token_index_[tok].push_back(e.node_id);
    }
}

const MasterEntry* MasterList::find_title(const std::string& canonical_title) const {
    auto it = by_title_.find(canonical_title);
    if (it == by_title_.end()) return nullptr;
    return &entries_[static_cast<size_t>(it->second)];
}

std::pair<std::string, std::optional<int>> infer_metadata(std::string_view filename) {
    std::string name(filename);
    auto slash = name.find_last_of("/\\");
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    for (char& c : name) {
        if (c == '_' || c == '-') c = ' ';
    }
    std::string hint = collapse_spaces(to_lower(name));
    return {hint, last_year_token(hint)};
}

namespace {

struct ManifestRow {
    std::string doc_id;
    std::optional<int> year;
};

std::unordered_map<std::string, ManifestRow> load_manifest(const fs::path& path) {
    std::unordered_map<std::string, ManifestRow> rows;
    std::string content = read_text_file(path.string());
    int lineno = 0;
    for (const auto& line : csv::lines(content)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_on(line, '\t');
        if (fields.size() < 2) {
            throw ConfigError("manifest line " + std::to_string(lineno) +
                              ": expected doc_id<TAB>path[<TAB>year]");
        }
        ManifestRow row;
        row.doc_id = fields[0];
        if (fields.size() >= 3 && !fields[2].empty()) {
            int y = std::stoi(fields[2]);
            if (y < 1200 || y > 2100) {
                throw DataError("manifest line " + std::to_string(lineno) +
                                ": year out of range [1200,2100]: " + fields[2]);
            }
            row.year = y;
        }
        rows[fields[1]] = row;
    }
    return rows;
}

}  // namespace

CorpusLoad load_corpus(const fs::path& dir, const std::optional<fs::path>& manifest) {
    if (!fs::exists(dir) || !fs::is_directory(dir)) {
        throw ConfigError("corpus directory does not exist: " + dir.string());
    }
    std::unordered_map<std::string, ManifestRow> manifest_rows;
    if (manifest) manifest_rows = load_manifest(*manifest);

    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".txt") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end(),
              [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });

    CorpusLoad out;
    std::set<std::string> seen_ids;
    for (const auto& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in || fs::is_directory(p)) {
            out.warnings.push_back("unreadable file skipped: " + p.string());
            log::warn(out.warnings.back());
            continue;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        Document doc;
        doc.source_path = p.string();
        doc.body = ss.str();
        auto [hint, year] = infer_metadata(p.filename().string());
        doc.title_hint = hint;
        doc.year = year;
        doc.doc_id = p.stem().string();
        auto by_path = manifest_rows.find(p.filename().string());
        if (by_path == manifest_rows.end()) by_path = manifest_rows.find(p.string());
        if (by_path != manifest_rows.end()) {
            if (!by_path->second.doc_id.empty()) doc.doc_id = by_path->second.doc_id;
            if (by_path->second.year) doc.year = by_path->second.year;
        }
        if (doc.body.empty()) {
            out.warnings.push_back("empty file skipped: " + p.string());
            log::warn(out.warnings.back());
            continue;
        }
        if (!seen_ids.insert(doc.doc_id).second) {
            throw DataError("duplicate doc_id in corpus: " + doc.doc_id);
        }
        out.documents.push_back(std::move(doc));
    }
    return out;
}

MasterList load_master_list(const fs::path& path) {
    std::string content = read_text_file(path.string());
    std::vector<MasterEntry> entries;
    std::set<std::string> seen;
    int lineno = 0;
    for (const auto& raw : csv::lines(content)) {
        ++lineno;
        std::string title = collapse_spaces(to_lower(raw));
        if (title.empty()) continue;
        if (!seen.insert(title).second) {
            throw DataError("duplicate master-list title at line " + std::to_string(lineno) +
                            ": " + title);
        }
        MasterEntry e;
        e.node_id = static_cast<int>(entries.size());
        e.canonical_title = title;
        e.year = last_year_token(title);
        e.tokens = split_ws(title);
        std::sort(e.tokens.begin(), e.tokens.end());
        e.tokens.erase(std::unique(e.tokens.begin(), e.tokens.end()), e.tokens.end());
        entries.push_back(std::move(e));
    }
    return MasterList(std::move(entries));
}

std::map<std::string, AnnotationSet> load_annotations(const fs::path& dir,
                                                      const MasterList& master) {
    if (!fs::exists(dir) || !fs::is_directory(dir)) {
        throw ConfigError("annotations directory does not exist: " + dir.string());
    }
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end(),
              [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });

    auto check_title = [&](const std::string& canonical, const fs::path& p) {
        if (!master.find_title(canonical)) {
            throw DataError("annotation " + p.string() +
                            " references unknown canonical title: " + canonical);
        }
    };

    std::map<std::string, AnnotationSet> out;
    for (const auto& p : paths) {
        nlohmann::json j = nlohmann::json::parse(read_text_file(p.string()));
        AnnotationSet set;
        set.doc_id = j.at("doc_id").get<std::string>();
        for (const auto& e : j.value("entities", nlohmann::json::array())) {
            AnnotationEntity ent{e.at("surface").get<std::string>(),
                                 e.at("canonical").get<std::string>()};
            check_title(ent.canonical, p);
            set.entities.push_back(std::move(ent));
        }
        for (const auto& r : j.value("relations", nlohmann::json::array())) {
            AnnotationRelation rel{r.at("type").get<std::string>(),
                                   r.at("target").get<std::string>()};
            check_title(rel.target, p);
            set.relations.push_back(std::move(rel));
        }
        for (const auto& m : j.value("misses", nlohmann::json::array())) {
            AnnotationMiss miss{m.at("canonical").get<std::string>(),
                                m.at("cause").get<std::string>()};
            check_title(miss.canonical, p);
            if (miss.cause != "typo" && miss.cause != "rule") {
                throw DataError("annotation " + p.string() + ": miss cause must be typo|rule");
            }
            set.misses.push_back(std::move(miss));
        }
        out[set.doc_id] = std::move(set);
    }
    return out;
}

}  // namespace leginet
