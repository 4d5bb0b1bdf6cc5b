#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace leginet {

class MasterList;

/// One legal text file after OCR, with metadata inferred from its filename
/// (or a manifest override).
struct Document {
    std::string doc_id;
    std::string source_path;
    std::string title_hint;
    std::optional<int> year;
    std::string body;
};

struct MasterEntry {
    int node_id = 0;
    std::string canonical_title;  // lowercase, single-spaced
    std::optional<int> year;
    std::vector<std::string> tokens;  // sorted unique tokens of the title
};

/// Ordered master list of act titles. Entry order is exactly file line
/// order; the hybrid matcher scans entries in this order.
class MasterList {
public:
    MasterList() = default;
    explicit MasterList(std::vector<MasterEntry> entries);

    const std::vector<MasterEntry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const MasterEntry& at(size_t i) const { return entries_.at(i); }

    /// Exact lookup by canonical title; nullptr when absent.
    const MasterEntry* find_title(const std::string& canonical_title) const;

    /// Token-to-entry inverted index (derived from the titles).
    const std::unordered_map<std::string, std::vector<int>>& token_index() const {
        return token_index_;
    }

private:
    std::vector<MasterEntry> entries_;
    std::unordered_map<std::string, int> by_title_;
    std::unordered_map<std::string, std::vector<int>> token_index_;
};

struct AnnotationEntity {
    std::string surface;    // surface string as it appears in canonical text
    std::string canonical;  // master-list canonical title
};

struct AnnotationRelation {
    std::string type;  // TIT | CIT | AMD | PRP | FRP
    std::string target;
};

struct AnnotationMiss {
    std::string canonical;
    std::string cause;  // typo | rule
};

/// Ground-truth annotations for one document.
struct AnnotationSet {
    std::string doc_id;
    std::vector<AnnotationEntity> entities;
    std::vector<AnnotationRelation> relations;
    std::vector<AnnotationMiss> misses;
};

struct CorpusLoad {
    std::vector<Document> documents;
    std::vector<std::string> warnings;
};

/// Load every .txt file under dir, ordered lexicographically by path.
/// Unreadable files produce a warning and are skipped. The optional manifest
/// (doc_id<TAB>path<TAB>year per line) overrides filename inference.
CorpusLoad load_corpus(const std::filesystem::path& dir,
                       const std::optional<std::filesystem::path>& manifest = {});

/// (title_hint, year) from a filename: stem with underscores/hyphens as
/// spaces, lowercased; year is the last 4-digit token in [1200, 2100].
std::pair<std::string, std::optional<int>> infer_metadata(std::string_view filename);

/// One title per line; lines lowercased and space-collapsed, blanks skipped,
/// node_id = 0-based position among kept lines. Duplicate titles are fatal.
MasterList load_master_list(const std::filesystem::path& path);

/// Directory of per-document JSON annotation files. Every canonical title
/// must exist in the master list (fatal otherwise).
std::map<std::string, AnnotationSet> load_annotations(const std::filesystem::path& dir,
                                                      const MasterList& master);

}  // namespace leginet
