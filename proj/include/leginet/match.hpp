#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leginet/corpus.hpp"

namespace leginet {

struct MatchConfig {
    int edit_threshold = 5;
    double jaccard_exit = 0.5;   // scan stops once a line's Jaccard reaches this
    double jaccard_floor = 0.0;  // Jaccard fallback requires score strictly above
};

enum class MatchMethod { exact_edit, jaccard, none };

std::string_view to_string(MatchMethod m);
MatchMethod match_method_from_string(std::string_view s);

/// Outcome of resolving one mention against the master list. edit_dist and
/// jaccard are the best scores seen over the scanned prefix (y1 and x1); the
/// winning entry's own score is the one belonging to the chosen method.
struct MatchResult {
    std::optional<int> entry_id;
    MatchMethod method = MatchMethod::none;
    int edit_dist = 0;
    double jaccard = 0.0;
    bool early_exit = false;
    int scanned = 0;
};

/// Levenshtein distance, unit-cost insert/delete/substitute.
int edit_distance(std::string_view a, std::string_view b);

/// Whitespace tokens, sorted and deduplicated.
std::vector<std::string> token_set(std::string_view s);

/// |tokens(a) & tokens(b)| / |tokens(a) | tokens(b)|; 1 when both are empty.
double jaccard_similarity(std::string_view a, std::string_view b);
double jaccard_of_sets(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Scan master entries in order computing per-line Jaccard m(j) and edit
/// distance n(j); stop early when m(j) >= jaccard_exit or n(j) == 0. Over the
/// scanned prefix pick y1 = min n (first index) and x1 = max m (first index):
/// entry I2 when y1 <= edit_threshold, else entry I1 when x1 > jaccard_floor,
/// else no match.
MatchResult hybrid_match(std::string_view mention_surface, const MasterList& master,
                         const MatchConfig& cfg = {});

struct MatchSummary {
    int exact_edit = 0;
    int jaccard = 0;
    int none = 0;
};

struct BatchMatch {
    std::vector<MatchResult> results;  // aligned with the input order
    MatchSummary summary;
};

BatchMatch batch_match(const std::vector<std::string>& surfaces, const MasterList& master,
                       const MatchConfig& cfg = {});

}  // namespace leginet
