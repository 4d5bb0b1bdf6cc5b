#include "leginet/match.hpp"

#include <algorithm>
#include <limits>

#include "leginet/util.hpp"

namespace leginet {

std::string_view to_string(MatchMethod m) {
    switch (m) {
        case MatchMethod::exact_edit: return "exact_edit";
        case MatchMethod::jaccard: return "jaccard";
        case MatchMethod::none: return "none";
    }
    return "none";
}

MatchMethod match_method_from_string(std::string_view s) {
    if (s == "exact_edit") return MatchMethod::exact_edit;
    if (s == "jaccard") return MatchMethod::jaccard;
    if (s == "none") return MatchMethod::none;
    throw DataError("unknown match method: " + std::string(s));
}

int edit_distance(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    const size_t n = a.size(), m = b.size();
    if (n == 0) return static_cast<int>(m);
    std::vector<int> prev(n + 1), cur(n + 1);
    for (size_t i = 0; i <= n; ++i) prev[i] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) {
        cur[0] = static_cast<int>(j);
        char bj = b[j - 1];
        for (size_t i = 1; i <= n; ++i) {
            int sub = prev[i - 1] + (a[i - 1] == bj ? 0 : 1);
            cur[i] = std::min({sub, prev[i] + 1, cur[i - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::vector<std::string> token_set(std::string_view s) {
    auto toks = split_ws(s);
    std::sort(toks.begin(), toks.end());
    toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
    return toks;
}

double jaccard_of_sets(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    size_t i = 0, j = 0, inter = 0;
    while (i < a.size() && j < b.size()) {
        int c = a[i].compare(b[j]);
        if (c == 0) {
            ++inter;
            ++i;
            ++j;
        } else if (c < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    size_t uni = a.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

double jaccard_similarity(std::string_view a, std::string_view b) {
    return jaccard_of_sets(token_set(a), token_set(b));
}

MatchResult hybrid_match(std::string_view mention_surface, const MasterList& master,
                         const MatchConfig& cfg) {
    MatchResult res;
    if (master.empty()) return res;

    const auto mention_tokens = token_set(mention_surface);

    int y1 = std::numeric_limits<int>::max();
    int i2 = -1;
    double x1 = -1.0;
    int i1 = -1;
    bool exited = false;
    int scanned = 0;

    for (const auto& entry : master.entries()) {
        double m = jaccard_of_sets(mention_tokens, entry.tokens);
        int n = edit_distance(mention_surface, entry.canonical_title);
        ++scanned;
        if (m > x1) {
            x1 = m;
            i1 = entry.node_id;
        }
        if (n < y1) {
            y1 = n;
            i2 = entry.node_id;
        }
        if (m >= cfg.jaccard_exit || n == 0) {
            exited = true;
            break;
        }
    }

    res.scanned = scanned;
    res.early_exit = exited;
    res.edit_dist = y1;
    res.jaccard = x1;
    if (y1 <= cfg.edit_threshold) {
        res.entry_id = i2;
        res.method = MatchMethod::exact_edit;
    } else if (x1 > cfg.jaccard_floor) {
        res.entry_id = i1;
        res.method = MatchMethod::jaccard;
    }
    return res;
}

BatchMatch batch_match(const std::vector<std::string>& surfaces, const MasterList& master,
                       const MatchConfig& cfg) {
    BatchMatch out;
    out.results.reserve(surfaces.size());
    for (const auto& s : surfaces) {
        MatchResult r = hybrid_match(s, master, cfg);
        switch (r.method) {
            case MatchMethod::exact_edit: ++out.summary.exact_edit; break;
            case MatchMethod::jaccard: ++out.summary.jaccard; break;
            case MatchMethod::none: ++out.summary.none; break;
        }
        out.results.push_back(std::move(r));
    }
    return out;
}

}  // namespace leginet
