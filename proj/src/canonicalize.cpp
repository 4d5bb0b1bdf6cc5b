#include "leginet/canonicalize.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

#include "leginet/util.hpp"

namespace leginet {

namespace {

bool is_space_char(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<std::string> utf8_codepoints(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        size_t len = 1;
        if ((c & 0x80u) == 0) len = 1;
        else if ((c & 0xE0u) == 0xC0u) len = 2;
        else if ((c & 0xF0u) == 0xE0u) len = 3;
        else if ((c & 0xF8u) == 0xF0u) len = 4;
        if (i + len > s.size()) len = 1;
        out.emplace_back(s.substr(i, len));
        i += len;
    }
    return out;
}

void validate_char_set(const std::vector<std::string>& chars, const char* which) {
    for (const auto& c : chars) {
        if (c == "(" || c == ")") {
            throw ConfigError(std::string("parentheses may not appear in ") + which);
        }
    }
}

int phrase_word_count(const std::string& phrase) {
    return static_cast<int>(split_ws(phrase).size());
}

// Edit-distance comparison that treats every whitespace character as a plain
// space, so margins merged across line breaks still match.
char norm_char(char c) { return is_space_char(c) ? ' ' : c; }

struct WindowMatch {
    int len = -1;
    int dist = 0;
};

/// Best window of `text` starting at `start` against `phrase`: the window
/// with minimal edit distance <= max_edit (longest on ties). len is -1 when
/// none qualifies.
WindowMatch best_window_at(std::string_view text, size_t start, const std::string& phrase,
                           int max_edit) {
    const size_t m = phrase.size();
    const size_t max_len = std::min(text.size() - start, m + static_cast<size_t>(max_edit));
    // DP over phrase prefix (rows) x window prefix (cols).
    std::vector<int> prev(max_len + 1), cur(max_len + 1);
    for (size_t c = 0; c <= max_len; ++c) prev[c] = static_cast<int>(c);
    for (size_t r = 1; r <= m; ++r) {
        cur[0] = static_cast<int>(r);
        char pc = norm_char(phrase[r - 1]);
        for (size_t c = 1; c <= max_len; ++c) {
            char tc = norm_char(text[start + c - 1]);
            int sub = prev[c - 1] + (pc == tc ? 0 : 1);
            cur[c] = std::min({sub, prev[c] + 1, cur[c - 1] + 1});
        }
        std::swap(prev, cur);
    }
    WindowMatch best;
    best.dist = max_edit + 1;
    for (size_t c = 1; c <= max_len; ++c) {  // empty windows never count
        if (prev[c] <= max_edit &&
            (prev[c] < best.dist || (prev[c] == best.dist && static_cast<int>(c) > best.len))) {
            best.dist = prev[c];
            best.len = static_cast<int>(c);
        }
    }
    return best;
}

struct Span {
    size_t begin;
    size_t end;
};

bool intersects(const Span& s, size_t begin, size_t end) {
    return begin < s.end && s.begin < end;
}

/// All non-overlapping fuzzy occurrences of `phrase`, left to right.
std::vector<Span> find_occurrences(std::string_view text, const std::string& phrase,
                                   int max_edit) {
    std::vector<Span> spans;
    size_t i = 0;
    while (i < text.size()) {
        WindowMatch w = best_window_at(text, i, phrase, max_edit);
        if (w.len > 0) {
            spans.push_back({i, i + static_cast<size_t>(w.len)});
            i += static_cast<size_t>(w.len);
        } else {
            ++i;
        }
    }
    return spans;
}

struct ResolvedMargin {
    std::string phrase;
    int max_edit;
    std::vector<std::pair<std::string, int>> keep_contexts;  // context, max_edit
};

std::string remove_margins(std::string text, const std::vector<ResolvedMargin>& margins) {
    for (;;) {
        // Protected regions: fuzzy occurrences of every keep context.
        std::vector<Span> protected_spans;
        for (const auto& m : margins) {
            for (const auto& [ctx, ctx_edit] : m.keep_contexts) {
                auto occ = find_occurrences(text, ctx, ctx_edit);
                protected_spans.insert(protected_spans.end(), occ.begin(), occ.end());
            }
        }
        // Closest unprotected margin window across all phrases and starts
        // (smallest edit distance, then leftmost, then longest).
        int best_dist = -1;
        size_t best_begin = std::string::npos;
        size_t best_end = 0;
        for (size_t i = 0; i < text.size(); ++i) {
            for (const auto& m : margins) {
                WindowMatch w = best_window_at(text, i, m.phrase, m.max_edit);
                if (w.len <= 0) continue;
                size_t end = i + static_cast<size_t>(w.len);
                bool shielded = false;
                for (const auto& s : protected_spans) {
                    if (intersects(s, i, end)) {
                        shielded = true;
                        break;
                    }
                }
                if (shielded) continue;
                bool better = best_dist < 0 || w.dist < best_dist ||
                              (w.dist == best_dist &&
                               (i < best_begin || (i == best_begin && end > best_end)));
                if (better) {
                    best_dist = w.dist;
                    best_begin = i;
                    best_end = end;
                }
            }
        }
        if (best_begin == std::string::npos) return text;
        text.erase(best_begin, best_end - best_begin);
    }
}

std::string apply_special_chars(std::string_view text, const CanonConfig& cfg) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        bool handled = false;
        for (const auto& c : cfg.delete_chars) {
            if (text.substr(i, c.size()) == c) {
                i += c.size();
                handled = true;
                break;
            }
        }
        if (handled) continue;
        for (const auto& c : cfg.space_chars) {
            if (text.substr(i, c.size()) == c) {
                out.push_back(' ');
                i += c.size();
                handled = true;
                break;
            }
        }
        if (handled) continue;
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

}  // namespace

CanonConfig CanonConfig::defaults() {
    CanonConfig cfg;
    cfg.delete_chars = utf8_codepoints("'’`");
    cfg.space_chars = utf8_codepoints("~!@#$%^&*+=[]{}|\\;:\",<.>/?_£¢€–—-");
    cfg.margin_phrases.push_back(
        {"short title", 2, {"short title of this act"}});
    cfg.keyword_fixes = {
        {"aot", "act"},        {"a0t", "act"},        {"acl", "act"},
        {"aci", "act"},        {"avt", "act"},        {"0rdinance", "ordinance"},
        {"ordinanoe", "ordinance"},
    };
    return cfg;
}

CanonConfig load_canon_config(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_text_file(path));
    CanonConfig cfg = CanonConfig::defaults();
    if (j.contains("delete_chars")) cfg.delete_chars = utf8_codepoints(j["delete_chars"].get<std::string>());
    if (j.contains("space_chars")) cfg.space_chars = utf8_codepoints(j["space_chars"].get<std::string>());
    if (j.contains("margin_phrases")) {
        cfg.margin_phrases.clear();
        for (const auto& m : j["margin_phrases"]) {
            MarginPhrase p;
            p.phrase = collapse_spaces(to_lower(m.at("phrase").get<std::string>()));
            p.max_edit = m.value("max_edit", -1);
            if (p.max_edit < -1) throw ConfigError("margin phrase max_edit must be >= 0");
            for (const auto& c : m.value("keep_contexts", nlohmann::json::array())) {
                p.keep_contexts.push_back(collapse_spaces(to_lower(c.get<std::string>())));
            }
            cfg.margin_phrases.push_back(std::move(p));
        }
    }
    if (j.contains("keyword_fixes")) {
        cfg.keyword_fixes.clear();
        for (auto it = j["keyword_fixes"].begin(); it != j["keyword_fixes"].end(); ++it) {
            cfg.keyword_fixes[to_lower(it.key())] = to_lower(it.value().get<std::string>());
        }
    }
    validate_char_set(cfg.delete_chars, "delete_chars");
    validate_char_set(cfg.space_chars, "space_chars");
    return cfg;
}

std::string fix_keyword_typos(std::string_view text,
                              const std::map<std::string, std::string>& fixes) {
    if (fixes.empty()) return std::string(text);
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        if (is_space_char(text[i])) {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && !is_space_char(text[j])) ++j;
        std::string_view tok = text.substr(i, j - i);
        // Parenthesis-tolerant core: "((aot" fixes its core, keeps the parens.
        size_t lead = 0, trail = 0;
        while (lead < tok.size() && (tok[lead] == '(' || tok[lead] == ')')) ++lead;
        while (trail < tok.size() - lead &&
               (tok[tok.size() - 1 - trail] == '(' || tok[tok.size() - 1 - trail] == ')'))
            ++trail;
        std::string core(tok.substr(lead, tok.size() - lead - trail));
        auto it = fixes.find(core);
        if (it != fixes.end()) {
            out += tok.substr(0, lead);
            out += it->second;
            out += tok.substr(tok.size() - trail);
        } else {
            out += tok;
        }
        i = j;
    }
    return out;
}

std::string strip_margin_phrases(std::string_view text, const std::vector<std::string>& phrases,
                                 int max_edit) {
    if (max_edit < 0) throw ConfigError("strip_margin_phrases: max_edit must be >= 0");
    std::vector<ResolvedMargin> margins;
    for (const auto& p : phrases) margins.push_back({p, max_edit, {}});
    return remove_margins(std::string(text), margins);
}

std::string canonicalize_string(std::string_view text, const CanonConfig& cfg) {
    std::string s = to_lower(text);
    s = apply_special_chars(s, cfg);
    std::vector<ResolvedMargin> margins;
    for (const auto& m : cfg.margin_phrases) {
        ResolvedMargin r;
        r.phrase = m.phrase;
        r.max_edit = m.max_edit >= 0 ? m.max_edit : phrase_word_count(m.phrase);
        for (const auto& ctx : m.keep_contexts) {
            r.keep_contexts.emplace_back(ctx, phrase_word_count(ctx));
        }
        margins.push_back(std::move(r));
    }
    s = remove_margins(std::move(s), margins);
    s = fix_keyword_typos(s, cfg.keyword_fixes);
    return collapse_spaces(s);
}

CanonicalText canonicalize_text(const Document& doc, const CanonConfig& cfg) {
    CanonicalText out;
    out.doc_id = doc.doc_id;
    out.text = canonicalize_string(doc.body, cfg);
    out.applied_steps = {"lowercase", "special_chars", "margin_phrases", "keyword_fixes",
                         "collapse_whitespace"};
    return out;
}

}  // namespace leginet
