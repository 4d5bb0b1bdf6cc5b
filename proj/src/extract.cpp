#include "leginet/extract.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "leginet/log.hpp"
#include "leginet/util.hpp"

namespace leginet {

std::string_view to_string(RelationType t) {
    switch (t) {
        case RelationType::TIT: return "TIT";
        case RelationType::CIT: return "CIT";
        case RelationType::AMD: return "AMD";
        case RelationType::PRP: return "PRP";
        case RelationType::FRP: return "FRP";
    }
    return "CIT";
}

RelationType relation_type_from_string(std::string_view s) {
    if (s == "TIT") return RelationType::TIT;
    if (s == "CIT") return RelationType::CIT;
    if (s == "AMD") return RelationType::AMD;
    if (s == "PRP") return RelationType::PRP;
    if (s == "FRP") return RelationType::FRP;
    throw DataError("unknown relation type: " + std::string(s));
}

namespace {

constexpr int kActNameMaxTokens = 12;
constexpr int kAnyPhraseMaxTokens = 6;
constexpr int kAnyNumberMaxTokens = 3;

struct Token {
    std::string core;  // token text without leading/trailing parentheses
    size_t begin = 0;  // character span of the core
    size_t end = 0;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        size_t j = i;
        while (j < text.size() && text[j] != ' ') ++j;
        if (j > i) {
            size_t b = i, e = j;
            while (b < e && (text[b] == '(' || text[b] == ')')) ++b;
            while (e > b && (text[e - 1] == '(' || text[e - 1] == ')')) --e;
            if (e > b) out.push_back({std::string(text.substr(b, e - b)), b, e});
        }
        i = j;
    }
    return out;
}

bool is_act_terminator(const std::string& core) {
    return core == "act" || core == "ordinance";
}

bool is_number_token(const std::string& core) {
    if (core.empty() || core[0] < '0' || core[0] > '9') return false;
    return std::all_of(core.begin(), core.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || c == '(' || c == ')';
    });
}

const std::set<std::string>& month_names() {
    static const std::set<std::string> months = {
        "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec",
        "january", "february", "march", "april", "june", "july", "august", "september",
        "october", "november", "december"};
    return months;
}

bool is_day_or_month(const std::string& core) {
    if (is_digits(core) && core.size() <= 2) return true;
    return month_names().count(core) > 0;
}

struct Capture {
    int name_first = -1;
    int name_last = -1;
    std::optional<int> year;
    int year_token = -1;
};

struct Matcher {
    const std::vector<Token>& toks;
    const std::vector<std::vector<std::string>>* keywords;  // pre-split keyword words
    std::optional<size_t> require_end;  // when set, a match must end exactly here

    bool match(size_t pos, const std::vector<TemplateElement>& elems, size_t ei, Capture& cap,
               size_t* end_pos) const {
        if (ei == elems.size()) {
            if (require_end && pos != *require_end) return false;
            *end_pos = pos;
            return true;
        }
        const auto& el = elems[ei];
        switch (el.kind) {
            case ElementKind::literal:
                if (pos >= toks.size() || toks[pos].core != el.literal) return false;
                return match(pos + 1, elems, ei + 1, cap, end_pos);
            case ElementKind::keyword: {
                if (!keywords) return false;
                for (const auto& words : *keywords) {
                    if (pos + words.size() > toks.size()) continue;
                    bool ok = true;
                    for (size_t k = 0; k < words.size(); ++k) {
                        if (toks[pos + k].core != words[k]) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok && match(pos + words.size(), elems, ei + 1, cap, end_pos)) return true;
                }
                return false;
            }
            case ElementKind::act_name: {
                // Maximal phrase ending at the nearest act/ordinance token.
                size_t limit = std::min(toks.size(), pos + kActNameMaxTokens);
                for (size_t j = pos; j < limit; ++j) {
                    if (is_act_terminator(toks[j].core)) {
                        Capture saved = cap;
                        cap.name_first = static_cast<int>(pos);
                        cap.name_last = static_cast<int>(j);
                        if (match(j + 1, elems, ei + 1, cap, end_pos)) return true;
                        cap = saved;
                        return false;  // nearest terminator only, no backtracking
                    }
                }
                return false;
            }
            case ElementKind::year: {
                if (pos >= toks.size() || !is_year_token(toks[pos].core)) return false;
                Capture saved = cap;
                cap.year = std::stoi(toks[pos].core);
                cap.year_token = static_cast<int>(pos);
                if (match(pos + 1, elems, ei + 1, cap, end_pos)) return true;
                cap = saved;
                return false;
            }
            case ElementKind::date: {
                for (size_t skip = 0; skip <= 3; ++skip) {
                    if (pos + skip >= toks.size()) break;
                    if (skip > 0 && !is_day_or_month(toks[pos + skip - 1].core)) break;
                    if (!is_year_token(toks[pos + skip].core)) continue;
                    Capture saved = cap;
                    cap.year = std::stoi(toks[pos + skip].core);
                    cap.year_token = static_cast<int>(pos + skip);
                    if (match(pos + skip + 1, elems, ei + 1, cap, end_pos)) return true;
                    cap = saved;
                }
                return false;
            }
            case ElementKind::any_phrase: {
                for (size_t len = 1; len <= kAnyPhraseMaxTokens; ++len) {
                    if (pos + len > toks.size()) break;
                    if (match(pos + len, elems, ei + 1, cap, end_pos)) return true;
                }
                return false;
            }
            case ElementKind::any_number: {
                for (size_t len = 1; len <= kAnyNumberMaxTokens; ++len) {
                    if (pos + len > toks.size()) break;
                    if (!is_number_token(toks[pos + len - 1].core)) break;
                    if (match(pos + len, elems, ei + 1, cap, end_pos)) return true;
                }
                return false;
            }
        }
        return false;
    }
};

std::vector<TemplateElement> parse_pattern(const std::string& pattern,
                                           const std::string& rule_id) {
    std::vector<TemplateElement> out;
    size_t i = 0;
    const std::string& p = pattern;
    while (i < p.size()) {
        if (p[i] == ' ') {
            ++i;
            continue;
        }
        if (p[i] == '[') {
            size_t close = p.find(']', i);
            if (close == std::string::npos) {
                throw ConfigError("rule " + rule_id + ": unterminated placeholder in pattern");
            }
            std::string name = p.substr(i + 1, close - i - 1);
            ElementKind kind;
            if (name == "keyword") kind = ElementKind::keyword;
            else if (name == "act name") kind = ElementKind::act_name;
            else if (name == "year") kind = ElementKind::year;
            else if (name == "date") kind = ElementKind::date;
            else if (name == "any phrase") kind = ElementKind::any_phrase;
            else if (name == "any number") kind = ElementKind::any_number;
            else throw ConfigError("rule " + rule_id + ": unknown placeholder [" + name + "]");
            out.push_back({kind, ""});
            i = close + 1;
        } else {
            size_t j = p.find(' ', i);
            if (j == std::string::npos) j = p.size();
            out.push_back({ElementKind::literal, to_lower(p.substr(i, j - i))});
            i = j;
        }
    }
    return out;
}

int count_act_name(const std::vector<TemplateElement>& elems) {
    return static_cast<int>(std::count_if(elems.begin(), elems.end(), [](const auto& e) {
        return e.kind == ElementKind::act_name;
    }));
}

void element_length_bounds(const std::vector<TemplateElement>& elems,
                           const std::vector<std::vector<std::string>>* keywords, size_t* min_len,
                           size_t* max_len) {
    size_t lo = 0, hi = 0;
    for (const auto& el : elems) {
        switch (el.kind) {
            case ElementKind::literal:
                lo += 1;
                hi += 1;
                break;
            case ElementKind::keyword: {
                size_t kmin = 1, kmax = 1;
                if (keywords && !keywords->empty()) {
                    kmin = SIZE_MAX;
                    kmax = 0;
                    for (const auto& words : *keywords) {
                        kmin = std::min(kmin, words.size());
                        kmax = std::max(kmax, words.size());
                    }
                }
                lo += kmin;
                hi += kmax;
                break;
            }
            case ElementKind::act_name:
                lo += 1;
                hi += kActNameMaxTokens;
                break;
            case ElementKind::year:
                lo += 1;
                hi += 1;
                break;
            case ElementKind::date:
                lo += 1;
                hi += 4;
                break;
            case ElementKind::any_phrase:
                lo += 1;
                hi += kAnyPhraseMaxTokens;
                break;
            case ElementKind::any_number:
                lo += 1;
                hi += kAnyNumberMaxTokens;
                break;
        }
    }
    *min_len = lo;
    *max_len = hi;
}

}  // namespace

RuleSet compile_rules_from_json_text(std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    RuleSet rs;

    for (const auto& js : j.at("strata")) {
        Stratum s;
        s.year_lo = js.at("year_lo").get<int>();
        s.year_hi = js.at("year_hi").get<int>();
        if (s.year_lo >= s.year_hi) {
            throw ConfigError("stratum [" + std::to_string(s.year_lo) + "," +
                              std::to_string(s.year_hi) + "]: year_lo must be < year_hi");
        }
        for (const auto& k : js.at("keywords")) {
            s.keywords.push_back(collapse_spaces(to_lower(k.get<std::string>())));
        }
        for (const auto& jt : js.at("entity_templates")) {
            Template t;
            t.rule_id = jt.at("id").get<std::string>();
            t.pattern = jt.at("pattern").get<std::string>();
            t.elements = parse_pattern(t.pattern, t.rule_id);
            if (count_act_name(t.elements) != 1) {
                throw ConfigError("rule " + t.rule_id +
                                  ": entity template must contain exactly one [act name]");
            }
            s.entity_templates.push_back(std::move(t));
        }
        if (s.entity_templates.empty()) {
            throw ConfigError("stratum [" + std::to_string(s.year_lo) + "," +
                              std::to_string(s.year_hi) + "] has no entity templates");
        }
        rs.strata.push_back(std::move(s));
    }

    // Strata must be disjoint and cover [1200, 2100].
    std::vector<std::pair<int, int>> ranges;
    for (const auto& s : rs.strata) ranges.emplace_back(s.year_lo, s.year_hi);
    std::sort(ranges.begin(), ranges.end());
    for (size_t i = 1; i < ranges.size(); ++i) {
        if (ranges[i].first <= ranges[i - 1].second) {
            throw ConfigError("strata overlap around year " + std::to_string(ranges[i].first));
        }
        if (ranges[i].first != ranges[i - 1].second + 1) {
            throw ConfigError("strata leave a gap before year " + std::to_string(ranges[i].first));
        }
    }
    if (ranges.empty() || ranges.front().first != 1200 || ranges.back().second != 2100) {
        throw ConfigError("strata must cover [1200, 2100]");
    }

    if (!j.contains("relation_rules") || j["relation_rules"].empty()) {
        rs.warnings.push_back("no relation rules: relation extraction disabled, all mentions default to CIT");
        log::warn(rs.warnings.back());
        return rs;
    }
    for (const auto& jr : j["relation_rules"]) {
        RelationRule r;
        r.rule_id = jr.at("id").get<std::string>();
        r.rtype = relation_type_from_string(jr.at("type").get<std::string>());
        if (jr.contains("heading")) {
            r.heading = collapse_spaces(to_lower(jr["heading"].get<std::string>()));
            r.scope_tokens = jr.value("scope_tokens", 120);
            if (r.scope_tokens <= 0) {
                throw ConfigError("rule " + r.rule_id + ": scope_tokens must be positive");
            }
        } else {
            r.pattern = jr.at("pattern").get<std::string>();
            auto elems = parse_pattern(r.pattern, r.rule_id);
            if (count_act_name(elems) != 1) {
                throw ConfigError("rule " + r.rule_id +
                                  ": relation pattern must contain exactly one [act name]");
            }
            for (const auto& e : elems) {
                if (e.kind == ElementKind::keyword) {
                    throw ConfigError("rule " + r.rule_id +
                                      ": [keyword] is not allowed in relation patterns");
                }
            }
            bool after = false;
            for (auto& e : elems) {
                if (e.kind == ElementKind::act_name) {
                    after = true;
                    continue;
                }
                (after ? r.suffix : r.prefix).push_back(e);
            }
        }
        rs.relation_rules.push_back(std::move(r));
    }
    return rs;
}

RuleSet compile_rules(const std::string& path) {
    return compile_rules_from_json_text(read_text_file(path));
}

std::vector<EntityMention> extract_entities(const CanonicalText& ct, std::optional<int> doc_year,
                                            const RuleSet& rules) {
    std::vector<EntityMention> out;
    if (ct.text.empty()) return out;
    const auto toks = tokenize(ct.text);
    if (toks.empty()) return out;

    std::set<std::pair<size_t, size_t>> seen_spans;
    for (const auto& stratum : rules.strata) {
        if (doc_year && !stratum.contains(*doc_year)) continue;
        std::vector<std::vector<std::string>> keyword_words;
        for (const auto& k : stratum.keywords) keyword_words.push_back(split_ws(k));
        Matcher m{toks, &keyword_words, std::nullopt};
        for (size_t anchor = 0; anchor < toks.size(); ++anchor) {
            for (const auto& tmpl : stratum.entity_templates) {
                Capture cap;
                size_t end_pos = 0;
                if (!m.match(anchor, tmpl.elements, 0, cap, &end_pos)) continue;
                if (cap.name_first < 0) continue;

                int span_last = cap.name_last;
                std::optional<int> year;
                if (cap.year_token == cap.name_last + 1) {
                    // template consumed the year right after the name
                    span_last = cap.year_token;
                    year = cap.year;
                } else if (cap.year_token > cap.name_last + 1 &&
                           cap.year_token < static_cast<int>(toks.size())) {
                    // [date] with day/month tokens between name and year
                    span_last = cap.year_token;
                    year = cap.year;
                } else if (static_cast<size_t>(cap.name_last + 1) < toks.size() &&
                           is_year_token(toks[cap.name_last + 1].core)) {
                    span_last = cap.name_last + 1;
                    year = std::stoi(toks[cap.name_last + 1].core);
                }

                size_t b = toks[static_cast<size_t>(cap.name_first)].begin;
                size_t e = toks[static_cast<size_t>(span_last)].end;
                if (!seen_spans.insert({b, e}).second) continue;
                EntityMention mention;
                mention.doc_id = ct.doc_id;
                mention.surface = ct.text.substr(b, e - b);
                mention.start = b;
                mention.end = e;
                mention.year = year;
                mention.rule_id = tmpl.rule_id;
                out.push_back(std::move(mention));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EntityMention& a, const EntityMention& b) {
        if (a.start != b.start) return a.start < b.start;
        return a.end < b.end;
    });
    return out;
}

std::vector<RelationMention> extract_relations(const CanonicalText& ct,
                                               const std::vector<EntityMention>& mentions,
                                               const RuleSet& rules) {
    std::vector<RelationMention> out;
    if (mentions.empty()) return out;
    const auto toks = tokenize(ct.text);
    std::unordered_map<size_t, size_t> token_by_begin;
    for (size_t i = 0; i < toks.size(); ++i) token_by_begin[toks[i].begin] = i;

    // Heading occurrences per heading rule, computed once per document.
    std::map<std::string, std::vector<size_t>> heading_ends;
    for (const auto& r : rules.relation_rules) {
        if (r.heading.empty() || heading_ends.count(r.heading)) continue;
        auto words = split_ws(r.heading);
        std::vector<size_t> ends;
        for (size_t i = 0; i + words.size() <= toks.size(); ++i) {
            bool ok = true;
            for (size_t k = 0; k < words.size(); ++k) {
                if (toks[i + k].core != words[k]) {
                    ok = false;
                    break;
                }
            }
            if (ok) ends.push_back(i + words.size());
        }
        heading_ends[r.heading] = std::move(ends);
    }

    Matcher matcher{toks, nullptr, std::nullopt};
    for (const auto& mention : mentions) {
        auto it = token_by_begin.find(mention.start);
        if (it == token_by_begin.end()) {
            throw DataError("mention span does not align with canonical text tokens: " +
                            mention.surface);
        }
        size_t first_tok = it->second;
        // The name part ends at the last act/ordinance token inside the span.
        size_t name_last = first_tok;
        for (size_t k = first_tok; k < toks.size() && toks[k].end <= mention.end; ++k) {
            if (is_act_terminator(toks[k].core)) name_last = k;
        }

        const RelationRule* hit = nullptr;
        for (const auto& r : rules.relation_rules) {
            if (!r.heading.empty()) {
                for (size_t occ_end : heading_ends[r.heading]) {
                    if (occ_end <= first_tok &&
                        first_tok - occ_end <= static_cast<size_t>(r.scope_tokens)) {
                        hit = &r;
                        break;
                    }
                }
            } else {
                size_t min_len = 0, max_len = 0;
                element_length_bounds(r.prefix, nullptr, &min_len, &max_len);
                bool prefix_ok = r.prefix.empty();
                Matcher exact{toks, nullptr, first_tok};
                for (size_t len = min_len; len <= max_len && !prefix_ok; ++len) {
                    if (len > first_tok) break;
                    Capture cap;
                    size_t end_pos = 0;
                    if (exact.match(first_tok - len, r.prefix, 0, cap, &end_pos)) {
                        prefix_ok = true;
                    }
                }
                if (!prefix_ok) continue;
                if (!r.suffix.empty()) {
                    Capture cap;
                    size_t end_pos = 0;
                    if (!matcher.match(name_last + 1, r.suffix, 0, cap, &end_pos)) continue;
                }
                hit = &r;
            }
            if (hit) break;
        }

        RelationMention rel;
        rel.doc_id = mention.doc_id;
        rel.target = mention;
        if (hit) {
            rel.rtype = hit->rtype;
            rel.rule_id = hit->rule_id;
        } else {
            rel.rtype = RelationType::CIT;
            rel.rule_id = "default_cit";
        }
        if (rel.rtype == RelationType::AMD || rel.rtype == RelationType::PRP) {
            rel.event_year = mention.year;
        }
        out.push_back(std::move(rel));
    }
    return out;
}

}  // namespace leginet
