#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leginet/canonicalize.hpp"

namespace leginet {

enum class RelationType { TIT, CIT, AMD, PRP, FRP };

std::string_view to_string(RelationType t);
RelationType relation_type_from_string(std::string_view s);

/// Pattern element kinds: literal word or one of the six placeholders
/// [keyword] [act name] [year] [date] [any phrase] [any number].
enum class ElementKind { literal, keyword, act_name, year, date, any_phrase, any_number };

struct TemplateElement {
    ElementKind kind;
    std::string literal;  // set for ElementKind::literal
};

struct Template {
    std::string rule_id;
    std::string pattern;
    std::vector<TemplateElement> elements;
};

struct Stratum {
    int year_lo = 0;
    int year_hi = 0;
    std::vector<std::string> keywords;
    std::vector<Template> entity_templates;

    bool contains(int year) const { return year >= year_lo && year <= year_hi; }
};

/// Either a context pattern containing one [act name] slot, matched around a
/// mention, or a heading rule: mentions within scope_tokens after an
/// occurrence of the heading phrase take this relation type.
struct RelationRule {
    std::string rule_id;
    RelationType rtype = RelationType::CIT;
    std::string pattern;  // empty for heading rules
    std::vector<TemplateElement> prefix;  // elements before [act name]
    std::vector<TemplateElement> suffix;  // elements after [act name]
    std::string heading;
    int scope_tokens = 120;
};

struct RuleSet {
    std::vector<Stratum> strata;
    std::vector<RelationRule> relation_rules;
    std::vector<std::string> warnings;
};

RuleSet compile_rules(const std::string& path);
RuleSet compile_rules_from_json_text(std::string_view json_text);

struct EntityMention {
    std::string doc_id;
    std::string surface;  // captured act name, including the year when present
    size_t start = 0;     // character offsets into the canonical text
    size_t end = 0;
    std::optional<int> year;
    std::string rule_id;
};

struct RelationMention {
    std::string doc_id;
    RelationType rtype = RelationType::CIT;
    EntityMention target;
    std::optional<int> event_year;
    std::string rule_id;
};

/// Apply the stratum matching doc_year (all strata when unknown), scanning
/// left to right. [act name] captures up to 12 tokens ending at the nearest
/// "act"/"ordinance" token; a directly following 4-digit year joins the
/// surface. Duplicate (surface, span) pairs are removed.
std::vector<EntityMention> extract_entities(const CanonicalText& ct, std::optional<int> doc_year,
                                            const RuleSet& rules);

/// Classify every mention by its surrounding context: first matching relation
/// rule wins; a mention no rule matches defaults to CIT. event_year is the
/// target mention's year for AMD/PRP, unknown otherwise.
std::vector<RelationMention> extract_relations(const CanonicalText& ct,
                                               const std::vector<EntityMention>& mentions,
                                               const RuleSet& rules);

}  // namespace leginet
