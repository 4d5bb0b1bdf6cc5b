#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "leginet/corpus.hpp"

namespace leginet {

/// A phrase that OCR merges from the page margin into the body text.
/// Occurrences within edit distance max_edit are deleted, except where they
/// fall inside a fuzzy occurrence of one of the keep_contexts (the places
/// the phrase legitimately belongs, e.g. a short-title clause).
struct MarginPhrase {
    std::string phrase;
    int max_edit = -1;  // -1: one edit per word of the phrase
    std::vector<std::string> keep_contexts;
};

struct CanonConfig {
    std::vector<std::string> delete_chars;  // removed outright (joins word parts)
    std::vector<std::string> space_chars;   // replaced by a space
    std::vector<MarginPhrase> margin_phrases;
    std::map<std::string, std::string> keyword_fixes;

    static CanonConfig defaults();
};

CanonConfig load_canon_config(const std::string& path);

struct CanonicalText {
    std::string doc_id;
    std::string text;
    std::vector<std::string> applied_steps;
};

/// Fixed step order: lowercase, special characters (parentheses exempt),
/// margin phrases, keyword fixes, whitespace collapse.
CanonicalText canonicalize_text(const Document& doc, const CanonConfig& cfg);

std::string canonicalize_string(std::string_view text, const CanonConfig& cfg);

/// Delete every window of `text` within edit distance max_edit of one of the
/// phrases, iterating on the shrinking string. The closest window goes first;
/// ties resolve leftmost, then longest.
std::string strip_margin_phrases(std::string_view text,
                                 const std::vector<std::string>& phrases, int max_edit);

/// Replace whole-word misspellings per the fix map ("aot" -> "act").
/// Never touches substrings inside longer words.
std::string fix_keyword_typos(std::string_view text,
                              const std::map<std::string, std::string>& fixes);

}  // namespace leginet
