// Shared tokenization and stopword filtering. Every component that turns
// claim text into terms (specialization trees, the tf-idf baseline, the
// search index) goes through these functions so that query terms and
// indexed terms always agree.

#ifndef CLST_TEXT_HPP
#define CLST_TEXT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clst {

std::string to_lower(std::string_view s);

// True for tokens that never carry content, regardless of tagging.
// The list is fixed and versioned; the specialization-tree golden tests
// pin its behaviour, so additions require re-checking those.
bool is_stopword(std::string_view lowercased);

// Token made of digits only (optionally with '.' or ',' separators).
bool is_numeric_token(std::string_view token);

// No alphanumeric character at all.
bool is_punctuation_token(std::string_view token);

// POS-aware filter used on parsed claims. Removes stopwords, cardinal
// numbers (tag CD or all-digit surface form) and punctuation; lowercases
// what remains and preserves order. Demonstratives used as standalone
// nominals (tag DT) are kept: in claim prose "a system comprising this
// and that" they stand in for the actual components.
std::vector<std::string> filter_stopwords(
    const std::vector<std::pair<std::string, std::string>>& token_pos);

// Raw-text path for indexing and for the tf-idf baseline, where no POS
// tags exist. Splits on non-alphanumeric characters, lowercases, then
// drops stopwords, numeric tokens and (lacking tags) all demonstratives.
std::vector<std::string> tokenize_and_filter(std::string_view text);

// Plain word split without filtering; lowercased.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace clst

#endif
