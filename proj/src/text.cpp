#include "clst/text.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace clst {

namespace {

// Version 1 of the shipped stopword list. It is a conventional English
// function-word list adjusted for claim language: forms of "be" and
// comparatives stay (claims use "is"/"more" contentfully, e.g. "the
// solution is considered an optimum one"), while claim boilerplate
// ("said", "characterized", modals, "provide") is removed. "one" is not
// listed; cardinal uses are caught by the CD/numeral rule and nominal
// uses ("an optimum one") are kept.
const std::unordered_set<std::string>& stopword_set() {
  static const std::unordered_set<std::string> kStopwords = {
      // articles, conjunctions
      "a", "an", "the", "and", "or", "but", "nor", "not", "no",
      // prepositions
      "of", "to", "in", "on", "at", "by", "for", "from", "with", "within",
      "without", "into", "onto", "over", "under", "between", "among",
      "through", "during", "before", "after", "above", "below", "up", "down",
      "out", "off", "than", "as", "via", "per", "upon", "about", "against",
      "toward", "towards", "across", "along", "around", "behind", "beside",
      "besides", "near", "amid", "unto",
      // demonstratives (kept when tagged DT, see filter_stopwords)
      "this", "that", "these", "those",
      // wh- and subordinators
      "which", "who", "whom", "whose", "what", "when", "where", "why", "how",
      "whether", "while", "whereas", "if", "then", "else", "so", "because",
      "since", "until", "unless", "although", "though",
      // claim-style connectives
      "wherein", "whereby", "hereby", "herein", "thereof", "therein",
      "thereto", "thereby", "therefor", "hereinafter",
      // pronouns
      "it", "its", "itself", "they", "them", "their", "theirs", "themselves",
      "he", "him", "his", "she", "her", "hers", "we", "us", "our", "ours",
      "you", "your", "yours", "i", "me", "my", "mine",
      // modals and auxiliary do
      "can", "could", "may", "might", "must", "shall", "should", "will",
      "would", "do", "does", "did", "done", "doing",
      // claim boilerplate
      "provide", "provides", "provided", "providing", "said", "claimed",
      "characterized", "characterised",
      // quantifiers
      "each", "every", "any", "some", "all", "both", "either", "neither",
      "another", "other", "same",
      // adverbial glue
      "also", "too", "very", "just", "only", "even", "still", "yet", "again",
      "further", "furthermore", "moreover", "thus", "hence", "therefore",
      "accordingly", "there", "here", "now", "ever", "never", "always",
      "often",
  };
  return kStopwords;
}

bool is_demonstrative(std::string_view w) {
  return w == "this" || w == "that" || w == "these" || w == "those";
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_stopword(std::string_view lowercased) {
  return stopword_set().count(std::string(lowercased)) > 0;
}

bool is_numeric_token(std::string_view token) {
  bool saw_digit = false;
  for (unsigned char c : token) {
    if (std::isdigit(c)) {
      saw_digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return saw_digit;
}

bool is_punctuation_token(std::string_view token) {
  return std::none_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

std::vector<std::string> filter_stopwords(
    const std::vector<std::pair<std::string, std::string>>& token_pos) {
  std::vector<std::string> out;
  out.reserve(token_pos.size());
  for (const auto& [token, pos] : token_pos) {
    if (is_punctuation_token(token)) continue;
    if (pos == "CD" || is_numeric_token(token)) continue;
    std::string low = to_lower(token);
    if (is_stopword(low)) {
      if (!(pos == "DT" && is_demonstrative(low))) continue;
    }
    out.push_back(std::move(low));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> tokenize_and_filter(std::string_view text) {
  std::vector<std::string> out;
  for (std::string& w : tokenize(text)) {
    if (is_numeric_token(w) || is_stopword(w)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace clst
