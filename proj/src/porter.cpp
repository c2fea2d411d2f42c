#include "clst/porter.hpp"

#include <array>
#include <cstddef>

namespace clst {

namespace {

// "y" counts as a vowel when preceded by a consonant.
bool is_consonant(const std::string& w, std::size_t i) {
  char c = w[i];
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
  if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
  return true;
}

// m in [C](VC)^m[V], computed over w[0..len).
int measure(const std::string& w, std::size_t len) {
  std::size_t i = 0;
  while (i < len && is_consonant(w, i)) ++i;
  int m = 0;
  while (true) {
    while (i < len && !is_consonant(w, i)) ++i;
    if (i >= len) break;
    while (i < len && is_consonant(w, i)) ++i;
    ++m;
  }
  return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

bool double_consonant(const std::string& w, std::size_t len) {
  if (len < 2) return false;
  return w[len - 1] == w[len - 2] && is_consonant(w, len - 1);
}

// *o: stem ends consonant-vowel-consonant, final consonant not w, x or y.
bool cvc(const std::string& w, std::size_t len) {
  if (len < 3) return false;
  if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) ||
      !is_consonant(w, len - 1))
    return false;
  char c = w[len - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Within one step the longest matching suffix is the one obeyed; if its
// condition fails, the step makes no change.
bool apply_table(std::string& w, const Rule* rules, std::size_t count,
                 int min_measure) {
  const Rule* best = nullptr;
  for (std::size_t i = 0; i < count; ++i) {
    if (ends_with(w, rules[i].suffix) &&
        (!best || rules[i].suffix.size() > best->suffix.size()))
      best = &rules[i];
  }
  if (!best) return false;
  std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) <= min_measure) return false;
  w.resize(stem_len);
  w.append(best->replacement);
  return true;
}

void step_1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // keep
  } else if (ends_with(w, "s")) {
    w.pop_back();
  }
}

void step_1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.pop_back();
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed")) {
    if (has_vowel(w, w.size() - 2)) {
      w.resize(w.size() - 2);
      stripped = true;
    }
  } else if (ends_with(w, "ing")) {
    if (has_vowel(w, w.size() - 3)) {
      w.resize(w.size() - 3);
      stripped = true;
    }
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (double_consonant(w, w.size())) {
    char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop_back();
  } else if (measure(w, w.size()) == 1 && cvc(w, w.size())) {
    w.push_back('e');
  }
}

void step_1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

void step_2(std::string& w) {
  static constexpr std::array<Rule, 20> kRules{{
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  }};
  apply_table(w, kRules.data(), kRules.size(), 0);
}

void step_3(std::string& w) {
  static constexpr std::array<Rule, 7> kRules{{
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  }};
  apply_table(w, kRules.data(), kRules.size(), 0);
}

void step_4(std::string& w) {
  static constexpr std::array<Rule, 19> kRules{{
      {"al", ""},    {"ance", ""}, {"ence", ""}, {"er", ""},  {"ic", ""},
      {"able", ""},  {"ible", ""}, {"ant", ""},  {"ement", ""},
      {"ment", ""},  {"ent", ""},  {"ion", ""},  {"ou", ""},  {"ism", ""},
      {"ate", ""},   {"iti", ""},  {"ous", ""},  {"ive", ""}, {"ize", ""},
  }};
  const Rule* best = nullptr;
  for (const Rule& r : kRules) {
    if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
      best = &r;
  }
  if (!best) return;
  std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) <= 1) return;
  if (best->suffix == "ion" && stem_len > 0 && w[stem_len - 1] != 's' &&
      w[stem_len - 1] != 't')
    return;
  w.resize(stem_len);
}

void step_5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  int m = measure(w, w.size() - 1);
  if (m > 1 || (m == 1 && !cvc(w, w.size() - 1))) w.pop_back();
}

void step_5b(std::string& w) {
  if (measure(w, w.size()) > 1 && double_consonant(w, w.size()) &&
      w.back() == 'l')
    w.pop_back();
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  step_1a(w);
  step_1b(w);
  step_1c(w);
  step_2(w);
  step_3(w);
  step_4(w);
  step_5a(w);
  step_5b(w);
  return w;
}

}  // namespace clst
