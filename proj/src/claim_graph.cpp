#include "clst/claim_graph.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace clst {

namespace {

// Connectors allowed inside a claim-number list. "to"/"through" and the
// three dash forms make a range; comma/"or"/"and" enumerate. The dashes
// are matched as literal UTF-8 byte sequences.
const std::regex kNumberList(
    R"(\bclaims?\s+(\d+(?:\s*(?:to|through|or|and|,|-|–|—)\s*\d+)*))",
    std::regex::icase);

// "the preceding claims" (or "any one of / one or more of the preceding
// claims") with no explicit numbers following.
const std::regex kPreceding(R"(\bpreceding\s+claims?\b(?!\s*\d))",
                            std::regex::icase);
const std::regex kPrecedingSingular(R"(\bpreceding\s+claim\b(?!s))",
                                    std::regex::icase);

bool is_range_connector(const std::string& c) {
  std::string low;
  for (char ch : c)
    if (!std::isspace(static_cast<unsigned char>(ch))) low.push_back(ch);
  std::transform(low.begin(), low.end(), low.begin(), ::tolower);
  return low == "to" || low == "through" || low == "-" ||
         low == "\xe2\x80\x93" /* – */ || low == "\xe2\x80\x94" /* — */;
}

void add_ref(std::set<int>& refs, int value, int own_number,
             std::vector<RefDiagnostic>* diags) {
  if (value >= own_number) {
    if (diags) diags->push_back({own_number, value, "forward-or-self"});
    return;
  }
  if (value >= 1) refs.insert(value);
}

// Parses "3 to 5", "3 – 6", "1, 2 or 3" into individual numbers.
void expand_number_list(const std::string& list, int own_number,
                        std::set<int>& refs,
                        std::vector<RefDiagnostic>* diags) {
  static const std::regex token(R"(\d+|to|through|or|and|,|-|–|—)",
                                std::regex::icase);
  int prev = -1;
  bool range_pending = false;
  for (auto it = std::sregex_iterator(list.begin(), list.end(), token);
       it != std::sregex_iterator(); ++it) {
    std::string t = it->str();
    if (std::isdigit(static_cast<unsigned char>(t[0]))) {
      int value = std::stoi(t);
      if (range_pending && prev >= 0) {
        for (int v = prev + 1; v <= value; ++v)
          add_ref(refs, v, own_number, diags);
      } else {
        add_ref(refs, value, own_number, diags);
      }
      prev = value;
      range_pending = false;
    } else {
      range_pending = is_range_connector(t);
    }
  }
}

}  // namespace

std::vector<int> extract_parent_refs(const std::string& claim_text,
                                     int own_number,
                                     std::vector<RefDiagnostic>* diags) {
  std::set<int> refs;
  bool saw_numbers = false;
  for (auto it = std::sregex_iterator(claim_text.begin(), claim_text.end(),
                                      kNumberList);
       it != std::sregex_iterator(); ++it) {
    saw_numbers = true;
    expand_number_list((*it)[1].str(), own_number, refs, diags);
  }
  if (!saw_numbers) {
    if (std::regex_search(claim_text, kPrecedingSingular)) {
      add_ref(refs, own_number - 1, own_number, diags);
    } else if (std::regex_search(claim_text, kPreceding)) {
      for (int v = 1; v < own_number; ++v) add_ref(refs, v, own_number, diags);
    }
  }
  return {refs.begin(), refs.end()};
}

ClaimGraph build_claim_graph(const ClaimDocument& doc,
                             std::vector<RefDiagnostic>* diags) {
  ClaimGraph graph;
  std::set<int> known;
  for (const Claim& c : doc.claims) {
    graph.nodes.push_back(c.num);
    known.insert(c.num);
  }
  for (const Claim& c : doc.claims) {
    std::vector<int> refs = extract_parent_refs(c.text, c.num, diags);
    std::vector<int>& parents = graph.parents[c.num];
    for (int r : refs) {
      if (!known.count(r)) {
        if (diags) diags->push_back({c.num, r, "unknown-claim"});
        continue;
      }
      parents.push_back(r);
    }
  }
  return graph;
}

std::map<int, int> claim_depth(const ClaimGraph& graph) {
  std::map<int, int> depth;
  // Parent numbers are strictly smaller, so ascending claim-number order
  // is a topological order.
  for (int node : graph.nodes) {
    int best = 0;
    auto it = graph.parents.find(node);
    if (it != graph.parents.end()) {
      for (int p : it->second) best = std::max(best, depth.at(p));
    }
    depth[node] = best + 1;
  }
  return depth;
}

}  // namespace clst
