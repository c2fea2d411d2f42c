// Claim-to-claim dependency extraction. Dependencies are written in free
// text ("according to any one of claims 3 to 5"); this module recognizes
// the reference phrasings, expands ranges and computes each claim's depth
// cd within the resulting structure.

#ifndef CLST_CLAIM_GRAPH_HPP
#define CLST_CLAIM_GRAPH_HPP

#include <map>
#include <string>
#include <vector>

#include "clst/corpus.hpp"

namespace clst {

struct RefDiagnostic {
  int claim_num = 0;   // claim whose text produced the reference
  int referenced = 0;  // the dropped reference
  std::string reason;  // "forward-or-self" or "unknown-claim"
};

// All claim numbers referenced by the text, deduplicated and ascending.
// Ranges ("claims 3 to 5", "claims 3 - 6") are expanded; "the preceding
// claims" without explicit numbers expands to 1..own_number-1. References
// at or above own_number are dropped and reported through diags.
std::vector<int> extract_parent_refs(const std::string& claim_text,
                                     int own_number,
                                     std::vector<RefDiagnostic>* diags = nullptr);

struct ClaimGraph {
  std::vector<int> nodes;                // ascending claim numbers
  std::map<int, std::vector<int>> parents;  // empty list = independent claim
};

ClaimGraph build_claim_graph(const ClaimDocument& doc,
                             std::vector<RefDiagnostic>* diags = nullptr);

// cd = 1 for independent claims, otherwise 1 + max over parents.
std::map<int, int> claim_depth(const ClaimGraph& graph);

}  // namespace clst

#endif
