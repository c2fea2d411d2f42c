// Bracketed constituency trees: "(NP (DT the) (NN system))". Trees are an
// input artifact, read from a sidecar JSONL file that aligns one parse to
// each claim: {"doc_id": str, "claim_num": int, "ptb": str}.

#ifndef CLST_PARSE_TREE_HPP
#define CLST_PARSE_TREE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clst {

struct ParseNode {
  std::string label;                // POS tag on leaves, category otherwise
  std::string token;                // set iff leaf
  std::vector<ParseNode> children;

  bool is_leaf() const { return children.empty(); }
};

using ParseTree = ParseNode;

class PtbError : public std::runtime_error {
 public:
  PtbError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) +
                           ")"),
        offset(offset) {}
  std::size_t offset;
};

ParseTree read_ptb(std::string_view text);
std::string write_ptb(const ParseTree& tree);

// Deterministic POS correction for claim language: verb-tagged "said" /
// "claimed" become JJ; verb-tagged "claim"/"claims" directly followed by
// a cardinal number become NN/NNS. Shape and tokens are unchanged.
ParseTree retag(const ParseTree& tree);

enum class TagKind { category, pos };

struct Tag {
  std::string label;
  TagKind kind = TagKind::category;
  std::string token;  // set iff kind == pos
  int depth = 0;      // root = 0; makes the bracketing recoverable
};

struct TagString {
  std::vector<Tag> tags;
};

// Depth-first pre-order emission of every node's label; leaf entries
// carry their token.
TagString serialize_tags(const ParseTree& tree);

// Leaves in sentence order as (token, pos) pairs.
std::vector<std::pair<std::string, std::string>> tokens(const ParseTree& tree);

// Parse sidecar file, keyed by (doc_id, claim_num).
class ParseSet {
 public:
  void add(const std::string& doc_id, int claim_num, ParseTree tree);
  const ParseTree* find(const std::string& doc_id, int claim_num) const;
  std::size_t size() const { return parses_.size(); }

 private:
  std::map<std::pair<std::string, int>, ParseTree> parses_;
};

ParseSet load_parses(const std::string& path);

}  // namespace clst

#endif
