// Folding a parsed claim into a specialization tree. Chunk patterns over
// the tag string mark where a new token group starts: composition
// patterns ("a system comprising this and that") attach the new group as
// a sibling child of the current head, specialization patterns ("which
// ...", "characterized in that ...") deepen the chain under the most
// recent group. Node geometry (depth nd, height nh) plus the claim depth
// cd gives every word occurrence its position triple.

#ifndef CLST_SPEC_TREE_HPP
#define CLST_SPEC_TREE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "clst/parse_tree.hpp"

namespace clst {

enum class PatternKind { composition, specialization };

// A split point over the claim's leaf sequence. Leaves in
// [trigger_begin, content_begin) are pattern material (the trigger verb,
// relativizer, multiword preposition) and belong to no token group; the
// new group starts at content_begin.
struct Boundary {
  PatternKind kind = PatternKind::composition;
  std::size_t trigger_begin = 0;
  std::size_t content_begin = 0;
};

// Boundaries in leaf order, deduplicated and merged where triggers chain
// into each other ("which is on top of ..."). content_begin is strictly
// increasing across the result. Deterministic for identical tag strings.
std::vector<Boundary> match_patterns(const TagString& tags);

struct SpecNode {
  std::vector<std::string> tokens;  // lowercased content words
  std::vector<SpecNode> children;
};

struct SpecializationTree {
  SpecNode root;
  int claim_depth = 1;  // cd of the claim this tree came from
};

SpecializationTree build_spec_tree(const ParseTree& tree, int cd);

struct WordPosition {
  int nd = 1;  // node depth, root = 1
  int nh = 1;  // node height, leaf = 1
  int cd = 1;
};

// word -> multiset of positions, accumulated over all claims of a document.
using PositionIndex = std::map<std::string, std::vector<WordPosition>>;

void accumulate_word_positions(const SpecializationTree& tree,
                               PositionIndex& index);
PositionIndex word_positions(const std::vector<SpecializationTree>& trees);

int tree_depth(const SpecNode& root);

// Debug dump: one node per line, two-space indent per level.
std::string dump_spec_tree(const SpecializationTree& tree);

}  // namespace clst

#endif
