#include "clst/spec_tree.hpp"

#include <algorithm>
#include <unordered_set>

#include "clst/text.hpp"

namespace clst {

namespace {

// Node view over a TagString: pre-order entries plus leaf spans, enough
// to walk the bracketing without the original ParseTree.
struct View {
  const Tag* tag = nullptr;
  std::size_t leaf_begin = 0;
  std::size_t leaf_end = 0;  // exclusive
  std::vector<std::size_t> children;
};

struct TagTree {
  std::vector<View> nodes;  // pre-order; 0 is the root
  std::vector<const Tag*> leaves;

  const std::string& leaf_token(std::size_t i) const {
    return leaves[i]->token;
  }
};

TagTree build_view(const TagString& tags) {
  TagTree t;
  t.nodes.reserve(tags.tags.size());
  std::vector<std::size_t> stack;
  for (const Tag& tag : tags.tags) {
    while (!stack.empty() &&
           t.nodes[stack.back()].tag->depth >= tag.depth)
      stack.pop_back();
    std::size_t idx = t.nodes.size();
    t.nodes.push_back({&tag, t.leaves.size(), t.leaves.size(), {}});
    if (!stack.empty()) t.nodes[stack.back()].children.push_back(idx);
    stack.push_back(idx);
    if (tag.kind == TagKind::pos) {
      t.leaves.push_back(&tag);
      for (std::size_t n : stack) ++t.nodes[n].leaf_end;
    }
  }
  return t;
}

const std::unordered_set<std::string>& composition_heads() {
  static const std::unordered_set<std::string> kHeads = {
      "comprising", "comprises", "comprise", "including", "includes",
      "include",    "containing", "contains", "contain",   "consisting",
      "consists",   "consist",    "having",   "composed",  "made"};
  return kHeads;
}

bool is_wh_trigger(const std::string& low) {
  return low == "which" || low == "wherein" || low == "whereby";
}

bool is_copula(const std::string& low) {
  return low == "is" || low == "are" || low == "was" || low == "were" ||
         low == "be" || low == "been" || low == "being" || low == "am";
}

bool is_verb_tag(const std::string& label) {
  return label.size() >= 2 && label[0] == 'V' && label[1] == 'B';
}

struct Matcher {
  const TagTree& t;
  std::vector<Boundary> raw;

  const View& node(std::size_t i) const { return t.nodes[i]; }
  std::string low_leaf(std::size_t leaf) const {
    return to_lower(t.leaf_token(leaf));
  }
  bool is_cat(std::size_t i, const char* label) const {
    return node(i).tag->kind == TagKind::category && node(i).tag->label == label;
  }

  // Coordinated NP complement: the direct NP children when the NP is a
  // coordination, otherwise the NP itself.
  std::vector<std::size_t> conjuncts(std::size_t np) const {
    std::vector<std::size_t> nps;
    bool coordinated = false;
    for (std::size_t c : node(np).children) {
      if (is_cat(c, "NP")) nps.push_back(c);
      if (node(c).tag->kind == TagKind::pos && node(c).tag->label == "CC")
        coordinated = true;
    }
    if (coordinated && nps.size() >= 2) return nps;
    return {np};
  }

  void match_composition(std::size_t vp) {
    // Head verb: first verb-tagged direct leaf child.
    std::size_t head_leaf = SIZE_MAX;
    std::size_t head_child = SIZE_MAX;
    for (std::size_t c : node(vp).children) {
      if (node(c).tag->kind == TagKind::pos && is_verb_tag(node(c).tag->label)) {
        head_leaf = node(c).leaf_begin;
        head_child = c;
        break;
      }
    }
    if (head_leaf == SIZE_MAX) return;
    if (!composition_heads().count(low_leaf(head_leaf))) return;

    // Complement: first direct NP after the head, or the NP inside a
    // directly following of-PP ("made of this"). Other prepositions do
    // not open component lists ("consisting in a reduction" stays put).
    std::size_t complement = SIZE_MAX;
    bool past_head = false;
    for (std::size_t c : node(vp).children) {
      if (c == head_child) {
        past_head = true;
        continue;
      }
      if (!past_head) continue;
      if (is_cat(c, "NP")) {
        complement = c;
        break;
      }
      if (is_cat(c, "PP") && node(c).leaf_begin < t.leaves.size() &&
          low_leaf(node(c).leaf_begin) == "of") {
        for (std::size_t g : node(c).children) {
          if (is_cat(g, "NP")) {
            complement = g;
            break;
          }
        }
        if (complement != SIZE_MAX) break;
      }
    }
    if (complement == SIZE_MAX) return;

    std::size_t prev_end = head_leaf;
    for (std::size_t conj : conjuncts(complement)) {
      if (node(conj).leaf_begin >= node(conj).leaf_end) continue;
      raw.push_back({PatternKind::composition, prev_end,
                     node(conj).leaf_begin});
      prev_end = node(conj).leaf_end;
    }
  }

  // Clause introduced by a trigger: if it splits into subject NP and
  // predicate VP, the predicate opens a further specialization group
  // (the subject is specialized by what is said about it). A leading
  // copula is trigger material.
  void add_clause_split(std::size_t s_node) {
    std::size_t subject = SIZE_MAX, predicate = SIZE_MAX;
    for (std::size_t c : node(s_node).children) {
      if (subject == SIZE_MAX && is_cat(c, "NP")) {
        subject = c;
      } else if (subject != SIZE_MAX && is_cat(c, "VP")) {
        predicate = c;
        break;
      }
    }
    if (predicate == SIZE_MAX) return;
    std::size_t begin = node(predicate).leaf_begin;
    std::size_t content = begin;
    if (content < node(predicate).leaf_end && is_copula(low_leaf(content)))
      ++content;
    if (content >= t.leaves.size()) return;
    raw.push_back({PatternKind::specialization, begin, content});
  }

  void match_wh_sbar(std::size_t sbar) {
    const View& n = node(sbar);
    if (n.leaf_begin >= n.leaf_end) return;
    if (!is_wh_trigger(low_leaf(n.leaf_begin))) return;
    std::size_t content = n.leaf_begin + 1;
    // Find the clause body.
    std::size_t s_node = SIZE_MAX;
    for (std::size_t c : n.children) {
      if (is_cat(c, "S")) s_node = c;
    }
    if (s_node != SIZE_MAX) {
      const auto& s_children = node(s_node).children;
      if (!s_children.empty() && is_cat(s_children.front(), "VP")) {
        // Relative clause with a subject gap: "which is ...". The
        // copula after the relativizer is glue, not content.
        std::size_t vp = s_children.front();
        if (node(vp).leaf_begin < node(vp).leaf_end &&
            is_copula(low_leaf(node(vp).leaf_begin))) {
          content = node(vp).leaf_begin + 1;
        } else {
          content = node(vp).leaf_begin;
        }
      } else {
        content = node(s_node).leaf_begin;
        add_clause_split(s_node);
      }
    }
    if (content >= t.leaves.size()) return;
    raw.push_back({PatternKind::specialization, n.leaf_begin, content});
  }

  void match_pp(std::size_t pp, std::size_t parent) {
    const View& n = node(pp);
    if (n.leaf_begin >= n.leaf_end) return;
    // "following a completed NP": an earlier NP sibling, an NP parent,
    // or predicative position after a copula ("which is on top of ...").
    bool after_np = false;
    for (std::size_t sib : node(parent).children) {
      if (sib == pp) break;
      if (is_cat(sib, "NP") || is_cat(sib, "VP")) after_np = true;
    }
    bool copular = is_cat(parent, "VP") &&
                   node(parent).leaf_begin < node(parent).leaf_end &&
                   is_copula(low_leaf(node(parent).leaf_begin));
    if (!after_np && !copular && !is_cat(parent, "NP")) return;

    std::string first = low_leaf(n.leaf_begin);
    if (first == "with") {
      std::size_t content = n.leaf_begin + 1;
      if (content >= n.leaf_end) return;
      raw.push_back({PatternKind::specialization, n.leaf_begin, content});
    } else if (first == "on" && n.leaf_begin + 2 < n.leaf_end &&
               low_leaf(n.leaf_begin + 1) == "top" &&
               low_leaf(n.leaf_begin + 2) == "of") {
      std::size_t content = n.leaf_begin + 3;
      if (content >= n.leaf_end) return;
      raw.push_back({PatternKind::specialization, n.leaf_begin, content});
    }
  }

  // "characterized in that" over the raw leaf sequence; bracketing of the
  // phrase itself varies too much between parses to rely on.
  void match_characterized_phrases() {
    for (std::size_t i = 0; i + 2 < t.leaves.size(); ++i) {
      std::string w = low_leaf(i);
      if ((w == "characterized" || w == "characterised") &&
          low_leaf(i + 1) == "in" && low_leaf(i + 2) == "that") {
        if (i + 3 >= t.leaves.size()) continue;
        raw.push_back({PatternKind::specialization, i, i + 3});
        // Clause body: the S introduced right after "that", if any.
        std::size_t best = SIZE_MAX;
        for (std::size_t nidx = 0; nidx < t.nodes.size(); ++nidx) {
          if (!is_cat(nidx, "S")) continue;
          if (node(nidx).leaf_begin == i + 3) best = nidx;
        }
        if (best != SIZE_MAX) add_clause_split(best);
      }
    }
  }

  void run() {
    match_characterized_phrases();
    std::vector<std::size_t> wh_seen;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const View& n = node(i);
      if (n.tag->kind != TagKind::category) continue;
      const std::string& label = n.tag->label;
      if (label == "VP") match_composition(i);
      if (label == "SBAR" || label == "WHNP" || label == "WHADVP") {
        // Outermost match wins when SBAR wraps its own WH phrase.
        if (std::find(wh_seen.begin(), wh_seen.end(), n.leaf_begin) ==
            wh_seen.end()) {
          std::size_t before = raw.size();
          match_wh_sbar(i);
          if (raw.size() > before) wh_seen.push_back(n.leaf_begin);
        }
      }
    }
    // PP triggers need the parent for the following-an-NP condition.
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      if (node(i).tag->kind != TagKind::category) continue;
      for (std::size_t c : node(i).children) {
        if (is_cat(c, "PP")) match_pp(c, i);
      }
    }
  }
};

std::vector<Boundary> merge_boundaries(std::vector<Boundary> raw,
                                       std::size_t leaf_count) {
  std::erase_if(raw, [&](const Boundary& b) {
    return b.content_begin >= leaf_count || b.trigger_begin > b.content_begin;
  });
  std::sort(raw.begin(), raw.end(), [](const Boundary& a, const Boundary& b) {
    if (a.content_begin != b.content_begin)
      return a.content_begin < b.content_begin;
    return a.trigger_begin < b.trigger_begin;
  });
  std::vector<Boundary> out;
  for (const Boundary& b : raw) {
    if (!out.empty()) {
      Boundary& prev = out.back();
      if (b.content_begin == prev.content_begin) {
        // Same split point: specialization wins, widest trigger kept.
        prev.trigger_begin = std::min(prev.trigger_begin, b.trigger_begin);
        if (b.kind == PatternKind::specialization)
          prev.kind = PatternKind::specialization;
        continue;
      }
      if (b.trigger_begin <= prev.content_begin) {
        // The next trigger starts before the previous group sees any
        // content: the triggers chain ("which is" + "on top of"); the
        // inner trigger decides kind and content.
        prev.trigger_begin = std::min(prev.trigger_begin, b.trigger_begin);
        prev.content_begin = b.content_begin;
        prev.kind = b.kind;
        continue;
      }
    }
    out.push_back(b);
  }
  return out;
}

std::vector<std::string> filter_leaf_range(const TagTree& t, std::size_t begin,
                                           std::size_t end) {
  std::vector<std::pair<std::string, std::string>> token_pos;
  for (std::size_t i = begin; i < end && i < t.leaves.size(); ++i)
    token_pos.emplace_back(t.leaves[i]->token, t.leaves[i]->label);
  return filter_stopwords(token_pos);
}

int node_height(const SpecNode& n) {
  int best = 0;
  for (const SpecNode& c : n.children) best = std::max(best, node_height(c));
  return best + 1;
}

void accumulate_rec(const SpecNode& n, int nd, int cd, PositionIndex& index) {
  int nh = node_height(n);
  for (const std::string& w : n.tokens)
    index[w].push_back({nd, nh, cd});
  for (const SpecNode& c : n.children) accumulate_rec(c, nd + 1, cd, index);
}

void dump_rec(const SpecNode& n, int indent, std::string& out) {
  out.append(2 * static_cast<std::size_t>(indent), ' ');
  for (std::size_t i = 0; i < n.tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += n.tokens[i];
  }
  out.push_back('\n');
  for (const SpecNode& c : n.children) dump_rec(c, indent + 1, out);
}

}  // namespace

std::vector<Boundary> match_patterns(const TagString& tags) {
  TagTree t = build_view(tags);
  Matcher m{t, {}};
  m.run();
  return merge_boundaries(std::move(m.raw), t.leaves.size());
}

SpecializationTree build_spec_tree(const ParseTree& tree, int cd) {
  TagString tags = serialize_tags(tree);
  TagTree t = build_view(tags);
  Matcher m{t, {}};
  m.run();
  std::vector<Boundary> bounds =
      merge_boundaries(std::move(m.raw), t.leaves.size());

  SpecializationTree result;
  result.claim_depth = cd;

  std::size_t root_end = bounds.empty() ? t.leaves.size() : bounds[0].trigger_begin;
  result.root.tokens = filter_leaf_range(t, 0, root_end);

  // Attachment state: composition adds a sibling child under the current
  // head; specialization deepens under the most recent group and moves
  // the head there. Paths of child indices stay valid as nodes are added.
  auto resolve = [&](const std::vector<std::size_t>& p) -> SpecNode* {
    SpecNode* n = &result.root;
    for (std::size_t i : p) n = &n->children[i];
    return n;
  };
  std::vector<std::size_t> head_path, last_path;

  for (std::size_t bi = 0; bi < bounds.size(); ++bi) {
    std::size_t seg_end = bi + 1 < bounds.size() ? bounds[bi + 1].trigger_begin
                                                 : t.leaves.size();
    std::vector<std::string> toks =
        filter_leaf_range(t, bounds[bi].content_begin, seg_end);
    if (toks.empty()) continue;
    std::vector<std::size_t>* parent_path =
        bounds[bi].kind == PatternKind::composition ? &head_path : &last_path;
    SpecNode* parent = resolve(*parent_path);
    parent->children.push_back(SpecNode{std::move(toks), {}});
    last_path = *parent_path;
    last_path.push_back(parent->children.size() - 1);
    if (bounds[bi].kind == PatternKind::specialization) head_path = last_path;
  }

  // A claim that opens directly with a trigger has no root content; the
  // first group becomes the root.
  if (result.root.tokens.empty() && result.root.children.size() == 1) {
    SpecNode child = std::move(result.root.children.front());
    result.root = std::move(child);
  }
  return result;
}

void accumulate_word_positions(const SpecializationTree& tree,
                               PositionIndex& index) {
  accumulate_rec(tree.root, 1, tree.claim_depth, index);
}

PositionIndex word_positions(const std::vector<SpecializationTree>& trees) {
  PositionIndex index;
  for (const SpecializationTree& t : trees)
    accumulate_word_positions(t, index);
  return index;
}

int tree_depth(const SpecNode& root) { return node_height(root); }

std::string dump_spec_tree(const SpecializationTree& tree) {
  std::string out;
  dump_rec(tree.root, 0, out);
  return out;
}

}  // namespace clst
