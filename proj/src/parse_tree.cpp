#include "clst/parse_tree.hpp"

#include <cctype>
#include <fstream>
#include <unordered_set>

#include "json.hpp"

#include "clst/text.hpp"

namespace clst {

namespace {

struct PtbReader {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw PtbError(what, pos);
  }

  std::string read_atom() {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected label or token");
    return std::string(text.substr(start, pos - start));
  }

  ParseNode read_node() {
    skip_space();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    skip_space();
    ParseNode node;
    node.label = read_atom();
    bool saw_token = false;
    while (true) {
      skip_space();
      if (pos >= text.size()) fail("unbalanced brackets: missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == '(') {
        if (saw_token) fail("node mixes token and children");
        node.children.push_back(read_node());
      } else {
        if (!node.children.empty()) fail("node mixes token and children");
        if (saw_token) fail("leaf with more than one token");
        node.token = read_atom();
        saw_token = true;
      }
    }
    if (!saw_token && node.children.empty()) fail("node without content");
    return node;
  }
};

const std::unordered_set<std::string>& verb_tags() {
  static const std::unordered_set<std::string> kVerbTags = {
      "VB", "VBD", "VBN", "VBZ", "VBP", "VBG"};
  return kVerbTags;
}

void collect_leaves(ParseNode& node, std::vector<ParseNode*>& leaves) {
  if (node.is_leaf()) {
    leaves.push_back(&node);
    return;
  }
  for (ParseNode& child : node.children) collect_leaves(child, leaves);
}

void serialize_rec(const ParseNode& node, int depth, TagString& out) {
  Tag tag;
  tag.label = node.label;
  tag.depth = depth;
  if (node.is_leaf()) {
    tag.kind = TagKind::pos;
    tag.token = node.token;
  }
  out.tags.push_back(std::move(tag));
  for (const ParseNode& child : node.children)
    serialize_rec(child, depth + 1, out);
}

void write_rec(const ParseNode& node, std::string& out) {
  out.push_back('(');
  out += node.label;
  if (node.is_leaf()) {
    out.push_back(' ');
    out += node.token;
  } else {
    for (const ParseNode& child : node.children) {
      out.push_back(' ');
      write_rec(child, out);
    }
  }
  out.push_back(')');
}

}  // namespace

ParseTree read_ptb(std::string_view text) {
  PtbReader reader{text};
  ParseNode root = reader.read_node();
  reader.skip_space();
  if (reader.pos != text.size()) reader.fail("trailing input after tree");
  return root;
}

std::string write_ptb(const ParseTree& tree) {
  std::string out;
  write_rec(tree, out);
  return out;
}

ParseTree retag(const ParseTree& tree) {
  ParseTree out = tree;
  std::vector<ParseNode*> leaves;
  collect_leaves(out, leaves);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    ParseNode& leaf = *leaves[i];
    if (!verb_tags().count(leaf.label)) continue;
    std::string low = to_lower(leaf.token);
    if (low == "said" || low == "claimed") {
      leaf.label = "JJ";
    } else if (low == "claim" || low == "claims") {
      bool next_is_cd = i + 1 < leaves.size() && leaves[i + 1]->label == "CD";
      if (next_is_cd) leaf.label = (low == "claims") ? "NNS" : "NN";
    }
  }
  return out;
}

TagString serialize_tags(const ParseTree& tree) {
  TagString out;
  serialize_rec(tree, 0, out);
  return out;
}

std::vector<std::pair<std::string, std::string>> tokens(const ParseTree& tree) {
  std::vector<std::pair<std::string, std::string>> out;
  TagString tags = serialize_tags(tree);
  for (const Tag& t : tags.tags) {
    if (t.kind == TagKind::pos) out.emplace_back(t.token, t.label);
  }
  return out;
}

void ParseSet::add(const std::string& doc_id, int claim_num, ParseTree tree) {
  parses_[{doc_id, claim_num}] = std::move(tree);
}

const ParseTree* ParseSet::find(const std::string& doc_id,
                                int claim_num) const {
  auto it = parses_.find({doc_id, claim_num});
  return it == parses_.end() ? nullptr : &it->second;
}

ParseSet load_parses(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parse file: " + path);
  ParseSet set;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      nlohmann::json rec = nlohmann::json::parse(line);
      set.add(rec.at("doc_id").get<std::string>(),
              rec.at("claim_num").get<int>(),
              read_ptb(rec.at("ptb").get<std::string>()));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return set;
}

}  // namespace clst
