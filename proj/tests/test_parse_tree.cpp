#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "clst/parse_tree.hpp"
#include "clst/text.hpp"

using namespace clst;

TEST_CASE("reads a flat noun phrase") {
  ParseTree t = read_ptb("(NP (DT the) (NN system))");
  CHECK(t.label == "NP");
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].label == "DT");
  CHECK(t.children[0].token == "the");
  CHECK(t.children[1].token == "system");
  auto toks = tokens(t);
  REQUIRE(toks.size() == 2);
  CHECK(toks[0] == std::pair<std::string, std::string>{"the", "DT"});
  CHECK(toks[1] == std::pair<std::string, std::string>{"system", "NN"});
}

TEST_CASE("single leaf tree") {
  ParseTree t = read_ptb("(NN system)");
  CHECK(t.is_leaf());
  CHECK(tokens(t).size() == 1);
}

TEST_CASE("unbalanced input fails with an offset") {
  CHECK_THROWS_AS(read_ptb("(NP (DT the)"), PtbError);
  try {
    read_ptb("(NP (DT the)");
  } catch (const PtbError& e) {
    CHECK(e.offset == 12);  // end of input
  }
  CHECK_THROWS_AS(read_ptb("(NP (DT the) (NN system)) junk"), PtbError);
  CHECK_THROWS_AS(read_ptb("()"), PtbError);
  CHECK_THROWS_AS(read_ptb("(NP x (NN y))"), PtbError);
}

TEST_CASE("whitespace between tokens is not significant") {
  ParseTree a = read_ptb("(NP (DT the) (NN system))");
  ParseTree b = read_ptb("(NP\n   (DT the)\n   (NN   system)\n)");
  CHECK(write_ptb(a) == write_ptb(b));
}

TEST_CASE("retag corrects verb-tagged said") {
  ParseTree t = read_ptb(
      "(VP (VBN characterized) (PP (IN in) (SBAR (IN that) (S (NP (VBD said) "
      "(NNS sectors)) (VP (VBP are) (VP (VBN buried)))))))");
  ParseTree r = retag(t);
  auto toks = tokens(r);
  bool found = false;
  for (const auto& [token, pos] : toks) {
    if (token == "said") {
      found = true;
      CHECK(pos == "JJ");
    }
  }
  CHECK(found);
}

TEST_CASE("retag leaves trees without verb-tagged said untouched") {
  ParseTree t = read_ptb("(NP (JJ said) (NN pump))");
  CHECK(write_ptb(retag(t)) == write_ptb(t));
}

TEST_CASE("verb-tagged claim before a cardinal becomes a noun") {
  ParseTree t = read_ptb("(PP (IN of) (NP (VB claim) (CD 3)))");
  ParseTree r = retag(t);
  CHECK(r.children[1].children[0].label == "NN");
  ParseTree t2 = read_ptb("(PP (IN of) (NP (VBZ claims) (CD 3)))");
  CHECK(retag(t2).children[1].children[0].label == "NNS");
  // no cardinal follows: left as a verb
  ParseTree t3 = read_ptb("(S (NP (PRP We)) (VP (VB claim) (NP (NN priority))))");
  CHECK(write_ptb(retag(t3)) == write_ptb(t3));
}

TEST_CASE("retag is idempotent and shape preserving") {
  const char* samples[] = {
      "(S (NP (VBD said) (NNS sectors)) (VP (VBP are) (VP (VBN buried))))",
      "(NP (DT the) (NN system))",
      "(PP (IN of) (NP (VB claim) (CD 3)))",
      "(VP (VBG claimed))",
  };
  for (const char* s : samples) {
    ParseTree once = retag(read_ptb(s));
    ParseTree twice = retag(once);
    CHECK(write_ptb(once) == write_ptb(twice));
    // tokens unchanged by retagging
    auto before = tokens(read_ptb(s));
    auto after = tokens(once);
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i)
      CHECK(before[i].first == after[i].first);
  }
}

TEST_CASE("serialize_tags walks pre-order") {
  TagString tags = serialize_tags(read_ptb("(NP (DT the) (NN system))"));
  REQUIRE(tags.tags.size() == 3);
  CHECK(tags.tags[0].label == "NP");
  CHECK(tags.tags[0].kind == TagKind::category);
  CHECK(tags.tags[1].label == "DT");
  CHECK(tags.tags[1].token == "the");
  CHECK(tags.tags[2].label == "NN");
  CHECK(tags.tags[2].token == "system");

  TagString deep = serialize_tags(read_ptb(
      "(S (NP (NN system)) (VP (VBG comprising) (NP (NN pump))))"));
  std::vector<std::string> labels;
  for (const Tag& t : deep.tags) labels.push_back(t.label);
  CHECK(labels == std::vector<std::string>{"S", "NP", "NN", "VP", "VBG", "NP",
                                           "NN"});
}

TEST_CASE("tag string restricted to leaves equals tokens()") {
  ParseTree t = read_ptb(
      "(S (NP (DT a) (NN system)) (VP (VBZ is) (ADJP (JJ red))))");
  TagString tags = serialize_tags(t);
  auto toks = tokens(t);
  std::size_t leaf_idx = 0;
  for (const Tag& tag : tags.tags) {
    if (tag.kind != TagKind::pos) continue;
    REQUIRE(leaf_idx < toks.size());
    CHECK(tag.token == toks[leaf_idx].first);
    CHECK(tag.label == toks[leaf_idx].second);
    ++leaf_idx;
  }
  CHECK(leaf_idx == toks.size());
}

TEST_CASE("parse sidecar loads and looks up by doc and claim") {
  std::ostringstream file;
  file << R"x({"doc_id":"EP1","claim_num":1,"ptb":"(NN pump)"})x" << "\n"
       << R"x({"doc_id":"EP1","claim_num":2,"ptb":"(NN valve)"})x" << "\n";
  std::string path = "/tmp/clst_test_parses.jsonl";
  {
    std::ofstream out(path);
    out << file.str();
  }
  ParseSet set = load_parses(path);
  CHECK(set.size() == 2);
  REQUIRE(set.find("EP1", 2) != nullptr);
  CHECK(set.find("EP1", 2)->token == "valve");
  CHECK(set.find("EP1", 3) == nullptr);
  CHECK(set.find("EP9", 1) == nullptr);
}

TEST_CASE("stopword filter follows the tagged token list") {
  // "Method according to one or more of the preceding claims 25 to 36"
  std::vector<std::pair<std::string, std::string>> toks = {
      {"Method", "NN"}, {"according", "VBG"}, {"to", "TO"}, {"one", "CD"},
      {"or", "CC"},     {"more", "JJR"},      {"of", "IN"}, {"the", "DT"},
      {"preceding", "JJ"}, {"claims", "NNS"}, {"25", "CD"}, {"to", "TO"},
      {"36", "CD"}};
  CHECK(filter_stopwords(toks) ==
        std::vector<std::string>{"method", "according", "more", "preceding",
                                 "claims"});
}

TEST_CASE("stopword filter edge cases") {
  CHECK(filter_stopwords({{"of", "IN"}, {"the", "DT"}}).empty());
  CHECK(filter_stopwords({{"quadratic", "JJ"},
                          {"or", "CC"},
                          {"linear", "JJ"},
                          {"programming", "NN"}}) ==
        std::vector<std::string>{"quadratic", "linear", "programming"});
  // nominal "one" stays, cardinal "one" goes
  CHECK(filter_stopwords({{"an", "DT"}, {"optimum", "JJ"}, {"one", "NN"}}) ==
        std::vector<std::string>{"optimum", "one"});
  CHECK(filter_stopwords({{"one", "CD"}, {"pump", "NN"}}) ==
        std::vector<std::string>{"pump"});
  // demonstratives survive only as DT
  CHECK(filter_stopwords({{"this", "DT"}, {"and", "CC"}, {"that", "DT"}}) ==
        std::vector<std::string>{"this", "that"});
  CHECK(filter_stopwords({{"such", "JJ"}, {"that", "IN"}}) ==
        std::vector<std::string>{"such"});
  CHECK(filter_stopwords({{",", ","}, {".", "."}}).empty());
}
