#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "clst/corpus.hpp"

using namespace clst;

namespace {

const char* kThreeDocs =
    R"({"doc_id":"EP1","family_id":"F1","language":"en","claims":[{"num":1,"text":"A pump."}]}
{"doc_id":"EP2","language":"en","claims":[{"num":1,"text":"A valve."},{"num":2,"text":"The valve of claim 1."}]}
{"doc_id":"EP3","family_id":"F3","language":"de","claims":[{"num":1,"text":"Eine Pumpe."}]}
)";

}  // namespace

TEST_CASE("corpus loads one document per line") {
  std::istringstream in(kThreeDocs);
  Corpus corpus = read_corpus(in, "mem");
  CHECK(corpus.num_documents() == 3);
  const ClaimDocument* ep2 = corpus.find("EP2");
  REQUIRE(ep2 != nullptr);
  CHECK(ep2->family_id == "EP2");  // defaults to doc_id
  CHECK(ep2->claims.size() == 2);
  CHECK(corpus.find("EP3")->language == "de");
  CHECK(corpus.find("nope") == nullptr);
}

TEST_CASE("empty corpus file") {
  std::istringstream in("");
  CHECK(read_corpus(in, "mem").num_documents() == 0);
}

TEST_CASE("duplicate doc_id names the id") {
  std::istringstream in(
      R"({"doc_id":"EP1","language":"en","claims":[{"num":1,"text":"A."}]}
{"doc_id":"EP2","language":"en","claims":[{"num":1,"text":"B."}]}
{"doc_id":"EP3","language":"en","claims":[{"num":1,"text":"C."}]}
{"doc_id":"EP1","language":"en","claims":[{"num":1,"text":"D."}]}
)");
  CHECK_THROWS_WITH_AS(read_corpus(in, "mem"),
                       doctest::Contains("\"EP1\""), CorpusError);
}

TEST_CASE("malformed line reports its line number") {
  std::istringstream in(
      "{\"doc_id\":\"EP1\",\"language\":\"en\",\"claims\":[{\"num\":1,\"text\":\"A.\"}]}\n"
      "not json\n");
  CHECK_THROWS_WITH_AS(read_corpus(in, "mem"), doctest::Contains("mem:2"),
                       CorpusError);
}

TEST_CASE("claim invariants enforced") {
  SUBCASE("non-increasing numbers") {
    std::istringstream in(
        R"({"doc_id":"EP1","language":"en","claims":[{"num":2,"text":"A."},{"num":2,"text":"B."}]})");
    CHECK_THROWS_AS(read_corpus(in, "mem"), CorpusError);
  }
  SUBCASE("empty claim text") {
    std::istringstream in(
        R"({"doc_id":"EP1","language":"en","claims":[{"num":1,"text":"  "}]})");
    CHECK_THROWS_AS(read_corpus(in, "mem"), CorpusError);
  }
}

TEST_CASE("corpus round-trips through save and load") {
  std::istringstream in(kThreeDocs);
  Corpus corpus = read_corpus(in, "mem");
  std::ostringstream saved;
  save_corpus(corpus, saved);
  std::istringstream again(saved.str());
  Corpus reloaded = read_corpus(again, "mem2");
  REQUIRE(reloaded.num_documents() == corpus.num_documents());
  for (const ClaimDocument& doc : corpus.documents()) {
    const ClaimDocument* other = reloaded.find(doc.doc_id);
    REQUIRE(other != nullptr);
    CHECK(other->family_id == doc.family_id);
    CHECK(other->language == doc.language);
    REQUIRE(other->claims.size() == doc.claims.size());
    for (std::size_t i = 0; i < doc.claims.size(); ++i) {
      CHECK(other->claims[i].num == doc.claims[i].num);
      CHECK(other->claims[i].text == doc.claims[i].text);
    }
  }
}

TEST_CASE("qrels group and deduplicate") {
  std::istringstream in(
      "# comment\n"
      "T1\tF1\n"
      "T1\tF2\n"
      "T1\tF1\n"
      "T2\tF9\n");
  auto topics = read_qrels(in, "mem");
  REQUIRE(topics.size() == 2);
  CHECK(topics[0].topic_doc_id == "T1");
  CHECK(topics[0].relevant_family_ids ==
        std::set<std::string>{"F1", "F2"});
  CHECK(topics[1].relevant_family_ids == std::set<std::string>{"F9"});
}

TEST_CASE("qrels reject short lines, citing the line number") {
  std::istringstream in("T1\tF1\nT2\n");
  CHECK_THROWS_WITH_AS(read_qrels(in, "mem"), doctest::Contains("mem:2"),
                       CorpusError);
}

TEST_CASE("qrels loading is order independent") {
  std::vector<std::string> lines = {"T1\tF1", "T1\tF2", "T2\tF3", "T3\tF1",
                                    "T3\tF4"};
  std::istringstream base_in("T1\tF1\nT1\tF2\nT2\tF3\nT3\tF1\nT3\tF4\n");
  auto base = read_qrels(base_in, "mem");

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string text;
    for (const std::string& l : lines) text += l + "\n";
    std::istringstream in(text);
    auto shuffled = read_qrels(in, "mem");
    REQUIRE(shuffled.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(shuffled[i].topic_doc_id == base[i].topic_doc_id);
      CHECK(shuffled[i].relevant_family_ids == base[i].relevant_family_ids);
    }
  }
}
