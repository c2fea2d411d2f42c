// Document collection, topics and relevance judgments.
//
// Corpus files are JSON Lines, one document per line:
//   {"doc_id": str, "family_id": str?, "language": str,
//    "claims": [{"num": int, "text": str}]}
// Qrels are tab-separated "topic_doc_id<TAB>family_id" lines; lines
// starting with '#' are comments.

#ifndef CLST_CORPUS_HPP
#define CLST_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace clst {

struct Claim {
  int num = 0;
  std::string text;
};

struct ClaimDocument {
  std::string doc_id;
  std::string family_id;  // defaults to doc_id when absent in the input
  std::string language;   // ISO 639-1; only "en" is processed downstream
  std::vector<Claim> claims;

  // Throws std::invalid_argument on duplicate/non-increasing claim
  // numbers or empty claim texts.
  void validate() const;
};

struct TopicCase {
  std::string topic_doc_id;
  std::set<std::string> relevant_family_ids;
};

class Corpus {
 public:
  void add(ClaimDocument doc);  // throws on duplicate doc_id

  std::size_t num_documents() const { return docs_.size(); }
  const std::vector<ClaimDocument>& documents() const { return docs_; }
  const ClaimDocument* find(const std::string& doc_id) const;

 private:
  std::vector<ClaimDocument> docs_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Corpus load_corpus(const std::string& path);
Corpus read_corpus(std::istream& in, const std::string& name);

void save_corpus(const Corpus& corpus, std::ostream& out);

std::vector<TopicCase> load_qrels(const std::string& path);
std::vector<TopicCase> read_qrels(std::istream& in, const std::string& name);

}  // namespace clst

#endif
