#include "clst/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace clst {

using nlohmann::json;

void ClaimDocument::validate() const {
  if (doc_id.empty()) throw std::invalid_argument("document without doc_id");
  int prev = 0;
  for (const Claim& c : claims) {
    if (c.num <= prev) {
      throw std::invalid_argument("doc " + doc_id +
                                  ": claim numbers must be unique and "
                                  "strictly increasing (claim " +
                                  std::to_string(c.num) + ")");
    }
    prev = c.num;
    if (c.text.find_first_not_of(" \t\r\n") == std::string::npos) {
      throw std::invalid_argument("doc " + doc_id + ": claim " +
                                  std::to_string(c.num) + " is empty");
    }
  }
}

void Corpus::add(ClaimDocument doc) {
  doc.validate();
  auto [it, inserted] = by_id_.emplace(doc.doc_id, docs_.size());
  if (!inserted) {
    throw CorpusError("duplicate doc_id \"" + doc.doc_id + "\"");
  }
  docs_.push_back(std::move(doc));
}

const ClaimDocument* Corpus::find(const std::string& doc_id) const {
  auto it = by_id_.find(doc_id);
  return it == by_id_.end() ? nullptr : &docs_[it->second];
}

Corpus read_corpus(std::istream& in, const std::string& name) {
  Corpus corpus;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw CorpusError(name + ":" + std::to_string(line_no) +
                        ": malformed JSON: " + e.what());
    }
    try {
      ClaimDocument doc;
      doc.doc_id = rec.at("doc_id").get<std::string>();
      doc.family_id = rec.value("family_id", doc.doc_id);
      doc.language = rec.value("language", "en");
      for (const json& c : rec.at("claims")) {
        doc.claims.push_back(
            {c.at("num").get<int>(), c.at("text").get<std::string>()});
      }
      corpus.add(std::move(doc));
    } catch (const json::exception& e) {
      throw CorpusError(name + ":" + std::to_string(line_no) +
                        ": bad record: " + e.what());
    } catch (const std::invalid_argument& e) {
      throw CorpusError(name + ":" + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file: " + path);
  return read_corpus(in, path);
}

void save_corpus(const Corpus& corpus, std::ostream& out) {
  for (const ClaimDocument& doc : corpus.documents()) {
    json claims = json::array();
    for (const Claim& c : doc.claims) {
      claims.push_back({{"num", c.num}, {"text", c.text}});
    }
    json rec{{"doc_id", doc.doc_id},
             {"family_id", doc.family_id},
             {"language", doc.language},
             {"claims", std::move(claims)}};
    out << rec.dump() << "\n";
  }
}

std::vector<TopicCase> read_qrels(std::istream& in, const std::string& name) {
  std::map<std::string, std::set<std::string>> grouped;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string topic, family;
    if (!(fields >> topic >> family)) {
      throw CorpusError(name + ":" + std::to_string(line_no) +
                        ": expected \"topic<TAB>family\"");
    }
    if (topic == family) {
      throw CorpusError(name + ":" + std::to_string(line_no) +
                        ": topic listed as its own relevant family");
    }
    grouped[topic].insert(family);
  }
  std::vector<TopicCase> out;
  out.reserve(grouped.size());
  for (auto& [topic, families] : grouped) {
    out.push_back({topic, std::move(families)});
  }
  return out;
}

std::vector<TopicCase> load_qrels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open qrels file: " + path);
  return read_qrels(in, path);
}

}  // namespace clst
