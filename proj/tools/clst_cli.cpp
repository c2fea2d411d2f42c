// clst command line: validate data, extract keywords, build the index,
// run retrieval experiments, grid-search scoring parameters and score
// run files.
//
// Exit codes: 0 success, 1 fatal data error, 2 bad arguments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "clst/pipeline.hpp"
#include "clst/spec_tree.hpp"

namespace fs = std::filesystem;
using namespace clst;

namespace {

struct CliOptions {
  std::string corpus_path;
  std::string parses_path;
  std::string qrels_path;
  std::string out_dir = ".";
  std::string method = "clst05";
  bool boost = false;
  bool no_retag = false;
  int top_n = -1;  // -1: method default (100 tree methods, 70 baseline)
  double alpha = 1.0;
  double beta = 0.5;
  int n_max = 100;
  std::uint64_t seed = 42;
  std::string run_tag;
  std::string alpha_grid = "0,0.5,1,2,3,4,5";
  std::string beta_grid = "0,0.25,0.5,1,2";
  std::string run_path;
  std::string run_b_path;
  int iterations = 100000;
};

Method parse_method(const std::string& name) {
  if (name == "clst05") return Method::clst05;
  if (name == "clst06") return Method::clst06;
  if (name == "baseline") return Method::baseline;
  throw CLI::ValidationError("--method", "unknown method: " + name);
}

RunConfig to_run_config(const CliOptions& opt) {
  RunConfig config;
  config.method = parse_method(opt.method);
  config.boost = opt.boost;
  config.retag = !opt.no_retag;
  config.top_n = opt.top_n > 0
                     ? opt.top_n
                     : (config.method == Method::baseline ? 70 : 100);
  config.alpha = opt.alpha;
  config.beta = opt.beta;
  config.n_max = opt.n_max;
  config.seed = opt.seed;
  config.run_tag = opt.run_tag;
  return config;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty())
    throw CLI::ValidationError("--alpha-grid/--beta-grid", "empty grid");
  return out;
}

// Values from --config seed the option defaults; explicit flags override.
void apply_config_file(const std::string& path, CliOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  opt.corpus_path = j.value("corpus", opt.corpus_path);
  opt.parses_path = j.value("parses", opt.parses_path);
  opt.qrels_path = j.value("qrels", opt.qrels_path);
  opt.out_dir = j.value("out_dir", opt.out_dir);
  opt.method = j.value("method", opt.method);
  opt.boost = j.value("boost", opt.boost);
  opt.no_retag = !j.value("retag", !opt.no_retag);
  opt.top_n = j.value("top_n", opt.top_n);
  opt.alpha = j.value("alpha", opt.alpha);
  opt.beta = j.value("beta", opt.beta);
  opt.n_max = j.value("n_max", opt.n_max);
  opt.seed = j.value("seed", opt.seed);
  opt.run_tag = j.value("run_tag", opt.run_tag);
  opt.alpha_grid = j.value("alpha_grid", opt.alpha_grid);
  opt.beta_grid = j.value("beta_grid", opt.beta_grid);
  opt.iterations = j.value("iterations", opt.iterations);
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

int cmd_validate(const CliOptions& opt) {
  Corpus corpus = load_corpus(opt.corpus_path);
  std::size_t claims = 0, non_en = 0;
  for (const ClaimDocument& doc : corpus.documents()) {
    claims += doc.claims.size();
    if (doc.language != "en") ++non_en;
  }
  std::cout << "documents: " << corpus.num_documents() << "\n"
            << "claims: " << claims << "\n"
            << "non-english documents (skipped downstream): " << non_en
            << "\n";

  ParseSet parses;
  if (!opt.parses_path.empty()) {
    parses = load_parses(opt.parses_path);
    std::cout << "parses: " << parses.size() << "\n";
  }

  std::size_t missing_parses = 0, ref_diags = 0;
  if (!opt.qrels_path.empty()) {
    std::vector<TopicCase> topics = load_qrels(opt.qrels_path);
    std::cout << "topics: " << topics.size() << "\n";
    std::size_t missing_topics = 0;
    for (const TopicCase& t : topics) {
      const ClaimDocument* doc = corpus.find(t.topic_doc_id);
      if (!doc) {
        ++missing_topics;
        continue;
      }
      std::vector<RefDiagnostic> diags;
      build_claim_graph(*doc, &diags);
      ref_diags += diags.size();
      for (const Claim& c : doc->claims) {
        if (!parses.find(doc->doc_id, c.num)) ++missing_parses;
      }
    }
    std::cout << "topic docs missing from corpus: " << missing_topics << "\n"
              << "topic claims without parses: " << missing_parses << "\n"
              << "dropped claim references: " << ref_diags << "\n";
    if (missing_topics > 0) {
      std::cerr << "error: qrels reference topic documents that are not in "
                   "the corpus\n";
      return 1;
    }
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_extract(const CliOptions& opt) {
  Corpus corpus = load_corpus(opt.corpus_path);
  ParseSet parses;
  if (!opt.parses_path.empty()) parses = load_parses(opt.parses_path);
  std::vector<TopicCase> topics = load_qrels(opt.qrels_path);
  RunConfig config = to_run_config(opt);

  CollectionStats stats;
  if (config.method == Method::baseline) stats = collection_stats(corpus);

  std::vector<const TopicCase*> ordered;
  for (const TopicCase& t : topics) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const TopicCase* a, const TopicCase* b) {
              return a->topic_doc_id < b->topic_doc_id;
            });

  fs::path out_path = fs::path(opt.out_dir) /
                      ("queries-" + config.effective_tag() + ".jsonl");
  std::ofstream out = open_out(out_path);
  std::size_t empty = 0;
  for (const TopicCase* topic : ordered) {
    const ClaimDocument* doc = corpus.find(topic->topic_doc_id);
    if (!doc) {
      std::cerr << "warning: topic " << topic->topic_doc_id
                << " missing from corpus\n";
      continue;
    }
    ExtractDiagnostics diag;
    QuerySpec query = extract_query(*doc, parses, config,
                                    config.method == Method::baseline
                                        ? &stats
                                        : nullptr,
                                    &diag);
    if (query.terms.empty()) ++empty;
    write_query_dump_line(out, doc->doc_id, config.effective_tag(), query);
  }
  std::cout << "wrote " << out_path.string() << "\n";
  if (empty > 0) std::cout << "empty queries: " << empty << "\n";
  return 0;
}

int cmd_index(const CliOptions& opt) {
  Corpus corpus = load_corpus(opt.corpus_path);
  InvertedIndex index = build_index(corpus);
  fs::path out_path = fs::path(opt.out_dir) / "index.json";
  std::ofstream out = open_out(out_path);
  write_index_snapshot(index, out);
  std::cout << "indexed " << index.num_docs() << " documents ("
            << index.skipped_non_english() << " non-english skipped)\n"
            << "wrote " << out_path.string() << "\n";
  return 0;
}

int cmd_run(const CliOptions& opt) {
  Corpus corpus = load_corpus(opt.corpus_path);
  ParseSet parses;
  if (!opt.parses_path.empty()) parses = load_parses(opt.parses_path);
  std::vector<TopicCase> topics = load_qrels(opt.qrels_path);
  RunConfig config = to_run_config(opt);

  RunOutput result = run_experiment(corpus, parses, topics, config);

  std::string tag = config.effective_tag();
  fs::path run_path = fs::path(opt.out_dir) / ("run-" + tag + ".txt");
  fs::path report_path = fs::path(opt.out_dir) / ("report-" + tag + ".json");
  open_out(run_path) << result.run_file;
  open_out(report_path) << report_to_json(result.report, config);

  std::cout << "topics: " << result.report.topics.size() << "\n"
            << "mean recall@" << config.n_max << ": "
            << result.report.mean_recall << "\n"
            << "mean pres@" << config.n_max << ": " << result.report.mean_pres
            << "\n"
            << "wrote " << run_path.string() << "\n"
            << "wrote " << report_path.string() << "\n";
  return 0;
}

int cmd_grid(const CliOptions& opt) {
  Corpus corpus = load_corpus(opt.corpus_path);
  ParseSet parses = load_parses(opt.parses_path);
  std::vector<TopicCase> topics = load_qrels(opt.qrels_path);
  RunConfig config = to_run_config(opt);
  std::vector<double> alphas = parse_grid(opt.alpha_grid);
  std::vector<double> betas = parse_grid(opt.beta_grid);

  GridResult grid =
      grid_search_experiment(corpus, parses, topics, config, alphas, betas);

  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const GridPoint& p : grid.table) {
    table.push_back(
        {{"alpha", p.alpha}, {"beta", p.beta}, {"mean_pres", p.mean_pres}});
    std::cout << "alpha=" << p.alpha << " beta=" << p.beta
              << " mean_pres=" << p.mean_pres << "\n";
  }
  std::cout << "best: alpha=" << grid.best_alpha << " beta=" << grid.best_beta
            << "\n";

  nlohmann::ordered_json j{{"method", opt.method},
                           {"top_n", config.top_n},
                           {"n_max", opt.n_max},
                           {"best_alpha", grid.best_alpha},
                           {"best_beta", grid.best_beta},
                           {"table", std::move(table)}};
  fs::path out_path =
      fs::path(opt.out_dir) / ("grid-" + config.effective_tag() + ".json");
  open_out(out_path) << j.dump(2) << "\n";
  std::cout << "wrote " << out_path.string() << "\n";
  return 0;
}

int cmd_report(const CliOptions& opt) {
  std::vector<TopicCase> topics = load_qrels(opt.qrels_path);
  std::ifstream run(opt.run_path);
  if (!run) throw std::runtime_error("cannot open run file: " + opt.run_path);
  MetricReport report = evaluate_run_file(run, topics, opt.n_max);

  RunConfig config = to_run_config(opt);
  config.run_tag = opt.run_path;
  std::cout << report_to_json(report, config);

  if (!opt.run_b_path.empty()) {
    std::ifstream run_b(opt.run_b_path);
    if (!run_b)
      throw std::runtime_error("cannot open run file: " + opt.run_b_path);
    MetricReport report_b = evaluate_run_file(run_b, topics, opt.n_max);
    std::vector<double> pres_a, pres_b, recall_a, recall_b;
    for (std::size_t i = 0; i < report.topics.size(); ++i) {
      pres_a.push_back(report.topics[i].pres);
      pres_b.push_back(report_b.topics[i].pres);
      recall_a.push_back(report.topics[i].recall);
      recall_b.push_back(report_b.topics[i].recall);
    }
    double p_pres =
        randomization_test(pres_a, pres_b, opt.iterations, opt.seed);
    double p_recall =
        randomization_test(recall_a, recall_b, opt.iterations, opt.seed);
    nlohmann::ordered_json sig{{"run_a", opt.run_path},
                               {"run_b", opt.run_b_path},
                               {"mean_pres_a", report.mean_pres},
                               {"mean_pres_b", report_b.mean_pres},
                               {"mean_recall_a", report.mean_recall},
                               {"mean_recall_b", report_b.mean_recall},
                               {"iterations", opt.iterations},
                               {"seed", opt.seed},
                               {"p_value_pres", p_pres},
                               {"p_value_recall", p_recall}};
    std::cout << sig.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;

  // --config is applied before regular parsing so flags can override it
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        apply_config_file(argv[i + 1], opt);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  CLI::App app{"claim specialization tree keyword extraction and retrieval"};
  app.require_subcommand(1);
  std::string config_dummy;
  app.add_option("--config", config_dummy,
                 "JSON config file; explicit flags override its values");

  auto add_common = [&](CLI::App* cmd, bool needs_parses, bool needs_qrels) {
    if (opt.corpus_path.empty())
      cmd->add_option("--corpus", opt.corpus_path, "corpus JSONL")->required();
    else
      cmd->add_option("--corpus", opt.corpus_path, "corpus JSONL");
    auto* p =
        cmd->add_option("--parses", opt.parses_path, "parse sidecar JSONL");
    if (needs_parses && opt.parses_path.empty()) p->required();
    auto* q = cmd->add_option("--qrels", opt.qrels_path, "qrels TSV");
    if (needs_qrels && opt.qrels_path.empty()) q->required();
    cmd->add_option("--out-dir", opt.out_dir, "output directory");
  };
  auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", opt.method, "clst05|clst06|baseline");
    cmd->add_flag("--boost", opt.boost, "use stem scores as boost factors");
    cmd->add_flag("--no-retag", opt.no_retag, "skip the POS correction");
    cmd->add_option("--top-n", opt.top_n, "keyword count");
    cmd->add_option("--alpha", opt.alpha, "node-depth weight");
    cmd->add_option("--beta", opt.beta, "claim-depth weight");
    cmd->add_option("--n-max", opt.n_max, "evaluation cutoff");
    cmd->add_option("--seed", opt.seed, "seed for randomized procedures");
    cmd->add_option("--run-tag", opt.run_tag, "override the run tag");
  };

  CLI::App* validate = app.add_subcommand("validate", "check input data");
  add_common(validate, false, false);

  CLI::App* extract = app.add_subcommand("extract", "write query dumps");
  add_common(extract, false, true);
  add_method(extract);

  CLI::App* index = app.add_subcommand("index", "write an index snapshot");
  add_common(index, false, false);

  CLI::App* run = app.add_subcommand("run", "retrieve and evaluate");
  add_common(run, false, true);
  add_method(run);

  CLI::App* grid = app.add_subcommand("grid", "grid-search alpha and beta");
  add_common(grid, true, true);
  add_method(grid);
  grid->add_option("--alpha-grid", opt.alpha_grid, "comma-separated alphas");
  grid->add_option("--beta-grid", opt.beta_grid, "comma-separated betas");

  CLI::App* report = app.add_subcommand("report", "score an existing run file");
  report->add_option("--qrels", opt.qrels_path, "qrels TSV")->required();
  report->add_option("--run", opt.run_path, "run file")->required();
  report->add_option("--run-b", opt.run_b_path,
                     "second run file for a paired significance test");
  report->add_option("--n-max", opt.n_max, "evaluation cutoff");
  report->add_option("--iterations", opt.iterations,
                     "randomization test iterations");
  report->add_option("--seed", opt.seed, "randomization test seed");

  // the file itself was consumed by the pre-scan; register the flag on
  // every subcommand so it parses cleanly in either position
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->add_option("--config", config_dummy,
                    "JSON config file; explicit flags override its values");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(opt);
    if (*extract) return cmd_extract(opt);
    if (*index) return cmd_index(opt);
    if (*run) return cmd_run(opt);
    if (*grid) return cmd_grid(opt);
    if (*report) return cmd_report(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
