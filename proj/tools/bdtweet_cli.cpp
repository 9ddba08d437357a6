// Copyright 2026 The bdtweet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: one subcommand per pipeline stage.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "bdtweet/config.hpp"
#include "bdtweet/corpus.hpp"
#include "bdtweet/error.hpp"
#include "bdtweet/evaluation.hpp"
#include "bdtweet/feature_space.hpp"
#include "bdtweet/lexicon.hpp"
#include "bdtweet/model_io.hpp"
#include "bdtweet/normalize.hpp"
#include "bdtweet/pipeline.hpp"
#include "bdtweet/sampling.hpp"

namespace fs = std::filesystem;
using namespace bdtweet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config;
  std::vector<std::string> sets;
  bool quiet = false;
};

class Log {
 public:
  Log(std::string command, bool quiet)
      : command_(std::move(command)), quiet_(quiet) {}

  void kv(const std::string& key, const std::string& value) const {
    if (!quiet_) std::cerr << "bdtweet " << command_ << ": " << key << '=' << value << '\n';
  }
  // Records the FNV-1a digest of an input file.
  void input(const std::string& role, const fs::path& path) const {
    if (quiet_ || path.empty()) return;
    kv("input." + role, path.string() + " fnv1a64:" + digest_hex(read_file(path)));
  }
  void output(const fs::path& path) const { kv("output", path.string()); }
  void warning(const std::string& w) const {
    if (!quiet_) std::cerr << "bdtweet " << command_ << ": warning: " << w << '\n';
  }

 private:
  std::string command_;
  bool quiet_;
};

PipelineConfig resolve_config(const Common& common,
                              const std::vector<std::string>& extra = {}) {
  try {
    PipelineConfig config =
        common.config.empty() ? PipelineConfig{} : load_config(common.config);
    apply_overrides(config, common.sets);
    apply_overrides(config, extra);
    config.validate(true);
    return config;
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

fs::path pick(const std::string& flag, const fs::path& configured,
              const char* what) {
  fs::path p = flag.empty() ? configured : fs::path(flag);
  if (p.empty()) throw UsageError(std::string("missing ") + what);
  return p;
}

void write_output(const fs::path& path, const std::string& contents,
                  const Log& log) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_file(path, contents);
  log.output(path);
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("-c,--config", common.config, "Config file of section.key = value lines")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", common.sets, "Override a config key (key=value); repeatable");
  cmd->add_flag("-q,--quiet", common.quiet, "Suppress log lines on standard error");
}

// ---- split -----------------------------------------------------------------

struct SplitArgs {
  std::string corpus, out_dir;
  std::optional<double> test, validation;
  std::optional<std::uint64_t> seed;
};

void run_split(const Common& common, const SplitArgs& a) {
  std::vector<std::string> extra;
  if (a.test) extra.push_back("split.test=" + format_double(*a.test));
  if (a.validation) extra.push_back("split.validation=" + format_double(*a.validation));
  if (a.seed) extra.push_back("split.seed=" + std::to_string(*a.seed));
  const PipelineConfig config = resolve_config(common, extra);
  Log log("split", common.quiet);
  const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
  log.input("corpus", corpus_path);
  log.kv("seed", std::to_string(config.seed));
  log.kv("split.test", format_double(config.test_fraction));
  log.kv("split.validation", format_double(config.validation_fraction));
  const Corpus corpus = load_corpus(corpus_path);
  const SplitResult s = split_train_validation_test(
      corpus, config.test_fraction, config.validation_fraction, config.seed);
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  write_output(dir / "train.tsv", format_corpus(s.train), log);
  write_output(dir / "validation.tsv", format_corpus(s.validation), log);
  write_output(dir / "test.tsv", format_corpus(s.test), log);
  std::cout << "train\t" << s.train.size() << "\nvalidation\t"
            << s.validation.size() << "\ntest\t" << s.test.size() << '\n';
}

// ---- kappa -----------------------------------------------------------------

struct KappaArgs {
  std::string pairs, corpus, out;
};

void run_kappa(const Common& common, const KappaArgs& a) {
  resolve_config(common);
  Log log("kappa", common.quiet);
  log.input("pairs", a.pairs);
  const auto pairs = load_annotation_pairs(a.pairs);
  std::vector<Label> la, lb;
  for (const auto& p : pairs) {
    if (p.a && p.b) {
      la.push_back(*p.a);
      lb.push_back(*p.b);
    }
  }
  if (la.empty()) throw DataError("no doubly annotated tweets in " + a.pairs);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", cohens_kappa(la, lb));
  std::cout << "kappa\t" << buf << "\ndoubly_annotated\t" << la.size() << '\n';
  if (a.corpus.empty()) return;

  log.input("corpus", a.corpus);
  const Corpus corpus = load_corpus(a.corpus);
  std::unordered_map<std::string, const AnnotatedTweet*> by_id;
  for (const auto& item : corpus.items()) by_id[item.tweet.id] = &item;
  Annotations ann_a, ann_b;
  for (const auto& p : pairs) {
    const auto it = by_id.find(p.id);
    if (it == by_id.end()) throw DataError("annotated id '" + p.id + "' not in corpus");
    AnnotatedTweet t = *it->second;
    if (p.a) {
      t.label = *p.a;
      ann_a.push_back(t);
    }
    if (p.b) {
      t.label = *p.b;
      ann_b.push_back(t);
    }
  }
  const Corpus kept = filter_disagreements(ann_a, ann_b);
  std::cout << "kept\t" << kept.size() << '\n';
  write_output(a.out, format_corpus(kept), log);
}

// ---- match -----------------------------------------------------------------

struct MatchArgs {
  std::string corpus, lexicon, out, matches, term_report;
  bool no_filter = false;
};

void run_match(const Common& common, const MatchArgs& a) {
  const PipelineConfig config = resolve_config(common);
  Log log("match", common.quiet);
  const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
  const fs::path lexicon_path = pick(a.lexicon, config.lexicon, "--lexicon");
  log.input("corpus", corpus_path);
  log.input("lexicon", lexicon_path);
  log.kv("post_filter", a.no_filter ? "false" : "true");
  const Corpus corpus = load_corpus(corpus_path);
  const Lexicon lexicon = load_lexicon(lexicon_path);
  const MatcherSet matchers = compile_matchers(lexicon);
  const auto tweets = corpus.tweets();
  auto matches = match_corpus(tweets, matchers);
  if (!a.no_filter) matches = post_filter(tweets, matches);

  std::unordered_map<std::string, Span> first;
  for (const auto& m : matches) first.emplace(m.tweet_id, m.span);
  std::vector<AnnotatedTweet> items = corpus.items();
  for (auto& item : items) {
    const auto it = first.find(item.tweet.id);
    item.match_span = it == first.end() ? std::nullopt : std::optional<Span>(it->second);
  }
  std::cout << "matches\t" << matches.size() << "\ntweets_matched\t" << first.size()
            << '\n';
  if (!a.matches.empty()) {
    std::string out = "tweet_id\tterm\tspan_start\tspan_end\tsurface\n";
    for (const auto& m : matches) {
      out += escape_field(m.tweet_id) + '\t' + escape_field(m.term) + '\t' +
             std::to_string(m.span.start) + '\t' + std::to_string(m.span.end) +
             '\t' + escape_field(m.surface) + '\n';
    }
    write_output(a.matches, out, log);
  }
  if (!a.term_report.empty()) {
    std::string out = "term";
    for (Label l : kAllLabels) out += '\t' + std::string(label_name(l));
    out += '\n';
    for (const auto& f : term_class_frequency_report(corpus, lexicon)) {
      out += escape_field(f.term);
      for (auto n : f.counts) out += '\t' + std::to_string(n);
      out += '\n';
    }
    write_output(a.term_report, out, log);
  }
  if (!a.out.empty()) {
    write_output(a.out, format_corpus(Corpus(std::move(items), corpus.provenance())), log);
  }
}

// ---- preprocess ------------------------------------------------------------

struct PreprocessArgs {
  std::string corpus, out, pipeline = "classic";
};

void run_preprocess(const Common& common, const PreprocessArgs& a) {
  const PipelineConfig config = resolve_config(common);
  Log log("preprocess", common.quiet);
  const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
  log.input("corpus", corpus_path);
  log.input("names", config.names);
  log.input("lexicon", config.lexicon);
  log.kv("pipeline", a.pipeline);
  const Corpus corpus = load_corpus(corpus_path);
  std::vector<Document> docs;
  if (a.pipeline == "classic") {
    docs = make_preprocessor(config).documents(corpus);
  } else {
    for (const auto& item : corpus.items()) {
      docs.push_back({item.tweet.id, item.label,
                      embedding_normalize(item.tweet).tokens, item.tweet.text});
    }
  }
  write_output(a.out, format_documents(docs), log);
}

// ---- featurize -------------------------------------------------------------

struct FeaturizeArgs {
  std::string docs, space, space_out, out;
};

void run_featurize(const Common& common, const FeaturizeArgs& a) {
  const PipelineConfig config = resolve_config(common);
  Log log("featurize", common.quiet);
  log.input("docs", a.docs);
  const auto docs = load_documents(a.docs);
  FeatureSpace space;
  if (!a.space.empty()) {
    log.input("space", a.space);
    space = deserialize_feature_space(read_file(a.space));
  } else {
    log.input("clusters", config.clusters);
    log.kv("features", "ngram=" + std::to_string(config.features.ngram_min) + ".." +
                           std::to_string(config.features.ngram_max) +
                           " min_df=" + std::to_string(config.features.min_df));
    space = FeatureSpace::fit(docs, config.features, load_cluster_map(config));
  }
  log.kv("dimension", std::to_string(space.dimension()));
  LabeledVectors data;
  data.dimension = space.dimension();
  for (const auto& d : docs) {
    data.ids.push_back(d.id);
    data.labels.push_back(d.label);
  }
  data.vectors = space.vectorize(docs);
  if (!a.space_out.empty()) write_output(a.space_out, serialize_feature_space(space), log);
  write_output(a.out, format_vectors(data), log);
}

// ---- sample ----------------------------------------------------------------

struct SampleArgs {
  std::string method, corpus, vectors, out, fn;
  std::optional<double> k;
  std::optional<std::size_t> target, target_size, neighbors;
  std::optional<std::uint64_t> seed;
};

void run_sample(const Common& common, const SampleArgs& a) {
  std::vector<std::string> extra;
  if (!a.method.empty()) extra.push_back("sampler.method=" + a.method);
  if (a.k) extra.push_back("sampler.k=" + format_double(*a.k));
  if (a.target) extra.push_back("sampler.target=" + std::to_string(*a.target));
  if (a.neighbors) extra.push_back("sampler.neighbors=" + std::to_string(*a.neighbors));
  if (a.seed) extra.push_back("sampler.seed=" + std::to_string(*a.seed));
  if (!a.fn.empty()) extra.push_back("paths.fn_tweets=" + a.fn);
  PipelineConfig config = resolve_config(common, extra);
  Log log("sample", common.quiet);
  const SamplerOptions& opt = config.sampler;
  log.kv("method", std::string(sampler_name(opt.method)));
  log.kv("seed", std::to_string(opt.seed));
  if (a.out.empty()) throw UsageError("missing --out");
  const fs::path report_path = fs::path(a.out).string() + ".report";

  SamplingReport report;
  if (opt.method == SamplerKind::Smote) {
    if (a.vectors.empty()) throw UsageError("smote needs --vectors");
    log.input("vectors", a.vectors);
    log.kv("neighbors", std::to_string(opt.neighbors));
    const LabeledVectors in = load_vectors(a.vectors);
    SmoteResult r = smote(in.vectors, in.labels, opt.neighbors, opt.seed);
    LabeledVectors out;
    out.dimension = in.dimension;
    out.ids = in.ids;
    std::array<std::size_t, kNumLabels> serial{};
    for (std::size_t i = in.vectors.size(); i < r.vectors.size(); ++i) {
      const std::size_t c = label_index(r.labels[i]);
      out.ids.push_back("smote:" + std::string(label_name(r.labels[i])) + ':' +
                        std::to_string(++serial[c]));
    }
    out.labels = std::move(r.labels);
    out.vectors = std::move(r.vectors);
    report = std::move(r.report);
    write_output(a.out, format_vectors(out), log);
  } else {
    const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
    log.input("corpus", corpus_path);
    const Corpus train = load_corpus(corpus_path);
    std::vector<Tweet> fn;
    if (opt.method == SamplerKind::NearFalseNegative) {
      log.input("fn_tweets", config.fn_tweets);
      fn = load_corpus(config.fn_tweets).tweets();
    }
    if (a.target_size && (opt.method == SamplerKind::SimilarMajority ||
                          opt.method == SamplerKind::NearFalseNegative)) {
      std::function<std::size_t(double)> size_at;
      std::vector<double> scores;
      if (opt.method == SamplerKind::NearFalseNegative) {
        scores = near_fn_scores(train, fn);
        size_at = [&](double k) {
          std::size_t removed = 0;
          for (double s : scores) removed += s > k ? 1 : 0;
          return train.size() - removed;
        };
      } else {
        size_at = [&](double k) {
          return undersample_similar_majority(train, SimilarityThreshold(k)).corpus.size();
        };
      }
      const ThresholdSweep sweep = sweep_threshold(size_at, *a.target_size);
      config.sampler.k = sweep.k;
      log.kv("sweep.k", format_double(sweep.k));
      log.kv("sweep.size", std::to_string(sweep.size));
    }
    log.kv("k", format_double(config.sampler.k));
    SampledCorpus s = sample_corpus(train, config.sampler, fn);
    report = std::move(s.report);
    write_output(a.out, format_corpus(s.corpus), log);
  }
  for (const auto& w : report.warnings) log.warning(w);
  const std::string text = format_sampling_report(report);
  write_output(report_path, text, log);
  std::cout << text;
}

// ---- train -----------------------------------------------------------------

struct TrainArgs {
  std::string corpus, model, classifier, sampler;
};

void run_train(const Common& common, const TrainArgs& a) {
  std::vector<std::string> extra;
  if (!a.classifier.empty()) extra.push_back("classifier.type=" + a.classifier);
  if (!a.sampler.empty()) extra.push_back("sampler.method=" + a.sampler);
  const PipelineConfig config = resolve_config(common, extra);
  Log log("train", common.quiet);
  const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
  const fs::path model_path = pick(a.model, config.model, "--model");
  log.input("corpus", corpus_path);
  log.input("names", config.names);
  log.input("lexicon", config.lexicon);
  log.input("clusters", config.clusters);
  log.input("fn_tweets", config.fn_tweets);
  log.kv("classifier", std::string(classifier_name(config.classifier)));
  log.kv("sampler", std::string(sampler_name(config.sampler.method)));
  log.kv("sampler.seed", std::to_string(config.sampler.seed));
  if (config.classifier == ClassifierKind::Svm) {
    log.kv("svm.cost", format_double(config.svm.cost));
    log.kv("svm.kernel", std::string(kernel_name(config.svm.kernel)));
    log.kv("svm.tolerance", format_double(config.svm.tolerance));
  }
  const Corpus train = load_corpus(corpus_path);
  std::vector<Tweet> fn;
  if (config.sampler.method == SamplerKind::NearFalseNegative) {
    fn = load_corpus(config.fn_tweets).tweets();
  }
  TrainResult r = train_pipeline(train, config, make_preprocessor(config),
                                 load_cluster_map(config), fn);
  log.kv("dimension", std::to_string(r.model.space.dimension()));
  log.kv("training_instances", std::to_string(r.training_instances));
  if (r.model.svm) {
    for (const auto& p : r.model.svm->pairs) {
      const std::string pair = std::string(label_name(p.positive)) + "/" +
                               std::string(label_name(p.negative));
      log.kv("svm.pair." + pair,
             "support_vectors=" + std::to_string(p.support_vectors.size()) +
                 " iterations=" + std::to_string(p.iterations));
      if (!p.converged) log.warning("SMO hit max_iterations for pair " + pair);
    }
  }
  for (const auto& w : r.sampling.warnings) log.warning(w);
  write_output(model_path, serialize_model(r.model), log);
  const std::string report = format_sampling_report(r.sampling);
  write_output(model_path.string() + ".report", report, log);
  std::cout << report;
}

// ---- evaluate --------------------------------------------------------------

struct EvaluateArgs {
  std::string model, corpus, report, predictions;
};

void run_evaluate(const Common& common, const EvaluateArgs& a) {
  const PipelineConfig config = resolve_config(common);
  Log log("evaluate", common.quiet);
  const fs::path model_path = pick(a.model, config.model, "--model");
  const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
  log.input("model", model_path);
  log.input("corpus", corpus_path);
  const ModelBundle model = load_model(model_path);
  const Corpus test = load_corpus(corpus_path);
  const EvaluationRun run = evaluate_model(model, test);
  if (!a.predictions.empty()) {
    write_output(a.predictions, format_predictions(test, run.predicted), log);
  }
  if (!a.report.empty()) write_output(a.report, format_report_tsv(run.report), log);
  std::cout << format_report_table(run.report);
}

// ---- rank-features ---------------------------------------------------------

struct RankArgs {
  std::string corpus, vectors, space, out;
  std::size_t top = 0;
};

void run_rank(const Common& common, const RankArgs& a) {
  const PipelineConfig config = resolve_config(common);
  Log log("rank-features", common.quiet);
  std::vector<RankedFeature> ranking;
  if (!a.vectors.empty()) {
    if (a.space.empty()) throw UsageError("--vectors needs --space");
    log.input("vectors", a.vectors);
    log.input("space", a.space);
    const LabeledVectors data = load_vectors(a.vectors);
    const FeatureSpace space = deserialize_feature_space(read_file(a.space));
    if (data.dimension != space.dimension()) {
      throw DataError("vector dimension does not match the feature space");
    }
    ranking = information_gain(data.vectors, data.labels, space.vocabulary());
  } else {
    const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
    log.input("corpus", corpus_path);
    log.input("clusters", config.clusters);
    const Corpus corpus = load_corpus(corpus_path);
    const auto docs = make_preprocessor(config).documents(corpus);
    const FeatureSpace space =
        FeatureSpace::fit(docs, config.features, load_cluster_map(config));
    ranking = information_gain(space.vectorize(docs), document_labels(docs),
                               space.vocabulary());
  }
  if (a.top > 0 && ranking.size() > a.top) ranking.resize(a.top);
  write_output(a.out, format_ranking(ranking), log);
}

// ---- report-errors ---------------------------------------------------------

struct ErrorArgs {
  std::string predictions, corpus, out, predicted = "non_defect";
  std::vector<std::string> gold{"defect", "possible_defect"};
};

Label label_flag(const std::string& name) {
  const auto l = parse_label(name);
  if (!l) throw UsageError("unknown label '" + name + "'");
  return *l;
}

void run_report_errors(const Common& common, const ErrorArgs& a) {
  const PipelineConfig config = resolve_config(common);
  Log log("report-errors", common.quiet);
  const fs::path corpus_path = pick(a.corpus, config.corpus, "--corpus");
  log.input("predictions", a.predictions);
  log.input("corpus", corpus_path);
  const Label predicted_as = label_flag(a.predicted);
  std::vector<Label> golds;
  for (const auto& g : a.gold) golds.push_back(label_flag(g));
  const Corpus corpus = load_corpus(corpus_path);
  const auto predicted =
      align_predictions(corpus, parse_predictions(read_file(a.predictions)));
  std::vector<AnnotatedTweet> rows;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (Label g : golds) {
      if (corpus[i].label == g && predicted[i] == predicted_as) {
        rows.push_back(corpus[i]);
        break;
      }
    }
  }
  for (Label g : golds) {
    log.kv("errors." + std::string(label_name(g)) + "->" + a.predicted,
           std::to_string(error_report(corpus, predicted, g, predicted_as).size()));
  }
  write_output(a.out, format_corpus(Corpus(std::move(rows), corpus.provenance())), log);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bdtweet: rare-class tweet classification toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bdtweet 1.0.0");
  std::function<void()> action;

  Common common;

  SplitArgs split;
  auto* c_split = app.add_subcommand("split", "Stratified train/validation/test split");
  add_common(c_split, common);
  c_split->add_option("--corpus", split.corpus, "Corpus TSV (default paths.corpus)");
  c_split->add_option("-o,--out-dir", split.out_dir, "Directory for train/validation/test.tsv")
      ->required();
  c_split->add_option("--test", split.test, "Test fraction (split.test)");
  c_split->add_option("--validation", split.validation, "Validation fraction (split.validation)");
  c_split->add_option("--seed", split.seed, "Shuffle seed (split.seed)");
  c_split->callback([&] { action = [&] { run_split(common, split); }; });

  KappaArgs kappa;
  auto* c_kappa = app.add_subcommand("kappa", "Cohen's kappa and disagreement filtering");
  add_common(c_kappa, common);
  c_kappa->add_option("--pairs", kappa.pairs, "Annotation TSV: id, label_a, label_b")
      ->required()
      ->check(CLI::ExistingFile);
  c_kappa->add_option("--corpus", kappa.corpus, "Corpus TSV supplying tweet text");
  c_kappa->add_option("-o,--out", kappa.out, "Agreed corpus TSV (needs --corpus)");
  c_kappa->callback([&] { action = [&] { run_kappa(common, kappa); }; });

  MatchArgs match;
  auto* c_match = app.add_subcommand("match", "Lexicon retrieval with post-filters");
  add_common(c_match, common);
  c_match->add_option("--corpus", match.corpus, "Corpus TSV (default paths.corpus)");
  c_match->add_option("--lexicon", match.lexicon, "Lexicon file (default paths.lexicon)");
  c_match->add_option("-o,--out", match.out, "Corpus TSV with the first match span per tweet");
  c_match->add_option("--matches", match.matches, "TSV of every match");
  c_match->add_option("--term-report", match.term_report, "Per-term class frequency TSV");
  c_match->add_flag("--no-filter", match.no_filter, "Keep retweets and matches in @names/URLs");
  c_match->callback([&] { action = [&] { run_match(common, match); }; });

  PreprocessArgs pre;
  auto* c_pre = app.add_subcommand("preprocess", "Normalize tweets into token documents");
  add_common(c_pre, common);
  c_pre->add_option("--corpus", pre.corpus, "Corpus TSV (default paths.corpus)");
  c_pre->add_option("-o,--out", pre.out, "Document TSV (default stdout)");
  c_pre->add_option("--pipeline", pre.pipeline, "classic or embedding")
      ->check(CLI::IsMember({"classic", "embedding"}));
  c_pre->callback([&] { action = [&] { run_preprocess(common, pre); }; });

  FeaturizeArgs feat;
  auto* c_feat = app.add_subcommand("featurize", "Build a feature space and vectors");
  add_common(c_feat, common);
  c_feat->add_option("--docs", feat.docs, "Document TSV from preprocess")
      ->required()
      ->check(CLI::ExistingFile);
  c_feat->add_option("--space", feat.space, "Reuse a fitted feature space JSON")
      ->check(CLI::ExistingFile);
  c_feat->add_option("--space-out", feat.space_out, "Write the fitted feature space JSON");
  c_feat->add_option("-o,--out", feat.out, "Vector TSV (default stdout)");
  c_feat->callback([&] { action = [&] { run_featurize(common, feat); }; });

  SampleArgs sample;
  auto* c_sample = app.add_subcommand("sample", "Apply an imbalance treatment");
  add_common(c_sample, common);
  c_sample->add_option("--method", sample.method,
                       "none, similar, near-fn, random, oversample or smote");
  c_sample->add_option("--corpus", sample.corpus, "Training corpus TSV (text methods)");
  c_sample->add_option("--vectors", sample.vectors, "Vector TSV (smote)");
  c_sample->add_option("--fn", sample.fn, "False-negative tweets as corpus TSV (near-fn)");
  c_sample->add_option("-k,--threshold", sample.k, "Levenshtein-ratio threshold");
  c_sample->add_option("--target", sample.target, "Output size for random under-sampling");
  c_sample->add_option("--target-size", sample.target_size,
                       "Pick k for similar/near-fn to reach this output size");
  c_sample->add_option("--neighbors", sample.neighbors, "SMOTE nearest neighbours");
  c_sample->add_option("--seed", sample.seed, "Sampler seed");
  c_sample->add_option("-o,--out", sample.out, "Sampled corpus or vector TSV")->required();
  c_sample->callback([&] { action = [&] { run_sample(common, sample); }; });

  TrainArgs train;
  auto* c_train = app.add_subcommand("train", "Train a classifier from a corpus");
  add_common(c_train, common);
  c_train->add_option("--corpus", train.corpus, "Training corpus TSV (default paths.corpus)");
  c_train->add_option("-m,--model", train.model, "Model JSON path (default paths.model)");
  c_train->add_option("--classifier", train.classifier, "svm or nb");
  c_train->add_option("--sampler", train.sampler, "Imbalance treatment (sampler.method)");
  c_train->callback([&] { action = [&] { run_train(common, train); }; });

  EvaluateArgs eval;
  auto* c_eval = app.add_subcommand("evaluate", "Score a model on a labeled corpus");
  add_common(c_eval, common);
  c_eval->add_option("-m,--model", eval.model, "Model JSON (default paths.model)");
  c_eval->add_option("--corpus", eval.corpus, "Test corpus TSV (default paths.corpus)");
  c_eval->add_option("--report", eval.report, "Report TSV: class, P, R, F");
  c_eval->add_option("--predictions", eval.predictions, "Prediction TSV: id, gold, predicted");
  c_eval->callback([&] { action = [&] { run_evaluate(common, eval); }; });

  RankArgs rank;
  auto* c_rank = app.add_subcommand("rank-features", "Information-gain feature ranking");
  add_common(c_rank, common);
  c_rank->add_option("--corpus", rank.corpus, "Corpus TSV (default paths.corpus)");
  c_rank->add_option("--vectors", rank.vectors, "Vector TSV from featurize");
  c_rank->add_option("--space", rank.space, "Feature space JSON matching --vectors");
  c_rank->add_option("--top", rank.top, "Keep only the top N features");
  c_rank->add_option("-o,--out", rank.out, "Ranking TSV (default stdout)");
  c_rank->callback([&] { action = [&] { run_rank(common, rank); }; });

  ErrorArgs errs;
  auto* c_err = app.add_subcommand("report-errors", "Export misclassified tweets");
  add_common(c_err, common);
  c_err->add_option("--predictions", errs.predictions, "Prediction TSV from evaluate")
      ->required()
      ->check(CLI::ExistingFile);
  c_err->add_option("--corpus", errs.corpus, "Corpus the predictions refer to");
  c_err->add_option("--gold", errs.gold, "Gold labels to report (repeatable)");
  c_err->add_option("--predicted", errs.predicted, "Predicted label to report");
  c_err->add_option("-o,--out", errs.out, "Corpus TSV (default stdout)");
  c_err->callback([&] { action = [&] { run_report_errors(common, errs); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "bdtweet: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "bdtweet: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const InvalidArgument& e) {
    std::cerr << "bdtweet: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "bdtweet: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
