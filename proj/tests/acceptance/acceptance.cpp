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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bdtweet/config.hpp"
#include "bdtweet/corpus.hpp"
#include "bdtweet/evaluation.hpp"
#include "bdtweet/levenshtein.hpp"
#include "bdtweet/model_io.hpp"
#include "bdtweet/pipeline.hpp"
#include "bdtweet/rng.hpp"
#include "bdtweet/sampling.hpp"
#include "bdtweet/svm.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

namespace bdtweet {
namespace {

using Clock = std::chrono::steady_clock;

// Result of one criterion: pass flag plus a short detail line.
struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;  // first failure wins
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome split_sizes() {
  Outcome o;
  const auto start = Clock::now();
  const Corpus c = testing::corpus_with_counts(1192, 1196, 20611);
  const auto s = split_train_validation_test(c, 0.2, 0.2, 42);
  const double secs = seconds_since(start);
  o.require(s.train.size() == 14716 && s.validation.size() == 3681 && s.test.size() == 4602,
            "sizes " + std::to_string(s.train.size()) + "/" +
                std::to_string(s.validation.size()) + "/" + std::to_string(s.test.size()));
  o.require(secs < 1.0, fmt("took %.2fs", secs));
  if (o.pass) o.detail = "14716/3681/4602" + fmt(" in %.3fs", secs);
  return o;
}

Outcome f1_arithmetic() {
  Outcome o;
  const double single = round2(f1_score(0.62, 0.68));
  const double overall = round2(overall_f1({0.62, 0.52, 0.96}, {1192, 1196, 20611}));
  o.require(single == 0.65, fmt("F(0.62, 0.68) rounds to %.2f", single));
  o.require(overall == 0.92, fmt("overall rounds to %.2f", overall));
  if (o.pass) o.detail = "0.65 and 0.92";
  return o;
}

Outcome levenshtein_oracle() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(31337);
  for (int i = 0; i < 10000 && o.pass; ++i) {
    const auto a = testing::random_string(rng, 50);
    const auto b = rng.below(10) == 0 ? a : testing::random_string(rng, 50);
    const std::string ua = testing::encode_utf8(a), ub = testing::encode_utf8(b);
    const double got = levenshtein_ratio(ua, ub);
    o.require(levenshtein_distance(a, b) == testing::edit_distance_oracle(a, b),
              "distance mismatch at pair " + std::to_string(i));
    o.require(std::abs(got - testing::ratio_oracle(a, b)) <= 1e-12,
              "ratio mismatch at pair " + std::to_string(i));
    o.require(got == levenshtein_ratio(ub, ua), "asymmetric at pair " + std::to_string(i));
    o.require((got == 1.0) == (a == b), "ratio 1 iff equal fails at pair " + std::to_string(i));
  }
  const double secs = seconds_since(start);
  o.require(secs < 30.0, fmt("took %.1fs", secs));
  if (o.pass) o.detail = "10000 pairs" + fmt(" in %.2fs", secs);
  return o;
}

Outcome smo_oracle() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(4242);
  double worst_obj = 0.0, worst_kkt = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::random_qp_case(rng);
    std::vector<const SparseVector*> ptrs;
    for (const auto& p : c.points) ptrs.push_back(&p);
    const auto sol = solve_smo(ptrs, c.y, c.upper, c.kernel, 1e-3, 1'000'000);
    const auto q = c.q();
    const auto yd = c.y_real();
    const auto ref = testing::qp_bruteforce(q, yd, c.upper);
    const double obj_gap = std::abs(testing::dual_objective(q, sol.alpha) - ref.objective);
    const double kkt = testing::kkt_violation(q, yd, c.upper, sol.alpha, sol.rho);
    worst_obj = std::max(worst_obj, obj_gap);
    worst_kkt = std::max(worst_kkt, kkt);
    o.require(sol.converged, "no convergence in case " + std::to_string(trial));
    o.require(obj_gap <= 1e-4, "objective gap " + fmt("%.3g", obj_gap) + " in case " +
                                   std::to_string(trial));
    o.require(kkt <= 1e-3, "KKT violation " + fmt("%.3g", kkt) + " in case " +
                               std::to_string(trial));
  }
  const double secs = seconds_since(start);
  o.require(secs < 60.0, fmt("took %.1fs", secs));
  if (o.pass) {
    o.detail = "200 cases, max objective gap " + fmt("%.2g", worst_obj) + ", max KKT " +
               fmt("%.2g", worst_kkt) + fmt(", %.2fs", secs);
  }
  return o;
}

Outcome smote_geometry() {
  Outcome o;
  Rng rng(99);
  std::size_t synthetic = 0, cases = 0;
  while (synthetic < 1000 && cases < 1000 && o.pass) {
    const auto c = testing::random_smote_case(rng);
    const auto res = smote(c.vectors, c.labels, 5, cases);
    const auto check = testing::check_smote(c, res, 5);
    o.require(check.bad_layout == 0, "unexpected output layout in case " + std::to_string(cases));
    o.require(check.bad_count == 0, "class count off in case " + std::to_string(cases));
    o.require(check.off_segment == 0, std::to_string(check.off_segment) +
                                          " points off every neighbour segment in case " +
                                          std::to_string(cases));
    synthetic += check.synthetic;
    ++cases;
  }
  o.require(synthetic >= 1000, "only " + std::to_string(synthetic) + " synthetic points");
  if (o.pass) {
    o.detail = std::to_string(synthetic) + " synthetic points over " + std::to_string(cases) +
               " cases";
  }
  return o;
}

Outcome oversampling() {
  Outcome o;
  const auto out = oversample_replacement(testing::corpus_with_counts(10, 10, 100), 0);
  o.require(out.corpus.size() == 300, "output size " + std::to_string(out.corpus.size()));
  std::map<std::string, std::size_t> copies;
  for (const auto& item : out.corpus.items()) {
    std::string id = item.tweet.id;
    id = id.substr(0, id.find('#'));
    ++copies[id];
  }
  for (const auto& [id, n] : copies) {
    const std::size_t want = id[1] == '2' ? 1 : 10;
    o.require(n == want, id + " appears " + std::to_string(n) + " times");
  }
  const Corpus balanced = testing::corpus_with_counts(7, 7, 7);
  o.require(oversample_replacement(balanced, 0).corpus.items() == balanced.items(),
            "balanced input changed");
  if (o.pass) o.detail = "(10,10,100) -> 300, identity on balanced input";
  return o;
}

Outcome normalization_golden() {
  Outcome o;
  const auto cases = testing::load_golden(testing::golden_path());
  o.require(cases.size() >= 25, std::to_string(cases.size()) + " golden cases");
  bool has_user_case = false, has_name_case = false;
  for (const auto& c : cases) {
    has_user_case |= c.expected == "<user> <poss> <child> ha <bdterm>";
    has_name_case |= c.expected == "<name> wa diagno";
    const std::string got = testing::normalize_golden(c, c.text, true);
    o.require(got == c.expected, c.pipeline + " mismatch: '" + got + "' for '" + c.text + "'");
    o.require(testing::normalize_golden(c, got, false) == got,
              c.pipeline + " not idempotent on '" + got + "'");
  }
  o.require(has_user_case && has_name_case, "named reference cases missing");
  if (o.pass) o.detail = std::to_string(cases.size()) + " cases byte-exact and idempotent";
  return o;
}

Outcome t_test_values() {
  Outcome o;
  const auto r = paired_t_test({0.6, 0.7, 0.8}, {0.5, 0.65, 0.7});
  o.require(std::abs(r.t - 5.0) <= 1e-9, fmt("t = %.12g", r.t));
  o.require(r.df == 2, "df = " + std::to_string(r.df));
  struct Ref {
    double t, df, p;
  };
  const Ref refs[] = {
      {12.706, 1, 0.050000802358133173}, {4.303, 2, 0.04999252498521449},
      {3.182, 3, 0.050017136543313752},  {2.776, 4, 0.050022778319976403},
      {2.571, 5, 0.049974634683851375},  {2.228, 10, 0.050011771817111327},
      {2.086, 20, 0.049996354457440252}, {2.042, 30, 0.050028670656197885},
      {1.96, 1000, 0.050273184955748708}, {5.0, 2, 0.037749551350623724},
  };
  double worst = 0.0;
  for (const auto& ref : refs) {
    const double err = std::abs(student_t_two_tailed_p(ref.t, ref.df) - ref.p);
    worst = std::max(worst, err);
    o.require(err <= 1e-6, "p(" + fmt("%g", ref.t) + ", df " + fmt("%g", ref.df) + ") off by " +
                               fmt("%.3g", err));
  }
  if (o.pass) o.detail = "t = 5, df = 2, 10 p-values within " + fmt("%.1g", worst);
  return o;
}

Outcome kappa_values() {
  Outcome o;
  std::vector<Label> a, b;
  const auto add = [&](Label x, Label y, int n) {
    for (int i = 0; i < n; ++i) {
      a.push_back(x);
      b.push_back(y);
    }
  };
  add(Label::Defect, Label::Defect, 20);
  add(Label::Defect, Label::NonDefect, 5);
  add(Label::NonDefect, Label::Defect, 10);
  add(Label::NonDefect, Label::NonDefect, 15);
  const double k = cohens_kappa(a, b);
  o.require(std::abs(k - 0.4) <= 1e-12, fmt("kappa = %.15g", k));
  o.require(cohens_kappa(a, a) == 1.0, "identical sequences do not give 1");
  if (o.pass) o.detail = "0.4 on the 2x2 table, 1 on identical sequences";
  return o;
}

struct DemoRun {
  ModelBundle model;
  EvaluationRun eval;
  std::string model_json, predictions, report;
};

DemoRun run_demo(const PipelineConfig& config, const SplitResult& split, ClassifierKind kind) {
  PipelineConfig cfg = config;
  cfg.classifier = kind;
  DemoRun out;
  out.model = train_pipeline(split.train, cfg, make_preprocessor(cfg), load_cluster_map(cfg)).model;
  out.eval = evaluate_model(out.model, split.test);
  out.model_json = serialize_model(out.model);
  out.predictions = format_predictions(split.test, out.eval.predicted);
  out.report = format_report_tsv(out.eval.report);
  return out;
}

PipelineConfig demo_config() {
  return load_config(std::string(BDTWEET_DEMO_DIR) + "/demo.conf");
}

SplitResult demo_split(const PipelineConfig& config) {
  return split_train_validation_test(load_corpus(config.corpus), config.test_fraction,
                                     config.validation_fraction, config.seed);
}

Outcome demo_end_to_end() {
  Outcome o;
  const auto start = Clock::now();
  const auto config = demo_config();
  const auto split = demo_split(config);
  const DemoRun first = run_demo(config, split, ClassifierKind::Svm);
  const DemoRun second = run_demo(config, demo_split(config), ClassifierKind::Svm);
  const double secs = seconds_since(start);

  const auto& rep = first.eval.report;
  const double f_defect = rep.per_class[label_index(Label::Defect)].f1;
  const double f_possible = rep.per_class[label_index(Label::PossibleDefect)].f1;
  const auto gold = split.test.labels();
  const auto baseline =
      evaluate(gold, std::vector<Label>(gold.size(), Label::NonDefect)).overall_f1;
  o.require(f_defect > 0.0 && f_possible > 0.0,
            "minority F1 " + fmt("%.3f", f_defect) + " / " + fmt("%.3f", f_possible));
  o.require(rep.overall_f1 > baseline, "overall F " + fmt("%.4f", rep.overall_f1) +
                                           " vs baseline " + fmt("%.4f", baseline));
  o.require(first.model_json == second.model_json, "model bytes differ between runs");
  o.require(first.predictions == second.predictions, "predictions differ between runs");
  o.require(first.report == second.report, "reports differ between runs");
  o.require(secs < 60.0, fmt("took %.1fs", secs));
  if (o.pass) {
    o.detail = "overall F " + fmt("%.4f", rep.overall_f1) + " vs baseline " +
               fmt("%.4f", baseline) + ", minority F " + fmt("%.3f", f_defect) + "/" +
               fmt("%.3f", f_possible) + ", reproducible" + fmt(", %.1fs", secs);
  }
  return o;
}

Outcome model_round_trip() {
  Outcome o;
  const auto config = demo_config();
  const auto split = demo_split(config);
  const auto dir = testing::scratch_dir("acceptance");
  for (ClassifierKind kind : {ClassifierKind::Svm, ClassifierKind::NaiveBayes}) {
    const std::string name(classifier_name(kind));
    PipelineConfig cfg = config;
    cfg.classifier = kind;
    const ModelBundle model =
        train_pipeline(split.train, cfg, make_preprocessor(cfg), load_cluster_map(cfg)).model;
    const auto path = dir / (name + ".json");
    save_model(model, path);
    const ModelBundle back = load_model(path);
    std::size_t differ = 0;
    for (const auto& v : testing::random_vectors(model.space.dimension(), 1000, 17)) {
      differ += model.predict(v) != back.predict(v);
    }
    o.require(differ == 0, name + ": " + std::to_string(differ) + " of 1000 predictions differ");
  }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = "svm and nb identical on 1000 random vectors";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace bdtweet

int main() {
  using namespace bdtweet;
  const Criterion criteria[] = {
      {"stratified three-way split sizes", split_sizes},
      {"F1 and weighted overall F arithmetic", f1_arithmetic},
      {"Levenshtein ratio matches reference DP", levenshtein_oracle},
      {"SMO matches brute-force dual QP", smo_oracle},
      {"SMOTE points lie on neighbour segments", smote_geometry},
      {"replacement oversampling factor rule", oversampling},
      {"normalization goldens", normalization_golden},
      {"paired t-test and Student t p-values", t_test_values},
      {"Cohen's kappa", kappa_values},
      {"demo pipeline end to end", demo_end_to_end},
      {"model save/load round trip", model_round_trip},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
