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

#ifndef BDTWEET_EVALUATION_HPP_
#define BDTWEET_EVALUATION_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bdtweet/corpus.hpp"

namespace bdtweet {

// Rows are gold labels, columns predicted labels, in Label order.
class ConfusionMatrix {
 public:
  std::size_t at(Label gold, Label predicted) const {
    return cells_[label_index(gold)][label_index(predicted)];
  }
  void add(Label gold, Label predicted) {
    ++cells_[label_index(gold)][label_index(predicted)];
  }
  std::size_t total() const;
  std::size_t row_sum(Label gold) const;
  std::size_t column_sum(Label predicted) const;
  std::size_t trace() const;

 private:
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> cells_{};
};

ConfusionMatrix confusion_matrix(const std::vector<Label>& gold,
                                 const std::vector<Label>& predicted);

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 2PR / (P + R); 0 when P + R == 0.
double f1_score(double precision, double recall);

// Any 0/0 is 0.
ClassScores precision_recall_f1(const ConfusionMatrix& m, Label c);

// Support-weighted mean of per-class F1.
double overall_f1(const std::array<double, kNumLabels>& f1,
                  const std::array<double, kNumLabels>& supports);

struct EvalReport {
  ConfusionMatrix matrix;
  std::array<ClassScores, kNumLabels> per_class{};
  std::array<std::size_t, kNumLabels> support{};
  double overall_precision = 0.0;  // support-weighted
  double overall_recall = 0.0;     // support-weighted
  double overall_f1 = 0.0;         // support-weighted
  std::size_t instances = 0;
  std::string model_id;
  std::string corpus_id;
};

EvalReport evaluate(const std::vector<Label>& gold,
                    const std::vector<Label>& predicted);

// `class  P  R  F` rows (one per label, then `overall`), 6 decimals.
std::string format_report_tsv(const EvalReport& report);
// Aligned plain-text table with the confusion matrix.
std::string format_report_table(const EvalReport& report);

struct TTestResult {
  double t = 0.0;
  std::size_t df = 0;
  double p_value = 1.0;  // two-tailed
  double mean_difference = 0.0;
  // Differences had zero variance but a non-zero mean (t infinite, p 0).
  bool degenerate = false;
};

// Classical paired Student's t-test on a - b.
TTestResult paired_t_test(const std::vector<double>& a,
                          const std::vector<double>& b);

// Regularized incomplete beta I_x(a, b).
double regularized_incomplete_beta(double x, double a, double b);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double student_t_two_tailed_p(double t, double df);

// Tweets with gold == target_gold predicted as predicted_as, corpus order.
Corpus error_report(const Corpus& corpus, const std::vector<Label>& predicted,
                    Label target_gold, Label predicted_as);

}  // namespace bdtweet

#endif  // BDTWEET_EVALUATION_HPP_
