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

#include "bdtweet/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "bdtweet/error.hpp"

namespace bdtweet {

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

// Continued fraction for I_x(a, b) (modified Lentz).
double beta_continued_fraction(double x, double a, double b) {
  constexpr int kMaxIter = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

std::size_t ConfusionMatrix::total() const {
  std::size_t n = 0;
  for (const auto& row : cells_) {
    for (auto v : row) n += v;
  }
  return n;
}

std::size_t ConfusionMatrix::row_sum(Label gold) const {
  std::size_t n = 0;
  for (auto v : cells_[label_index(gold)]) n += v;
  return n;
}

std::size_t ConfusionMatrix::column_sum(Label predicted) const {
  std::size_t n = 0;
  for (const auto& row : cells_) n += row[label_index(predicted)];
  return n;
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < kNumLabels; ++c) n += cells_[c][c];
  return n;
}

ConfusionMatrix confusion_matrix(const std::vector<Label>& gold,
                                 const std::vector<Label>& predicted) {
  if (gold.size() != predicted.size()) {
    throw InvalidArgument("confusion matrix: gold and predicted differ in length");
  }
  if (gold.empty()) throw InvalidArgument("confusion matrix: no instances");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < gold.size(); ++i) m.add(gold[i], predicted[i]);
  return m;
}

double f1_score(double precision, double recall) {
  const double s = precision + recall;
  return s > 0.0 ? 2.0 * precision * recall / s : 0.0;
}

ClassScores precision_recall_f1(const ConfusionMatrix& m, Label c) {
  const auto tp = static_cast<double>(m.at(c, c));
  const auto predicted = static_cast<double>(m.column_sum(c));
  const auto actual = static_cast<double>(m.row_sum(c));
  ClassScores s;
  s.precision = predicted > 0.0 ? tp / predicted : 0.0;
  s.recall = actual > 0.0 ? tp / actual : 0.0;
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

double overall_f1(const std::array<double, kNumLabels>& f1,
                  const std::array<double, kNumLabels>& supports) {
  double total = 0.0;
  for (double s : supports) total += s;
  if (!(total > 0.0)) throw InvalidArgument("overall F1: supports sum to zero");
  double sum = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) sum += supports[c] / total * f1[c];
  return sum;
}

EvalReport evaluate(const std::vector<Label>& gold,
                    const std::vector<Label>& predicted) {
  EvalReport r;
  r.matrix = confusion_matrix(gold, predicted);
  r.instances = gold.size();
  std::array<double, kNumLabels> f1{};
  std::array<double, kNumLabels> p{};
  std::array<double, kNumLabels> rc{};
  std::array<double, kNumLabels> support{};
  for (Label l : kAllLabels) {
    const std::size_t c = label_index(l);
    r.per_class[c] = precision_recall_f1(r.matrix, l);
    r.support[c] = r.matrix.row_sum(l);
    support[c] = static_cast<double>(r.support[c]);
    f1[c] = r.per_class[c].f1;
    p[c] = r.per_class[c].precision;
    rc[c] = r.per_class[c].recall;
  }
  r.overall_f1 = overall_f1(f1, support);
  r.overall_precision = overall_f1(p, support);
  r.overall_recall = overall_f1(rc, support);
  return r;
}

std::string format_report_tsv(const EvalReport& report) {
  std::string out = "class\tP\tR\tF\n";
  for (Label l : kAllLabels) {
    const auto& s = report.per_class[label_index(l)];
    out += std::string(label_name(l)) + '\t' + fixed6(s.precision) + '\t' +
           fixed6(s.recall) + '\t' + fixed6(s.f1) + '\n';
  }
  out += "overall\t" + fixed6(report.overall_precision) + '\t' +
         fixed6(report.overall_recall) + '\t' + fixed6(report.overall_f1) + '\n';
  return out;
}

std::string format_report_table(const EvalReport& report) {
  std::ostringstream ss;
  char line[160];
  if (!report.model_id.empty()) ss << "model:  " << report.model_id << '\n';
  if (!report.corpus_id.empty()) ss << "corpus: " << report.corpus_id << '\n';
  ss << "instances: " << report.instances << "\n\n";
  std::snprintf(line, sizeof(line), "%-16s %9s %9s %9s %9s\n", "class",
                "precision", "recall", "f1", "support");
  ss << line;
  for (Label l : kAllLabels) {
    const auto& s = report.per_class[label_index(l)];
    std::snprintf(line, sizeof(line), "%-16s %9.4f %9.4f %9.4f %9zu\n",
                  std::string(label_name(l)).c_str(), s.precision, s.recall,
                  s.f1, report.support[label_index(l)]);
    ss << line;
  }
  std::snprintf(line, sizeof(line), "%-16s %9.4f %9.4f %9.4f %9zu\n", "overall",
                report.overall_precision, report.overall_recall,
                report.overall_f1, report.instances);
  ss << line << "\nconfusion (rows gold, columns predicted)\n";
  std::snprintf(line, sizeof(line), "%-16s %16s %16s %16s\n", "",
                "defect", "possible_defect", "non_defect");
  ss << line;
  for (Label g : kAllLabels) {
    std::snprintf(line, sizeof(line), "%-16s %16zu %16zu %16zu\n",
                  std::string(label_name(g)).c_str(),
                  report.matrix.at(g, Label::Defect),
                  report.matrix.at(g, Label::PossibleDefect),
                  report.matrix.at(g, Label::NonDefect));
    ss << line;
  }
  return ss.str();
}

double regularized_incomplete_beta(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(x, a, b) / a;
  }
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_two_tailed_p(double t, double df) {
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return regularized_incomplete_beta(x, 0.5 * df, 0.5);
}

TTestResult paired_t_test(const std::vector<double>& a,
                          const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("paired t-test: score lists differ in length");
  }
  if (a.size() < 2) throw InvalidArgument("paired t-test: need at least 2 pairs");
  const std::size_t n = a.size();
  std::vector<double> d(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a[i] - b[i];
    mean += d[i];
  }
  mean /= static_cast<double>(n);
  // Differences that agree up to input rounding count as constant.
  double ss = 0.0;
  double lo = d[0], hi = d[0], scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ss += (d[i] - mean) * (d[i] - mean);
    lo = std::min(lo, d[i]);
    hi = std::max(hi, d[i]);
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  }
  const bool all_equal =
      hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * scale;
  TTestResult r;
  r.df = n - 1;
  r.mean_difference = mean;
  if (all_equal) {
    if (std::abs(mean) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
      r.t = 0.0;
      r.p_value = 1.0;
    } else {
      r.t = std::copysign(std::numeric_limits<double>::infinity(), mean);
      r.p_value = 0.0;
      r.degenerate = true;
    }
    return r;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  r.p_value = std::clamp(student_t_two_tailed_p(r.t, static_cast<double>(r.df)),
                         0.0, 1.0);
  return r;
}

Corpus error_report(const Corpus& corpus, const std::vector<Label>& predicted,
                    Label target_gold, Label predicted_as) {
  if (predicted.size() != corpus.size()) {
    throw InvalidArgument("error report: predictions not aligned with corpus");
  }
  std::vector<AnnotatedTweet> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].label == target_gold && predicted[i] == predicted_as) {
      out.push_back(corpus[i]);
    }
  }
  return Corpus(std::move(out), corpus.provenance());
}

}  // namespace bdtweet
