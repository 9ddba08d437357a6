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

#include "bdtweet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bdtweet/error.hpp"
#include "bdtweet/feature_space.hpp"
#include "bdtweet/levenshtein.hpp"
#include "bdtweet/parallel.hpp"
#include "bdtweet/rng.hpp"
#include "bdtweet/utf8.hpp"

namespace bdtweet {

namespace {

std::u32string to_u32(std::string_view text) {
  const auto cps = utf8::decode(text);
  return std::u32string(cps.begin(), cps.end());
}

SamplingReport make_report(std::string method, const Corpus& in,
                           const Corpus& out) {
  SamplingReport r;
  r.method = std::move(method);
  r.input = in.counts();
  r.output = out.counts();
  return r;
}

}  // namespace

// x + lambda * (y - x) over the union of both supports.
SparseVector smote_interpolate(const SparseVector& x, const SparseVector& y,
                               double lambda) {
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  const auto& xi = x.indices();
  const auto& yi = y.indices();
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < xi.size() || b < yi.size()) {
    std::uint32_t j;
    double xv = 0.0;
    double yv = 0.0;
    if (b == yi.size() || (a < xi.size() && xi[a] < yi[b])) {
      j = xi[a];
      xv = x.values()[a++];
    } else if (a == xi.size() || yi[b] < xi[a]) {
      j = yi[b];
      yv = y.values()[b++];
    } else {
      j = xi[a];
      xv = x.values()[a++];
      yv = y.values()[b++];
    }
    const double s = xv + lambda * (yv - xv);
    if (s != 0.0) {
      idx.push_back(j);
      val.push_back(s);
    }
  }
  return SparseVector(x.dimension(), std::move(idx), std::move(val));
}

SimilarityThreshold::SimilarityThreshold(double k) : k_(k) {
  if (!(k > 0.0 && k <= 1.0)) {
    throw InvalidArgument("similarity threshold k must lie in (0, 1]");
  }
}

std::size_t SamplingReport::input_total() const {
  std::size_t n = 0;
  for (auto c : input) n += c;
  return n;
}

std::size_t SamplingReport::output_total() const {
  std::size_t n = 0;
  for (auto c : output) n += c;
  return n;
}

std::string format_sampling_report(const SamplingReport& report) {
  std::ostringstream ss;
  ss << "[sampling]\n";
  ss << "method = " << report.method << '\n';
  for (const auto& [key, value] : report.parameters) {
    ss << "param." << key << " = " << value << '\n';
  }
  for (Label l : kAllLabels) {
    ss << "input." << label_name(l) << " = " << report.input[label_index(l)]
       << '\n';
  }
  ss << "input.total = " << report.input_total() << '\n';
  for (Label l : kAllLabels) {
    ss << "output." << label_name(l) << " = " << report.output[label_index(l)]
       << '\n';
  }
  ss << "output.total = " << report.output_total() << '\n';
  for (const auto& w : report.warnings) ss << "warning = " << w << '\n';
  return ss.str();
}

SampledCorpus undersample_similar_majority(const Corpus& train,
                                           SimilarityThreshold k) {
  std::vector<std::u32string> retained;
  std::vector<AnnotatedTweet> kept;
  kept.reserve(train.size());
  for (const auto& item : train.items()) {
    if (item.label != kMajorityLabel) {
      kept.push_back(item);
      continue;
    }
    auto text = to_u32(item.tweet.text);
    const bool similar =
        std::any_of(retained.begin(), retained.end(), [&](const auto& r) {
          return levenshtein_ratio_exceeds(text, r, k.value());
        });
    if (!similar) {
      retained.push_back(std::move(text));
      kept.push_back(item);
    }
  }
  Corpus out(std::move(kept), train.provenance());
  SamplingReport report = make_report("similar_majority", train, out);
  report.parameters = {{"k", format_double(k.value())}};
  return {std::move(out), std::move(report)};
}

std::vector<double> near_fn_scores(const Corpus& train,
                                   const std::vector<Tweet>& fn_minority) {
  std::vector<std::u32string> fn_texts;
  fn_texts.reserve(fn_minority.size());
  for (const auto& t : fn_minority) fn_texts.push_back(to_u32(t.text));
  std::vector<double> scores(train.size(), 0.0);
  parallel_for(train.size(), [&](std::size_t i) {
    if (train[i].label != kMajorityLabel) return;
    const auto text = to_u32(train[i].tweet.text);
    double best = 0.0;
    for (const auto& f : fn_texts) {
      if (levenshtein_ratio_upper_bound(text.size(), f.size()) <= best) {
        continue;
      }
      best = std::max(best, levenshtein_ratio(text, f));
    }
    scores[i] = best;
  });
  return scores;
}

SampledCorpus undersample_near_fn(const Corpus& train,
                                  const std::vector<Tweet>& fn_minority,
                                  SimilarityThreshold k) {
  std::vector<std::string> warnings;
  std::vector<AnnotatedTweet> kept;
  if (fn_minority.empty()) {
    warnings.push_back("false-negative set is empty; corpus left unchanged");
    kept = train.items();
  } else {
    std::vector<std::u32string> fn_texts;
    for (const auto& t : fn_minority) fn_texts.push_back(to_u32(t.text));
    std::vector<char> drop(train.size(), 0);
    parallel_for(train.size(), [&](std::size_t i) {
      if (train[i].label != kMajorityLabel) return;
      const auto text = to_u32(train[i].tweet.text);
      drop[i] = std::any_of(fn_texts.begin(), fn_texts.end(), [&](const auto& f) {
        return levenshtein_ratio_exceeds(text, f, k.value());
      });
    });
    for (std::size_t i = 0; i < train.size(); ++i) {
      if (!drop[i]) kept.push_back(train[i]);
    }
  }
  Corpus out(std::move(kept), train.provenance());
  SamplingReport report = make_report("near_false_negative", train, out);
  report.parameters = {{"k", format_double(k.value())},
                       {"fn_size", std::to_string(fn_minority.size())}};
  report.warnings = std::move(warnings);
  return {std::move(out), std::move(report)};
}

SampledCorpus undersample_random(const Corpus& train, std::size_t target_total,
                                 std::uint64_t seed) {
  std::vector<std::size_t> majority;
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (train[i].label == kMajorityLabel) majority.push_back(i);
  }
  const std::size_t minority_total = train.size() - majority.size();
  if (target_total < minority_total) {
    throw InvalidArgument("random under-sampling: target " +
                          std::to_string(target_total) +
                          " is below the minority total " +
                          std::to_string(minority_total));
  }
  if (target_total > train.size()) {
    throw InvalidArgument("random under-sampling: target exceeds corpus size");
  }
  const std::size_t remove = train.size() - target_total;
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(majority));
  std::vector<char> drop(train.size(), 0);
  for (std::size_t r = 0; r < remove; ++r) drop[majority[r]] = 1;
  std::vector<AnnotatedTweet> kept;
  kept.reserve(target_total);
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (!drop[i]) kept.push_back(train[i]);
  }
  Corpus out(std::move(kept), train.provenance());
  SamplingReport report = make_report("random_undersample", train, out);
  report.parameters = {{"target_total", std::to_string(target_total)},
                       {"seed", std::to_string(seed)}};
  return {std::move(out), std::move(report)};
}

SampledCorpus oversample_replacement(const Corpus& train, std::uint64_t seed) {
  const ClassCounts counts = train.counts();
  const std::size_t n_maj = counts[label_index(kMajorityLabel)];
  if (n_maj == 0) {
    throw InvalidArgument("over-sampling: majority class is empty");
  }
  std::vector<std::string> warnings;
  std::array<std::size_t, kNumLabels> factor{};
  for (Label l : kAllLabels) {
    const std::size_t c = label_index(l);
    if (l == kMajorityLabel) {
      factor[c] = 1;
    } else if (counts[c] == 0) {
      factor[c] = 0;
      warnings.push_back(std::string("class ") + std::string(label_name(l)) +
                         " is empty; left empty");
    } else {
      factor[c] = std::max<std::size_t>(1, n_maj / counts[c]);
    }
  }
  std::vector<AnnotatedTweet> items = train.items();
  for (Label l : kAllLabels) {
    const std::size_t c = label_index(l);
    for (std::size_t r = 2; r <= factor[c]; ++r) {
      for (const auto& item : train.items()) {
        if (item.label != l) continue;
        AnnotatedTweet copy = item;
        copy.tweet.id += "#" + std::to_string(r);
        items.push_back(std::move(copy));
      }
    }
  }
  Corpus out(std::move(items), train.provenance());
  SamplingReport report = make_report("oversample_replacement", train, out);
  report.parameters = {
      {"seed", std::to_string(seed)},
      {"factor.defect", std::to_string(factor[label_index(Label::Defect)])},
      {"factor.possible_defect",
       std::to_string(factor[label_index(Label::PossibleDefect)])}};
  report.warnings = std::move(warnings);
  return {std::move(out), std::move(report)};
}

ThresholdSweep sweep_threshold(const std::function<std::size_t(double)>& size_at,
                               std::size_t target_size, int iterations) {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t hi_size = size_at(hi);
  if (hi_size < target_size) return {hi, hi_size};
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const std::size_t s = size_at(mid);
    if (s >= target_size) {
      hi = mid;
      hi_size = s;
    } else {
      lo = mid;
    }
  }
  return {hi, hi_size};
}

std::vector<std::size_t> nearest_neighbors(
    const std::vector<const SparseVector*>& members, std::size_t self,
    std::size_t k) {
  std::vector<std::pair<double, std::size_t>> dist;
  dist.reserve(members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (j == self) continue;
    dist.emplace_back(squared_distance(*members[self], *members[j]), j);
  }
  k = std::min(k, dist.size());
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k),
                    dist.end());
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(dist[i].second);
  return out;
}

SmoteResult smote(const std::vector<SparseVector>& vectors,
                  const std::vector<Label>& labels, std::size_t k_neighbors,
                  std::uint64_t seed) {
  if (vectors.size() != labels.size()) {
    throw InvalidArgument("smote: vectors and labels differ in size");
  }
  if (k_neighbors < 1) throw InvalidArgument("smote: k_neighbors must be >= 1");
  std::array<std::vector<const SparseVector*>, kNumLabels> by_class;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    by_class[label_index(labels[i])].push_back(&vectors[i]);
  }
  const std::size_t n_maj = by_class[label_index(kMajorityLabel)].size();

  SmoteResult result;
  result.vectors = vectors;
  result.labels = labels;
  result.report.method = "smote";
  for (Label l : kAllLabels) result.report.input[label_index(l)] =
      by_class[label_index(l)].size();

  std::array<std::vector<SparseVector>, kNumLabels> synthetic;
  std::array<std::size_t, kNumLabels> per_instance{};
  for (Label l : kAllLabels) {
    if (l == kMajorityLabel) continue;
    const auto& members = by_class[label_index(l)];
    if (members.empty()) {
      result.report.warnings.push_back(std::string("class ") +
                                       std::string(label_name(l)) +
                                       " is empty; nothing synthesized");
      continue;
    }
    if (members.size() == 1) {
      throw InvalidArgument(std::string("smote: class ") +
                            std::string(label_name(l)) +
                            " has a single instance");
    }
    per_instance[label_index(l)] =
        n_maj > members.size() ? n_maj / members.size() - 1 : 0;
  }
  parallel_for(kNumLabels, [&](std::size_t c) {
    const std::size_t m = per_instance[c];
    if (m == 0) return;
    const auto& members = by_class[c];
    Rng rng(mix_seed(seed, c));
    auto& out = synthetic[c];
    out.reserve(members.size() * m);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto nn = nearest_neighbors(members, i, k_neighbors);
      const SparseVector& x = *members[i];
      for (std::size_t r = 0; r < m; ++r) {
        const SparseVector& y = *members[nn[rng.below(nn.size())]];
        const double lambda = rng.unit();
        out.push_back(smote_interpolate(x, y, lambda));
      }
    }
  });
  for (Label l : kAllLabels) {
    const std::size_t c = label_index(l);
    for (auto& s : synthetic[c]) {
      result.vectors.push_back(std::move(s));
      result.labels.push_back(l);
    }
    result.report.output[c] = result.report.input[c] + synthetic[c].size();
  }
  result.report.parameters = {
      {"k_neighbors", std::to_string(k_neighbors)},
      {"seed", std::to_string(seed)},
      {"per_instance.defect",
       std::to_string(per_instance[label_index(Label::Defect)])},
      {"per_instance.possible_defect",
       std::to_string(per_instance[label_index(Label::PossibleDefect)])}};
  return result;
}

}  // namespace bdtweet
