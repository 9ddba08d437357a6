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

#include "bdtweet/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include "bdtweet/error.hpp"
#include "bdtweet/utf8.hpp"

namespace bdtweet {

SparseVector::SparseVector(std::size_t dimension,
                           std::vector<std::uint32_t> indices,
                           std::vector<double> values)
    : dimension_(dimension),
      indices_(std::move(indices)),
      values_(std::move(values)) {
  if (indices_.size() != values_.size()) {
    throw InvalidArgument("sparse vector: index/value count mismatch");
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= dimension_) {
      throw InvalidArgument("sparse vector: index out of range");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw InvalidArgument("sparse vector: indices not strictly increasing");
    }
    if (!std::isfinite(values_[i])) {
      throw InvalidArgument("sparse vector: non-finite value");
    }
  }
}

SparseVector SparseVector::from_dense(const std::vector<double>& dense) {
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) {
      idx.push_back(static_cast<std::uint32_t>(i));
      val.push_back(dense[i]);
    }
  }
  return SparseVector(dense.size(), std::move(idx), std::move(val));
}

double SparseVector::at(std::uint32_t index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index) return 0.0;
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> dense(dimension_, 0.0);
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    dense[indices_[i]] = values_[i];
  }
  return dense;
}

double dot(const SparseVector& a, const SparseVector& b) {
  const auto& ai = a.indices();
  const auto& bi = b.indices();
  std::size_t i = 0;
  std::size_t j = 0;
  double sum = 0.0;
  while (i < ai.size() && j < bi.size()) {
    if (ai[i] == bi[j]) {
      sum += a.values()[i++] * b.values()[j++];
    } else if (ai[i] < bi[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return sum;
}

double squared_distance(const SparseVector& a, const SparseVector& b) {
  const auto& ai = a.indices();
  const auto& bi = b.indices();
  const auto& av = a.values();
  const auto& bv = b.values();
  std::size_t i = 0;
  std::size_t j = 0;
  double sum = 0.0;
  while (i < ai.size() || j < bi.size()) {
    double d;
    if (j == bi.size() || (i < ai.size() && ai[i] < bi[j])) {
      d = av[i++];
    } else if (i == ai.size() || bi[j] < ai[i]) {
      d = bv[j++];
    } else {
      d = av[i++] - bv[j++];
    }
    sum += d * d;
  }
  return sum;
}

std::string_view feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::NGram:
      return "ngram";
    case FeatureKind::Cluster:
      return "cluster";
    case FeatureKind::Structural:
      return "structural";
  }
  return "ngram";
}

FeatureKind kind_of_feature(std::string_view name) {
  if (name.starts_with(kClusterPrefix)) return FeatureKind::Cluster;
  if (name == kCharLengthFeature || name == kWordLengthFeature) {
    return FeatureKind::Structural;
  }
  return FeatureKind::NGram;
}

Vocabulary::Vocabulary(std::vector<std::string> names, std::size_t min_df)
    : names_(std::move(names)), min_df_(min_df) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw InvalidArgument("vocabulary: duplicate feature name");
  }
  kinds_.reserve(names_.size());
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    kinds_.push_back(kind_of_feature(names_[i]));
    index_.emplace(names_[i], static_cast<std::uint32_t>(i));
  }
}

std::int64_t Vocabulary::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        std::size_t n_min, std::size_t n_max) {
  if (n_min < 1 || n_min > n_max) {
    throw InvalidArgument("n-gram range requires 1 <= n_min <= n_max");
  }
  std::vector<std::string> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    if (n > tokens.size()) break;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string gram = tokens[i];
      for (std::size_t k = 1; k < n; ++k) {
        gram.push_back(' ');
        gram += tokens[i + k];
      }
      out.push_back(std::move(gram));
    }
  }
  return out;
}

ClusterMap ClusterMap::restricted_to(const Vocabulary& vocab) const {
  ClusterMap out;
  out.source = source;
  for (const auto& [token, path] : paths) {
    if (vocab.index_of(std::string(kClusterPrefix) + path) >= 0) {
      out.paths.emplace(token, path);
    }
  }
  return out;
}

ClusterMap parse_clusters(std::string_view contents, std::string source) {
  ClusterMap map;
  map.source = std::move(source);
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < contents.size()) {
    std::size_t nl = contents.find('\n', start);
    if (nl == std::string_view::npos) nl = contents.size();
    const std::string_view line = contents.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (utf8::trim(line).empty()) continue;
    const auto fields = utf8::split_whitespace(line);
    const std::string where = " at line " + std::to_string(line_no);
    if (fields.size() != 3) {
      throw DataError("cluster file: expected 3 fields" + where);
    }
    const std::string& path = fields[0];
    if (!std::all_of(path.begin(), path.end(),
                     [](char c) { return c == '0' || c == '1'; })) {
      throw DataError("cluster file: cluster id must be a bit string" + where);
    }
    if (!std::all_of(fields[2].begin(), fields[2].end(), utf8::is_ascii_digit)) {
      throw DataError("cluster file: count must be a non-negative integer" +
                      where);
    }
    auto [it, inserted] = map.paths.insert_or_assign(fields[1], path);
    if (!inserted) {
      map.warnings.push_back("token '" + fields[1] +
                             "' listed again; keeping the later entry" + where);
    }
  }
  return map;
}

ClusterMap load_clusters(const std::filesystem::path& path) {
  return parse_clusters(read_file(path), path.string());
}

std::vector<std::string> cluster_features(const std::vector<std::string>& tokens,
                                          const ClusterMap& map) {
  std::vector<std::string> out;
  for (const auto& tok : tokens) {
    auto it = map.paths.find(tok);
    if (it != map.paths.end()) {
      out.push_back(std::string(kClusterPrefix) + it->second);
    }
  }
  return out;
}

std::vector<std::string> cluster_tokens(std::string_view raw_text) {
  auto keep = [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || utf8::is_ascii_alpha(c) || utf8::is_ascii_digit(c) ||
           c == '#' || c == '@';
  };
  std::vector<std::string> out;
  for (auto& tok : utf8::split_whitespace(raw_text)) {
    std::size_t b = 0;
    std::size_t e = tok.size();
    while (b < e && !keep(tok[b])) ++b;
    while (e > b && !keep(tok[e - 1])) --e;
    if (b < e) out.push_back(utf8::ascii_lower(tok.substr(b, e - b)));
  }
  return out;
}

StructuralFeatures structural_features(std::string_view raw_text) {
  return {utf8::scalar_count(raw_text),
          utf8::split_whitespace(raw_text).size()};
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            std::size_t min_df, bool with_structural) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    std::set<std::string_view> unique(doc.begin(), doc.end());
    for (auto f : unique) ++df[std::string(f)];
  }
  std::vector<std::string> names;
  for (const auto& [name, count] : df) {
    if (count >= min_df && kind_of_feature(name) != FeatureKind::Structural) {
      names.push_back(name);
    }
  }
  if (with_structural) {
    names.emplace_back(kCharLengthFeature);
    names.emplace_back(kWordLengthFeature);
  }
  return Vocabulary(std::move(names), min_df);
}

SparseVector vectorize(const std::vector<std::string>& doc_features,
                       const StructuralFeatures* structural,
                       const Vocabulary& vocab, ValueMode mode) {
  std::map<std::uint32_t, double> cells;
  for (const auto& f : doc_features) {
    const auto idx = vocab.index_of(f);
    if (idx < 0 || vocab.kind(static_cast<std::size_t>(idx)) ==
                       FeatureKind::Structural) {
      continue;
    }
    double& cell = cells[static_cast<std::uint32_t>(idx)];
    cell = mode == ValueMode::Binary ? 1.0 : cell + 1.0;
  }
  if (structural != nullptr) {
    const auto c = vocab.index_of(kCharLengthFeature);
    const auto w = vocab.index_of(kWordLengthFeature);
    if (c >= 0) {
      cells[static_cast<std::uint32_t>(c)] =
          static_cast<double>(structural->char_length);
    }
    if (w >= 0) {
      cells[static_cast<std::uint32_t>(w)] =
          static_cast<double>(structural->word_length);
    }
  }
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  idx.reserve(cells.size());
  val.reserve(cells.size());
  for (const auto& [i, v] : cells) {
    idx.push_back(i);
    val.push_back(v);
  }
  return SparseVector(vocab.size(), std::move(idx), std::move(val));
}

Scaler::Scaler(std::vector<double> min, std::vector<double> max)
    : min_(std::move(min)), max_(std::move(max)) {
  if (min_.size() != max_.size()) {
    throw InvalidArgument("scaler: min/max size mismatch");
  }
  for (std::size_t j = 0; j < min_.size(); ++j) {
    if (!(min_[j] <= max_[j])) throw InvalidArgument("scaler: min > max");
    const double z = scale(j, 0.0);
    if (z != 0.0) shifted_zero_.emplace_back(static_cast<std::uint32_t>(j), z);
  }
}

double Scaler::scale(std::size_t column, double x) const {
  const double lo = min_[column];
  const double hi = max_[column];
  if (!(hi > lo)) return 0.0;
  return (x - lo) / (hi - lo);
}

SparseVector Scaler::apply(const SparseVector& v) const {
  if (v.dimension() != dimension()) {
    throw InvalidArgument("scaler: dimension mismatch");
  }
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  const auto& vi = v.indices();
  const auto& vv = v.values();
  std::size_t a = 0;
  std::size_t s = 0;
  auto emit = [&](std::uint32_t i, double x) {
    if (x != 0.0) {
      idx.push_back(i);
      val.push_back(x);
    }
  };
  while (a < vi.size() || s < shifted_zero_.size()) {
    if (s == shifted_zero_.size() ||
        (a < vi.size() && vi[a] < shifted_zero_[s].first)) {
      emit(vi[a], scale(vi[a], vv[a]));
      ++a;
    } else if (a == vi.size() || shifted_zero_[s].first < vi[a]) {
      emit(shifted_zero_[s].first, shifted_zero_[s].second);
      ++s;
    } else {
      emit(vi[a], scale(vi[a], vv[a]));
      ++a;
      ++s;
    }
  }
  return SparseVector(v.dimension(), std::move(idx), std::move(val));
}

Scaler fit_scaler(const std::vector<SparseVector>& train,
                  std::size_t dimension) {
  std::vector<double> lo(dimension, 0.0);
  std::vector<double> hi(dimension, 0.0);
  std::vector<std::size_t> present(dimension, 0);
  std::vector<bool> seen(dimension, false);
  for (const auto& v : train) {
    if (v.dimension() != dimension) {
      throw InvalidArgument("fit_scaler: dimension mismatch");
    }
    for (std::size_t k = 0; k < v.nnz(); ++k) {
      const auto j = v.indices()[k];
      const double x = v.values()[k];
      if (!seen[j]) {
        lo[j] = hi[j] = x;
        seen[j] = true;
      } else {
        lo[j] = std::min(lo[j], x);
        hi[j] = std::max(hi[j], x);
      }
      ++present[j];
    }
  }
  // Vectors lacking an entry contribute an implicit 0.
  for (std::size_t j = 0; j < dimension; ++j) {
    if (present[j] < train.size()) {
      lo[j] = std::min(lo[j], 0.0);
      hi[j] = std::max(hi[j], 0.0);
    }
  }
  return Scaler(std::move(lo), std::move(hi));
}

double entropy_bits(const std::vector<double>& counts) {
  double total = 0.0;
  for (double c : counts) total += c;
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (double c : counts) {
    if (c <= 0.0) continue;
    const double p = c / total;
    h -= p * std::log2(p);
  }
  return h;
}

std::vector<RankedFeature> information_gain(
    const std::vector<SparseVector>& vectors, const std::vector<Label>& labels,
    const Vocabulary& vocab) {
  if (vectors.size() != labels.size()) {
    throw InvalidArgument("information_gain: vectors and labels differ in size");
  }
  const std::size_t v = vocab.size();
  std::vector<std::array<double, kNumLabels>> present(v);
  std::vector<double> class_totals(kNumLabels, 0.0);
  for (std::size_t d = 0; d < vectors.size(); ++d) {
    const std::size_t c = label_index(labels[d]);
    class_totals[c] += 1.0;
    const auto& vec = vectors[d];
    for (std::size_t k = 0; k < vec.nnz(); ++k) {
      if (vec.indices()[k] >= v) {
        throw InvalidArgument("information_gain: vector exceeds vocabulary");
      }
      if (vec.values()[k] != 0.0) present[vec.indices()[k]][c] += 1.0;
    }
  }
  const double n = static_cast<double>(vectors.size());
  const double h_y = entropy_bits(class_totals);
  std::vector<RankedFeature> ranked;
  ranked.reserve(v);
  for (std::size_t j = 0; j < v; ++j) {
    std::vector<double> with(present[j].begin(), present[j].end());
    std::vector<double> without(kNumLabels);
    double n_with = 0.0;
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      without[c] = class_totals[c] - with[c];
      n_with += with[c];
    }
    double ig = 0.0;
    if (n > 0.0) {
      const double p = n_with / n;
      ig = h_y - p * entropy_bits(with) - (1.0 - p) * entropy_bits(without);
      ig = std::max(ig, 0.0);
    }
    ranked.push_back({vocab.name(j), ig});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedFeature& a, const RankedFeature& b) {
              if (a.information_gain != b.information_gain) {
                return a.information_gain > b.information_gain;
              }
              return a.name < b.name;
            });
  return ranked;
}

}  // namespace bdtweet
