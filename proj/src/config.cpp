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

#include "bdtweet/config.hpp"

#include <charconv>
#include <functional>

#include "bdtweet/error.hpp"
#include "bdtweet/sampling.hpp"
#include "bdtweet/utf8.hpp"

namespace bdtweet {

namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw InvalidArgument("invalid value '" + std::string(value) + "' for " +
                        std::string(key));
}

double to_double(std::string_view key, std::string_view v) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, v);
  }
  return x;
}

std::uint64_t to_uint(std::string_view key, std::string_view v) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, v);
  }
  return x;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, v);
}

std::set<std::string, std::less<>> to_word_set(std::string_view v) {
  std::set<std::string, std::less<>> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    std::size_t comma = v.find(',', start);
    if (comma == std::string_view::npos) comma = v.size();
    const auto word = utf8::trim(v.substr(start, comma - start));
    if (!word.empty()) out.insert(utf8::ascii_lower(word));
    start = comma + 1;
  }
  return out;
}

std::string join_set(const std::set<std::string, std::less<>>& s) {
  std::string out;
  for (const auto& w : s) {
    if (!out.empty()) out += ',';
    out += w;
  }
  return out;
}

std::optional<double> to_auto_double(std::string_view key, std::string_view v) {
  if (v == "auto") return std::nullopt;
  return to_double(key, v);
}

std::string auto_or(const std::optional<double>& x) {
  return x ? format_double(*x) : "auto";
}

struct Key {
  std::string name;
  std::function<void(PipelineConfig&, std::string_view)> set;
  std::function<std::string(const PipelineConfig&)> get;
  bool is_path = false;
};

const std::vector<Key>& keys() {
  static const std::vector<Key> table = [] {
    std::vector<Key> t;
    auto path = [&t](std::string name, std::filesystem::path PipelineConfig::*m) {
      t.push_back({std::move(name),
                   [m](PipelineConfig& c, std::string_view v) { c.*m = std::string(v); },
                   [m](const PipelineConfig& c) { return (c.*m).string(); }, true});
    };
    path("paths.corpus", &PipelineConfig::corpus);
    path("paths.lexicon", &PipelineConfig::lexicon);
    path("paths.names", &PipelineConfig::names);
    path("paths.clusters", &PipelineConfig::clusters);
    path("paths.model", &PipelineConfig::model);
    path("paths.fn_tweets", &PipelineConfig::fn_tweets);

    using WordSet = std::set<std::string, std::less<>> NormalizationConfig::*;
    auto words = [&t](std::string name, WordSet m) {
      t.push_back({std::move(name),
                   [m](PipelineConfig& c, std::string_view v) {
                     c.normalization.*m = to_word_set(v);
                   },
                   [m](const PipelineConfig& c) { return join_set(c.normalization.*m); }});
    };
    words("normalize.possessive", &NormalizationConfig::possessive_pronouns);
    words("normalize.child", &NormalizationConfig::child_terms);
    words("normalize.third_person", &NormalizationConfig::third_person_pronouns);

    auto size = [&t](std::string name, std::size_t FeatureOptions::*m) {
      t.push_back({name,
                   [m, name](PipelineConfig& c, std::string_view v) {
                     c.features.*m = to_uint(name, v);
                   },
                   [m](const PipelineConfig& c) { return std::to_string(c.features.*m); }});
    };
    size("features.ngram_min", &FeatureOptions::ngram_min);
    size("features.ngram_max", &FeatureOptions::ngram_max);
    size("features.min_df", &FeatureOptions::min_df);
    t.push_back({"features.values",
                 [](PipelineConfig& c, std::string_view v) {
                   if (v == "binary") {
                     c.features.values = ValueMode::Binary;
                   } else if (v == "count") {
                     c.features.values = ValueMode::Count;
                   } else {
                     bad_value("features.values", v);
                   }
                 },
                 [](const PipelineConfig& c) {
                   return std::string(c.features.values == ValueMode::Binary ? "binary"
                                                                             : "count");
                 }});
    auto flag = [&t](std::string name, bool FeatureOptions::*m) {
      t.push_back({name,
                   [m, name](PipelineConfig& c, std::string_view v) {
                     c.features.*m = to_bool(name, v);
                   },
                   [m](const PipelineConfig& c) {
                     return std::string(c.features.*m ? "true" : "false");
                   }});
    };
    flag("features.clusters", &FeatureOptions::clusters);
    flag("features.structural", &FeatureOptions::structural);

    t.push_back({"sampler.method",
                 [](PipelineConfig& c, std::string_view v) {
                   const auto s = parse_sampler(v);
                   if (!s) bad_value("sampler.method", v);
                   c.sampler.method = *s;
                 },
                 [](const PipelineConfig& c) {
                   return std::string(sampler_name(c.sampler.method));
                 }});
    t.push_back({"sampler.k",
                 [](PipelineConfig& c, std::string_view v) {
                   c.sampler.k = to_double("sampler.k", v);
                 },
                 [](const PipelineConfig& c) { return format_double(c.sampler.k); }});
    t.push_back({"sampler.target",
                 [](PipelineConfig& c, std::string_view v) {
                   c.sampler.target = to_uint("sampler.target", v);
                 },
                 [](const PipelineConfig& c) { return std::to_string(c.sampler.target); }});
    t.push_back({"sampler.neighbors",
                 [](PipelineConfig& c, std::string_view v) {
                   c.sampler.neighbors = to_uint("sampler.neighbors", v);
                 },
                 [](const PipelineConfig& c) {
                   return std::to_string(c.sampler.neighbors);
                 }});
    t.push_back({"sampler.seed",
                 [](PipelineConfig& c, std::string_view v) {
                   c.sampler.seed = to_uint("sampler.seed", v);
                 },
                 [](const PipelineConfig& c) { return std::to_string(c.sampler.seed); }});

    t.push_back({"classifier.type",
                 [](PipelineConfig& c, std::string_view v) {
                   const auto k = parse_classifier(v);
                   if (!k) bad_value("classifier.type", v);
                   c.classifier = *k;
                 },
                 [](const PipelineConfig& c) {
                   return std::string(classifier_name(c.classifier));
                 }});

    t.push_back({"svm.cost",
                 [](PipelineConfig& c, std::string_view v) {
                   c.svm.cost = to_double("svm.cost", v);
                 },
                 [](const PipelineConfig& c) { return format_double(c.svm.cost); }});
    t.push_back({"svm.gamma",
                 [](PipelineConfig& c, std::string_view v) {
                   c.svm.gamma = to_auto_double("svm.gamma", v);
                 },
                 [](const PipelineConfig& c) { return auto_or(c.svm.gamma); }});
    t.push_back({"svm.kernel",
                 [](PipelineConfig& c, std::string_view v) {
                   const auto k = parse_kernel(v);
                   if (!k) bad_value("svm.kernel", v);
                   c.svm.kernel = *k;
                 },
                 [](const PipelineConfig& c) {
                   return std::string(kernel_name(c.svm.kernel));
                 }});
    t.push_back({"svm.tolerance",
                 [](PipelineConfig& c, std::string_view v) {
                   c.svm.tolerance = to_double("svm.tolerance", v);
                 },
                 [](const PipelineConfig& c) { return format_double(c.svm.tolerance); }});
    t.push_back({"svm.max_iterations",
                 [](PipelineConfig& c, std::string_view v) {
                   c.svm.max_iterations = to_uint("svm.max_iterations", v);
                 },
                 [](const PipelineConfig& c) {
                   return std::to_string(c.svm.max_iterations);
                 }});
    t.push_back({"svm.cache_mb",
                 [](PipelineConfig& c, std::string_view v) {
                   c.svm.cache_bytes = to_uint("svm.cache_mb", v) << 20;
                 },
                 [](const PipelineConfig& c) {
                   return std::to_string(c.svm.cache_bytes >> 20);
                 }});
    for (Label l : kAllLabels) {
      const std::string name = "svm.weight." + std::string(label_name(l));
      t.push_back({name,
                   [l, name](PipelineConfig& c, std::string_view v) {
                     c.svm.class_weights[label_index(l)] = to_auto_double(name, v);
                   },
                   [l](const PipelineConfig& c) {
                     return auto_or(c.svm.class_weights[label_index(l)]);
                   }});
    }
    t.push_back({"nb.event_model",
                 [](PipelineConfig& c, std::string_view v) {
                   const auto m = parse_nb_event_model(v);
                   if (!m) bad_value("nb.event_model", v);
                   c.nb_event_model = *m;
                 },
                 [](const PipelineConfig& c) {
                   return std::string(nb_event_model_name(c.nb_event_model));
                 }});

    t.push_back({"split.test",
                 [](PipelineConfig& c, std::string_view v) {
                   c.test_fraction = to_double("split.test", v);
                 },
                 [](const PipelineConfig& c) { return format_double(c.test_fraction); }});
    t.push_back({"split.validation",
                 [](PipelineConfig& c, std::string_view v) {
                   c.validation_fraction = to_double("split.validation", v);
                 },
                 [](const PipelineConfig& c) {
                   return format_double(c.validation_fraction);
                 }});
    t.push_back({"split.seed",
                 [](PipelineConfig& c, std::string_view v) {
                   c.seed = to_uint("split.seed", v);
                 },
                 [](const PipelineConfig& c) { return std::to_string(c.seed); }});
    return t;
  }();
  return table;
}

const Key& find_key(std::string_view name) {
  for (const auto& k : keys()) {
    if (k.name == name) return k;
  }
  throw InvalidArgument("unknown config key '" + std::string(name) + "'");
}

}  // namespace

std::string_view sampler_name(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::None: return "none";
    case SamplerKind::SimilarMajority: return "similar";
    case SamplerKind::NearFalseNegative: return "near-fn";
    case SamplerKind::Random: return "random";
    case SamplerKind::Oversample: return "oversample";
    case SamplerKind::Smote: return "smote";
  }
  return "none";
}

std::optional<SamplerKind> parse_sampler(std::string_view name) {
  for (auto k : {SamplerKind::None, SamplerKind::SimilarMajority,
                 SamplerKind::NearFalseNegative, SamplerKind::Random,
                 SamplerKind::Oversample, SamplerKind::Smote}) {
    if (sampler_name(k) == name) return k;
  }
  return std::nullopt;
}

void PipelineConfig::validate(bool check_paths) const {
  normalization.validate();
  features.validate();
  svm.validate();
  if (sampler.method == SamplerKind::SimilarMajority ||
      sampler.method == SamplerKind::NearFalseNegative) {
    static_cast<void>(SimilarityThreshold{sampler.k});
  }
  if (sampler.method == SamplerKind::Smote && sampler.neighbors < 1) {
    throw InvalidArgument("sampler.neighbors must be at least 1");
  }
  if (sampler.method == SamplerKind::Random && sampler.target == 0) {
    throw InvalidArgument("sampler.target must be set for random under-sampling");
  }
  if (sampler.method == SamplerKind::NearFalseNegative && fn_tweets.empty()) {
    throw InvalidArgument("paths.fn_tweets must be set for the near-fn sampler");
  }
  auto fraction = [](double f, const char* key) {
    if (!(f >= 0.0 && f < 1.0)) {
      throw InvalidArgument(std::string(key) + " must lie in [0, 1)");
    }
  };
  fraction(test_fraction, "split.test");
  fraction(validation_fraction, "split.validation");
  if (test_fraction + validation_fraction >= 1.0) {
    throw InvalidArgument("split fractions must sum to less than 1");
  }
  if (check_paths) {
    for (const auto& k : keys()) {
      if (!k.is_path || k.name == "paths.model") continue;
      const std::string p = k.get(*this);
      if (!p.empty() && !std::filesystem::exists(p)) {
        throw InvalidArgument(k.name + ": no such file '" + p + "'");
      }
    }
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& k : keys()) out.push_back(k.name);
    return out;
  }();
  return names;
}

void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value) {
  find_key(key).set(config, utf8::trim(value));
}

PipelineConfig parse_config(std::string_view contents,
                            const std::filesystem::path& base_dir) {
  PipelineConfig config;
  const auto lines = split_lines(contents);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = utf8::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(i + 1) +
                            ": expected 'section.key = value'");
    }
    const auto key = utf8::trim(line.substr(0, eq));
    const auto value = utf8::trim(line.substr(eq + 1));
    try {
      const Key& k = find_key(key);
      if (k.is_path && !value.empty() && !base_dir.empty() &&
          std::filesystem::path(value).is_relative()) {
        k.set(config, (base_dir / std::filesystem::path(value)).lexically_normal().string());
      } else {
        k.set(config, value);
      }
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("config line " + std::to_string(i + 1) + ": " +
                            e.what());
    }
  }
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  try {
    return parse_config(read_file(path), path.parent_path());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

void apply_overrides(PipelineConfig& config,
                     const std::vector<std::string>& overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("override '" + o + "' is not key=value");
    }
    set_config_value(config, utf8::trim(std::string_view(o).substr(0, eq)),
                     std::string_view(o).substr(eq + 1));
  }
}

std::string format_config(const PipelineConfig& config) {
  std::string out;
  for (const auto& k : keys()) {
    out += k.name + " = " + k.get(config) + '\n';
  }
  return out;
}

}  // namespace bdtweet
