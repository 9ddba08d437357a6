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

#include "bdtweet/model_io.hpp"

#include <map>

#include "bdtweet/error.hpp"
#include "json.hpp"

namespace bdtweet {

namespace {

using nlohmann::json;

json sparse_to_json(const SparseVector& v) {
  return json{{"indices", v.indices()}, {"values", v.values()}};
}

SparseVector sparse_from_json(const json& j, std::size_t dimension) {
  return SparseVector(dimension, j.at("indices").get<std::vector<std::uint32_t>>(),
                      j.at("values").get<std::vector<double>>());
}

Label label_from_json(const json& j) {
  const auto l = parse_label(j.get<std::string>());
  if (!l) throw DataError("model: unknown label '" + j.get<std::string>() + "'");
  return *l;
}

json labels_to_json(const std::vector<Label>& labels) {
  json out = json::array();
  for (Label l : labels) out.push_back(std::string(label_name(l)));
  return out;
}

std::vector<Label> labels_from_json(const json& j) {
  std::vector<Label> out;
  for (const auto& e : j) out.push_back(label_from_json(e));
  return out;
}

template <typename Set>
json set_to_json(const Set& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(x);
  return out;
}

std::set<std::string, std::less<>> set_from_json(const json& j) {
  std::set<std::string, std::less<>> out;
  for (const auto& e : j) out.insert(e.get<std::string>());
  return out;
}

json preprocessing_to_json(const Preprocessor& p) {
  json lexicon = json::array();
  for (const auto& t : p.lexicon().terms()) {
    lexicon.push_back({{"term", t.canonical}, {"variants", t.variants}});
  }
  const auto& c = p.config();
  const auto& ph = c.placeholders;
  return json{
      {"names", set_to_json(p.names().names())},
      {"lexicon", lexicon},
      {"normalization",
       {{"possessive", set_to_json(c.possessive_pronouns)},
        {"child", set_to_json(c.child_terms)},
        {"third_person", set_to_json(c.third_person_pronouns)},
        {"placeholders",
         {{"user", ph.user},
          {"url", ph.url},
          {"name", ph.name},
          {"bdterm", ph.bdterm},
          {"poss", ph.poss},
          {"child", ph.child},
          {"third_person", ph.third_person}}}}}};
}

Preprocessor preprocessing_from_json(const json& j) {
  std::set<std::string> names;
  for (const auto& n : j.at("names")) names.insert(n.get<std::string>());
  std::vector<LexiconTerm> terms;
  for (const auto& t : j.at("lexicon")) {
    terms.push_back(LexiconTerm{t.at("term").get<std::string>(),
                                t.at("variants").get<std::vector<std::string>>()});
  }
  const auto& n = j.at("normalization");
  NormalizationConfig c;
  c.possessive_pronouns = set_from_json(n.at("possessive"));
  c.child_terms = set_from_json(n.at("child"));
  c.third_person_pronouns = set_from_json(n.at("third_person"));
  const auto& ph = n.at("placeholders");
  c.placeholders.user = ph.at("user").get<std::string>();
  c.placeholders.url = ph.at("url").get<std::string>();
  c.placeholders.name = ph.at("name").get<std::string>();
  c.placeholders.bdterm = ph.at("bdterm").get<std::string>();
  c.placeholders.poss = ph.at("poss").get<std::string>();
  c.placeholders.child = ph.at("child").get<std::string>();
  c.placeholders.third_person = ph.at("third_person").get<std::string>();
  return Preprocessor(NameLexicon(std::move(names)), std::move(c),
                      terms.empty() ? Lexicon{} : Lexicon(std::move(terms)));
}

json features_to_json(const FeatureSpace& s) {
  const auto& o = s.options();
  std::map<std::string, std::string> paths(s.clusters().paths.begin(),
                                           s.clusters().paths.end());
  return json{{"ngram_min", o.ngram_min},
              {"ngram_max", o.ngram_max},
              {"min_df", o.min_df},
              {"values", o.values == ValueMode::Binary ? "binary" : "count"},
              {"clusters", o.clusters},
              {"structural", o.structural},
              {"vocabulary", s.vocabulary().names()},
              {"cluster_source", s.clusters().source},
              {"cluster_paths", paths}};
}

FeatureSpace features_from_json(const json& j) {
  FeatureOptions o;
  o.ngram_min = j.at("ngram_min").get<std::size_t>();
  o.ngram_max = j.at("ngram_max").get<std::size_t>();
  o.min_df = j.at("min_df").get<std::size_t>();
  const auto values = j.at("values").get<std::string>();
  if (values == "binary") {
    o.values = ValueMode::Binary;
  } else if (values == "count") {
    o.values = ValueMode::Count;
  } else {
    throw DataError("model: unknown value mode '" + values + "'");
  }
  o.clusters = j.at("clusters").get<bool>();
  o.structural = j.at("structural").get<bool>();
  ClusterMap clusters;
  clusters.source = j.at("cluster_source").get<std::string>();
  for (const auto& [token, path] : j.at("cluster_paths").items()) {
    clusters.paths.emplace(token, path.get<std::string>());
  }
  Vocabulary vocab(j.at("vocabulary").get<std::vector<std::string>>(), o.min_df);
  return FeatureSpace(o, std::move(clusters), std::move(vocab));
}

json svm_to_json(const SvmModel& m) {
  json pairs = json::array();
  for (const auto& p : m.pairs) {
    json svs = json::array();
    for (const auto& sv : p.support_vectors) svs.push_back(sparse_to_json(sv));
    pairs.push_back({{"positive", std::string(label_name(p.positive))},
                     {"negative", std::string(label_name(p.negative))},
                     {"bias", p.bias},
                     {"iterations", p.iterations},
                     {"converged", p.converged},
                     {"alpha", p.alpha},
                     {"signs", p.signs},
                     {"support_vectors", svs}});
  }
  return json{{"kernel", std::string(kernel_name(m.kernel.type))},
              {"gamma", m.kernel.gamma},
              {"cost", m.cost},
              {"class_weights", m.class_weights},
              {"dimension", m.dimension},
              {"classes", labels_to_json(m.classes)},
              {"pairs", pairs}};
}

SvmModel svm_from_json(const json& j) {
  SvmModel m;
  const auto kernel = parse_kernel(j.at("kernel").get<std::string>());
  if (!kernel) throw DataError("model: unknown kernel");
  m.kernel.type = *kernel;
  m.kernel.gamma = j.at("gamma").get<double>();
  m.cost = j.at("cost").get<double>();
  m.class_weights = j.at("class_weights").get<std::array<double, kNumLabels>>();
  m.dimension = j.at("dimension").get<std::size_t>();
  m.classes = labels_from_json(j.at("classes"));
  for (const auto& p : j.at("pairs")) {
    BinarySvm b;
    b.positive = label_from_json(p.at("positive"));
    b.negative = label_from_json(p.at("negative"));
    b.bias = p.at("bias").get<double>();
    b.iterations = p.at("iterations").get<std::size_t>();
    b.converged = p.at("converged").get<bool>();
    b.alpha = p.at("alpha").get<std::vector<double>>();
    b.signs = p.at("signs").get<std::vector<std::int8_t>>();
    for (const auto& sv : p.at("support_vectors")) {
      b.support_vectors.push_back(sparse_from_json(sv, m.dimension));
    }
    if (b.alpha.size() != b.support_vectors.size() ||
        b.signs.size() != b.support_vectors.size()) {
      throw DataError("model: support vector arrays differ in length");
    }
    m.pairs.push_back(std::move(b));
  }
  return m;
}

json nb_to_json(const NbModel& m) {
  return json{{"event_model", std::string(nb_event_model_name(m.event_model))},
              {"dimension", m.dimension},
              {"classes", labels_to_json(m.classes)},
              {"log_priors", m.log_priors},
              {"log_likelihoods", m.log_likelihoods},
              {"means", m.means},
              {"variances", m.variances}};
}

NbModel nb_from_json(const json& j) {
  NbModel m;
  const auto event = parse_nb_event_model(j.at("event_model").get<std::string>());
  if (!event) throw DataError("model: unknown naive Bayes event model");
  m.event_model = *event;
  m.dimension = j.at("dimension").get<std::size_t>();
  m.classes = labels_from_json(j.at("classes"));
  m.log_priors = j.at("log_priors").get<std::vector<double>>();
  using Table = std::vector<std::vector<double>>;
  m.log_likelihoods = j.at("log_likelihoods").get<Table>();
  m.means = j.at("means").get<Table>();
  m.variances = j.at("variances").get<Table>();
  if (m.log_priors.size() != m.classes.size()) {
    throw DataError("model: prior table does not match class list");
  }
  return m;
}

}  // namespace

std::string_view classifier_name(ClassifierKind kind) {
  return kind == ClassifierKind::Svm ? "svm" : "nb";
}

std::optional<ClassifierKind> parse_classifier(std::string_view name) {
  if (name == "svm") return ClassifierKind::Svm;
  if (name == "nb") return ClassifierKind::NaiveBayes;
  return std::nullopt;
}

Label ModelBundle::predict(const SparseVector& v) const {
  const SparseVector scaled = scaler ? scaler->apply(v) : v;
  if (classifier == ClassifierKind::Svm) {
    if (!svm) throw InvalidArgument("model has no SVM");
    return predict_svm(*svm, scaled).label;
  }
  if (!nb) throw InvalidArgument("model has no naive Bayes tables");
  return predict_nb(*nb, scaled).label;
}

Label ModelBundle::predict(const Document& doc) const {
  return predict(space.vectorize(doc));
}

Label ModelBundle::predict(const AnnotatedTweet& tweet) const {
  return predict(preprocessor.document(tweet));
}

std::string serialize_model(const ModelBundle& model) {
  json meta = json::object();
  for (const auto& [k, v] : model.metadata) meta[k] = v;
  json j{{"format", std::string(kModelFormat)},
         {"version", kModelVersion},
         {"classifier", std::string(classifier_name(model.classifier))},
         {"metadata", meta},
         {"preprocessing", preprocessing_to_json(model.preprocessor)},
         {"features", features_to_json(model.space)}};
  j["scaler"] = model.scaler ? json{{"min", model.scaler->min()},
                                    {"max", model.scaler->max()}}
                             : json(nullptr);
  j["svm"] = model.svm ? svm_to_json(*model.svm) : json(nullptr);
  j["nb"] = model.nb ? nb_to_json(*model.nb) : json(nullptr);
  return j.dump() + '\n';
}

ModelBundle deserialize_model(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DataError(std::string("model: invalid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kModelFormat) {
      throw DataError("model: not a bdtweet model file");
    }
    const int version = j.at("version").get<int>();
    if (version != kModelVersion) {
      throw DataError("model: unsupported format version " +
                      std::to_string(version));
    }
    ModelBundle m;
    const auto kind = parse_classifier(j.at("classifier").get<std::string>());
    if (!kind) throw DataError("model: unknown classifier");
    m.classifier = *kind;
    for (const auto& [k, v] : j.at("metadata").items()) {
      m.metadata.emplace_back(k, v.get<std::string>());
    }
    m.preprocessor = preprocessing_from_json(j.at("preprocessing"));
    m.space = features_from_json(j.at("features"));
    if (!j.at("scaler").is_null()) {
      m.scaler = Scaler(j["scaler"].at("min").get<std::vector<double>>(),
                        j["scaler"].at("max").get<std::vector<double>>());
    }
    if (!j.at("svm").is_null()) m.svm = svm_from_json(j["svm"]);
    if (!j.at("nb").is_null()) m.nb = nb_from_json(j["nb"]);
    if (m.classifier == ClassifierKind::Svm && !m.svm) {
      throw DataError("model: classifier is svm but no svm section");
    }
    if (m.classifier == ClassifierKind::NaiveBayes && !m.nb) {
      throw DataError("model: classifier is nb but no nb section");
    }
    return m;
  } catch (const json::exception& e) {
    throw DataError(std::string("model: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("model: ") + e.what());
  }
}

std::string serialize_feature_space(const FeatureSpace& space) {
  json j{{"format", std::string(kFeatureSpaceFormat)},
         {"version", kModelVersion},
         {"features", features_to_json(space)}};
  return j.dump() + '\n';
}

FeatureSpace deserialize_feature_space(std::string_view json_text) {
  try {
    const json j = json::parse(json_text);
    if (j.at("format").get<std::string>() != kFeatureSpaceFormat) {
      throw DataError("not a bdtweet feature-space file");
    }
    if (j.at("version").get<int>() != kModelVersion) {
      throw DataError("feature space: unsupported format version " +
                      std::to_string(j.at("version").get<int>()));
    }
    return features_from_json(j.at("features"));
  } catch (const json::exception& e) {
    throw DataError(std::string("feature space: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("feature space: ") + e.what());
  }
}

void save_model(const ModelBundle& model, const std::filesystem::path& path) {
  write_file(path, serialize_model(model));
}

ModelBundle load_model(const std::filesystem::path& path) {
  return deserialize_model(read_file(path));
}

}  // namespace bdtweet
