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

#include "bdtweet/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <unordered_map>

#include "bdtweet/error.hpp"
#include "bdtweet/parallel.hpp"

namespace bdtweet {

namespace {

constexpr double kTau = 1e-12;

// LRU cache of Q columns, keyed by instance index.
class QColumnCache {
 public:
  QColumnCache(const std::vector<const SparseVector*>& x,
               const std::vector<std::int8_t>& y, const Kernel& kernel,
               std::size_t cache_bytes)
      : x_(x), y_(y), kernel_(kernel) {
    const std::size_t row_bytes = std::max<std::size_t>(1, x.size()) * sizeof(double);
    capacity_ = std::max<std::size_t>(2, cache_bytes / row_bytes);
  }

  const std::vector<double>& column(std::size_t i) {
    auto it = rows_.find(i);
    if (it != rows_.end()) {
      order_.splice(order_.begin(), order_, it->second.position);
      return it->second.values;
    }
    if (rows_.size() >= capacity_) {
      rows_.erase(order_.back());
      order_.pop_back();
    }
    order_.push_front(i);
    Entry& e = rows_[i];
    e.position = order_.begin();
    e.values.resize(x_.size());
    for (std::size_t t = 0; t < x_.size(); ++t) {
      e.values[t] = static_cast<double>(y_[i] * y_[t]) * kernel_(*x_[i], *x_[t]);
    }
    return e.values;
  }

 private:
  struct Entry {
    std::vector<double> values;
    std::list<std::size_t>::iterator position;
  };
  const std::vector<const SparseVector*>& x_;
  const std::vector<std::int8_t>& y_;
  const Kernel& kernel_;
  std::size_t capacity_;
  std::list<std::size_t> order_;
  std::unordered_map<std::size_t, Entry> rows_;
};

void check_finite(const SparseVector& v) {
  for (double x : v.values()) {
    if (!std::isfinite(x)) throw InvalidArgument("svm: non-finite feature value");
  }
}

}  // namespace

void SvmParams::validate() const {
  if (!(cost > 0.0)) throw InvalidArgument("svm: cost must be > 0");
  if (gamma && !(*gamma > 0.0)) throw InvalidArgument("svm: gamma must be > 0");
  for (const auto& w : class_weights) {
    if (w && !(*w > 0.0)) throw InvalidArgument("svm: class weights must be > 0");
  }
  if (!(tolerance > 0.0)) throw InvalidArgument("svm: tolerance must be > 0");
  if (max_iterations == 0) {
    throw InvalidArgument("svm: max_iterations must be > 0");
  }
}

SmoSolution solve_smo(const std::vector<const SparseVector*>& x,
                      const std::vector<std::int8_t>& y,
                      const std::vector<double>& upper, const Kernel& kernel,
                      double tolerance, std::size_t max_iterations,
                      std::size_t cache_bytes) {
  const std::size_t n = x.size();
  if (y.size() != n || upper.size() != n) {
    throw InvalidArgument("smo: inconsistent problem sizes");
  }
  SmoSolution sol;
  sol.alpha.assign(n, 0.0);
  if (n == 0) {
    sol.converged = true;
    return sol;
  }
  std::vector<double> grad(n, -1.0);
  std::vector<double> diag(n);
  for (std::size_t t = 0; t < n; ++t) diag[t] = kernel(*x[t], *x[t]);
  QColumnCache cache(x, y, kernel, cache_bytes);
  auto& alpha = sol.alpha;

  auto in_up = [&](std::size_t t) {
    return y[t] > 0 ? alpha[t] < upper[t] : alpha[t] > 0.0;
  };
  auto in_low = [&](std::size_t t) {
    return y[t] > 0 ? alpha[t] > 0.0 : alpha[t] < upper[t];
  };

  while (sol.iterations < max_iterations) {
    double g_max = -std::numeric_limits<double>::infinity();
    double g_min = std::numeric_limits<double>::infinity();
    std::size_t i = n;
    std::size_t j = n;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -static_cast<double>(y[t]) * grad[t];
      if (in_up(t) && v > g_max) {
        g_max = v;
        i = t;
      }
      if (in_low(t) && v < g_min) {
        g_min = v;
        j = t;
      }
    }
    if (i == n || j == n || g_max - g_min <= tolerance) {
      sol.converged = true;
      break;
    }
    ++sol.iterations;

    const std::vector<double>& qi = cache.column(i);
    const std::vector<double>& qj = cache.column(j);
    const double ci = upper[i];
    const double cj = upper[j];
    const double old_ai = alpha[i];
    const double old_aj = alpha[j];

    if (y[i] != y[j]) {
      double quad = diag[i] + diag[j] + 2.0 * qi[j];
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = -diff;
      }
      if (diff > ci - cj) {
        if (alpha[i] > ci) {
          alpha[i] = ci;
          alpha[j] = ci - diff;
        }
      } else if (alpha[j] > cj) {
        alpha[j] = cj;
        alpha[i] = cj + diff;
      }
    } else {
      double quad = diag[i] + diag[j] - 2.0 * qi[j];
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > ci) {
        if (alpha[i] > ci) {
          alpha[i] = ci;
          alpha[j] = sum - ci;
        }
      } else if (alpha[j] < 0.0) {
        alpha[j] = 0.0;
        alpha[i] = sum;
      }
      if (sum > cj) {
        if (alpha[j] > cj) {
          alpha[j] = cj;
          alpha[i] = sum - cj;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = sum;
      }
    }

    const double dai = alpha[i] - old_ai;
    const double daj = alpha[j] - old_aj;
    for (std::size_t t = 0; t < n; ++t) {
      grad[t] += qi[t] * dai + qj[t] * daj;
    }
  }

  // Bias from free variables, or the midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0.0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = static_cast<double>(y[t]) * grad[t];
    if (alpha[t] >= upper[t]) {
      if (y[t] < 0) {
        ub = std::min(ub, yg);
      } else {
        lb = std::max(lb, yg);
      }
    } else if (alpha[t] <= 0.0) {
      if (y[t] > 0) {
        ub = std::min(ub, yg);
      } else {
        lb = std::max(lb, yg);
      }
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  if (n_free > 0) {
    sol.rho = sum_free / static_cast<double>(n_free);
  } else if (std::isfinite(ub) && std::isfinite(lb)) {
    sol.rho = 0.5 * (ub + lb);
  } else {
    sol.rho = std::isfinite(ub) ? ub : (std::isfinite(lb) ? lb : 0.0);
  }

  double obj = 0.0;
  for (std::size_t t = 0; t < n; ++t) obj += alpha[t] * (grad[t] - 1.0);
  sol.objective = 0.5 * obj;
  return sol;
}

double BinarySvm::decision(const SparseVector& v, const Kernel& kernel) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < support_vectors.size(); ++i) {
    sum += alpha[i] * static_cast<double>(signs[i]) * kernel(support_vectors[i], v);
  }
  return sum + bias;
}

std::array<double, kNumLabels> inverse_frequency_weights(
    const std::vector<Label>& labels) {
  ClassCounts counts{};
  for (Label l : labels) ++counts[label_index(l)];
  const auto k = static_cast<double>(
      std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
  std::array<double, kNumLabels> w{};
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (counts[c] > 0) {
      w[c] = static_cast<double>(labels.size()) /
             (k * static_cast<double>(counts[c]));
    }
  }
  return w;
}

BinarySvm train_binary_svm(const std::vector<const SparseVector*>& positives,
                           const std::vector<const SparseVector*>& negatives,
                           Label positive, Label negative, double positive_cost,
                           double negative_cost, const Kernel& kernel,
                           const SvmParams& params) {
  if (positives.empty() || negatives.empty()) {
    throw InvalidArgument(std::string("svm: class pair (") +
                          std::string(label_name(positive)) + ", " +
                          std::string(label_name(negative)) +
                          ") has an empty side");
  }
  std::vector<const SparseVector*> x;
  std::vector<std::int8_t> y;
  std::vector<double> upper;
  x.reserve(positives.size() + negatives.size());
  for (const auto* v : positives) {
    x.push_back(v);
    y.push_back(1);
    upper.push_back(positive_cost);
  }
  for (const auto* v : negatives) {
    x.push_back(v);
    y.push_back(-1);
    upper.push_back(negative_cost);
  }
  const SmoSolution sol = solve_smo(x, y, upper, kernel, params.tolerance,
                                    params.max_iterations, params.cache_bytes);
  BinarySvm model;
  model.positive = positive;
  model.negative = negative;
  model.bias = -sol.rho;
  model.iterations = sol.iterations;
  model.converged = sol.converged;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (sol.alpha[t] > 0.0) {
      model.support_vectors.push_back(*x[t]);
      model.alpha.push_back(sol.alpha[t]);
      model.signs.push_back(y[t]);
    }
  }
  return model;
}

SvmModel train_svm(const std::vector<SparseVector>& vectors,
                   const std::vector<Label>& labels, const SvmParams& params) {
  params.validate();
  if (vectors.size() != labels.size()) {
    throw InvalidArgument("svm: vectors and labels differ in size");
  }
  if (vectors.empty()) throw InvalidArgument("svm: empty training set");
  const std::size_t dim = vectors.front().dimension();
  std::array<std::vector<const SparseVector*>, kNumLabels> by_class;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].dimension() != dim) {
      throw InvalidArgument("svm: vectors differ in dimension");
    }
    check_finite(vectors[i]);
    by_class[label_index(labels[i])].push_back(&vectors[i]);
  }

  SvmModel model;
  model.dimension = dim;
  model.cost = params.cost;
  model.kernel.type = params.kernel;
  model.kernel.gamma =
      params.gamma.value_or(dim > 0 ? 1.0 / static_cast<double>(dim) : 1.0);
  const auto defaults = inverse_frequency_weights(labels);
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    model.class_weights[c] = params.class_weights[c].value_or(defaults[c]);
  }
  for (Label l : kAllLabels) {
    if (!by_class[label_index(l)].empty()) model.classes.push_back(l);
  }
  if (model.classes.size() < 2) {
    throw InvalidArgument("svm: training data needs at least two classes");
  }

  std::vector<std::pair<Label, Label>> pairs;
  for (std::size_t a = 0; a < model.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < model.classes.size(); ++b) {
      pairs.emplace_back(model.classes[a], model.classes[b]);
    }
  }
  model.pairs.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto [pos, neg] = pairs[p];
    model.pairs[p] = train_binary_svm(
        by_class[label_index(pos)], by_class[label_index(neg)], pos, neg,
        params.cost * model.class_weights[label_index(pos)],
        params.cost * model.class_weights[label_index(neg)], model.kernel,
        params);
  });
  return model;
}

SvmPrediction predict_svm(const SvmModel& model, const SparseVector& v) {
  if (v.dimension() != model.dimension) {
    throw InvalidArgument("svm: vector dimension " +
                          std::to_string(v.dimension()) +
                          " does not match model dimension " +
                          std::to_string(model.dimension));
  }
  SvmPrediction out;
  std::array<int, kNumLabels> votes{};
  std::array<double, kNumLabels> margin{};
  for (const auto& pair : model.pairs) {
    const double f = pair.decision(v, model.kernel);
    out.decision_values.push_back(f);
    const Label winner = f > 0.0 ? pair.positive : pair.negative;
    ++votes[label_index(winner)];
    margin[label_index(winner)] += std::abs(f);
  }
  bool first = true;
  for (Label l : model.classes) {
    const std::size_t c = label_index(l);
    const std::size_t b = label_index(out.label);
    if (first || votes[c] > votes[b] ||
        (votes[c] == votes[b] && margin[c] > margin[b])) {
      out.label = l;
      first = false;
    }
  }
  return out;
}

}  // namespace bdtweet
