#include "pue/bpnn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <numeric>
#include <ostream>

#include "pue/error.hpp"

namespace pue::bpnn {

std::array<double, Model::kParameterCount> Model::flatten() const {
  std::array<double, kParameterCount> out{};
  auto it = out.begin();
  for (const auto& row : w1) it = std::copy(row.begin(), row.end(), it);
  it = std::copy(b1.begin(), b1.end(), it);
  for (const auto& row : w2) it = std::copy(row.begin(), row.end(), it);
  std::copy(b2.begin(), b2.end(), it);
  return out;
}

Model Model::unflatten(std::span<const double> values) {
  if (values.size() != kParameterCount)
    throw ValidityError("BPNN model needs exactly " + std::to_string(kParameterCount) +
                        " parameters, got " + std::to_string(values.size()));
  Model m;
  auto it = values.begin();
  for (auto& row : m.w1)
    for (auto& w : row) w = *it++;
  for (auto& b : m.b1) b = *it++;
  for (auto& row : m.w2)
    for (auto& w : row) w = *it++;
  for (auto& b : m.b2) b = *it++;
  return m;
}

double sigmoid(double z) noexcept {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

Activations forward_pass(const Model& model, const Features& x) noexcept {
  Activations a;
  for (std::size_t j = 0; j < kHidden; ++j) {
    double z = model.b1[j];
    for (std::size_t i = 0; i < kInputs; ++i) z += model.w1[j][i] * x[i];
    a.hidden[j] = sigmoid(z);
  }
  for (std::size_t k = 0; k < kOutputs; ++k) {
    double z = model.b2[k];
    for (std::size_t j = 0; j < kHidden; ++j) z += model.w2[k][j] * a.hidden[j];
    a.logits[k] = z;
    a.output[k] = sigmoid(z);
  }
  return a;
}

Scores forward(const Model& model, const Features& x) noexcept {
  return forward_pass(model, x).output;
}

namespace {

double target(const Sample& s, std::size_t k) { return s.label == k ? 1.0 : 0.0; }

// log(sigmoid(z)) without overflow.
double log_sigmoid(double z) {
  return z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
}

void check_label(const Sample& s) {
  if (s.label >= kOutputs) throw ValidityError("BPNN sample label out of range");
}

}  // namespace

double sample_loss(const Model& model, const Sample& sample, Loss loss) {
  check_label(sample);
  const auto a = forward_pass(model, sample.features);
  double total = 0.0;
  for (std::size_t k = 0; k < kOutputs; ++k) {
    const double y = target(sample, k);
    if (loss == Loss::kMeanSquared) {
      const double e = a.output[k] - y;
      total += 0.5 * e * e;
    } else {
      total -= y * log_sigmoid(a.logits[k]) + (1.0 - y) * log_sigmoid(-a.logits[k]);
    }
  }
  return total;
}

double mean_loss(const Model& model, std::span<const Sample> samples, Loss loss) {
  if (samples.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : samples) total += sample_loss(model, s, loss);
  return total / static_cast<double>(samples.size());
}

std::array<double, Model::kParameterCount> gradient(const Model& model, const Sample& sample,
                                                    Loss loss) {
  check_label(sample);
  const auto a = forward_pass(model, sample.features);

  std::array<double, kOutputs> delta_out{};
  for (std::size_t k = 0; k < kOutputs; ++k) {
    const double o = a.output[k];
    const double e = o - target(sample, k);
    delta_out[k] = loss == Loss::kMeanSquared ? e * o * (1.0 - o) : e;
  }
  std::array<double, kHidden> delta_hidden{};
  for (std::size_t j = 0; j < kHidden; ++j) {
    double back = 0.0;
    for (std::size_t k = 0; k < kOutputs; ++k) back += delta_out[k] * model.w2[k][j];
    delta_hidden[j] = back * a.hidden[j] * (1.0 - a.hidden[j]);
  }

  Model g;
  for (std::size_t j = 0; j < kHidden; ++j) {
    for (std::size_t i = 0; i < kInputs; ++i) g.w1[j][i] = delta_hidden[j] * sample.features[i];
    g.b1[j] = delta_hidden[j];
  }
  for (std::size_t k = 0; k < kOutputs; ++k) {
    for (std::size_t j = 0; j < kHidden; ++j) g.w2[k][j] = delta_out[k] * a.hidden[j];
    g.b2[k] = delta_out[k];
  }
  return g.flatten();
}

Model random_model(Rng& rng, double range) {
  std::uniform_real_distribution<double> init(-range, range);
  std::array<double, Model::kParameterCount> flat{};
  for (auto& v : flat) v = init(rng);
  return Model::unflatten(flat);
}

Model train(std::span<const Sample> samples, const TrainOptions& options, Rng& rng) {
  if (samples.empty()) throw ValidityError("BPNN training set is empty");
  std::array<std::size_t, kOutputs> per_class{};
  for (const auto& s : samples) {
    check_label(s);
    ++per_class[s.label];
  }
  if (std::count(per_class.begin(), per_class.end(), 0u) > 0)
    throw ValidityError("BPNN training set must contain both classes");
  if (!(options.learning_rate > 0.0)) throw ValidityError("learning rate must be positive");

  Model model = random_model(rng, options.init_range);
  auto params = model.flatten();
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t idx : order) {
      const auto g = gradient(model, samples[idx], options.loss);
      for (std::size_t p = 0; p < params.size(); ++p) params[p] -= options.learning_rate * g[p];
      model = Model::unflatten(params);
    }
  }
  return model;
}

double score(const Model& model, const Features& x) noexcept {
  const auto out = forward(model, x);
  return out[kAttackerClass] - out[kPuClass];
}

std::size_t predict(const Model& model, const Features& x) noexcept {
  return score(model, x) > 0.0 ? kAttackerClass : kPuClass;
}

double accuracy(const Model& model, std::span<const Sample> samples) {
  if (samples.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& s : samples) hits += predict(model, s.features) == s.label;
  return static_cast<double>(hits) / static_cast<double>(samples.size());
}

FeatureScaler FeatureScaler::fit(std::span<const Features> raw) {
  if (raw.empty()) throw ValidityError("FeatureScaler: no data");
  FeatureScaler s;
  s.lo_.fill(std::numeric_limits<double>::infinity());
  s.hi_.fill(-std::numeric_limits<double>::infinity());
  for (const auto& f : raw)
    for (std::size_t i = 0; i < kInputs; ++i) {
      s.lo_[i] = std::min(s.lo_[i], f[i]);
      s.hi_[i] = std::max(s.hi_[i], f[i]);
    }
  return s;
}

Features FeatureScaler::apply(const Features& raw) const noexcept {
  Features out{};
  for (std::size_t i = 0; i < kInputs; ++i) {
    const double span = hi_[i] - lo_[i];
    const double v = span > 0.0 ? 2.0 * (raw[i] - lo_[i]) / span - 1.0 : 0.0;
    out[i] = std::clamp(v, -1.0, 1.0);
  }
  return out;
}

void save_model(std::ostream& out, const Model& model) {
  const auto flat = model.flatten();
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < flat.size(); ++i) out << (i ? " " : "") << flat[i];
  out << '\n';
  out.precision(old_precision);
}

Model load_model(std::istream& in) {
  std::vector<double> values{std::istream_iterator<double>(in), std::istream_iterator<double>()};
  if (!in.eof()) throw ConfigError("BPNN model file contains a non-numeric token");
  if (values.size() != Model::kParameterCount)
    throw ConfigError("BPNN model file holds " + std::to_string(values.size()) +
                      " values, expected " + std::to_string(Model::kParameterCount));
  return Model::unflatten(values);
}

void save_model_file(const std::string& path, const Model& model) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  save_model(out, model);
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  return load_model(in);
}

}  // namespace pue::bpnn
