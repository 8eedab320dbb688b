#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pue/random.hpp"

namespace pue::bpnn {

inline constexpr std::size_t kInputs = 3;
inline constexpr std::size_t kHidden = 4;
inline constexpr std::size_t kOutputs = 2;

using Features = std::array<double, kInputs>;
using Scores = std::array<double, kOutputs>;

/// Output slots: 0 is the PU class, 1 the attacker class.
inline constexpr std::size_t kPuClass = 0;
inline constexpr std::size_t kAttackerClass = 1;

/// 3-4-2 fully connected network with logistic activations on both layers.
struct Model {
  std::array<std::array<double, kInputs>, kHidden> w1{};
  std::array<double, kHidden> b1{};
  std::array<std::array<double, kHidden>, kOutputs> w2{};
  std::array<double, kOutputs> b2{};

  static constexpr std::size_t kParameterCount =
      kHidden * kInputs + kHidden + kOutputs * kHidden + kOutputs;

  /// Flat view in dump order: w1 row-major, b1, w2 row-major, b2.
  std::array<double, kParameterCount> flatten() const;
  static Model unflatten(std::span<const double> values);

  friend bool operator==(const Model&, const Model&) = default;
};

struct Sample {
  Features features{};
  std::size_t label = kPuClass;  // index of the hot output
};

enum class Loss { kMeanSquared, kCrossEntropy };

struct TrainOptions {
  std::size_t epochs = 30;
  double learning_rate = 0.1;
  Loss loss = Loss::kMeanSquared;
  double init_range = 0.5;
};

double sigmoid(double z) noexcept;

/// Intermediate values of one forward pass; backprop reads them.
struct Activations {
  std::array<double, kHidden> hidden{};
  std::array<double, kOutputs> logits{};
  Scores output{};
};

Activations forward_pass(const Model& model, const Features& x) noexcept;
Scores forward(const Model& model, const Features& x) noexcept;

/// Per-sample loss against the one-hot target.
double sample_loss(const Model& model, const Sample& sample, Loss loss);
/// Mean loss over a data set.
double mean_loss(const Model& model, std::span<const Sample> samples, Loss loss);

/// d(sample_loss)/d(parameter), in flatten() order.
std::array<double, Model::kParameterCount> gradient(const Model& model, const Sample& sample,
                                                    Loss loss);

/// Weights uniform in [-range, range].
Model random_model(Rng& rng, double range = 0.5);

/// Plain per-sample SGD over shuffled epochs. Throws ValidityError for an
/// empty set or when only one class is present.
Model train(std::span<const Sample> samples, const TrainOptions& options, Rng& rng);

/// score(attacker) - score(PU); positive means "attacker" under argmax.
double score(const Model& model, const Features& x) noexcept;

std::size_t predict(const Model& model, const Features& x) noexcept;

double accuracy(const Model& model, std::span<const Sample> samples);

/// Min-max map of each raw feature onto [-1, 1], fitted on training data.
class FeatureScaler {
 public:
  FeatureScaler() = default;
  static FeatureScaler fit(std::span<const Features> raw);

  /// Values outside the fitted range are clamped to [-1, 1].
  Features apply(const Features& raw) const noexcept;

 private:
  Features lo_{};
  Features hi_{};
};

/// Whitespace separated weights in flatten() order.
void save_model(std::ostream& out, const Model& model);
Model load_model(std::istream& in);
void save_model_file(const std::string& path, const Model& model);
Model load_model_file(const std::string& path);

}  // namespace pue::bpnn
