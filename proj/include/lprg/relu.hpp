#pragma once

#include <algorithm>
#include <vector>

#include "lprg/types.hpp"

namespace lprg {

template <typename Scalar>
struct ReluLayer {
  Matrix<Scalar> weights;  // rows = neurons of this layer
  Vector<Scalar> bias;
  bool relu = true;
};

/// Feedforward network with a scalar output. Every layer but the last is
/// hidden; the last layer has one neuron, with or without activation.
/// Depth counts weight layers, so one hidden layer is depth 2.
template <typename Scalar>
class ReluNetwork {
 public:
  ReluNetwork() = default;
  ReluNetwork(std::size_t input_dim, std::vector<ReluLayer<Scalar>> layers)
      : input_dim_(input_dim), layers_(std::move(layers)) {
    validate();
  }

  std::size_t input_dim() const { return input_dim_; }
  std::size_t depth() const { return layers_.size(); }
  const std::vector<ReluLayer<Scalar>>& layers() const { return layers_; }
  bool output_activation() const { return layers_.back().relu; }

  std::size_t hidden_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < layers_.size(); ++i) {
      count += static_cast<std::size_t>(layers_[i].weights.rows());
    }
    return count;
  }

  /// Largest |entry| over all weight matrices; biases are not included.
  Scalar max_abs_weight() const {
    Scalar best(0);
    for (const auto& layer : layers_) {
      for (Eigen::Index r = 0; r < layer.weights.rows(); ++r) {
        for (Eigen::Index c = 0; c < layer.weights.cols(); ++c) {
          const Scalar w = layer.weights(r, c);
          const Scalar a = w < Scalar(0) ? Scalar(-w) : w;
          if (best < a) best = a;
        }
      }
    }
    return best;
  }

  /// Per-layer post-activation values, input first.
  std::vector<Vector<Scalar>> trace(const Vector<Scalar>& input) const {
    require(static_cast<std::size_t>(input.size()) == input_dim_,
            "ReLU network input has the wrong dimension");
    std::vector<Vector<Scalar>> values{input};
    for (const auto& layer : layers_) {
      Vector<Scalar> next = layer.bias;
      const Vector<Scalar>& prev = values.back();
      // Explicit loops keep exact scalar types (rationals) off Eigen's
      // blocked product kernels.
      for (Eigen::Index r = 0; r < layer.weights.rows(); ++r) {
        Scalar acc = next(r);
        for (Eigen::Index c = 0; c < layer.weights.cols(); ++c) {
          const Scalar& w = layer.weights(r, c);
          if (w != Scalar(0)) acc += w * prev(c);
        }
        next(r) = layer.relu ? std::max(acc, Scalar(0)) : acc;
      }
      values.push_back(std::move(next));
    }
    return values;
  }

  Scalar operator()(const Vector<Scalar>& input) const { return trace(input).back()(0); }

 private:
  void validate() const {
    require(!layers_.empty(), "ReLU network needs at least one layer");
    std::size_t width = input_dim_;
    for (const auto& layer : layers_) {
      require(static_cast<std::size_t>(layer.weights.cols()) == width,
              "ReLU layer input width does not match the previous layer");
      require(layer.bias.size() == layer.weights.rows(), "ReLU layer bias length mismatch");
      width = static_cast<std::size_t>(layer.weights.rows());
    }
    require(width == 1, "ReLU network output layer must have a single neuron");
  }

  std::size_t input_dim_ = 0;
  std::vector<ReluLayer<Scalar>> layers_;
};

template <typename Scalar>
ReluLayer<Scalar> make_layer(std::size_t out, std::size_t in, bool relu) {
  return {Matrix<Scalar>::Zero(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)),
          Vector<Scalar>::Zero(static_cast<Eigen::Index>(out)), relu};
}

template <typename To, typename From>
ReluNetwork<To> cast_network(const ReluNetwork<From>& net) {
  std::vector<ReluLayer<To>> layers;
  for (const auto& layer : net.layers()) {
    layers.push_back({layer.weights.template cast<To>(), layer.bias.template cast<To>(), layer.relu});
  }
  return ReluNetwork<To>(net.input_dim(), std::move(layers));
}

}  // namespace lprg
