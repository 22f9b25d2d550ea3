#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "idcopt/rng.hpp"

namespace idcopt {

/// Fully connected layer, row-major weights (out x in).
struct DenseLayer {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  DenseLayer() = default;
  DenseLayer(std::size_t in, std::size_t out) : inputs(in), outputs(out), weights(in * out), bias(out) {}

  std::vector<double> forward(std::span<const double> x) const;
  /// Uniform in +-1/sqrt(inputs); bias zero.
  void init_uniform(RngStream& rng);
  bool finite() const;
};

/// in -> hidden (tanh) -> out (linear).
class TwoLayerNet {
 public:
  TwoLayerNet() = default;
  TwoLayerNet(std::size_t inputs, std::size_t hidden, std::size_t outputs);

  struct Trace {
    std::vector<double> input;
    std::vector<double> hidden;  // post-tanh
    std::vector<double> output;
  };

  Trace forward(std::span<const double> x) const;

  /// Gradients of sum(grad_out . output) w.r.t. the weights (accumulated into
  /// `grads`, same layout) and returned w.r.t. the input.
  std::vector<double> backward(const Trace& t, std::span<const double> grad_out,
                               TwoLayerNet& grads) const;

  /// this += scale * other, elementwise over all parameters.
  void axpy(double scale, const TwoLayerNet& other);
  void zero();
  bool finite() const;

  std::size_t inputs() const noexcept { return hidden_.inputs; }
  std::size_t outputs() const noexcept { return out_.outputs; }
  DenseLayer& hidden_layer() noexcept { return hidden_; }
  DenseLayer& output_layer() noexcept { return out_; }
  const DenseLayer& hidden_layer() const noexcept { return hidden_; }
  const DenseLayer& output_layer() const noexcept { return out_; }

  bool operator==(const TwoLayerNet& o) const {
    return hidden_.weights == o.hidden_.weights && hidden_.bias == o.hidden_.bias &&
           out_.weights == o.out_.weights && out_.bias == o.out_.bias;
  }

 private:
  DenseLayer hidden_;
  DenseLayer out_;
};

struct RlState {
  double iter_pct = 0.0;
  double diversity = 0.0;
  double stagnation_pct = 0.0;

  std::array<double, 3> as_array() const { return {iter_pct, diversity, stagnation_pct}; }
};

struct Transition {
  RlState state;
  std::vector<double> action;  // normalized actions in [0, 1]
  double reward = 0.0;
  RlState next_state;
};

struct ActorCriticConfig {
  std::size_t action_size = 25;  // 5 parameters x groups
  std::size_t hidden = 16;
  double actor_lr = 1e-3;
  double critic_lr = 1e-2;
  double gamma = 0.9;
  std::size_t replay_capacity = 256;
  std::size_t batch_size = 16;
};

/// Deterministic actor (sigmoid outputs in [0,1]) and a state-action critic,
/// trained with one-step TD targets and the critic's action gradient.
class ActorCritic {
 public:
  ActorCritic(ActorCriticConfig config, RngStream& weight_rng);

  const ActorCriticConfig& config() const noexcept { return config_; }

  /// Sigmoid of the actor's pre-activations plus noise_scale * N(0,1) each.
  std::vector<double> act(const RlState& s, double noise_scale, RngStream& noise_rng) const;
  /// Noise-free actor output.
  std::vector<double> policy(const RlState& s) const;
  double q_value(const RlState& s, std::span<const double> action) const;

  void remember(Transition t);
  std::size_t replay_size() const noexcept { return replay_.size(); }

  /// One critic step then one actor step on a uniformly sampled batch.
  /// No-op while the replay buffer holds fewer than batch_size transitions.
  /// Returns true when an update happened.
  bool train_step(RngStream& replay_rng);

  /// Zeroes the actor so every output sits at sigmoid(0) = 0.5.
  void zero_actor() { actor_.zero(); }
  bool finite() const { return actor_.finite() && critic_.finite(); }

  TwoLayerNet& actor() noexcept { return actor_; }
  TwoLayerNet& critic() noexcept { return critic_; }
  const TwoLayerNet& actor() const noexcept { return actor_; }
  const TwoLayerNet& critic() const noexcept { return critic_; }

  /// Weight snapshot: a "shapes" header line followed by one decimal per line
  /// in header order (actor hidden W, b, actor out W, b, critic hidden W, b,
  /// critic out W, b).
  void save(std::ostream& out) const;
  /// Throws ConfigError when the shapes do not match this network.
  void load(std::istream& in);

 private:
  std::vector<double> critic_input(const RlState& s, std::span<const double> action) const;

  ActorCriticConfig config_;
  TwoLayerNet actor_;
  TwoLayerNet critic_;
  std::deque<Transition> replay_;
};

}  // namespace idcopt
