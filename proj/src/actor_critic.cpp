#include "idcopt/actor_critic.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "idcopt/errors.hpp"

namespace idcopt {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

std::vector<double> DenseLayer::forward(std::span<const double> x) const {
  std::vector<double> y(bias);
  for (std::size_t o = 0; o < outputs; ++o) {
    const double* row = weights.data() + o * inputs;
    double acc = 0.0;
    for (std::size_t i = 0; i < inputs; ++i) acc += row[i] * x[i];
    y[o] += acc;
  }
  return y;
}

void DenseLayer::init_uniform(RngStream& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(inputs));
  for (auto& w : weights) w = rng.uniform(-bound, bound);
  std::fill(bias.begin(), bias.end(), 0.0);
}

bool DenseLayer::finite() const { return all_finite(weights) && all_finite(bias); }

TwoLayerNet::TwoLayerNet(std::size_t inputs, std::size_t hidden, std::size_t outputs)
    : hidden_(inputs, hidden), out_(hidden, outputs) {}

TwoLayerNet::Trace TwoLayerNet::forward(std::span<const double> x) const {
  Trace t;
  t.input.assign(x.begin(), x.end());
  t.hidden = hidden_.forward(x);
  for (auto& h : t.hidden) h = std::tanh(h);
  t.output = out_.forward(t.hidden);
  return t;
}

std::vector<double> TwoLayerNet::backward(const Trace& t, std::span<const double> grad_out,
                                          TwoLayerNet& grads) const {
  const std::size_t H = hidden_.outputs;
  const std::size_t I = hidden_.inputs;
  std::vector<double> grad_hidden(H, 0.0);
  for (std::size_t o = 0; o < out_.outputs; ++o) {
    grads.out_.bias[o] += grad_out[o];
    for (std::size_t h = 0; h < H; ++h) {
      grads.out_.weights[o * H + h] += grad_out[o] * t.hidden[h];
      grad_hidden[h] += grad_out[o] * out_.weights[o * H + h];
    }
  }
  std::vector<double> grad_in(I, 0.0);
  for (std::size_t h = 0; h < H; ++h) {
    const double g = grad_hidden[h] * (1.0 - t.hidden[h] * t.hidden[h]);
    grads.hidden_.bias[h] += g;
    for (std::size_t i = 0; i < I; ++i) {
      grads.hidden_.weights[h * I + i] += g * t.input[i];
      grad_in[i] += g * hidden_.weights[h * I + i];
    }
  }
  return grad_in;
}

void TwoLayerNet::axpy(double scale, const TwoLayerNet& other) {
  auto add = [scale](std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  };
  add(hidden_.weights, other.hidden_.weights);
  add(hidden_.bias, other.hidden_.bias);
  add(out_.weights, other.out_.weights);
  add(out_.bias, other.out_.bias);
}

void TwoLayerNet::zero() {
  for (auto* v : {&hidden_.weights, &hidden_.bias, &out_.weights, &out_.bias}) {
    std::fill(v->begin(), v->end(), 0.0);
  }
}

bool TwoLayerNet::finite() const { return hidden_.finite() && out_.finite(); }

ActorCritic::ActorCritic(ActorCriticConfig config, RngStream& weight_rng)
    : config_(config),
      actor_(3, config.hidden, config.action_size),
      critic_(3 + config.action_size, config.hidden, 1) {
  actor_.hidden_layer().init_uniform(weight_rng);
  actor_.output_layer().init_uniform(weight_rng);
  critic_.hidden_layer().init_uniform(weight_rng);
  critic_.output_layer().init_uniform(weight_rng);
}

std::vector<double> ActorCritic::act(const RlState& s, double noise_scale,
                                     RngStream& noise_rng) const {
  const auto input = s.as_array();
  auto z = actor_.forward(input).output;
  for (auto& v : z) {
    if (noise_scale > 0) v += noise_scale * noise_rng.normal();
    v = sigmoid(v);
  }
  return z;
}

std::vector<double> ActorCritic::policy(const RlState& s) const {
  const auto input = s.as_array();
  auto z = actor_.forward(input).output;
  for (auto& v : z) v = sigmoid(v);
  return z;
}

std::vector<double> ActorCritic::critic_input(const RlState& s,
                                              std::span<const double> action) const {
  std::vector<double> x;
  x.reserve(3 + action.size());
  const auto sa = s.as_array();
  x.insert(x.end(), sa.begin(), sa.end());
  x.insert(x.end(), action.begin(), action.end());
  return x;
}

double ActorCritic::q_value(const RlState& s, std::span<const double> action) const {
  return critic_.forward(critic_input(s, action)).output[0];
}

void ActorCritic::remember(Transition t) {
  replay_.push_back(std::move(t));
  while (replay_.size() > config_.replay_capacity) replay_.pop_front();
}

bool ActorCritic::train_step(RngStream& replay_rng) {
  if (replay_.empty() || replay_.size() < config_.batch_size) return false;
  const std::size_t B = config_.batch_size;
  std::vector<std::size_t> picks(B);
  for (auto& p : picks) p = replay_rng.below(replay_.size());

  // Critic: minimize 0.5 (Q(s,a) - y)^2 with y = r + gamma Q(s', mu(s')).
  TwoLayerNet critic_grad = critic_;
  critic_grad.zero();
  for (std::size_t idx : picks) {
    const auto& t = replay_[idx];
    const double target = t.reward + config_.gamma * q_value(t.next_state, policy(t.next_state));
    const auto trace = critic_.forward(critic_input(t.state, t.action));
    const double err = trace.output[0] - target;
    const double g[1] = {err};
    critic_.backward(trace, g, critic_grad);
  }
  critic_.axpy(-config_.critic_lr / static_cast<double>(B), critic_grad);

  // Actor: ascend Q(s, mu(s)) through dQ/da and the sigmoid.
  TwoLayerNet actor_grad = actor_;
  actor_grad.zero();
  TwoLayerNet scratch = critic_;
  for (std::size_t idx : picks) {
    const auto& t = replay_[idx];
    const auto input = t.state.as_array();
    const auto actor_trace = actor_.forward(input);
    std::vector<double> a(actor_trace.output.size());
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = sigmoid(actor_trace.output[k]);
    const auto critic_trace = critic_.forward(critic_input(t.state, a));
    const double one[1] = {1.0};
    const auto dq_dx = critic_.backward(critic_trace, one, scratch);
    std::vector<double> dq_dz(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) dq_dz[k] = dq_dx[3 + k] * a[k] * (1.0 - a[k]);
    actor_.backward(actor_trace, dq_dz, actor_grad);
  }
  actor_.axpy(config_.actor_lr / static_cast<double>(B), actor_grad);
  return true;
}

void ActorCritic::save(std::ostream& out) const {
  const TwoLayerNet* nets[] = {&actor_, &critic_};
  out << "# idcopt actor-critic weights v1\nshapes";
  for (const auto* net : nets) {
    for (const DenseLayer* l : {&net->hidden_layer(), &net->output_layer()}) {
      out << ' ' << l->outputs << 'x' << l->inputs << ' ' << l->outputs;
    }
  }
  out << '\n';
  char buf[40];
  for (const auto* net : nets) {
    for (const DenseLayer* l : {&net->hidden_layer(), &net->output_layer()}) {
      for (const auto* v : {&l->weights, &l->bias}) {
        for (double x : *v) {
          std::snprintf(buf, sizeof buf, "%.17g\n", x);
          out << buf;
        }
      }
    }
  }
}

void ActorCritic::load(std::istream& in) {
  std::string line;
  std::getline(in, line);
  if (line.rfind("# idcopt actor-critic weights", 0) != 0) {
    throw ConfigError("weights", "missing snapshot header");
  }
  std::getline(in, line);
  std::ostringstream expected;
  expected << "shapes";
  TwoLayerNet* nets[] = {&actor_, &critic_};
  for (auto* net : nets) {
    for (DenseLayer* l : {&net->hidden_layer(), &net->output_layer()}) {
      expected << ' ' << l->outputs << 'x' << l->inputs << ' ' << l->outputs;
    }
  }
  if (line != expected.str()) {
    throw ConfigError("weights", "layer shapes '" + line + "' do not match '" +
                                     expected.str() + "'");
  }
  for (auto* net : nets) {
    for (DenseLayer* l : {&net->hidden_layer(), &net->output_layer()}) {
      for (auto* v : {&l->weights, &l->bias}) {
        for (double& x : *v) {
          if (!(in >> x)) throw ConfigError("weights", "snapshot truncated");
        }
      }
    }
  }
}

}  // namespace idcopt
