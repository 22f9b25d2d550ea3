#include "idcopt/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "idcopt/errors.hpp"
#include "idcopt/external.hpp"
#include "idcopt/objectives.hpp"
#include "json.hpp"

namespace idcopt {

using nlohmann::json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_size(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ConfigError(field, "expected a non-negative integer, got '" + s + "'");
  }
}

/// Field access on one JSON object with a dotted path for diagnostics.
/// Remembers which keys were read so leftovers can be reported.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  bool has(const std::string& key) const { return j_.contains(key); }

  const json* get(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  template <typename T>
  void read(const std::string& key, T& out) {
    const json* v = get(key);
    if (v == nullptr) return;
    try {
      if constexpr (std::is_same_v<T, std::size_t>) {
        if (!v->is_number_unsigned()) throw ConfigError(field(key), "expected a non-negative integer");
      } else if constexpr (std::is_same_v<T, double>) {
        if (!v->is_number()) throw ConfigError(field(key), "expected a number");
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!v->is_boolean()) throw ConfigError(field(key), "expected true or false");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v->is_string()) throw ConfigError(field(key), "expected a string");
      }
      out = v->get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(field(key), e.what());
    }
  }

  void read_range(const std::string& key, ParamRange& out) {
    const json* v = get(key);
    if (v == nullptr) return;
    if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
      throw ConfigError(field(key), "expected [low, high]");
    }
    out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(field(it.key()), "unknown field");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void read_bpso(Section s, BpsoParams& p) {
  s.read("swarm", p.swarm_size);
  s.read("max_iter", p.max_iter);
  s.read("w", p.w);
  s.read("c1", p.c1);
  s.read("c2", p.c2);
  s.read("e", p.e);
  s.read("d", p.d);
  if (const json* v = s.get("v_clamp")) {
    if (v->is_null()) {
      p.v_clamp.reset();
    } else if (v->is_number()) {
      p.v_clamp = v->get<double>();
    } else {
      throw ConfigError(s.field("v_clamp"), "expected a number or null");
    }
  }
  s.finish();
}

void read_rlbpso(Section s, RlbpsoParams& p) {
  s.read("swarm", p.swarm_size);
  s.read("max_iter", p.max_iter);
  s.read("groups", p.groups);
  s.read("iteration_cap", p.iteration_cap);
  s.read_range("w", p.w);
  s.read_range("c1", p.c1);
  s.read_range("c2", p.c2);
  s.read_range("c3", p.c3);
  s.read_range("c4", p.c4);
  s.read("v_clamp", p.v_clamp);
  s.read("noise_start", p.noise_start);
  s.read("noise_end", p.noise_end);
  s.read("exemplar_probability", p.exemplar_probability);
  s.read("exemplar_refresh", p.exemplar_refresh);
  s.read("flag_threshold", p.flag_threshold);
  s.read("zero_actor", p.zero_actor);
  s.read("actor_lr", p.network.actor_lr);
  s.read("critic_lr", p.network.critic_lr);
  s.read("gamma", p.network.gamma);
  s.read("hidden", p.network.hidden);
  s.read("replay_capacity", p.network.replay_capacity);
  s.read("batch_size", p.network.batch_size);
  p.network.action_size = 5 * p.groups;
  s.finish();
}

void read_abc(Section s, AbcParams& p) {
  s.read("total_bees", p.total_bees);
  s.read("employed", p.employed);
  s.read("onlookers", p.onlookers);
  s.read("scout_fraction", p.scout_fraction);
  s.read("limit", p.limit);
  s.read("max_iter", p.max_iter);
  s.finish();
}

void read_aco(Section s, AcoParams& p) {
  s.read("ants", p.ants);
  s.read("max_iter", p.max_iter);
  s.read("rho", p.rho);
  s.read("q", p.q);
  s.read("tau_init", p.tau_init);
  s.read("tau_min", p.tau_min);
  s.read("tau_max", p.tau_max);
  s.read("elitist_weight", p.elitist_weight);
  s.finish();
}

void read_sa(Section s, SaParams& p) {
  s.read("max_iter", p.max_iter);
  s.read("alpha", p.alpha);
  if (const json* v = s.get("t0")) {
    if (v->is_null()) {
      p.t0.reset();
    } else if (v->is_number()) {
      p.t0 = v->get<double>();
    } else {
      throw ConfigError(s.field("t0"), "expected a number or null");
    }
  }
  s.read("t_end_ratio", p.t_end_ratio);
  s.read("calibration_samples", p.calibration_samples);
  s.finish();
}

void read_alo(Section s, AloParams& p) {
  s.read("population", p.population);
  s.read("max_iter", p.max_iter);
  s.finish();
}

void read_objective(const json& j, ObjectiveSpec& spec) {
  if (j.is_string()) {
    spec = ObjectiveSpec::parse(j.get<std::string>());
    return;
  }
  Section s(j, "objective");
  s.read("kind", spec.kind);
  s.read("profile", spec.profile);
  if (const json* v = s.get("symmetry")) {
    if (!v->is_string()) throw ConfigError("objective.symmetry", "expected a string");
    spec.symmetry = parse_symmetry(v->get<std::string>());
  }
  s.read("dimension", spec.dimension);
  s.read("block", spec.block);
  if (const json* v = s.get("command")) {
    if (v->is_string()) {
      spec.command = {"/bin/sh", "-c", v->get<std::string>()};
    } else if (v->is_array() && std::all_of(v->begin(), v->end(),
                                            [](const json& e) { return e.is_string(); })) {
      spec.command = v->get<std::vector<std::string>>();
    } else {
      throw ConfigError("objective.command", "expected a string or an array of strings");
    }
  }
  s.read("timeout", spec.timeout_seconds);
  if (const json* v = s.get("max_restarts")) {
    if (!v->is_number_integer() || v->get<int>() < 0) {
      throw ConfigError("objective.max_restarts", "expected a non-negative integer");
    }
    spec.max_restarts = v->get<int>();
  }
  s.finish();
  if (spec.kind == "surrogate" && s.has("dimension")) {
    throw ConfigError("objective.dimension", "conflicts with kind 'surrogate' (set by profile)");
  }
  if (spec.kind != "external" && s.has("command")) {
    throw ConfigError("objective.command", "only valid for kind 'external'");
  }
  if (spec.kind != "surrogate" && (s.has("profile") || s.has("symmetry"))) {
    throw ConfigError("objective.profile", "only valid for kind 'surrogate'");
  }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

ObjectiveSpec ObjectiveSpec::parse(std::string_view text) {
  ObjectiveSpec spec;
  const auto colon = text.find(':');
  spec.kind = std::string(text.substr(0, colon));
  const std::string rest = colon == std::string_view::npos ? "" : std::string(text.substr(colon + 1));
  if (spec.kind == "surrogate") {
    if (!rest.empty()) spec.profile = rest;
    SurrogateProfile::named(spec.profile);
  } else if (spec.kind == "onemax") {
    if (!rest.empty()) spec.dimension = parse_size(rest, "objective");
  } else if (spec.kind == "trap") {
    if (!rest.empty()) {
      const auto parts = split(rest, ':');
      if (parts.size() > 2) throw ConfigError("objective", "expected trap[:D[:k]]");
      spec.dimension = parse_size(parts[0], "objective");
      if (parts.size() == 2) spec.block = parse_size(parts[1], "objective");
    }
  } else if (spec.kind == "external") {
    if (rest.empty()) throw ConfigError("objective", "external needs a command: external:<cmd>");
    spec.command = {"/bin/sh", "-c", rest};
  } else {
    throw ConfigError("objective", "unknown objective kind '" + spec.kind + "'");
  }
  return spec;
}

std::string ObjectiveSpec::describe() const {
  if (kind == "surrogate") return "surrogate:" + profile + " (" + std::string(to_string(symmetry)) + ")";
  if (kind == "onemax") return "onemax:" + std::to_string(dimension);
  if (kind == "trap") return "trap:" + std::to_string(dimension) + ":" + std::to_string(block);
  return "external:" + std::to_string(dimension);
}

std::size_t ObjectiveSpec::genome_length() const {
  if (kind == "surrogate") return SurrogateProfile::named(profile).grid.free_cells();
  return dimension;
}

std::unique_ptr<Objective> make_objective(const ObjectiveSpec& spec) {
  if (spec.kind == "surrogate") {
    SurrogateProfile p = SurrogateProfile::named(spec.profile);
    p.symmetry = spec.symmetry;
    return std::make_unique<SurrogateObjective>(p);
  }
  if (spec.dimension == 0) throw ConfigError("objective.dimension", "must be positive");
  if (spec.kind == "onemax") return std::make_unique<OneMaxObjective>(spec.dimension);
  if (spec.kind == "trap") return std::make_unique<TrapObjective>(spec.dimension, spec.block);
  if (spec.kind == "external") {
    return std::make_unique<ExternalObjective>(
        ExternalEvaluatorConfig{spec.command, spec.timeout_seconds, spec.max_restarts},
        spec.dimension);
  }
  throw ConfigError("objective.kind", "unknown objective kind '" + spec.kind + "'");
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw ConfigError("algorithms", "no algorithm selected");
  for (const auto& a : algorithms) {
    if (!is_algorithm(a)) throw ConfigError("algorithms", "unknown algorithm '" + a + "'");
  }
  if (seeds.empty()) throw ConfigError("seeds", "seed list is empty");
  if (budget == 0) throw ConfigError("budget", "budget must be positive");
  make_objective(objective);  // validates the spec without launching anything
  params.bpso.validate();
  params.rlbpso.validate();
  params.abc.validate();
  params.aco.validate();
  params.sa.validate();
  params.alo.validate();
}

std::vector<std::string> expand_algorithms(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (auto a : algorithm_names()) out.emplace_back(a);
    } else if (is_algorithm(n)) {
      out.push_back(n);
    } else {
      throw ConfigError("algorithms", "unknown algorithm '" + n + "'");
    }
  }
  return out;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw ConfigError("seeds", "empty entry in seed list");
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      seeds.push_back(parse_size(part, "seeds"));
      continue;
    }
    const std::size_t lo = parse_size(part.substr(0, dash), "seeds");
    const std::size_t hi = parse_size(part.substr(dash + 1), "seeds");
    if (hi < lo) throw ConfigError("seeds", "descending range '" + part + "'");
    for (std::size_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  return seeds;
}

ExperimentConfig parse_config(std::string_view json_text, std::string_view source) {
  if (json_text.find_first_not_of(" \t\r\n") == std::string_view::npos) return ExperimentConfig{};
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << source << ":" << line_of(json_text, e.byte == 0 ? 0 : e.byte - 1) << ": " << e.what();
    throw ConfigError("", msg.str());
  }
  ExperimentConfig cfg;
  if (root.is_null()) return cfg;  // empty file: all defaults
  Section s(root, "");

  if (s.has("algorithm") && s.has("algorithms")) {
    throw ConfigError("algorithms", "conflicts with 'algorithm'; give only one");
  }
  if (const json* v = s.get("algorithm")) {
    if (!v->is_string()) throw ConfigError("algorithm", "expected a string");
    cfg.algorithms = expand_algorithms({v->get<std::string>()});
  }
  if (const json* v = s.get("algorithms")) {
    if (!v->is_array() || !std::all_of(v->begin(), v->end(), [](const json& e) { return e.is_string(); })) {
      throw ConfigError("algorithms", "expected an array of names");
    }
    cfg.algorithms = expand_algorithms(v->get<std::vector<std::string>>());
  }

  if (s.has("seed") && s.has("seeds")) throw ConfigError("seeds", "conflicts with 'seed'; give only one");
  if (const json* v = s.get("seed")) {
    if (!v->is_number_unsigned()) throw ConfigError("seed", "expected a non-negative integer");
    cfg.seeds = {v->get<std::uint64_t>()};
  }
  if (const json* v = s.get("seeds")) {
    if (v->is_string()) {
      cfg.seeds = parse_seed_list(v->get<std::string>());
    } else if (v->is_array() && std::all_of(v->begin(), v->end(), [](const json& e) { return e.is_number_unsigned(); })) {
      cfg.seeds = v->get<std::vector<std::uint64_t>>();
    } else {
      throw ConfigError("seeds", "expected an array of non-negative integers or a range string");
    }
  }

  if (const json* v = s.get("objective")) read_objective(*v, cfg.objective);
  s.read("budget", cfg.budget);
  s.read("scale_iterations", cfg.scale_iterations);
  s.read("parallel", cfg.parallel);
  if (const json* v = s.get("threads")) {
    if (!v->is_number_integer()) throw ConfigError("threads", "expected an integer");
    cfg.threads = v->get<int>();
  }
  if (const json* v = s.get("output")) {
    if (!v->is_string()) throw ConfigError("output", "expected a string");
    cfg.output_dir = v->get<std::string>();
  }
  if (const json* v = s.get("bpso")) read_bpso(Section(*v, "bpso"), cfg.params.bpso);
  if (const json* v = s.get("rlbpso")) read_rlbpso(Section(*v, "rlbpso"), cfg.params.rlbpso);
  if (const json* v = s.get("abc")) read_abc(Section(*v, "abc"), cfg.params.abc);
  if (const json* v = s.get("aco")) read_aco(Section(*v, "aco"), cfg.params.aco);
  if (const json* v = s.get("sa")) read_sa(Section(*v, "sa"), cfg.params.sa);
  if (const json* v = s.get("alo")) read_alo(Section(*v, "alo"), cfg.params.alo);
  s.finish();
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace idcopt
