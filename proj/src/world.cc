// Copyright 2026 The pacsets Authors.
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

#include "pacsets/world.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "pacsets/errors.h"

namespace pacsets {
namespace {

using json = nlohmann::json;

constexpr char kTargetId[] = "target";

std::string MemberId(std::size_t k) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "h%02zu", k);
  return buf;
}

// Uniform k-subset of an explicit set.
LabelSet RandomSubsetOf(RandomStream& rng, const LabelSet& from, std::uint64_t k) {
  std::vector<LabelId> pool = from.ToVector();
  std::vector<LabelId> picked;
  std::sample(pool.begin(), pool.end(), std::back_inserter(picked), k, rng);
  return LabelSet::FromLabels(picked);
}

std::uint64_t UniformInclusive(RandomStream& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng.UniformBelow(hi - lo + 1);
}

// Dirichlet(1) weights over `count` inputs.
std::vector<double> RandomWeights(RandomStream& rng, std::size_t count) {
  std::vector<double> w(count);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log1p(-rng.Uniform01());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

RandomStream TargetStream(std::uint64_t seed, InputId x) {
  return RandomStream(seed).Split(x);
}

std::string VariantName(WorldVariant which) { return which == WorldVariant::kI ? "I" : "II"; }

WorldVariant ParseVariant(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "I") return WorldVariant::kI;
  if (s == "II") return WorldVariant::kII;
  throw InvalidArgument("world variant must be \"I\" or \"II\", got \"" + s + "\"");
}

// Accepts 0.125 or "1/8".
double ParseReal(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

json LabelSetJson(const LabelSet& s) {
  json out = json::array();
  for (const auto& iv : s.intervals()) out.push_back({iv.lo, iv.hi});
  return out;
}

json TableJson(const Hypothesis::Table& table) {
  json out = json::array();
  for (const auto& [x, set] : table) out.push_back({{"x", x}, {"labels", LabelSetJson(set)}});
  return out;
}

json LossJson(const LossReport& r) {
  return {{"precision_loss", r.precision_loss}, {"recall_loss", r.recall_loss},
          {"scalar_loss", r.scalar_loss}};
}

double TableGap(const Hypothesis::Table& g, const Hypothesis::Table& target,
                const std::vector<double>& weights) {
  double gap = 0.0;
  std::size_t k = 0;
  for (const auto& [x, t] : target) {
    const LabelSet& out = g.at(x);
    const double nt = static_cast<double>(t.size());
    double hit = 0.0;
    if (!out.empty()) {
      hit = static_cast<double>(IntersectionSize(out, t)) /
            (static_cast<double>(out.size()) * nt);
    }
    gap += weights[k++] * (1.0 / nt - hit);
  }
  return gap;
}

}  // namespace

LabelSet RandomLabelSubset(RandomStream& rng, LabelId lo, std::uint64_t universe, std::uint64_t k) {
  if (k > universe) throw InvalidArgument("RandomLabelSubset: k exceeds the universe");
  std::vector<LabelId> pool(universe);
  std::iota(pool.begin(), pool.end(), lo);
  std::vector<LabelId> picked;
  picked.reserve(k);
  std::sample(pool.begin(), pool.end(), std::back_inserter(picked), k, rng);
  return LabelSet::FromLabels(picked);
}

std::vector<InputId> TrainingSet::inputs() const {
  std::vector<InputId> xs;
  xs.reserve(samples_.size());
  for (const auto& s : samples_) xs.push_back(s.x);
  return xs;
}

void to_json(json& j, const WorldSpec& spec) {
  j = json{{"kind", spec.kind}, {"params", spec.params}, {"seed", spec.seed}};
}

void from_json(const json& j, WorldSpec& spec) {
  j.at("kind").get_to(spec.kind);
  spec.params = j.value("params", json::object());
  spec.seed = j.value("seed", std::uint64_t{0});
}

World::World(WorldSpec spec, HypothesisClass hypotheses, Hypothesis target,
             std::map<std::string, LossReport> closed_forms,
             std::optional<std::vector<TargetOutcome>> outcomes)
    : spec_(std::move(spec)),
      hypotheses_(std::move(hypotheses)),
      target_(std::move(target)),
      closed_forms_(std::move(closed_forms)),
      outcomes_(std::move(outcomes)) {}

World::World(WorldSpec spec, HypothesisClass hypotheses, Hypothesis target, FiniteInputs inputs)
    : spec_(std::move(spec)),
      hypotheses_(std::move(hypotheses)),
      target_(std::move(target)),
      finite_(std::move(inputs)) {
  if (finite_->ids.empty() || finite_->ids.size() != finite_->probabilities.size()) {
    throw InvalidArgument("World: finite inputs and probabilities must be non-empty and aligned");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < finite_->ids.size(); ++k) {
    if (target_(finite_->ids[k]).empty()) {
      throw ModelViolation("World: empty target set at input " + std::to_string(finite_->ids[k]));
    }
    total += finite_->probabilities[k];
    cumulative_.push_back(total);
  }
  for (auto& c : cumulative_) c /= total;
}

LabelSet World::Target(InputId x) const { return target_(x); }

std::span<const InputId> World::inputs() const {
  return finite_ ? std::span<const InputId>(finite_->ids) : std::span<const InputId>();
}

std::span<const double> World::input_probabilities() const {
  return finite_ ? std::span<const double>(finite_->probabilities) : std::span<const double>();
}

InputId World::DrawInput(RandomStream& rng) const {
  if (!finite_) return rng.MintInputId();
  const double u = rng.Uniform01();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return finite_->ids[static_cast<std::size_t>(it - cumulative_.begin())];
}

std::optional<LossReport> World::ClosedForm(const std::string& id) const {
  auto it = closed_forms_.find(id);
  if (it == closed_forms_.end()) return std::nullopt;
  return it->second;
}

TrainingSet SampleTrainingSet(const World& world, std::size_t m, RandomStream& rng) {
  if (m == 0) throw InvalidArgument("SampleTrainingSet: m must be at least 1");
  std::vector<Sample> samples;
  samples.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const InputId x = world.DrawInput(rng);
    const LabelSet target = world.Target(x);
    if (target.empty()) throw ModelViolation("SampleTrainingSet: empty target set");
    samples.push_back({x, target.nth(rng.UniformBelow(target.size()))});
  }
  return TrainingSet(std::move(samples));
}

WorldPtr Example1World(std::uint64_t n, std::uint64_t label_universe,
                       const std::vector<std::string>& members) {
  if (n < 2) throw InvalidArgument("Example1World: n must be at least 2");
  if (label_universe == 0) label_universe = 100 * n;
  if (label_universe < n + 1) {
    throw InvalidArgument("Example1World: label universe must hold u_1..u_n and u'");
  }
  const auto nn = static_cast<LabelId>(n);
  const LabelSet target = LabelSet::Range(0, nn - 1);
  const std::map<std::string, LabelSet> available{
      {"g1", LabelSet::Of({nn - 1})},
      {"g2", LabelSet::Of({nn})},
      {"complete", LabelSet::Range(0, static_cast<LabelId>(label_universe) - 1)},
      {"empty", LabelSet()},
      {kTargetId, target},
  };
  const std::vector<std::string> order =
      members.empty() ? std::vector<std::string>{"g1", "g2", "complete", "empty"} : members;
  std::vector<Hypothesis> chosen;
  for (const auto& id : order) {
    auto it = available.find(id);
    if (it == available.end()) throw InvalidArgument("Example1World: unknown member '" + id + "'");
    chosen.push_back(Hypothesis::Constant(id, it->second));
  }
  HypothesisClass hypotheses(std::move(chosen));
  const double dn = static_cast<double>(n);
  const double dy = static_cast<double>(label_universe);
  std::map<std::string, LossReport> closed{
      {"g1", LossReport::From(0.0, (dn - 1.0) / dn)},
      {"g2", LossReport::From(1.0, 1.0)},
      {"complete", LossReport::From((dy - dn) / dy, 0.0)},
      {"empty", LossReport::From(0.0, 1.0)},
      {kTargetId, LossReport::From(0.0, 0.0)},
  };
  WorldSpec spec{"example1", {{"n", n}, {"label_universe", label_universe}, {"members", order}}, 0};
  return std::make_shared<const World>(std::move(spec), std::move(hypotheses),
                                       Hypothesis::Constant(kTargetId, target), std::move(closed),
                                       std::vector<TargetOutcome>{{1.0, target}});
}

WorldPtr ScalarLbWorld(double beta, std::uint64_t n, std::uint64_t seed) {
  if (!(beta >= 0.125 - 1e-12 && beta <= 2.0 / 3.0 + 1e-12)) {
    throw InvalidArgument("ScalarLbWorld: beta must lie in [1/8, 2/3]");
  }
  if (n == 0 || n % 2 != 0) throw InvalidArgument("ScalarLbWorld: n must be positive and even");
  const double quarter = beta * static_cast<double>(n) / 4.0;
  const double rounded = std::round(quarter);
  if (std::abs(quarter - rounded) > 1e-9 || rounded < 1.0) {
    throw InvalidArgument("ScalarLbWorld: beta * n / 4 must be a positive integer");
  }
  const auto from_n2 = static_cast<std::uint64_t>(rounded);
  const std::uint64_t from_n1 = 3 * from_n2;
  const std::uint64_t half = n / 2;
  const auto lhalf = static_cast<LabelId>(half);
  HypothesisClass hypotheses({
      Hypothesis::Constant("g1", LabelSet::Range(0, lhalf - 1)),
      Hypothesis::Constant("g2", LabelSet::Range(0, static_cast<LabelId>(n) - 1)),
  });
  auto rule = [seed, half, lhalf, from_n1, from_n2](InputId x) {
    RandomStream rng = TargetStream(seed, x);
    LabelSet a = RandomLabelSubset(rng, 0, half, from_n1);
    LabelSet b = RandomLabelSubset(rng, lhalf, half, from_n2);
    return Union(a, b);
  };
  // The exact beta implied by the integral counts.
  const double b = 4.0 * static_cast<double>(from_n2) / static_cast<double>(n);
  std::map<std::string, LossReport> closed{
      {"g1", LossReport::From(1.0 - 1.5 * b, 0.25)},
      {"g2", LossReport::From(1.0 - b, 0.0)},
      {kTargetId, LossReport::From(0.0, 0.0)},
  };
  WorldSpec spec{"scalar_lb", {{"beta", b}, {"n", n}}, seed};
  return std::make_shared<const World>(std::move(spec), std::move(hypotheses),
                                       Hypothesis::Intensional(kTargetId, rule), std::move(closed),
                                       std::nullopt);
}

WorldPtr ParetoLbWorld(WorldVariant which, std::uint64_t seed) {
  const LabelSet g1 = LabelSet::Range(0, 7);
  const LabelSet g2 = LabelSet::Range(4, 11);
  HypothesisClass hypotheses({Hypothesis::Constant("g1", g1), Hypothesis::Constant("g2", g2)});
  const bool first = which == WorldVariant::kI;
  // The half-probability block and where u2 comes from.
  const LabelSet block = first ? g1 : g2;
  const LabelId u2_lo = first ? 8 : 0;
  auto rule = [seed, block, u2_lo](InputId x) {
    RandomStream rng = TargetStream(seed, x);
    if (rng.Bernoulli(0.5)) return block;
    const auto u1 = static_cast<LabelId>(4 + rng.UniformBelow(4));
    const auto u2 = static_cast<LabelId>(u2_lo + static_cast<LabelId>(rng.UniformBelow(4)));
    return LabelSet::Of({u1, u2});
  };
  std::vector<TargetOutcome> outcomes{{0.5, block}};
  for (LabelId u1 = 4; u1 < 8; ++u1) {
    for (LabelId u2 = u2_lo; u2 < u2_lo + 4; ++u2) {
      outcomes.push_back({1.0 / 32.0, LabelSet::Of({u1, u2})});
    }
  }
  const LossReport best = LossReport::From(7.0 / 16.0, 0.25);
  const LossReport other = LossReport::From(5.0 / 8.0, 0.25);
  std::map<std::string, LossReport> closed{
      {"g1", first ? best : other},
      {"g2", first ? other : best},
      {kTargetId, LossReport::From(0.0, 0.0)},
  };
  WorldSpec spec{"pareto_lb", {{"world", VariantName(which)}}, seed};
  return std::make_shared<const World>(std::move(spec), std::move(hypotheses),
                                       Hypothesis::Intensional(kTargetId, rule), std::move(closed),
                                       std::move(outcomes));
}

WorldPtr SemiLbWorld(WorldVariant which, std::uint64_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidArgument("SemiLbWorld: n must be at least 3");
  const auto last = static_cast<LabelId>(n) - 1;
  HypothesisClass hypotheses(
      {Hypothesis::Constant("g1", LabelSet::Of({0})), Hypothesis::Constant("g2", LabelSet::Of({1}))});
  const bool first = which == WorldVariant::kI;
  // N minus v2 (world I) or N minus v1 (world II).
  const LabelSet big = first ? LabelSet::FromIntervals({{0, 0}, {2, last}})
                             : LabelSet::Range(1, last);
  const LabelSet pair = LabelSet::Of({0, 1});
  auto rule = [seed, big, pair](InputId x) {
    RandomStream rng = TargetStream(seed, x);
    return rng.Bernoulli(0.5) ? big : pair;
  };
  const double dn = static_cast<double>(n);
  const LossReport good = LossReport::From(0.0, 0.75 - 1.0 / (2.0 * (dn - 1.0)));
  const LossReport bad = LossReport::From(0.5, 0.75);
  std::map<std::string, LossReport> closed{
      {"g1", first ? good : bad},
      {"g2", first ? bad : good},
      {kTargetId, LossReport::From(0.0, 0.0)},
  };
  WorldSpec spec{"semi_lb", {{"world", VariantName(which)}, {"n", n}}, seed};
  return std::make_shared<const World>(std::move(spec), std::move(hypotheses),
                                       Hypothesis::Intensional(kTargetId, rule), std::move(closed),
                                       std::vector<TargetOutcome>{{0.5, big}, {0.5, pair}});
}

void to_json(json& j, const RandomWorldParams& p) {
  j = json{{"num_inputs", p.num_inputs},   {"label_universe", p.label_universe},
           {"class_size", p.class_size},   {"max_set_size", p.max_set_size},
           {"realizable", p.realizable},   {"noise", p.noise},
           {"related_members", p.related_members}};
}

void from_json(const json& j, RandomWorldParams& p) {
  RandomWorldParams d;
  p.num_inputs = j.value("num_inputs", d.num_inputs);
  p.label_universe = j.value("label_universe", d.label_universe);
  p.class_size = j.value("class_size", d.class_size);
  p.max_set_size = j.value("max_set_size", d.max_set_size);
  p.realizable = j.value("realizable", d.realizable);
  p.noise = j.value("noise", d.noise);
  p.related_members = j.value("related_members", d.related_members);
}

WorldPtr RandomFiniteWorld(const RandomWorldParams& p, std::uint64_t seed) {
  if (p.num_inputs == 0 || p.label_universe == 0 || p.class_size == 0 || p.max_set_size == 0) {
    throw InvalidArgument("RandomFiniteWorld: all sizes must be positive");
  }
  if (p.max_set_size > p.label_universe) {
    throw InvalidArgument("RandomFiniteWorld: max_set_size exceeds label_universe");
  }
  if (!(p.noise >= 0.0 && p.noise <= 1.0)) {
    throw InvalidArgument("RandomFiniteWorld: noise must lie in [0, 1]");
  }
  RandomStream rng(seed);
  auto random_set = [&] {
    return RandomLabelSubset(rng, 0, p.label_universe, UniformInclusive(rng, 1, p.max_set_size));
  };

  World::FiniteInputs inputs;
  for (std::size_t k = 0; k < p.num_inputs; ++k) inputs.ids.push_back(k);
  inputs.probabilities = RandomWeights(rng, p.num_inputs);

  std::vector<Hypothesis::Table> tables(p.class_size);
  for (auto& table : tables) {
    for (InputId x : inputs.ids) table.emplace(x, random_set());
  }
  const std::size_t base = rng.UniformBelow(p.class_size);
  Hypothesis::Table target = tables[base];
  if (!p.realizable) {
    for (auto& [x, set] : target) {
      if (rng.Bernoulli(p.noise)) set = random_set();
    }
  }

  for (std::size_t k = 0; k < p.related_members; ++k) {
    const double q_drop = 0.6 * rng.Uniform01();
    const double q_add = 0.6 * rng.Uniform01();
    Hypothesis::Table related;
    for (const auto& [x, t] : target) {
      LabelSet set = t;
      if (rng.Bernoulli(q_drop)) set = RandomSubsetOf(rng, set, UniformInclusive(rng, 1, set.size()));
      if (rng.Bernoulli(q_add)) set = Union(set, random_set());
      related.emplace(x, std::move(set));
    }
    tables.push_back(std::move(related));
  }

  std::vector<Hypothesis> members;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    members.push_back(Hypothesis::Extensional(MemberId(k), std::move(tables[k])));
  }
  json params = p;
  WorldSpec spec{"random_finite", params, seed};
  return std::make_shared<const World>(std::move(spec), HypothesisClass(std::move(members)),
                                       Hypothesis::Extensional(kTargetId, std::move(target)),
                                       std::move(inputs));
}

void to_json(json& j, const BoundedTargetParams& p) {
  j = json{{"num_inputs", p.num_inputs}, {"label_universe", p.label_universe},
           {"class_size", p.class_size}, {"target_max", p.target_max},
           {"min_gap", p.min_gap},       {"max_gap", p.max_gap}};
}

void from_json(const json& j, BoundedTargetParams& p) {
  BoundedTargetParams d;
  p.num_inputs = j.value("num_inputs", d.num_inputs);
  p.label_universe = j.value("label_universe", d.label_universe);
  p.class_size = j.value("class_size", d.class_size);
  p.target_max = j.value("target_max", d.target_max);
  p.min_gap = j.value("min_gap", d.min_gap);
  p.max_gap = j.value("max_gap", d.max_gap);
}

WorldPtr BoundedTargetWorld(const BoundedTargetParams& p, std::uint64_t seed) {
  if (p.num_inputs == 0 || p.class_size < 2 || p.target_max == 0) {
    throw InvalidArgument("BoundedTargetWorld: need inputs, at least two members, C >= 1");
  }
  if (p.target_max > p.label_universe) {
    throw InvalidArgument("BoundedTargetWorld: target_max exceeds label_universe");
  }
  if (!(p.min_gap > 0.0) || p.max_gap < p.min_gap) {
    throw InvalidArgument("BoundedTargetWorld: need 0 < min_gap <= max_gap");
  }
  constexpr int kMaxAttempts = 1000;
  RandomStream rng(seed);
  World::FiniteInputs inputs;
  for (std::size_t k = 0; k < p.num_inputs; ++k) inputs.ids.push_back(k);
  inputs.probabilities = RandomWeights(rng, p.num_inputs);

  auto random_set = [&] {
    return RandomLabelSubset(rng, 0, p.label_universe, UniformInclusive(rng, 1, p.target_max));
  };
  Hypothesis::Table target;
  for (InputId x : inputs.ids) target.emplace(x, random_set());

  const std::size_t exact_slot = rng.UniformBelow(p.class_size);
  std::vector<Hypothesis::Table> tables(p.class_size);
  for (std::size_t k = 0; k < p.class_size; ++k) {
    if (k == exact_slot) {
      for (const auto& [x, t] : target) {
        tables[k].emplace(x, RandomSubsetOf(rng, t, UniformInclusive(rng, 1, t.size())));
      }
      continue;
    }
    int attempt = 0;
    double gap = 0.0;
    do {
      if (++attempt > kMaxAttempts) {
        throw InvalidArgument("BoundedTargetWorld: gap range not reachable with these parameters");
      }
      tables[k].clear();
      const double q = rng.Uniform01();
      for (const auto& [x, t] : target) {
        tables[k].emplace(x, rng.Bernoulli(q) ? random_set()
                                              : RandomSubsetOf(rng, t, UniformInclusive(rng, 1, t.size())));
      }
      gap = TableGap(tables[k], target, inputs.probabilities);
    } while (gap < p.min_gap || gap > p.max_gap);
  }

  std::vector<Hypothesis> members;
  for (std::size_t k = 0; k < p.class_size; ++k) {
    members.push_back(Hypothesis::Extensional(MemberId(k), std::move(tables[k])));
  }
  json params = p;
  WorldSpec spec{"bounded_target", params, seed};
  return std::make_shared<const World>(std::move(spec), HypothesisClass(std::move(members)),
                                       Hypothesis::Extensional(kTargetId, std::move(target)),
                                       std::move(inputs));
}

std::vector<WorldKindInfo> WorldKinds() {
  return {
      {"example1", "many-label target; g1 hits one true label, g2 one false label (params: n, label_universe, members)"},
      {"scalar_lb", "fresh-stream beta world for the scalar-loss lower bound (params: beta, n)"},
      {"pareto_lb", "fresh-stream 12-item worlds I/II for the Pareto lower bound (params: world)"},
      {"semi_lb", "fresh-stream worlds I/II with a huge target (params: world, n)"},
      {"random_finite", "random extensional class over finite inputs (params: num_inputs, label_universe, class_size, max_set_size, realizable, noise, related_members)"},
      {"bounded_target", "targets of size <= C with one zero-precision member (params: num_inputs, label_universe, class_size, target_max, min_gap, max_gap)"},
  };
}

WorldPtr MakeWorld(const WorldSpec& spec) {
  const json& p = spec.params;
  if (spec.kind == "example1") {
    return Example1World(p.value("n", std::uint64_t{10}), p.value("label_universe", std::uint64_t{0}),
                         p.value("members", std::vector<std::string>{}));
  }
  if (spec.kind == "scalar_lb") {
    return ScalarLbWorld(ParseReal(p.at("beta")), p.at("n").get<std::uint64_t>(), spec.seed);
  }
  if (spec.kind == "pareto_lb") {
    return ParetoLbWorld(ParseVariant(p.value("world", json("I"))), spec.seed);
  }
  if (spec.kind == "semi_lb") {
    return SemiLbWorld(ParseVariant(p.value("world", json("I"))), p.at("n").get<std::uint64_t>(),
                       spec.seed);
  }
  if (spec.kind == "random_finite") return RandomFiniteWorld(p.get<RandomWorldParams>(), spec.seed);
  if (spec.kind == "bounded_target") {
    return BoundedTargetWorld(p.get<BoundedTargetParams>(), spec.seed);
  }
  throw InvalidArgument("unknown world kind '" + spec.kind + "'");
}

json DumpWorld(const World& world) {
  json out;
  out["spec"] = world.spec();
  out["fresh_stream"] = world.fresh_stream();
  json members = json::array();
  for (const auto& h : world.hypotheses()) {
    json m{{"id", h.id()}};
    if (h.table()) m["table"] = TableJson(*h.table());
    members.push_back(std::move(m));
  }
  out["members"] = std::move(members);
  if (!world.fresh_stream()) {
    json inputs = json::array();
    for (std::size_t k = 0; k < world.inputs().size(); ++k) {
      const InputId x = world.inputs()[k];
      inputs.push_back({{"x", x},
                        {"probability", world.input_probabilities()[k]},
                        {"target", LabelSetJson(world.Target(x))}});
    }
    out["inputs"] = std::move(inputs);
  }
  json closed = json::object();
  for (const auto& [id, report] : world.closed_forms()) closed[id] = LossJson(report);
  out["closed_forms"] = std::move(closed);
  return out;
}

}  // namespace pacsets
