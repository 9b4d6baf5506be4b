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

// Runs every acceptance criterion at its stated tolerance and prints one
// [PASS] or [FAIL] line per criterion. Exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "pacsets/evaluation.h"
#include "pacsets/harness.h"
#include "pacsets/label_set.h"
#include "pacsets/oracle.h"
#include "pacsets/random.h"
#include "pacsets/world.h"

namespace pacsets {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ExperimentConfig Config(const std::string& name) {
  return LoadConfig(std::filesystem::path(PACSETS_CONFIG_DIR) / (name + ".json"));
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

// Fraction of records of one learner satisfying pred (failed trials count
// as misses).
double Fraction(const std::vector<TrialRecord>& records, const std::string& learner,
                const std::function<bool(const TrialRecord&)>& pred) {
  std::size_t n = 0, hit = 0;
  for (const auto& r : records) {
    if (r.learner != learner) continue;
    ++n;
    if (r.status == TrialStatus::kOk && pred(r)) ++hit;
  }
  return n ? static_cast<double>(hit) / static_cast<double>(n) : 0.0;
}

std::size_t CeilM(double v) { return static_cast<std::size_t>(std::ceil(v - 1e-9)); }

Outcome RealizableSampleComplexity() {
  Outcome out;
  const auto start = Clock::now();
  const ExperimentConfig c = Config("realizable_sample_complexity");
  const double eps = 0.1, delta = 0.1;
  const auto h = static_cast<double>(MakeWorld(c.world)->hypotheses().size());
  out.Require(h == 32, Fmt("|H|=%g", h));
  out.Require(c.m_schedule == std::vector<std::size_t>{CeilM(12 * std::log2(4 * h / delta) / eps)},
              Fmt("m=%g", static_cast<double>(c.m_schedule.at(0))));
  out.Require(c.trials == 200, "200 trials");
  const auto records = RunExperiment(c);
  for (const char* learner : {"ml_realizable", "surrogate_realizable"}) {
    const double f = Fraction(records, learner, [&](const TrialRecord& r) {
      return r.expected.precision_loss <= eps && r.expected.recall_loss <= eps;
    });
    out.Require(f >= 0.85, std::string(learner) + Fmt(" success %.3f", f));
  }
  const double secs = Seconds(start);
  out.Require(secs < 120, Fmt("%.1fs", secs));
  return out;
}

Outcome ErmFailure() {
  Outcome out;
  const ExperimentConfig c = Config("erm_failure");
  const WorldPtr w = MakeWorld(c.world);
  out.Require(w->hypotheses()[0].id() == "complete", "complete function first");
  out.Require(c.m_schedule == std::vector<std::size_t>{500} && c.trials == 100, "m=500, 100 trials");
  const auto records = RunExperiment(c);
  std::size_t good = 0;
  for (std::size_t t = 0; t < c.trials; ++t) {
    const TrialRecord* erm = nullptr;
    const TrialRecord* ml = nullptr;
    for (const auto& r : records) {
      if (r.trial != t) continue;
      if (r.learner == "erm_consistent") erm = &r;
      if (r.learner == "ml_realizable") ml = &r;
    }
    if (erm && ml && erm->status == TrialStatus::kOk && ml->status == TrialStatus::kOk &&
        erm->expected.precision_loss >= 0.9 && ml->expected.precision_loss == 0.0 &&
        ml->expected.recall_loss <= 0.1) {
      ++good;
    }
  }
  const double f = static_cast<double>(good) / static_cast<double>(c.trials);
  out.Require(f >= 0.95, Fmt("joint success %.2f", f));
  return out;
}

// C3 and C4 share one run per battery world.
struct BatteryResult {
  Outcome agnostic;
  Outcome modified;
};

BatteryResult AgnosticBattery() {
  BatteryResult out;
  const double delta = 0.1, eps = 0.05;
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "agnostic_battery_" + std::to_string(k);
    const ExperimentConfig c = Config(name);
    const WorldPtr w = MakeWorld(c.world);
    const ClassReference ref = ReferenceFor(w->hypotheses(), *w);
    const auto h = static_cast<double>(w->hypotheses().size());
    const bool m_ok = c.m_schedule == std::vector<std::size_t>{
                                          CeilM(20 * std::log2(h / delta) / (eps * eps))} &&
                      c.trials == 100;
    out.agnostic.Require(m_ok, name + " m");
    out.modified.Require(m_ok, name + " m");
    const auto records = RunExperiment(c);
    const double fa = Fraction(records, "surrogate_agnostic", [&](const TrialRecord& r) {
      return r.expected.scalar_loss <= 5 * ref.min_scalar + eps;
    });
    out.agnostic.Require(fa >= 0.95, name + Fmt(" min=%.4f success %.2f", ref.min_scalar, fa));
    const double fm = Fraction(records, "modified_ml", [&](const TrialRecord& r) {
      return r.expected.recall_loss <= ref.r + eps &&
             r.expected.precision_loss <= 28 * ref.r + 15 * ref.p + eps;
    });
    out.modified.Require(fm >= 0.95, name + Fmt(" r=%.4f p=%.4f success %.2f", ref.r, ref.p, fm));
  }
  return out;
}

Outcome ScalarLowerBound() {
  Outcome out;
  RandomStream rng = RandomStream(20261016).Split("scalar_lb");
  const VerificationReport r = VerifyScalarLbPayoffs({1.0 / 8.0, 2.0 / 3.0}, 96, 100000, rng);
  out.Require(r.pass(), Fmt("%g checks, %g violations", static_cast<double>(r.instances_checked),
                            static_cast<double>(r.violations.size())));
  return out;
}

Outcome ParetoEnumeration() {
  Outcome out;
  const VerificationReport r = EnumerateParetoLb();
  out.Require(r.pass(), "max r + 12p/5 over {0..4}^3 is exactly 2");
  out.Require(ParetoLbValue(0, 4, 0) == boost::rational<std::int64_t>(2), "(0,4,0) = 2");
  const WorldPtr w = ParetoLbWorld(WorldVariant::kI, 0);
  const ClassReference ref = ReferenceFor(w->hypotheses(), *w);
  const LossReport best = *w->ClosedForm(w->hypotheses()[ref.best_scalar].id());
  const LossReport enumerated = OutcomeLosses(w->hypotheses()[ref.best_scalar](0), *w);
  out.Require(best.recall_loss == 0.25 && best.precision_loss == 7.0 / 16.0,
              Fmt("closed form (%.4f, %.4f)", best.recall_loss, best.precision_loss));
  out.Require(enumerated.recall_loss == 0.25 && enumerated.precision_loss == 7.0 / 16.0,
              "enumeration agrees");
  return out;
}

Outcome LemmaSuites() {
  Outcome out;
  const auto start = Clock::now();
  RandomStream root(20261016);
  RandomStream a = root.Split("sandwich"), b = root.Split("prec_recall"), d = root.Split("bounded");
  const std::vector<VerificationReport> reports = {
      VerifyDhDprSandwich(1000, a),
      VerifyConstrainedOpt(6, {0.0, 0.5, 1.0, 2.0}),
      VerifyPrecRecallInequality(1000, {0.25, 0.5, 1.0}, b),
      VerifyBoundedDeg(1000, d),
  };
  for (const auto& r : reports) {
    out.Require(r.pass(), r.name + Fmt(" %g/%g", static_cast<double>(r.violations.size()),
                                       static_cast<double>(r.instances_checked)));
  }
  // The sandwich must have hit the tight d_pr = 2 d_H case.
  std::size_t tight = 0;
  for (const auto& note : reports[0].notes) std::sscanf(note.c_str(), "%zu distinct", &tight);
  out.Require(tight > 0, Fmt("tight pairs %g", static_cast<double>(tight)));
  const double secs = Seconds(start);
  out.Require(secs < 60, Fmt("%.1fs", secs));
  return out;
}

Outcome SemiRealizableCriterion() {
  Outcome out;
  const double delta = 0.1;
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "semi_recovery_" + std::to_string(k);
    const ExperimentConfig c = Config(name);
    const WorldPtr w = MakeWorld(c.world);
    double gap = std::numeric_limits<double>::infinity();
    for (const Hypothesis& g : w->hypotheses()) {
      if (ExpectedLosses(g, *w, EvalMode::kExact).mean.precision_loss > 0.0) {
        gap = std::min(gap, SeparationGap(g, *w));
      }
    }
    const auto h = static_cast<double>(w->hypotheses().size());
    out.Require(gap >= 0.05, name + Fmt(" gap %.4f", gap));
    out.Require(c.m_schedule == std::vector<std::size_t>{CeilM(10 * std::log2(h / delta) / (gap * gap))} &&
                    c.trials == 100,
                name + " m");
    const auto records = RunExperiment(c);
    const double f = Fraction(records, "semi_realizable",
                              [](const TrialRecord& r) { return r.expected.precision_loss == 0.0; });
    out.Require(f >= 0.90, name + Fmt(" recovery %.2f", f));
  }
  // Obstruction: two worlds that the data cannot tell apart at m = 100.
  std::map<std::string, double> worst;
  for (const char* name : {"semi_lb_I", "semi_lb_II"}) {
    const ExperimentConfig c = Config(name);
    const WorldPtr w = MakeWorld(c.world);
    double best_recall = 1.0;
    for (const Hypothesis& g : w->hypotheses()) {
      best_recall = std::min(best_recall, ExpectedLosses(g, *w, EvalMode::kExact).mean.recall_loss);
    }
    const auto records = RunExperiment(c);
    for (const auto& spec : c.learners) {
      const double f = Fraction(records, spec.label, [&](const TrialRecord& r) {
        return r.expected.precision_loss < 0.1 && r.expected.recall_loss - best_recall < 0.1;
      });
      auto it = worst.find(spec.label);
      worst[spec.label] = it == worst.end() ? f : std::min(it->second, f);
    }
  }
  for (const auto& [learner, f] : worst) {
    out.Require(f < 0.9, learner + Fmt(" worst-world success %.2f", f));
  }
  return out;
}

Outcome Determinism() {
  Outcome out;
  for (const char* name : {"realizable_sample_complexity", "erm_failure", "semi_lb_II"}) {
    ExperimentConfig c = Config(name);
    c.trials = std::min<std::size_t>(c.trials, 20);
    c.threads = 1;
    const std::string a = FormatCsv(RunExperiment(c));
    c.threads = 4;
    const std::string b = FormatCsv(RunExperiment(c));
    const std::string again = FormatCsv(RunExperiment(c));
    out.Require(a == b && b == again, std::string(name) + " CSV identical");
  }
  // Interval-set arithmetic against a membership-vector oracle.
  RandomStream root(9);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    RandomStream rng = root.Split(static_cast<std::uint64_t>(trial));
    const std::uint64_t universe = 1 + rng.UniformBelow(10000);
    std::vector<char> ba(universe, 0), bb(universe, 0);
    auto draw = [&](std::vector<char>& bits) {
      std::vector<LabelInterval> ivs;
      const std::uint64_t pieces = rng.UniformBelow(10);
      for (std::uint64_t k = 0; k < pieces; ++k) {
        const auto lo = static_cast<LabelId>(rng.UniformBelow(universe));
        const auto hi = std::min<LabelId>(lo + static_cast<LabelId>(rng.UniformBelow(universe / 5 + 1)),
                                          static_cast<LabelId>(universe) - 1);
        ivs.push_back({lo, hi});
        for (LabelId v = lo; v <= hi; ++v) bits[static_cast<std::size_t>(v)] = 1;
      }
      return LabelSet::FromIntervals(ivs);
    };
    const LabelSet a = draw(ba), b = draw(bb);
    const LabelSet u = Union(a, b), in = Intersection(a, b), d = Difference(a, b);
    std::uint64_t nu = 0, ni = 0, nd = 0;
    bool ok = true;
    for (std::uint64_t k = 0; k < universe; ++k) {
      const auto v = static_cast<LabelId>(k);
      nu += ba[k] || bb[k];
      ni += ba[k] && bb[k];
      nd += ba[k] && !bb[k];
      ok = ok && u.contains(v) == (ba[k] || bb[k]) && in.contains(v) == (ba[k] && bb[k]) &&
           d.contains(v) == (ba[k] && !bb[k]);
    }
    ok = ok && u.size() == nu && in.size() == ni && d.size() == nd && IntersectionSize(a, b) == ni &&
         DifferenceSize(a, b) == nd && IsSubset(a, b) == (nd == 0);
    mismatches += !ok;
  }
  out.Require(mismatches == 0, Fmt("bitset oracle mismatches %g/1000", static_cast<double>(mismatches)));
  return out;
}

}  // namespace
}  // namespace pacsets

int main() {
  using pacsets::Outcome;
  int failed = 0;
  auto report = [&](int id, const char* title, const Outcome& o) {
    std::printf("[%s] C%d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };
  auto guarded = [&](int id, const char* title, const std::function<Outcome()>& run) {
    try {
      report(id, title, run());
    } catch (const std::exception& e) {
      report(id, title, Outcome{false, std::string("exception: ") + e.what()});
    }
  };
  guarded(1, "realizable sample complexity", pacsets::RealizableSampleComplexity);
  guarded(2, "ERM failure", pacsets::ErmFailure);
  try {
    const auto battery = pacsets::AgnosticBattery();
    report(3, "agnostic 5-approximation", battery.agnostic);
    report(4, "modified-ML Pareto guarantee", battery.modified);
  } catch (const std::exception& e) {
    report(3, "agnostic 5-approximation", Outcome{false, e.what()});
    report(4, "modified-ML Pareto guarantee", Outcome{false, e.what()});
  }
  guarded(5, "scalar lower-bound payoffs", pacsets::ScalarLowerBound);
  guarded(6, "Pareto impossibility enumeration", pacsets::ParetoEnumeration);
  guarded(7, "lemma suites", pacsets::LemmaSuites);
  guarded(8, "semi-realizable recovery and obstruction", pacsets::SemiRealizableCriterion);
  guarded(9, "determinism and data integrity", pacsets::Determinism);
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
