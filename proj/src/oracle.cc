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

#include "pacsets/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "pacsets/errors.h"
#include "pacsets/losses.h"
#include "pacsets/surrogate.h"
#include "pacsets/world.h"

namespace pacsets {
namespace {

using json = nlohmann::json;
using Rational = boost::rational<std::int64_t>;

constexpr double kTol = 1e-9;

std::string Format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

// Set at one input for a member, in one of five shapes relative to target.
LabelSet MemberSet(RandomStream& rng, const LabelSet& target, std::uint64_t universe) {
  switch (rng.UniformBelow(5)) {
    case 0:  // independent, possibly empty
      return RandomLabelSubset(rng, 0, universe, rng.UniformBelow(universe + 1));
    case 1: {  // non-empty subset of the target
      const auto labels = target.ToVector();
      std::vector<LabelId> picked;
      std::sample(labels.begin(), labels.end(), std::back_inserter(picked),
                  1 + rng.UniformBelow(labels.size()), rng);
      return LabelSet::FromLabels(picked);
    }
    case 2:  // superset of the target
      return Union(target, RandomLabelSubset(rng, 0, universe, rng.UniformBelow(universe + 1)));
    case 3:
      return target;
    default: {  // part of the target plus noise
      const auto labels = target.ToVector();
      std::vector<LabelId> picked;
      std::sample(labels.begin(), labels.end(), std::back_inserter(picked),
                  rng.UniformBelow(labels.size() + 1), rng);
      return Union(LabelSet::FromLabels(picked),
                   RandomLabelSubset(rng, 0, universe, rng.UniformBelow(universe / 2 + 1)));
    }
  }
}

struct SizeRatio {
  std::uint64_t ng;
  std::uint64_t nt;
};

std::vector<SizeRatio> Ratios(const Hypothesis& g, const Hypothesis& target,
                              std::span<const InputId> xs) {
  std::vector<SizeRatio> out;
  out.reserve(xs.size());
  for (InputId x : xs) out.push_back({g(x).size(), target(x).size()});
  return out;
}

// Running mean and standard error.
struct Moments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void Add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  double StdError() const {
    return n < 2 ? 0.0 : std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

// |observed - expected| <= max(3 SE, 1e-12).
void CheckWithinThreeSe(VerificationReport& report, const std::string& what,
                        const Moments& observed, double expected) {
  const double allowed = std::max(3.0 * observed.StdError(), 1e-12);
  report.notes.push_back(Format("%s = %.6f +- %.6f (expected %.6f)", what.c_str(), observed.mean,
                                observed.StdError(), expected));
  if (std::abs(observed.mean - expected) > allowed) {
    report.violations.push_back({what + " outside 3 standard errors", observed.mean, expected});
  }
}

}  // namespace

void to_json(json& j, const Violation& v) {
  j = json{{"instance", v.instance}, {"observed", v.observed}, {"bound", v.bound}};
}

void from_json(const json& j, Violation& v) {
  j.at("instance").get_to(v.instance);
  j.at("observed").get_to(v.observed);
  j.at("bound").get_to(v.bound);
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"name", r.name},
           {"instances_checked", r.instances_checked},
           {"pass", r.pass()},
           {"violations", r.violations},
           {"notes", r.notes}};
}

void from_json(const json& j, VerificationReport& r) {
  j.at("name").get_to(r.name);
  j.at("instances_checked").get_to(r.instances_checked);
  j.at("violations").get_to(r.violations);
  r.notes = j.value("notes", std::vector<std::string>{});
}

RandomInstance MakeRandomInstance(RandomStream& rng, const InstanceLimits& limits) {
  if (limits.max_members == 0 || limits.max_m == 0 || limits.max_universe < 2) {
    throw InvalidArgument("MakeRandomInstance: limits too small");
  }
  const std::size_t k = 1 + rng.UniformBelow(limits.max_members);
  const std::size_t m = 1 + rng.UniformBelow(limits.max_m);
  const std::uint64_t universe = 2 + rng.UniformBelow(limits.max_universe - 1);
  const std::size_t distinct = 1 + rng.UniformBelow(m);

  Hypothesis::Table target;
  for (InputId x = 0; x < distinct; ++x) {
    target.emplace(x, RandomLabelSubset(rng, 0, universe, 1 + rng.UniformBelow(universe)));
  }
  std::vector<Hypothesis> members;
  for (std::size_t g = 0; g < k; ++g) {
    Hypothesis::Table table;
    for (const auto& [x, t] : target) table.emplace(x, MemberSet(rng, t, universe));
    members.push_back(Hypothesis::Extensional(Format("h%zu", g), std::move(table)));
  }
  std::vector<InputId> xs(m);
  for (auto& x : xs) x = rng.UniformBelow(distinct);
  return {HypothesisClass(std::move(members)), Hypothesis::Extensional("target", std::move(target)),
          std::move(xs)};
}

VerificationReport VerifyDhDprSandwich(std::size_t trials, RandomStream& rng) {
  if (trials == 0) throw InvalidArgument("VerifyDhDprSandwich: trials must be >= 1");
  VerificationReport report;
  report.name = "dH_dpr_sandwich";
  std::size_t tight = 0;
  auto check = [&](const HypothesisClass& hypotheses, const Hypothesis& outside,
                   std::span<const InputId> xs, std::size_t index) {
    std::vector<PairVector> vs;
    for (const auto& g : hypotheses) vs.push_back(PairVectorFor(g, hypotheses, xs));
    const PairVector v_out = PairVectorFor(outside, hypotheses, xs);
    for (std::size_t a = 0; a < hypotheses.size(); ++a) {
      for (std::size_t b = a; b < hypotheses.size(); ++b) {
        const double dh = DistanceH(vs[a], vs[b]);
        const double dpr = DistancePR(hypotheses[a], hypotheses[b], xs);
        const std::string pair = Format("instance %zu (%s,%s)", index, hypotheses[a].id().c_str(),
                                        hypotheses[b].id().c_str());
        if (dh > dpr + kTol) report.violations.push_back({pair + ": d_H <= d_pr", dh, dpr});
        if (dpr > 2.0 * dh + kTol) {
          report.violations.push_back({pair + ": d_pr <= 2 d_H", dpr, 2.0 * dh});
        }
        if (a != b && dpr > 0.0 && std::abs(dpr - 2.0 * dh) <= kTol) ++tight;
      }
      const double dh = DistanceH(vs[a], v_out);
      const double dpr = DistancePR(hypotheses[a], outside, xs);
      if (dh > dpr + kTol) {
        report.violations.push_back(
            {Format("instance %zu (%s,outside): d_H <= d_pr", index, hypotheses[a].id().c_str()),
             dh, dpr});
      }
    }
  };

  // One input, g1 = {a}, g2 = {b}: d_pr = 2 = 2 d_H.
  {
    HypothesisClass pair({Hypothesis::Constant("g1", LabelSet::Of({0})),
                          Hypothesis::Constant("g2", LabelSet::Of({1}))});
    const std::vector<InputId> xs{0};
    check(pair, Hypothesis::Constant("outside", LabelSet::Of({0, 1})), xs, 0);
  }
  for (std::size_t t = 1; t < trials; ++t) {
    RandomInstance inst = MakeRandomInstance(rng);
    check(inst.hypotheses, inst.target, inst.xs, t);
  }
  report.instances_checked = trials;
  report.notes.push_back(Format("%zu distinct in-class pairs attained d_pr = 2 d_H", tight));
  return report;
}

double ConstrainedOptGrid(std::size_t k, double c, double step) {
  if (c < 0.0) throw InvalidArgument("ConstrainedOptGrid: c must be >= 0");
  if (!(step > 0.0) || step > 0.5) throw InvalidArgument("ConstrainedOptGrid: bad grid step");
  if (k == 0) return 0.0;
  // a = (half + j) / (2 half), j = 0..half.
  const auto half = static_cast<std::int64_t>(std::llround(0.5 / step));
  std::vector<double> logs(half + 1);
  for (std::int64_t j = 0; j <= half; ++j) {
    logs[j] = std::log2(static_cast<double>(half + j) / static_cast<double>(2 * half));
  }
  // Constraint in grid units: sum (half + j_i) >= (k - c) 2 half.
  const double need = (static_cast<double>(k) - c) * 2.0 * static_cast<double>(half) - 1e-9;
  double best = std::numeric_limits<double>::infinity();
  // Non-decreasing j sequences; each remaining slot adds at most 2 half
  // units and at least -1 to the objective.
  std::function<void(std::size_t, std::int64_t, std::int64_t, double)> walk =
      [&](std::size_t depth, std::int64_t lo, std::int64_t units, double value) {
        const auto left = static_cast<double>(k - depth);
        if (static_cast<double>(units) + left * 2.0 * static_cast<double>(half) < need) return;
        if (value - left >= best) return;
        if (depth == k) {
          best = value;
          return;
        }
        for (std::int64_t j = lo; j <= half; ++j) walk(depth + 1, j, units + half + j, value + logs[j]);
      };
  walk(0, 0, 0, 0.0);
  return best;
}

VerificationReport VerifyConstrainedOpt(std::size_t k_max, const std::vector<double>& c_grid,
                                        double grid_step) {
  if (grid_step > 1.0 / 32.0) throw InvalidArgument("VerifyConstrainedOpt: grid_step must be <= 1/32");
  for (double c : c_grid) {
    if (c < 0.0) throw InvalidArgument("VerifyConstrainedOpt: c must be >= 0 (infeasible)");
  }
  VerificationReport report;
  report.name = "constrained_opt";
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (double c : c_grid) {
      const double grid = ConstrainedOptGrid(k, c, grid_step);
      const double lower = grid - 2.0 * static_cast<double>(k) * grid_step / std::numbers::ln2;
      const double bound = -2.0 * c - 1.0;
      ++report.instances_checked;
      report.notes.push_back(Format("k=%zu c=%g grid OPT=%.6f", k, c, grid));
      if (lower < bound - kTol) {
        report.violations.push_back({Format("k=%zu c=%g", k, c), lower, bound});
      }
    }
  }
  return report;
}

VerificationReport VerifyPrecRecallInequality(std::size_t trials,
                                              const std::vector<double>& c_values,
                                              RandomStream& rng) {
  for (double c : c_values) {
    if (!(c > 0.0 && c <= 1.0)) throw InvalidArgument("VerifyPrecRecallInequality: c must be in (0, 1]");
  }
  VerificationReport report;
  report.name = "prec_recall_inequality";
  for (std::size_t t = 0; t < trials; ++t) {
    RandomInstance inst = MakeRandomInstance(rng);
    const double m = static_cast<double>(inst.xs.size());
    for (const auto& g : inst.hypotheses) {
      const LossReport emp = EmpiricalLosses(g, inst.target, inst.xs);
      double log_sum = 0.0;
      for (const auto& [ng, nt] : Ratios(g, inst.target, inst.xs)) {
        if (ng >= nt) log_sum += std::log2(static_cast<double>(std::min(ng, 2 * nt)) / static_cast<double>(nt));
      }
      for (double c : c_values) {
        const double rhs = (1.0 + c) / m * log_sum + (1.0 + c) / c * emp.recall_loss;
        if (emp.precision_loss > rhs + kTol) {
          report.violations.push_back(
              {Format("instance %zu %s c=%g", t, g.id().c_str(), c), emp.precision_loss, rhs});
        }
      }
    }
    ++report.instances_checked;
  }
  return report;
}

VerificationReport VerifyBoundedDeg(std::size_t trials, RandomStream& rng) {
  if (trials == 0) throw InvalidArgument("VerifyBoundedDeg: trials must be >= 1");
  VerificationReport report;
  report.name = "bounded_deg";
  std::size_t checks = 0, tighter_held = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    RandomInstance inst = MakeRandomInstance(rng);
    const double m = static_cast<double>(inst.xs.size());
    for (const auto& g : inst.hypotheses) {
      const LossReport emp = EmpiricalLosses(g, inst.target, inst.xs);
      const auto ratios = Ratios(g, inst.target, inst.xs);
      const std::string where = Format("instance %zu %s", t, g.id().c_str());
      std::size_t low = 0, high = 0;
      double b_sum = 0.0, a_sum = 0.0;
      for (const auto& [ng, nt] : ratios) {
        if (2 * ng < nt) ++low;
        if (ng > 2 * nt) ++high;
        if (!rng.Bernoulli(0.5) || ng == 0) continue;  // i not in S
        if (2 * ng >= nt) {
          b_sum += std::log2(static_cast<double>(std::min(ng, nt)) / static_cast<double>(nt));
        }
        if (ng <= 2 * nt) a_sum += std::log2(static_cast<double>(ng) / static_cast<double>(nt));
      }
      const double low_bound = 2.0 * m * emp.recall_loss + 1.0;
      const double high_bound = 2.0 * m * emp.precision_loss + 1.0;
      const double recall_sum_bound = -4.0 * m * emp.recall_loss - 1.0;
      const double precision_sum_bound = 2.0 * m * emp.precision_loss + 1.0;
      if (!(static_cast<double>(low) < low_bound)) {
        report.violations.push_back({where + ": #{n_g/n_t < 1/2} < 2mr+1", static_cast<double>(low), low_bound});
      }
      if (!(static_cast<double>(high) < high_bound)) {
        report.violations.push_back({where + ": #{n_g/n_t > 2} < 2mp+1", static_cast<double>(high), high_bound});
      }
      if (b_sum < recall_sum_bound - kTol) {
        report.violations.push_back({where + ": recall subset sum", b_sum, recall_sum_bound});
      }
      if (a_sum > precision_sum_bound + kTol) {
        report.violations.push_back({where + ": precision subset sum", a_sum, precision_sum_bound});
      }
      ++checks;
      if (b_sum >= -2.0 * m * emp.recall_loss - 1.0 - kTol) ++tighter_held;
    }
    ++report.instances_checked;
  }
  report.notes.push_back(Format("tighter recall subset bound -2mr-1 held in %zu of %zu checks",
                                tighter_held, checks));
  return report;
}

boost::rational<std::int64_t> ParetoLbValue(int n1, int n2, int n3) {
  const Rational r(n1 + 2 * n2 + n3, 16);
  const int total = n1 + n2 + n3;
  const Rational share = total == 0 ? Rational(0) : Rational(n2, total);
  const Rational p = Rational(5, 16) + Rational(5, 16) * share;
  return r + Rational(12, 5) * p;
}

VerificationReport EnumerateParetoLb() {
  VerificationReport report;
  report.name = "pareto_lb_enumeration";
  Rational best(-1);
  std::vector<std::array<int, 3>> argmax;
  for (int n1 = 0; n1 <= 4; ++n1) {
    for (int n2 = 0; n2 <= 4; ++n2) {
      for (int n3 = 0; n3 <= 4; ++n3) {
        ++report.instances_checked;
        const Rational value = ParetoLbValue(n1, n2, n3);
        if (value > Rational(2)) {
          report.violations.push_back({Format("(%d,%d,%d)", n1, n2, n3),
                                       boost::rational_cast<double>(value), 2.0});
        }
        if (n1 + n2 + n3 == 0) continue;
        if (value > best) {
          best = value;
          argmax.clear();
        }
        if (value == best) argmax.push_back({n1, n2, n3});
      }
    }
  }
  if (best != Rational(2)) {
    report.violations.push_back({"max over non-empty outputs equals 2",
                                 boost::rational_cast<double>(best), 2.0});
  }
  const std::vector<std::array<int, 3>> expected{{0, 4, 0}, {4, 4, 4}};
  if (argmax != expected) {
    report.violations.push_back({"maximizers are exactly (0,4,0) and (4,4,4)",
                                 static_cast<double>(argmax.size()), 2.0});
  }
  report.notes.push_back(Format("max = %lld/%lld over %zu maximizers",
                                static_cast<long long>(best.numerator()),
                                static_cast<long long>(best.denominator()), argmax.size()));
  return report;
}

double ScalarResponsePayoff(double a1, double a2, double beta) {
  if (a1 + a2 <= 0.0) return 0.5;
  return a1 * beta / (2.0 * (a1 + a2)) + beta / 4.0 + 0.75 * a1 + 0.25 * a2;
}

VerificationReport VerifyScalarLbPayoffs(const std::vector<double>& beta_values, std::uint64_t n,
                                         std::size_t trials, RandomStream& rng) {
  if (trials < 2) throw InvalidArgument("VerifyScalarLbPayoffs: need at least 2 trials");
  VerificationReport report;
  report.name = "scalar_lb_payoffs";
  const std::uint64_t half = n / 2;
  for (double beta : beta_values) {
    const WorldPtr world = ScalarLbWorld(beta, n, rng());
    const double b = world->spec().params.at("beta").get<double>();
    const std::string tag = Format("beta=%.6g", b);
    const double u1 = 0.75 * b + 0.375;
    const double u2 = 0.5 * b + 0.5;

    // Exact response formula over the grid a1, a2 in {j / n}.
    const auto grid = [n](std::uint64_t j) { return static_cast<double>(j) / static_cast<double>(n); };
    std::uint64_t best_low = 0, best_high = half / 2 + 1;
    for (std::uint64_t j2 = 0; j2 <= half; ++j2) {
      const double at_half = ScalarResponsePayoff(0.5, grid(j2), b);
      for (std::uint64_t j1 = 0; j1 <= half; ++j1) {
        if (j1 == 0 && j2 == 0) continue;  // empty output, scored separately below
        const double v = ScalarResponsePayoff(grid(j1), grid(j2), b);
        if (v > at_half + 1e-12) {
          report.violations.push_back({tag + Format(" a1=1/2 maximizes at a2=%g", grid(j2)), v, at_half});
        }
      }
      if (4 * j2 <= n) {
        if (at_half > ScalarResponsePayoff(0.5, grid(best_low), b)) best_low = j2;
      } else if (at_half > ScalarResponsePayoff(0.5, grid(best_high), b)) {
        best_high = j2;
      }
    }
    report.instances_checked += (half + 1) * (half + 1);
    const bool at_low_beta = std::abs(b - 0.125) < 1e-12;
    const bool at_high_beta = std::abs(b - 2.0 / 3.0) < 1e-12;
    // The empty output (payoff 1/2) also has a2 <= 1/4.
    const double low_payoff = std::max(ScalarResponsePayoff(0.5, grid(best_low), b),
                                       ScalarResponsePayoff(0.0, 0.0, b));
    if (at_low_beta) {
      const double gap = 0.5 * (u2 - low_payoff);
      if (std::abs(gap - 5.0 / 192.0) > 1e-12) report.violations.push_back({tag + " exact gap", gap, 5.0 / 192.0});
    }
    if (at_high_beta) {
      const double gap = 0.5 * (u1 - ScalarResponsePayoff(0.5, grid(best_high), b));
      if (std::abs(gap - 1.0 / 48.0) > 1e-12) report.violations.push_back({tag + " exact gap", gap, 1.0 / 48.0});
    }

    // Monte-Carlo over fresh inputs.
    const auto lhalf = static_cast<LabelId>(half);
    auto response = [&](std::uint64_t j2) {
      return j2 == 0 ? LabelSet::Range(0, lhalf - 1)
                     : LabelSet::FromIntervals({{0, lhalf - 1}, {lhalf, lhalf + static_cast<LabelId>(j2) - 1}});
    };
    const LabelSet g1 = world->hypotheses().Get("g1")(0);
    const LabelSet g2 = world->hypotheses().Get("g2")(0);
    const LabelSet low = response(best_low);
    const LabelSet high = response(best_high);
    Moments m1, m2, m_low, m_high, d_low, d_high;
    RandomStream draws = rng.Split("fresh_inputs");
    for (std::size_t s = 0; s < trials; ++s) {
      const LabelSet target = world->Target(world->DrawInput(draws));
      const double p1 = Losses(g1, target).scalar_payoff();
      const double p2 = Losses(g2, target).scalar_payoff();
      const double pl = Losses(low, target).scalar_payoff();
      const double ph = Losses(high, target).scalar_payoff();
      m1.Add(p1);
      m2.Add(p2);
      m_low.Add(pl);
      m_high.Add(ph);
      d_low.Add(0.5 * (p2 - pl));
      d_high.Add(0.5 * (p1 - ph));
    }
    report.instances_checked += trials;
    CheckWithinThreeSe(report, tag + " u(g1)", m1, u1);
    CheckWithinThreeSe(report, tag + " u(g2)", m2, u2);
    CheckWithinThreeSe(report, tag + Format(" u(a2=%g)", grid(best_low)), m_low,
                       ScalarResponsePayoff(0.5, grid(best_low), b));
    CheckWithinThreeSe(report, tag + Format(" u(a2=%g)", grid(best_high)), m_high,
                       ScalarResponsePayoff(0.5, grid(best_high), b));
    if (at_low_beta) CheckWithinThreeSe(report, tag + " gap vs best a2<=1/4", d_low, 5.0 / 192.0);
    if (at_high_beta) CheckWithinThreeSe(report, tag + " gap vs best a2>1/4", d_high, 1.0 / 48.0);
  }
  return report;
}

}  // namespace pacsets
