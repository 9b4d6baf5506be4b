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

#ifndef PACSETS_ORACLE_H_
#define PACSETS_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"
#include "pacsets/hypothesis.h"
#include "pacsets/random.h"

// Brute-force verifiers for the deterministic and closed-form claims the
// learners rest on. Each returns a report listing every violated instance.

namespace pacsets {

struct Violation {
  std::string instance;
  double observed = 0.0;
  double bound = 0.0;
};

struct VerificationReport {
  std::string name;
  std::size_t instances_checked = 0;
  std::vector<Violation> violations;
  // Free-form observations, e.g. how often a tighter variant also held.
  std::vector<std::string> notes;

  bool pass() const { return violations.empty(); }
};
void to_json(nlohmann::json& j, const Violation& v);
void from_json(const nlohmann::json& j, Violation& v);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

// A random class over a few inputs plus an index sequence xs (with
// repeats) and a target that need not belong to the class.
struct RandomInstance {
  HypothesisClass hypotheses;
  Hypothesis target;
  std::vector<InputId> xs;
};
struct InstanceLimits {
  std::size_t max_members = 8;
  std::size_t max_m = 20;
  std::uint64_t max_universe = 32;
};
// Target sets are never empty; member sets may be. Member sets are drawn
// from a mix of shapes (independent, subset of target, superset, equal) so
// boundary ratios n_g / n_target occur often.
RandomInstance MakeRandomInstance(RandomStream& rng, const InstanceLimits& limits = {});

// d_H(v_g1, v_g2) <= d_pr(g1, g2) for every pair (including an
// out-of-class hypothesis), and d_pr <= 2 d_H for in-class pairs, to 1e-9.
// The first instance is the tight case: one input, g1 = {a}, g2 = {b}.
VerificationReport VerifyDhDprSandwich(std::size_t trials, RandomStream& rng);

// Grid minimum of sum_i log2 a_i subject to sum_i a_i >= k - c and
// a_i in [1/2, 1], over multiples of step. Infeasible (k - c > k) never
// happens for c >= 0.
double ConstrainedOptGrid(std::size_t k, double c, double step);

// For each k <= k_max and c in c_grid asserts
//   ConstrainedOptGrid(k, c, step) - 2 k step / ln 2 >= -2c - 1.
// The subtracted term bounds how far the continuous optimum can sit below
// the grid one: rounding each a_i up to the grid keeps feasibility and
// moves log2 a_i by at most step / (a_i ln 2) <= 2 step / ln 2.
// Throws InvalidArgument for c < 0 or step > 1/32.
VerificationReport VerifyConstrainedOpt(std::size_t k_max, const std::vector<double>& c_grid,
                                        double grid_step = 1.0 / 64.0);

// precision(g) <= (1+c)/m sum_{i: n_g >= n_t} log2[(n_g ^ 2 n_t) / n_t]
//                 + (1+c)/c recall(g), empirical losses, to 1e-9.
VerificationReport VerifyPrecRecallInequality(std::size_t trials,
                                              const std::vector<double>& c_values,
                                              RandomStream& rng);

// Per random instance with empirical losses p, r:
//   #{i : n_g / n_t < 1/2} < 2 m r + 1 and #{i : n_g / n_t > 2} < 2 m p + 1;
//   for a random index subset S, with B = {i : n_g / n_t >= 1/2} and
//   A = {i : n_g / n_t <= 2}:
//     sum_{S n B} log2[(n_g ^ n_t) / n_t] >= -4 m r - 1,
//     sum_{S n A} log2[n_g / n_t]          <=  2 m p + 1.
// Indices with an empty output are left out of S (their logarithm is
// -inf, which satisfies the A bound trivially). Notes record how often the tighter
// -2 m r - 1 form of the first subset bound held.
VerificationReport VerifyBoundedDeg(std::size_t trials, RandomStream& rng);

// r + (12/5) p for an output holding n1, n2, n3 items of the three blocks
// of four, world-averaged payoffs. For (0, 0, 0) the ratio n2 / (n1+n2+n3)
// is taken as 0.
boost::rational<std::int64_t> ParetoLbValue(int n1, int n2, int n3);

// Exhaustive over {0..4}^3 in exact arithmetic: asserts the maximum over
// non-empty outputs is exactly 2, attained exactly at (0,4,0) and (4,4,4),
// and that (0,0,0) stays <= 2.
VerificationReport EnumerateParetoLb();

// Expected payoff (1 - scalar loss) at a fresh input of an output holding
// a1 n items of N1 and a2 n items of N2 in the beta world. An empty output
// scores 1/2.
double ScalarResponsePayoff(double a1, double a2, double beta);

// Monte-Carlo over `trials` fresh inputs per beta:
//   payoffs of g1 and g2 match 3 beta / 4 + 3/8 and beta / 2 + 1/2 within
//   3 standard errors;
//   for every a2 on the grid {j/n}, a1 = 1/2 maximizes the exact response
//   formula over a1 (the empty output is scored 1/2 and kept apart);
//   at beta = 1/8: (1/2)(u(g2) - u(best a2 <= 1/4)) is 5/192, and
//   at beta = 2/3: (1/2)(u(g1) - u(best a2 > 1/4)) is 1/48,
//   both exactly from the formula and within 3 standard errors by paired
//   Monte-Carlo differences.
VerificationReport VerifyScalarLbPayoffs(const std::vector<double>& beta_values, std::uint64_t n,
                                         std::size_t trials, RandomStream& rng);

}  // namespace pacsets

#endif  // PACSETS_ORACLE_H_
