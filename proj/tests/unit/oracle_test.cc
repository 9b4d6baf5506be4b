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

#include <gtest/gtest.h>

#include <cmath>

#include "pacsets/errors.h"

namespace pacsets {
namespace {

using Rational = boost::rational<std::int64_t>;

TEST(ConstrainedOptTest, WorkedExamples) {
  EXPECT_NEAR(ConstrainedOptGrid(2, 0.0, 1.0 / 64), 0.0, 1e-12);
  EXPECT_NEAR(ConstrainedOptGrid(4, 1.0, 1.0 / 64), -2.0, 1e-12);
  EXPECT_NEAR(ConstrainedOptGrid(3, 1.0, 1.0 / 64), -2.0, 1e-12);
  // Half slack: one coordinate at 1/2.
  EXPECT_NEAR(ConstrainedOptGrid(3, 0.5, 1.0 / 64), -1.0, 1e-12);
  EXPECT_EQ(ConstrainedOptGrid(0, 1.0, 1.0 / 64), 0.0);
  EXPECT_THROW(ConstrainedOptGrid(2, -0.5, 1.0 / 64), InvalidArgument);
}

TEST(ConstrainedOptTest, VerifierPasses) {
  const VerificationReport r = VerifyConstrainedOpt(6, {0.0, 0.5, 1.0, 2.0});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances_checked, 24u);
  EXPECT_THROW(VerifyConstrainedOpt(3, {-1.0}), InvalidArgument);
  EXPECT_THROW(VerifyConstrainedOpt(3, {1.0}, 0.1), InvalidArgument);
}

TEST(ParetoLbTest, ExactValues) {
  EXPECT_EQ(ParetoLbValue(0, 4, 0), Rational(2));
  EXPECT_EQ(ParetoLbValue(4, 4, 4), Rational(2));
  EXPECT_EQ(ParetoLbValue(0, 0, 0), Rational(3, 4));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) EXPECT_LE(ParetoLbValue(a, b, c), Rational(2));
    }
  }
  const VerificationReport r = EnumerateParetoLb();
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances_checked, 125u);
}

TEST(ScalarLbTest, ResponseFormula) {
  for (double beta : {1.0 / 8.0, 2.0 / 3.0}) {
    // g1 = all of N1, g2 = both halves.
    EXPECT_NEAR(ScalarResponsePayoff(0.5, 0.0, beta), 0.75 * beta + 0.375, 1e-15);
    EXPECT_NEAR(ScalarResponsePayoff(0.5, 0.5, beta), beta / 2.0 + 0.5, 1e-15);
  }
  EXPECT_EQ(ScalarResponsePayoff(0.0, 0.0, 0.3), 0.5);
}

TEST(ScalarLbTest, VerifierPasses) {
  RandomStream rng(1);
  const VerificationReport r = VerifyScalarLbPayoffs({1.0 / 8.0, 2.0 / 3.0}, 96, 20000, rng);
  EXPECT_TRUE(r.pass()) << nlohmann::json(r).dump();
}

TEST(LemmaVerifiersTest, PassOnRandomInstances) {
  RandomStream rng(2);
  EXPECT_TRUE(VerifyDhDprSandwich(300, rng).pass());
  EXPECT_TRUE(VerifyPrecRecallInequality(300, {0.25, 0.5, 1.0}, rng).pass());
  EXPECT_TRUE(VerifyBoundedDeg(300, rng).pass());
}

TEST(LemmaVerifiersTest, DeterministicUnderSeed) {
  RandomStream a(3), b(3);
  const nlohmann::json ja = VerifyBoundedDeg(100, a);
  const nlohmann::json jb = VerifyBoundedDeg(100, b);
  EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(VerificationReportTest, JsonRoundTrip) {
  VerificationReport r;
  r.name = "demo";
  r.instances_checked = 5;
  r.violations.push_back({"case 3", 1.5, 1.0});
  r.notes.push_back("tight form held 5/5");
  const nlohmann::json j = r;
  const auto back = j.get<VerificationReport>();
  EXPECT_EQ(back.name, "demo");
  EXPECT_EQ(back.instances_checked, 5u);
  ASSERT_EQ(back.violations.size(), 1u);
  EXPECT_EQ(back.violations[0].instance, "case 3");
  EXPECT_EQ(back.notes, r.notes);
  EXPECT_FALSE(back.pass());
}

TEST(RandomInstanceTest, RespectsLimits) {
  RandomStream rng(4);
  for (int k = 0; k < 200; ++k) {
    const RandomInstance inst = MakeRandomInstance(rng, {4, 10, 8});
    EXPECT_LE(inst.hypotheses.size(), 4u);
    EXPECT_GE(inst.xs.size(), 1u);
    EXPECT_LE(inst.xs.size(), 10u);
    for (InputId x : inst.xs) {
      const LabelSet t = inst.target(x);
      EXPECT_FALSE(t.empty());
      EXPECT_LT(t.intervals().back().hi, 8);
    }
  }
}

}  // namespace
}  // namespace pacsets
