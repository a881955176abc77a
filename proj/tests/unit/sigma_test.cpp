// Copyright (C) 2026 The fixedrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "fixedrat/errors.hpp"
#include "fixedrat/verify/sigma.hpp"
#include "oracles.hpp"

namespace fixedrat {
namespace {

std::string failures(const Report& report) {
  std::string out;
  for (const auto& r : report) {
    if (!r.passed) out += r.check + " " + r.detail + "\n";
  }
  return out;
}

TEST(Sigma, GeneratorFormulas) {
  const SurfaceSpec spec{2, 3, 1, 1};
  const auto g = build_generators(spec);
  const RatFunc x = RatFunc::variable("x");
  EXPECT_EQ(g.t1, (x * x + RatFunc(3)) / (RatFunc(2) * x));
  EXPECT_EQ(g.t2 * RatFunc(2) * RatFunc(QuadElem::sqrt_of(2)), x - RatFunc(3) / x);
  EXPECT_FALSE(g.t4.denominator().is_constant());
}

TEST(Sigma, ActionExamples) {
  const SurfaceSpec spec{5, 7, 2, -3};
  const SigmaAction act(spec);
  const RatFunc x = RatFunc::variable("x");
  const RatFunc y = RatFunc::variable("y");
  const RatFunc b(7);
  EXPECT_EQ(apply_sigma(x + b / x, act), x + b / x);
  EXPECT_EQ(apply_sigma(RatFunc(QuadElem::sqrt_of(5)), act), RatFunc(QuadElem(0, -1, 5)));
  EXPECT_EQ(apply_sigma(y, act), (RatFunc(2) * (x + b / x) - RatFunc(3)) / y);
}

TEST(Sigma, InvolutionOnRandomFunctions) {
  const SurfaceSpec spec{3, -2, 1, 4};
  const SigmaAction act(spec);
  const RatFunc x = RatFunc::variable("x");
  const RatFunc y = RatFunc::variable("y");
  const RatFunc r(QuadElem::sqrt_of(3));
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int i = 0; i < 15; ++i) {
    const RatFunc f = (RatFunc(coef(rng)) * x * y + r * RatFunc(coef(rng)) * y + RatFunc(coef(rng))) /
                      (x + r * RatFunc(coef(rng)) + RatFunc(1 + std::labs(coef(rng))) * y * y);
    EXPECT_EQ(apply_sigma(apply_sigma(f, act), act), f);
  }
}

TEST(Sigma, InvolutionAndInvariance) {
  for (const SurfaceSpec& spec : {SurfaceSpec{2, 3, 1, 1}, SurfaceSpec{5, -1, 0, 7}}) {
    const auto report = verify_involution_and_invariance(spec);
    EXPECT_TRUE(all_passed(report)) << failures(report);
    EXPECT_EQ(report.size(), 11U);
  }
  std::mt19937_64 rng(59);
  for (int i = 0; i < 50; ++i) {
    const auto spec = testing::random_spec(rng, 20);
    const auto report = verify_involution_and_invariance(spec);
    EXPECT_TRUE(all_passed(report)) << failures(report);
  }
}

TEST(Sigma, ProofChainNonsquare) {
  const auto r1 = verify_proof_chain_nonsquare({2, 2, 3, 3}, 2, 1);
  EXPECT_TRUE(all_passed(r1)) << failures(r1);
  const auto r2 = verify_proof_chain_nonsquare({3, 6, 1, 0}, 3, 1);
  EXPECT_TRUE(all_passed(r2)) << failures(r2);
  EXPECT_THROW(verify_proof_chain_nonsquare({2, 2, 3, 3}, 1, 1), InvalidArgument);
  EXPECT_THROW(verify_proof_chain_nonsquare({2, 4, 3, 3}, 2, 0), InvalidArgument);
}

TEST(Sigma, ProofChainSquare) {
  const auto r1 = verify_proof_chain_square({3, 4, 7, 28}, 2);
  EXPECT_TRUE(all_passed(r1)) << failures(r1);
  bool flagged = false;
  for (const auto& r : r1) flagged = flagged || r.detail == "zero (flagged)";
  EXPECT_TRUE(flagged);
  const auto r2 = verify_proof_chain_square({2, 1, 1, 1}, 1);
  EXPECT_TRUE(all_passed(r2)) << failures(r2);
  const auto r3 = verify_proof_chain_square({2, 1, 1, 1}, -1);
  EXPECT_TRUE(all_passed(r3)) << failures(r3);
  EXPECT_THROW(verify_proof_chain_square({2, 3, 1, 1}, 1), InvalidArgument);
}

TEST(Sigma, NormIdentity) {
  const auto report = verify_norm_identity();
  EXPECT_EQ(report.size(), 2U);
  EXPECT_TRUE(all_passed(report)) << failures(report);
}

}  // namespace
}  // namespace fixedrat
