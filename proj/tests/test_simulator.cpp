// Copyright 2026 The FXR Search Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fxr/errors.hpp"
#include "fxr/fxr_solver.hpp"
#include "fxr/simulator.hpp"
#include "test_util.hpp"

namespace fxr {
namespace {

using testing::kPi;
using testing::uniform;

Schedule random_schedule(std::mt19937_64 &rng, int max_steps) {
    Schedule s;
    const int n = std::uniform_int_distribution<int>(1, max_steps)(rng);
    for (int i = 0; i < n; ++i) {
        if (rng() % 2) {
            s.oracle(uniform(rng, -7, 7));
        } else {
            s.diffusion(uniform(rng, -7, 7));
        }
    }
    return s;
}

std::vector<std::size_t> random_marked(std::mt19937_64 &rng, std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    all.resize(m);
    return all;
}

TEST(Schedule, BuildersAndCounts) {
    Schedule block;
    block.grover(1.0, 2.0);
    Schedule s;
    s.oracle(0.5).repeat(block, 3).diffusion(0.1);
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(s.oracle_count(), 4u);
    EXPECT_EQ(s.steps()[1].kind, Step::Kind::kOracle);
    EXPECT_EQ(s.steps()[2].angle, 2.0);
    EXPECT_TRUE(Schedule().empty());
}

TEST(FxrSchedule, BlockOrderPerMode) {
    ParamSolution a;
    a.mode = Mode::kAlphaFixed;
    a.fixed_angle = 0.3;
    a.free_pair = {1.0, 2.0};
    a.k = 2;
    const Schedule sa = fxr_schedule(a);
    ASSERT_EQ(sa.size(), 8u);
    EXPECT_EQ(sa.steps()[0].angle, 0.3);
    EXPECT_EQ(sa.steps()[1].angle, 1.0);
    EXPECT_EQ(sa.steps()[3].angle, 2.0);

    ParamSolution b = a;
    b.mode = Mode::kBetaFixed;
    const Schedule sb = fxr_schedule(b);
    EXPECT_EQ(sb.steps()[0].angle, 1.0);
    EXPECT_EQ(sb.steps()[1].angle, 0.3);
    EXPECT_EQ(sb.steps()[2].angle, 2.0);
}

TEST(RunFull, FourElementGroverIsExact) {
    const StateVector v = run_full(4, {2}, Schedule().grover(kPi, kPi));
    EXPECT_NEAR(std::abs(v.amplitudes()[2]), 1.0, 1e-15);
    EXPECT_NEAR(v.marked_mass(), 1.0, 1e-15);
}

TEST(RunFull, ZeroPhaseOracleLeavesUniformState) {
    const StateVector v = run_full(8, {1, 5}, Schedule().oracle(0.0));
    for (Eigen::Index i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(v.amplitudes()[i] - 1 / std::sqrt(8.0)), 0.0, 1e-16);
    }
}

TEST(RunFull, RejectsBadInputs) {
    const Schedule s = Schedule().grover(kPi, kPi);
    EXPECT_THROW(run_full(4, {}, s), std::invalid_argument);
    EXPECT_THROW(run_full(4, {0, 1, 2, 3}, s), std::invalid_argument);
    EXPECT_THROW(run_full(4, {7}, s), std::invalid_argument);
    EXPECT_THROW(run_full(1, {0}, s), std::invalid_argument);
    EXPECT_THROW(run_full(kMaxFullDimension + 1, {0}, s), ResourceLimitError);
}

TEST(RunFull, DuplicateMarksCollapse) {
    const StateVector v = run_full(4, {2, 2}, Schedule().grover(kPi, kPi));
    EXPECT_EQ(v.marked().size(), 1u);
    EXPECT_NEAR(v.marked_mass(), 1.0, 1e-15);
}

TEST(Parity, FullAndPlaneAgree) {
    std::mt19937_64 rng(30);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4096)(rng);
        const auto marked = random_marked(rng, n);
        const Schedule s = random_schedule(rng, 20);
        const double plane = run_2d(s, SearchSpec::from_counts(n, marked.size())).success();
        const StateVector full = run_full(n, marked, s);
        ASSERT_NEAR(full.marked_mass(), plane, 1e-10);
        ASSERT_LT(full.marked_spread(), 1e-10);
    }
}

TEST(Unitarity, LongRandomSchedules) {
    std::mt19937_64 rng(31);
    Schedule s;
    for (int i = 0; i < 10000; ++i) {
        s.grover(uniform(rng, -7, 7), uniform(rng, -7, 7));
    }
    const SearchSpec spec = SearchSpec::from_fraction(0.123);
    EXPECT_NEAR(run_2d(s, spec).norm(), 1.0, 1e-10);
    EXPECT_NEAR(run_full(1000, {3, 17, 400}, s).norm(), 1.0, 1e-10);
}

TEST(Success, CertifiedSolutionAndItsPerturbation) {
    const SearchSpec spec = SearchSpec::from_fraction(0.2);
    ParamSolution sol = solve_free_pair(0.6 * kPi, spec, Mode::kAlphaFixed, 5);
    EXPECT_GT(success_probability(sol, spec), kCertifiedThreshold);
    sol.k -= 1;
    EXPECT_LT(success_probability(sol, spec), 1 - 1e-3);
}

TEST(Success, PlainGroverPairOvershootsAtQuarter) {
    ParamSolution sol;
    sol.mode = Mode::kAlphaFixed;
    sol.fixed_angle = kPi;
    sol.free_pair = {kPi, kPi};
    sol.k = 1;
    // Two plain iterations at theta = pi/3 land at Bloch angle 5 pi / 3.
    EXPECT_NEAR(success_probability(sol, SearchSpec::from_fraction(0.25)), 0.25, 1e-12);
}

TEST(FullSimulation, ThousandElementsWithTwoHundredMarked) {
    std::mt19937_64 rng(32);
    std::vector<std::size_t> all(1000);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(200);
    const SearchSpec spec = SearchSpec::from_fraction(0.2);
    const int k = static_cast<int>(std::ceil(k_lower(0.6 * kPi, spec))) + 1;
    const ParamSolution sol = solve_free_pair(0.6 * kPi, spec, Mode::kAlphaFixed, k);
    const StateVector v = run_full(1000, all, fxr_schedule(sol));
    EXPECT_GT(v.marked_mass(), kCertifiedThreshold);
    EXPECT_LT(v.marked_spread(), 1e-10);
}

}  // namespace
}  // namespace fxr
