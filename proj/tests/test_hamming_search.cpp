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

#include <complex>

#include "fxr/errors.hpp"
#include "fxr/fxr_solver.hpp"
#include "fxr/hamming_search.hpp"
#include "fxr/simulator.hpp"
#include "test_util.hpp"

namespace fxr {
namespace {

using testing::kPi;

TEST(OraclePhase, ParityOfDistance) {
    EXPECT_EQ(oracle_phase({1, 2, 3}, {1, 2, 3}, 5), 1);
    EXPECT_EQ(oracle_phase({1, 2, 4}, {1, 2, 3}, 5), -1);
    EXPECT_EQ(oracle_phase({0, 2, 4}, {1, 2, 3}, 5), 1);
    std::mt19937_64 rng(40);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_secret(5, 3, rng()), s = random_secret(5, 3, rng());
        ASSERT_EQ(oracle_phase(x, s, 5), hamming_distance(x, s) % 2 ? -1 : 1);
    }
    EXPECT_THROW(oracle_phase({5}, {1}, 5), std::invalid_argument);
    EXPECT_THROW(oracle_phase({1, 1}, {1}, 5), std::invalid_argument);
}

TEST(Qft, TwoIsHadamard) {
    const Eigen::MatrixXcd q = qft_qudit(2);
    const double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(q(0, 0) - h), 0, 1e-15);
    EXPECT_NEAR(std::abs(q(1, 1) + h), 0, 1e-15);
}

TEST(Qft, FirstColumnUniformAndUnitary) {
    for (int k : {3, 5, 8, 13}) {
        const Eigen::MatrixXcd q = qft_qudit(k);
        for (int a = 0; a < k; ++a) {
            ASSERT_NEAR(std::abs(q(a, 0) - 1 / std::sqrt(double(k))), 0, 1e-15);
        }
        ASSERT_LT((q * q.adjoint() - Eigen::MatrixXcd::Identity(k, k)).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_THROW(qft_qudit(1), std::invalid_argument);
}

TEST(PositionDiffusion, IsPhaseOnUniformState) {
    const int k = 6;
    const double beta = 0.77;
    const Eigen::MatrixXcd d = position_diffusion(k, beta);
    const Eigen::VectorXcd u = Eigen::VectorXcd::Constant(k, 1 / std::sqrt(double(k)));
    const Eigen::MatrixXcd expected =
        Eigen::MatrixXcd::Identity(k, k) - (1.0 - std::polar(1.0, -beta)) * u * u.adjoint();
    EXPECT_LT((d - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Instance, ValidationAndIndexing) {
    EXPECT_THROW(HammingInstance(4, {1}), NotImplementedError);
    EXPECT_THROW(HammingInstance(2, {1}), NotImplementedError);
    EXPECT_THROW(HammingInstance(1, {0}), std::invalid_argument);
    EXPECT_THROW(HammingInstance(5, {5}), std::invalid_argument);
    EXPECT_THROW(HammingInstance(5, {}), std::invalid_argument);
    EXPECT_THROW(HammingInstance(5, std::vector<int>(9, 0)), ResourceLimitError);  // 5^9 > 2^20
    const HammingInstance h(5, {3, 1});
    EXPECT_EQ(h.dimension(), 25u);
    EXPECT_EQ(h.index_of({3, 1}), 16u);
    EXPECT_EQ(h.digits_of(16), (std::vector<int>{3, 1}));
}

TEST(Digits, ParseAndFormat) {
    EXPECT_EQ(parse_digits("3,1"), (std::vector<int>{3, 1}));
    EXPECT_EQ(format_digits({0, 4, 2}), "0,4,2");
    EXPECT_THROW(parse_digits("3,x"), std::invalid_argument);
    EXPECT_THROW(parse_digits(""), std::invalid_argument);
    EXPECT_EQ(random_secret(7, 4, 99), random_secret(7, 4, 99));
}

TEST(Identify, SinglePositionIsPlainSearch) {
    const HammingResult r = identify_secret(HammingInstance(5, {3}));
    EXPECT_EQ(r.recovered, (std::vector<int>{3}));
    EXPECT_GT(r.secret_mass, kCertifiedThreshold);
}

TEST(Identify, QueryCountFollowsLowerBound) {
    const HammingResult r = identify_secret(HammingInstance(7, {6, 0}));
    const int k_iter = static_cast<int>(std::ceil(k_lower(kPi, SearchSpec::from_fraction(1.0 / 7)))) + 1;
    EXPECT_EQ(r.oracle_queries, 2 * k_iter);
    EXPECT_EQ(r.general_phase_queries, 4 * k_iter);
    EXPECT_EQ(r.recovered, (std::vector<int>{6, 0}));
}

TEST(Identify, RegisterStaysAProductState) {
    for (int k : {5, 6}) {
        const HammingPlan plan = hamming_plan(k);
        const State2 single = run_2d(fxr_schedule(plan.solution), SearchSpec::from_fraction(1.0 / k));
        const HammingInstance inst(k, {k - 1, 2});
        const Eigen::VectorXcd full = hamming_final_state(inst, plan);
        for (std::size_t i = 0; i < inst.dimension(); ++i) {
            std::complex<double> expected = 1;
            const auto digits = inst.digits_of(i);
            for (std::size_t p = 0; p < digits.size(); ++p) {
                expected *= digits[p] == inst.secret()[p] ? single.amp_t : single.amp_r / std::sqrt(k - 1.0);
            }
            ASSERT_LT(std::abs(full[static_cast<Eigen::Index>(i)] - expected), 1e-10) << "index " << i;
        }
    }
}

TEST(Identify, DeterministicAcrossSecrets) {
    for (int k : {5, 8}) {
        for (int n : {1, 2, 3}) {
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const auto secret = random_secret(k, n, seed);
                const HammingResult r = identify_secret(HammingInstance(k, secret));
                ASSERT_EQ(r.recovered, secret);
                ASSERT_GT(r.secret_mass, kCertifiedThreshold);
            }
        }
    }
}

}  // namespace
}  // namespace fxr
