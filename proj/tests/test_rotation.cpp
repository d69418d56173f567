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
#include <random>

#include "fxr/rotation.hpp"
#include "test_util.hpp"

namespace fxr {
namespace {

using testing::kPi;
using testing::random_rotation;
using testing::rotation_distance;
using C = std::complex<double>;

Rotationd rz(double a) {
    return rotation_from_axis_angle(Vector3d::UnitZ(), a);
}
Rotationd rx(double a) {
    return rotation_from_axis_angle(Vector3d::UnitX(), a);
}

TEST(AxisAngle, IdentityAndHalfTurn) {
    const Rotationd id = rotation_from_axis_angle(Vector3d::UnitZ(), 0.0);
    EXPECT_DOUBLE_EQ(id.c(), 1.0);
    EXPECT_EQ(id.v(), Vector3d::Zero());
    const Rotationd half = rz(kPi);
    EXPECT_NEAR(half.c(), 0.0, 1e-16);
    EXPECT_NEAR((half.v() - Vector3d::UnitZ()).norm(), 0.0, 1e-16);
}

TEST(AxisAngle, NormalizesAxis) {
    const Rotationd r = rotation_from_axis_angle(Vector3d(2, 0, 0), kPi / 2);
    EXPECT_NEAR(r.c(), std::cos(kPi / 4), 1e-15);
    EXPECT_NEAR(r.v().x(), std::sin(kPi / 4), 1e-15);
    EXPECT_EQ(r.v().y(), 0.0);
    EXPECT_EQ(r.v().z(), 0.0);
}

TEST(AxisAngle, ZeroAxisThrows) {
    EXPECT_THROW(rotation_from_axis_angle(Vector3d::Zero(), 1.0), std::invalid_argument);
}

TEST(Compose, CollinearAnglesAdd) {
    EXPECT_LT(rotation_distance(compose(rz(0.4), rz(1.1)), rz(1.5)), 1e-15);
}

TEST(Compose, IdentityIsNeutral) {
    std::mt19937_64 rng(1);
    const Rotationd r = random_rotation(rng);
    EXPECT_LT(rotation_distance(compose(Rotationd::identity(), r), r), 1e-16);
    EXPECT_LT(rotation_distance(compose(r, Rotationd::identity()), r), 1e-16);
}

TEST(Compose, HalfTurnsAboutXAfterZ) {
    const Rotationd r = compose(rx(kPi), rz(kPi));
    EXPECT_NEAR(r.c(), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.v().y()), 1.0, 1e-15);
    EXPECT_NEAR(r.v().x(), 0.0, 1e-15);
    EXPECT_NEAR(r.v().z(), 0.0, 1e-15);
    // Matrix route: multiply unitaries and decompose.
    const PhasedRotationd m = decompose_unitary<double>(to_unitary(rx(kPi)) * to_unitary(rz(kPi)));
    EXPECT_NEAR(std::abs(m.rotation.v().y()), 1.0, 1e-15);
}

TEST(Compose, MatchesMatrixProductOnRandomRotations) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        const Rotationd a = random_rotation(rng), b = random_rotation(rng);
        const Unitary2d lhs = to_unitary(compose(b, a));
        const Unitary2d rhs = to_unitary(b) * to_unitary(a);
        ASSERT_LT(testing::max_abs_diff(lhs, rhs), 1e-12);
    }
}

TEST(Compose, IsAssociative) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const Rotationd a = random_rotation(rng), b = random_rotation(rng), c = random_rotation(rng);
        ASSERT_LT(rotation_distance(compose(c, compose(b, a)), compose(compose(c, b), a)), 1e-12);
    }
}

TEST(Compose, StaysNormalizedOverLongChains) {
    std::mt19937_64 rng(4);
    Rotationd acc;
    for (int i = 0; i < 100000; ++i) {
        acc = compose(random_rotation(rng), acc);
    }
    EXPECT_LT(acc.norm_defect(), 1e-12);
}

TEST(Power, SmallExponents) {
    std::mt19937_64 rng(5);
    const Rotationd r = random_rotation(rng);
    EXPECT_LT(rotation_distance(power(r, 0), Rotationd::identity()), 1e-15);
    EXPECT_LT(rotation_distance(power(r, 1), r), 1e-15);
    EXPECT_LT(rotation_distance(power(rz(kPi / 3), 3), rz(kPi)), 1e-12);
    EXPECT_THROW(power(r, -1), std::invalid_argument);
}

TEST(Power, MatchesRepeatedComposition) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const Rotationd r = random_rotation(rng);
        Rotationd acc;
        for (int k = 1; k <= 64; ++k) {
            acc = compose(r, acc);
            ASSERT_LT(rotation_distance(power(r, k), acc), 1e-10) << "k=" << k;
        }
    }
}

TEST(Power, OfMinusIdentityAlternatesSign) {
    const Rotationd minus(-1, Vector3d::Zero());
    EXPECT_NEAR(power(minus, 2).c(), 1.0, 1e-15);
    EXPECT_NEAR(power(minus, 3).c(), -1.0, 1e-15);
}

TEST(ToUnitary, ReferenceMatrices) {
    EXPECT_LT(testing::max_abs_diff(to_unitary(Rotationd::identity()), Unitary2d::Identity()), 1e-16);
    const double a = 0.7;
    Unitary2d expected = Unitary2d::Zero();
    expected(0, 0) = std::polar(1.0, -a / 2);
    expected(1, 1) = std::polar(1.0, a / 2);
    EXPECT_LT(testing::max_abs_diff(to_unitary(rz(a)), expected), 1e-15);
    Unitary2d x_half;
    x_half << C(0, 0), C(0, -1), C(0, -1), C(0, 0);
    EXPECT_LT(testing::max_abs_diff(to_unitary(rx(kPi)), x_half), 1e-15);
}

TEST(ToUnitary, IsSpecialUnitary) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const Unitary2d u = to_unitary(random_rotation(rng));
        ASSERT_LT(unitarity_defect(u), 1e-12);
        ASSERT_LT(std::abs(u.determinant() - C(1)), 1e-12);
    }
}

TEST(Decompose, OracleShapedDiagonal) {
    const double a = 1.3;
    Unitary2d u = Unitary2d::Identity();
    u(1, 1) = std::polar(1.0, a);
    const PhasedRotationd d = decompose_unitary(u);
    EXPECT_NEAR(d.global_phase, a / 2, 1e-15);
    EXPECT_LT(rotation_distance(d.rotation, rz(a)), 1e-15);
}

TEST(Decompose, Identity) {
    const PhasedRotationd d = decompose_unitary<double>(Unitary2d::Identity());
    EXPECT_EQ(d.global_phase, 0.0);
    EXPECT_LT(rotation_distance(d.rotation, Rotationd::identity()), 1e-16);
}

TEST(Decompose, RoundTripsRandomRotations) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        Rotationd r = random_rotation(rng);
        if (r.c() < 0) {
            r = Rotationd(-r.c(), -r.v());
        }
        const PhasedRotationd d = decompose_unitary(to_unitary(r));
        ASSERT_NEAR(d.global_phase, 0.0, 1e-12);
        ASSERT_LT(rotation_distance(d.rotation, r), 1e-12);
    }
}

TEST(Decompose, ReconstructsArbitraryUnitaries) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        const double phase = testing::uniform(rng, -10, 10);
        const Unitary2d u = std::polar(1.0, phase) * to_unitary(random_rotation(rng));
        const PhasedRotationd d = decompose_unitary(u);
        ASSERT_GE(d.rotation.c(), 0.0);
        ASSERT_GT(d.global_phase, -kPi - 1e-15);
        ASSERT_LE(d.global_phase, kPi + 1e-15);
        ASSERT_LT(testing::max_abs_diff(std::polar(1.0, d.global_phase) * to_unitary(d.rotation), u), 1e-10);
    }
}

TEST(Decompose, ZeroTraceTieBreak) {
    const Rotationd r(0, Vector3d(-1, 0, 0));
    const PhasedRotationd d = decompose_unitary(to_unitary(r));
    EXPECT_GT(d.rotation.v().x(), 0.0);
    EXPECT_LT(testing::max_abs_diff(std::polar(1.0, d.global_phase) * to_unitary(d.rotation), to_unitary(r)),
              1e-15);

    const Rotationd s(0, Vector3d(0, -0.6, 0.8));
    const PhasedRotationd e = decompose_unitary(to_unitary(s));
    EXPECT_GT(e.rotation.v().y(), 0.0);
}

TEST(Decompose, RejectsNonUnitary) {
    Unitary2d u = Unitary2d::Identity();
    u(0, 1) = 0.1;
    EXPECT_THROW(decompose_unitary(u), std::invalid_argument);
}

TEST(Angle, ClampsAndCoversFullRange) {
    EXPECT_EQ(Rotationd(1 + 1e-15, Vector3d::Zero()).angle(), 0.0);
    EXPECT_NEAR(Rotationd(-1, Vector3d::Zero()).angle(), 2 * kPi, 1e-15);
    EXPECT_NEAR(rz(1e-9).half_angle(), 5e-10, 1e-24);
}

TEST(Generic, WorksWithLongDouble) {
    using R = Rotation<long double>;
    const R a = rotation_from_axis_angle(Vector3<long double>::UnitZ(), 0.3L);
    const R b = rotation_from_axis_angle(Vector3<long double>::UnitZ(), 0.4L);
    EXPECT_NEAR(static_cast<double>(compose(b, a).c()), std::cos(0.35), 1e-15);
}

}  // namespace
}  // namespace fxr
