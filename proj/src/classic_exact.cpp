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

#include "fxr/classic_exact.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "fxr/errors.hpp"

namespace fxr {
namespace {

constexpr double kPi = std::numbers::pi;

int snapped_ceil(double x) {
    const double r = std::round(x);
    return std::abs(x - r) < 1e-9 ? static_cast<int>(r) : static_cast<int>(std::ceil(x));
}

int snapped_floor(double x) {
    const double r = std::round(x);
    return std::abs(x - r) < 1e-9 ? static_cast<int>(r) : static_cast<int>(std::floor(x));
}

double snapped_asin(double x) {
    if (std::abs(x - 1) < 1e-12) {
        return kPi / 2;
    }
    if (std::abs(x + 1) < 1e-12) {
        return -kPi / 2;
    }
    return std::asin(x);
}

std::complex<double> bss_equation(double a, double b, double gamma, const SearchSpec &spec) {
    using C = std::complex<double>;
    const double sa = std::sin(a / 2), ca = std::cos(a / 2);
    return C(-spec.cos_theta() * sa, ca) * std::cos(gamma) -
           std::polar(1.0, b) * spec.sin_theta() * sa * std::sin(gamma);
}

Eigen::Vector2d bss_residual(const Eigen::Vector2d &p, double gamma, const SearchSpec &spec) {
    const std::complex<double> e = bss_equation(p[0], p[1], gamma, spec);
    return {e.real(), e.imag()};
}

Eigen::Matrix2d bss_jacobian(const Eigen::Vector2d &p, double gamma, const SearchSpec &spec) {
    using C = std::complex<double>;
    const double a = p[0], b = p[1];
    const double sa = std::sin(a / 2), ca = std::cos(a / 2);
    const C da = C(-spec.cos_theta() * ca / 2, -sa / 2) * std::cos(gamma) -
                 std::polar(1.0, b) * spec.sin_theta() * (ca / 2) * std::sin(gamma);
    const C db = -C(0, 1) * std::polar(1.0, b) * spec.sin_theta() * sa * std::sin(gamma);
    Eigen::Matrix2d j;
    j << da.real(), db.real(), da.imag(), db.imag();
    return j;
}

}  // namespace

std::string_view method_name(ClassicMethod method) {
    switch (method) {
        case ClassicMethod::kBigSmallStep:
            return "big-small-step";
        case ClassicMethod::kConjugateRotation:
            return "conjugate-rotation";
        case ClassicMethod::kThreeDRotation:
            return "three-d-rotation";
    }
    return "unknown";
}

ClassicMethod parse_method(std::string_view text) {
    if (text == "bss" || text == "big-small-step") {
        return ClassicMethod::kBigSmallStep;
    }
    if (text == "conj" || text == "conjugate-rotation") {
        return ClassicMethod::kConjugateRotation;
    }
    if (text == "3d" || text == "three-d-rotation") {
        return ClassicMethod::kThreeDRotation;
    }
    throw std::invalid_argument("unknown method: " + std::string(text));
}

double optimal_iterations(const SearchSpec &spec) {
    return kPi / (2 * spec.theta()) - 0.5;
}

ClassicSchedule three_d_rotation_params(const SearchSpec &spec) {
    const double k_opt = optimal_iterations(spec);
    const int k = std::max(1, snapped_ceil(k_opt));
    const double alpha3 = 2 * snapped_asin(std::sin(kPi / (4 * k + 2)) / spec.sqrt_lambda());
    Schedule block;
    block.grover(alpha3, -alpha3);
    return {ClassicMethod::kThreeDRotation, Schedule().repeat(block, k), k_opt, k, {{"alpha3", alpha3}}};
}

ClassicSchedule conjugate_rotation_params(const SearchSpec &spec) {
    const double k_opt = optimal_iterations(spec);
    const int k = std::max(1, snapped_ceil(k_opt));
    const double theta = spec.theta();
    const double arg = std::sin((kPi - theta) / (2 * k)) / spec.sin_theta();
    if (!(std::abs(arg) <= 1 + 1e-12)) {
        std::ostringstream msg;
        msg << "conjugate rotation infeasible at k = " << k << " (arcsine argument " << arg << ")";
        throw InfeasibleScheduleError(msg.str());
    }
    const double alpha2 = 2 * snapped_asin(arg);
    const double beta2 = 2 * std::atan2(std::sin(alpha2 / 2) * spec.cos_theta(), std::cos(alpha2 / 2));
    const double u = (kPi - beta2) / 2;
    Schedule block;
    block.oracle(beta2).diffusion(-alpha2);
    Schedule schedule;
    schedule.oracle(u).repeat(block, k);
    return {ClassicMethod::kConjugateRotation,
            schedule,
            k_opt,
            k,
            {{"alpha2", alpha2}, {"beta2", beta2}, {"u", u}}};
}

double big_small_step_residual(double alpha1, double beta1, int k, const SearchSpec &spec) {
    const double gamma = (2 * k + 1) * spec.theta() / 2;
    return std::abs(bss_equation(alpha1, beta1, gamma, spec));
}

ClassicSchedule big_small_step_params(const SearchSpec &spec) {
    const double k_opt = optimal_iterations(spec);
    const int k = std::max(1, snapped_floor(k_opt));
    const double gamma = (2 * k + 1) * spec.theta() / 2;

    constexpr int kMaxStarts = 32;
    constexpr double kTol = 1e-13;
    int starts = 0;
    double best_residual = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 7 && starts < kMaxStarts; ++i) {
        for (int j = 1; j <= 7 && starts < kMaxStarts; ++j, ++starts) {
            Eigen::Vector2d p(i * kPi / 4, j * kPi / 4);
            Eigen::Vector2d r = bss_residual(p, gamma, spec);
            for (int it = 0; it < 100 && r.norm() > kTol; ++it) {
                const Eigen::Vector2d step = bss_jacobian(p, gamma, spec).completeOrthogonalDecomposition().solve(-r);
                double scale = 1;
                bool improved = false;
                for (int ls = 0; ls < 30; ++ls, scale /= 2) {
                    const Eigen::Vector2d trial = p + scale * step;
                    const Eigen::Vector2d rt = bss_residual(trial, gamma, spec);
                    if (rt.norm() < r.norm()) {
                        p = trial;
                        r = rt;
                        improved = true;
                        break;
                    }
                }
                if (!improved) {
                    break;
                }
            }
            best_residual = std::min(best_residual, r.norm());
            if (r.norm() > 1e-11) {
                continue;
            }
            const double alpha1 = std::remainder(p[0], 4 * kPi);
            const double beta1 = std::remainder(p[1], 2 * kPi);
            Schedule schedule;
            schedule.repeat(Schedule().grover(kPi, kPi), k).oracle(beta1).diffusion(-alpha1);
            if (run_2d(schedule, spec).success() < kCertifiedThreshold) {
                continue;
            }
            return {ClassicMethod::kBigSmallStep, schedule, k_opt, k, {{"alpha1", alpha1}, {"beta1", beta1}}};
        }
    }
    std::ostringstream msg;
    msg << "big-small-step equation did not converge from " << starts << " starts (best residual "
        << best_residual << ", lambda " << spec.lambda() << ", k " << k << ")";
    throw SolverFailure(msg.str());
}

ClassicSchedule classic_params(ClassicMethod method, const SearchSpec &spec) {
    switch (method) {
        case ClassicMethod::kBigSmallStep:
            return big_small_step_params(spec);
        case ClassicMethod::kConjugateRotation:
            return conjugate_rotation_params(spec);
        case ClassicMethod::kThreeDRotation:
            return three_d_rotation_params(spec);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace fxr
