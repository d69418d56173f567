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

// Solver for the free phase pair of a fixed-axis-rotation (FXR) schedule.
//
// With one phase fixed, the composite step F = G(.,.) G(.,.) is a Bloch
// rotation whose axis must be equidistant from |T> and |psi0> for F^k to move
// |psi0> straight to |T>. That constraint ties the two free phases together
// along a continuous curve y = f(x). Along the curve the half rotation angle
// g(x) starts at 0 (F = identity) and reaches at least phi0, so once
// pi/k <= phi0 there is a point where k rotations land exactly on |T>. The
// solver follows that argument constructively: trace f, find the identity
// point, bracket g = pi/k, then bisect the remaining real-part equation.
//
// Traced variable x and dependent y per mode:
//   alpha-fixed: x = beta1, y = beta2
//   beta-fixed:  x = alpha2, y = alpha1

#ifndef FXR_FXR_SOLVER_HPP
#define FXR_FXR_SOLVER_HPP

#include <vector>

#include "fxr/param_solution.hpp"
#include "fxr/phase_ops.hpp"
#include "fxr/rotation.hpp"

namespace fxr {

inline constexpr int kDefaultGridPoints = 4096;

/// pi / |4 asin(sqrt(lambda) sin(fixed/2)) reduced into [-pi/2, pi/2]|.
/// Throws DegenerateAngleError when the reduced value is 0 (within 1e-14).
double k_lower(double fixed_angle, const SearchSpec &spec);

/// phi' with sin(phi') = sqrt(lambda) sin(fixed/2).
double phi_prime(double fixed_angle, const SearchSpec &spec);

/// phi0 = arccos|cos(4 phi')|, the guaranteed reach of g along the curve.
double phi_zero(double fixed_angle, const SearchSpec &spec);

/// Rotation of the composite step at traced value x and dependent value y.
Rotationd step_rotation(Mode mode, double fixed_angle, double x, double y, const SearchSpec &spec);

struct CurvePoint {
    double x;
    double y;
};

/// One continuous branch of the axis constraint, sampled on [-pi, pi].
class CurveF {
   public:
    CurveF(Mode mode, double fixed_angle, const SearchSpec &spec, std::vector<CurvePoint> samples,
           int branch_offset, double grid_step);

    Mode mode() const {
        return mode_;
    }
    double fixed_angle() const {
        return fixed_angle_;
    }
    const SearchSpec &spec() const {
        return spec_;
    }
    /// Anchored samples, sorted by x, including refinement points.
    const std::vector<CurvePoint> &samples() const {
        return samples_;
    }
    /// Multiple of 2*pi added so the branch passes through the identity point.
    int branch_offset() const {
        return branch_offset_;
    }
    double grid_step() const {
        return grid_step_;
    }

    /// The branch value at x, exact to rounding (the sample grid only picks
    /// the 2*pi representative).
    double operator()(double x) const;

    /// Principal value of the dependent angle, in (-pi, pi].
    double raw(double x) const;

    /// Analytic derivative dy/dx of the constraint solution through x.
    double slope(double x) const;

    /// Largest |y_{i+1} - y_i| over adjacent samples.
    double max_adjacent_jump() const;

    Rotationd rotation_at(double x) const {
        return step_rotation(mode_, fixed_angle_, x, (*this)(x), spec_);
    }

    /// Half rotation angle phi/2 in [0, pi] of the step on the curve.
    double g(double x) const {
        return rotation_at(x).half_angle();
    }

   private:
    Mode mode_;
    double fixed_angle_;
    SearchSpec spec_;
    std::vector<CurvePoint> samples_;
    int branch_offset_;
    double grid_step_;
};

/// Samples the constraint curve on a uniform grid, refines near steep or
/// jumping segments, removes 2*pi jumps of the principal value and anchors
/// the branch so that the step rotation is +identity somewhere on it.
CurveF trace_curve(double fixed_angle, const SearchSpec &spec, Mode mode,
                   int grid_points = kDefaultGridPoints);

/// x' where the step rotation is the identity (g = 0). Throws SolverFailure
/// if no point with 1 - c < 1e-12 is found.
double locate_identity_point(const CurveF &curve);

struct GCurve {
    std::vector<CurvePoint> samples;
    double phi0;
    double identity_x;
    double far_x;
};

/// phi/2 = g(x) along the curve; samples include the identity point and x''.
GCurve trace_g(const CurveF &curve);

/// Free pair for which k applications of the composite step send |psi0> to
/// |T>. Requires k > k_lower; throws IterationCountTooSmall otherwise,
/// SolverFailure if the bracketing breaks down.
ParamSolution solve_free_pair(double fixed_angle, const SearchSpec &spec, Mode mode, int k,
                              int grid_points = kDefaultGridPoints);

/// Left-hand side of the imaginary-part equation in explicit form.
double imag_equation(Mode mode, double fixed_angle, double first, double second, const SearchSpec &spec);

/// Left-hand side of the real-part equation in explicit form.
double real_equation(Mode mode, double fixed_angle, double first, double second, int k, const SearchSpec &spec);

struct Residuals {
    double real;
    double imag;
};

/// Absolute values of both explicit equations at the solution's free pair.
Residuals residuals(const ParamSolution &solution, const SearchSpec &spec);

}  // namespace fxr

#endif  // FXR_FXR_SOLVER_HPP
