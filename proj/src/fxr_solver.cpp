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

#include "fxr/fxr_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fxr/errors.hpp"
#include "fxr/simulator.hpp"

namespace fxr {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

constexpr double kRefineJump = 0.1;
constexpr double kRefineMinWidth = 1e-13;
constexpr int kRefineFactor = 16;
constexpr int kRefineMaxDepth = 12;

constexpr double kBisectTol = 1e-13;
constexpr int kMaxIterations = 200;
constexpr double kIdentityTol = 1e-12;
constexpr double kResidualTol = 1e-9;

// Both modes reduce the axis constraint to s*A = c*B with (c, s) the half-angle
// cosine and sine of the dependent variable, and (A, B) linear in
// (cos(x/2), sin(x/2)). dA/dB are derivatives with respect to x.
struct Linear {
    double a, b, da, db;
};

Linear constraint_coefficients(Mode mode, double fixed, double x, const SearchSpec &spec) {
    const double lam = spec.lambda();
    const double q = 1 - 2 * lam;
    const double c = std::cos(x / 2), s = std::sin(x / 2);
    const double sf = std::sin(fixed), cf = std::cos(fixed);
    if (mode == Mode::kAlphaFixed) {
        const double p = q * cf + 2 * lam;
        return {c * cf - s * sf * q, -s * p - c * sf, (-s * cf - c * sf * q) / 2, (-c * p + s * sf) / 2};
    }
    const double p = 2 * lam + q * cf;
    return {-s * q * sf + c * cf, -(s * p + c * sf), (-c * q * sf - s * cf) / 2, -(c * p - s * sf) / 2};
}

// Below this the constraint holds for every dependent value.
constexpr double kDegenerateCoefficients = 1e-13;

// NaN where the dependent value is undetermined.
double principal(Mode mode, double fixed, double x, const SearchSpec &spec) {
    const Linear l = constraint_coefficients(mode, fixed, x, spec);
    if (std::hypot(l.a, l.b) < kDegenerateCoefficients) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::remainder(2 * std::atan2(l.b, l.a), kTwoPi);
}

struct RawSample {
    double x;
    double y;
};

void refine(Mode mode, double fixed, const SearchSpec &spec, RawSample lo, RawSample hi, int depth,
            std::vector<RawSample> &out) {
    // Appends samples strictly after lo, ending with hi.
    if (std::isnan(lo.y) || std::isnan(hi.y) || std::abs(hi.y - lo.y) <= kRefineJump || hi.x - lo.x < kRefineMinWidth || depth >= kRefineMaxDepth) {
        out.push_back(hi);
        return;
    }
    RawSample prev = lo;
    for (int j = 1; j <= kRefineFactor; ++j) {
        RawSample next;
        if (j == kRefineFactor) {
            next = hi;
        } else {
            next.x = lo.x + (hi.x - lo.x) * j / kRefineFactor;
            next.y = principal(mode, fixed, next.x, spec);
        }
        refine(mode, fixed, spec, prev, next, depth + 1, out);
        prev = next;
    }
}

template <typename Fn>
double bisect(Fn &&fn, double lo, double hi) {
    const bool lo_positive = fn(lo) > 0;
    for (int it = 0; it < kMaxIterations && std::abs(hi - lo) >= kBisectTol; ++it) {
        const double mid = (lo + hi) / 2;
        if ((fn(mid) > 0) == lo_positive) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

double golden_minimum(const CurveF &curve, double a, double b) {
    const double ratio = (std::sqrt(5.0) - 1) / 2;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double gc = curve.g(c), gd = curve.g(d);
    for (int it = 0; it < kMaxIterations && b - a > 1e-15; ++it) {
        if (gc < gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - ratio * (b - a);
            gc = curve.g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + ratio * (b - a);
            gd = curve.g(d);
        }
    }
    return (a + b) / 2;
}

// Pair (first, second) in the order of the free_pair field.
std::pair<double, double> to_free_pair(Mode mode, double x, double y) {
    return mode == Mode::kAlphaFixed ? std::pair{x, y} : std::pair{y, x};
}

double reduce_mod_4pi(double angle) {
    double r = std::remainder(angle, 2 * kTwoPi);
    if (r <= -kTwoPi) {
        r += 2 * kTwoPi;
    }
    return r;
}

}  // namespace

std::string_view mode_name(Mode mode) {
    return mode == Mode::kAlphaFixed ? "alpha" : "beta";
}

double phi_prime(double fixed_angle, const SearchSpec &spec) {
    return std::asin(std::clamp(spec.sqrt_lambda() * std::sin(fixed_angle / 2), -1.0, 1.0));
}

double phi_zero(double fixed_angle, const SearchSpec &spec) {
    return std::acos(std::min(1.0, std::abs(std::cos(4 * phi_prime(fixed_angle, spec)))));
}

double k_lower(double fixed_angle, const SearchSpec &spec) {
    if (!(fixed_angle > 0 && fixed_angle < kTwoPi)) {
        throw std::invalid_argument("fixed angle must lie in (0, 2*pi)");
    }
    const double r = std::remainder(4 * phi_prime(fixed_angle, spec), kPi);
    if (std::abs(r) < 1e-14) {
        throw DegenerateAngleError("fixed angle makes the guaranteed rotation reach vanish");
    }
    return kPi / std::abs(r);
}

Rotationd step_rotation(Mode mode, double fixed_angle, double x, double y, const SearchSpec &spec) {
    if (mode == Mode::kAlphaFixed) {
        return fxr_alpha_rotation(fixed_angle, x, y, spec);
    }
    return fxr_beta_rotation(y, x, fixed_angle, spec);
}

CurveF::CurveF(Mode mode, double fixed_angle, const SearchSpec &spec, std::vector<CurvePoint> samples,
               int branch_offset, double grid_step)
    : mode_(mode),
      fixed_angle_(fixed_angle),
      spec_(spec),
      samples_(std::move(samples)),
      branch_offset_(branch_offset),
      grid_step_(grid_step) {
    if (samples_.size() < 2) {
        throw std::invalid_argument("curve needs at least two samples");
    }
}

double CurveF::raw(double x) const {
    return principal(mode_, fixed_angle_, x, spec_);
}

double CurveF::operator()(double x) const {
    auto it = std::upper_bound(samples_.begin(), samples_.end(), x,
                               [](double value, const CurvePoint &p) { return value < p.x; });
    double reference;
    if (it == samples_.begin()) {
        reference = samples_.front().y;
    } else if (it == samples_.end()) {
        reference = samples_.back().y;
    } else {
        const CurvePoint &lo = *(it - 1);
        const CurvePoint &hi = *it;
        const double t = (x - lo.x) / (hi.x - lo.x);
        reference = lo.y + t * (hi.y - lo.y);
    }
    const double y = raw(x);
    if (std::isnan(y)) {
        return reference;
    }
    return y + kTwoPi * std::round((reference - y) / kTwoPi);
}

double CurveF::slope(double x) const {
    const Linear l = constraint_coefficients(mode_, fixed_angle_, x, spec_);
    return 2 * (l.a * l.db - l.b * l.da) / (l.a * l.a + l.b * l.b);
}

double CurveF::max_adjacent_jump() const {
    double jump = 0;
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        jump = std::max(jump, std::abs(samples_[i].y - samples_[i - 1].y));
    }
    return jump;
}

CurveF trace_curve(double fixed_angle, const SearchSpec &spec, Mode mode, int grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("grid_points must be at least 2");
    }
    const double step = kTwoPi / (grid_points - 1);
    std::vector<RawSample> raw;
    raw.reserve(static_cast<std::size_t>(grid_points) + 64);
    RawSample prev{-kPi, principal(mode, fixed_angle, -kPi, spec)};
    raw.push_back(prev);
    for (int i = 1; i < grid_points; ++i) {
        const double x = i == grid_points - 1 ? kPi : -kPi + step * i;
        RawSample next{x, principal(mode, fixed_angle, x, spec)};
        refine(mode, fixed_angle, spec, prev, next, 0, raw);
        prev = next;
    }

    std::vector<CurvePoint> samples;
    samples.reserve(raw.size());
    double offset = 0;
    double last = std::numeric_limits<double>::quiet_NaN();
    for (const RawSample &r : raw) {
        if (std::isnan(r.y)) {
            samples.push_back({r.x, r.y});
            continue;
        }
        if (!std::isnan(last)) {
            const double d = r.y + offset - last;
            if (d > kPi) {
                offset -= kTwoPi;
            } else if (d < -kPi) {
                offset += kTwoPi;
            }
        }
        last = r.y + offset;
        samples.push_back({r.x, last});
    }
    // Undetermined points take the value of the branch next to them.
    const auto valid = std::find_if(samples.begin(), samples.end(), [](const CurvePoint &p) { return !std::isnan(p.y); });
    if (valid == samples.end()) {
        throw SolverFailure("constraint is degenerate along the whole curve");
    }
    double fill = valid->y;
    for (CurvePoint &p : samples) {
        if (std::isnan(p.y)) {
            p.y = fill;
        } else {
            fill = p.y;
        }
    }

    double best_abs = -1;
    double best_c = 0;
    for (const CurvePoint &p : samples) {
        const double c = step_rotation(mode, fixed_angle, p.x, p.y, spec).c();
        if (std::abs(c) > best_abs) {
            best_abs = std::abs(c);
            best_c = c;
        }
    }
    int branch = 0;
    if (best_c < 0) {
        branch = 1;
        for (CurvePoint &p : samples) {
            p.y += kTwoPi;
        }
    }
    return CurveF(mode, fixed_angle, spec, std::move(samples), branch, step);
}

double locate_identity_point(const CurveF &curve) {
    const auto &samples = curve.samples();
    std::size_t best = 0;
    double best_c = -2;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double c = curve.rotation_at(samples[i].x).c();
        if (c > best_c) {
            best_c = c;
            best = i;
        }
    }
    const double lo = samples[best == 0 ? 0 : best - 1].x;
    const double hi = samples[std::min(best + 1, samples.size() - 1)].x;
    double x = golden_minimum(curve, lo, hi);

    // Refine by bisection on the component of v with the largest sign change.
    const Vector3d vlo = curve.rotation_at(lo).v();
    const Vector3d vhi = curve.rotation_at(hi).v();
    int dominant = -1;
    double swing = 0;
    for (int j = 0; j < 3; ++j) {
        if (vlo[j] * vhi[j] < 0 && std::abs(vhi[j] - vlo[j]) > swing) {
            swing = std::abs(vhi[j] - vlo[j]);
            dominant = j;
        }
    }
    if (dominant >= 0) {
        const double polished =
            bisect([&](double t) { return curve.rotation_at(t).v()[dominant]; }, lo, hi);
        if (curve.g(polished) <= curve.g(x)) {
            x = polished;
        }
    }
    if (!(1 - curve.rotation_at(x).c() < kIdentityTol)) {
        std::ostringstream msg;
        msg << "no identity point on the constraint curve (best 1 - c = " << 1 - curve.rotation_at(x).c()
            << ")";
        throw SolverFailure(msg.str());
    }
    return x;
}

GCurve trace_g(const CurveF &curve) {
    GCurve out;
    out.phi0 = phi_zero(curve.fixed_angle(), curve.spec());
    out.identity_x = locate_identity_point(curve);
    out.far_x = std::remainder(-curve.fixed_angle(), kTwoPi);
    out.samples.reserve(curve.samples().size() + 2);
    for (const CurvePoint &p : curve.samples()) {
        out.samples.push_back({p.x, curve.g(p.x)});
    }
    for (double x : {out.identity_x, out.far_x}) {
        auto it = std::lower_bound(out.samples.begin(), out.samples.end(), x,
                                   [](const CurvePoint &p, double value) { return p.x < value; });
        if (it != out.samples.end() && it->x == x) {
            it->y = curve.g(x);
        } else {
            out.samples.insert(it, {x, curve.g(x)});
        }
    }
    return out;
}

ParamSolution solve_free_pair(double fixed_angle, const SearchSpec &spec, Mode mode, int k, int grid_points) {
    const double lower = k_lower(fixed_angle, spec);
    if (!(k > lower * (1 + 1e-12))) {
        std::ostringstream msg;
        msg << "k = " << k << " does not exceed k_lower = " << lower;
        throw IterationCountTooSmall(msg.str(), lower);
    }
    const double target = kPi / k;

    const CurveF curve = trace_curve(fixed_angle, spec, mode, grid_points);
    const double x_id = locate_identity_point(curve);

    double x_far = std::remainder(-fixed_angle, kTwoPi);
    if (!(curve.g(x_far) > target)) {
        double best_g = -1;
        for (const CurvePoint &p : curve.samples()) {
            const double g = curve.g(p.x);
            if (g > best_g) {
                best_g = g;
                x_far = p.x;
            }
        }
        if (!(best_g > target)) {
            std::ostringstream msg;
            msg << "rotation angle along the curve never reaches pi/k (max g = " << best_g
                << ", target = " << target << ")";
            throw SolverFailure(msg.str());
        }
    }

    const double x_reach = bisect([&](double x) { return curve.g(x) - target; }, x_id, x_far);

    const double sl = spec.sqrt_lambda(), sc = spec.sqrt_complement();
    auto landing = [&](double x) {
        const Rotationd r = curve.rotation_at(x);
        const double g = r.half_angle();
        const double vn = r.v().norm();
        const double ny = vn > 0 ? r.v().y() / vn : 0.0;
        return sc * std::cos(k * g) - sl * std::sin(k * g) * ny;
    };
    if (!(landing(x_id) > 0 && landing(x_reach) < 0)) {
        throw SolverFailure("landing condition does not change sign between the identity point and g = pi/k");
    }
    const double x_hat = bisect(landing, x_id, x_reach);
    const double y_hat = curve(x_hat);

    ParamSolution sol;
    sol.mode = mode;
    sol.fixed_angle = fixed_angle;
    sol.k = k;
    const auto pair = to_free_pair(mode, x_hat, reduce_mod_4pi(y_hat));
    sol.free_pair = pair;
    sol.rotation_angle_phi = 2 * step_rotation(mode, fixed_angle, x_hat, y_hat, spec).half_angle();
    const Residuals res = residuals(sol, spec);
    sol.residual_real = res.real;
    sol.residual_imag = res.imag;
    sol.certified_success_prob = success_probability(sol, spec);
    if (!(res.real < kResidualTol && res.imag < kResidualTol && sol.certified_success_prob >= kCertifiedThreshold)) {
        std::ostringstream msg;
        msg << "solution failed certification (real " << res.real << ", imag " << res.imag << ", success "
            << sol.certified_success_prob << ")";
        throw SolverFailure(msg.str());
    }
    return sol;
}

double imag_equation(Mode mode, double fixed_angle, double first, double second, const SearchSpec &spec) {
    const double lam = spec.lambda();
    const double q = 1 - 2 * lam;
    const double s1 = std::sin(first / 2), c1 = std::cos(first / 2);
    const double s2 = std::sin(second / 2), c2 = std::cos(second / 2);
    const double sf = std::sin(fixed_angle), cf = std::cos(fixed_angle);
    if (mode == Mode::kAlphaFixed) {
        return -s1 * s2 * sf * q + s1 * c2 * (q * cf + 2 * lam) + c1 * s2 * cf + c1 * c2 * sf;
    }
    return -s1 * s2 * q * sf + s1 * c2 * cf + c1 * s2 * (2 * lam + q * cf) + c1 * c2 * sf;
}

double real_equation(Mode mode, double fixed_angle, double first, double second, int k, const SearchSpec &spec) {
    const double lam = spec.lambda();
    const double q = 1 - 2 * lam;
    const double s1 = std::sin(first / 2), c1 = std::cos(first / 2);
    const double s2 = std::sin(second / 2), c2 = std::cos(second / 2);
    const double sf = std::sin(fixed_angle), cf = std::cos(fixed_angle);
    Rotationd r = mode == Mode::kAlphaFixed ? fxr_alpha_rotation(fixed_angle, first, second, spec)
                                            : fxr_beta_rotation(first, second, fixed_angle, spec);
    const double half = r.half_angle();
    const double y_part = mode == Mode::kAlphaFixed ? -sf * c1 * s2 + q * (1 - cf) * s1 * s2
                                                    : -s1 * c2 * sf + q * s1 * s2 * (1 - cf);
    return std::sin(half) * std::cos(k * half) - 2 * lam * std::sin(k * half) * y_part;
}

Residuals residuals(const ParamSolution &solution, const SearchSpec &spec) {
    const auto [first, second] = solution.free_pair;
    return {std::abs(real_equation(solution.mode, solution.fixed_angle, first, second, solution.k, spec)),
            std::abs(imag_equation(solution.mode, solution.fixed_angle, first, second, spec))};
}

}  // namespace fxr
