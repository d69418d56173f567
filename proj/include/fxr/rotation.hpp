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

#ifndef FXR_ROTATION_HPP
#define FXR_ROTATION_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace fxr {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

/// Complex 2x2 matrix in row-major reading order (entries (0,0), (0,1), (1,0), (1,1)).
template <typename Scalar>
using Unitary2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// An SU(2) element stored in Bloch-sphere rotation coordinates.
///
/// For a rotation by angle phi about the unit axis n, `c() == cos(phi/2)` and
/// `v() == sin(phi/2) * n`. The representation is double-cover faithful: the rotation by phi + 2*pi is
/// stored as (-c, -v), i.e. the negated unitary.
template <typename Scalar>
class Rotation {
   public:
    Rotation() : c_(1), v_(Vector3<Scalar>::Zero()) {
    }

    /// Takes (c, v) verbatim. Callers are expected to pass c^2 + |v|^2 == 1.
    Rotation(Scalar c, const Vector3<Scalar> &v) : c_(c), v_(v) {
    }

    static Rotation identity() {
        return Rotation();
    }

    Scalar c() const {
        return c_;
    }
    const Vector3<Scalar> &v() const {
        return v_;
    }

    /// Rotation angle in [0, 2*pi].
    Scalar angle() const {
        using std::acos;
        return Scalar(2) * acos(std::clamp(c_, Scalar(-1), Scalar(1)));
    }

    /// Half the rotation angle, atan2(|v|, c).
    Scalar half_angle() const {
        using std::atan2;
        return atan2(v_.norm(), c_);
    }

    /// Unit rotation axis; +z when the rotation is +-identity.
    Vector3<Scalar> axis() const {
        Scalar n = v_.norm();
        if (n == Scalar(0)) {
            return Vector3<Scalar>::UnitZ();
        }
        return v_ / n;
    }

    Scalar norm_defect() const {
        using std::abs;
        return abs(c_ * c_ + v_.squaredNorm() - Scalar(1));
    }

    bool is_approx(const Rotation &other, Scalar tol) const {
        using std::abs;
        return abs(c_ - other.c_) <= tol && (v_ - other.v_).cwiseAbs().maxCoeff() <= tol;
    }

   private:
    Scalar c_;
    Vector3<Scalar> v_;
};

/// A unitary written as exp(i * global_phase) * to_unitary(rotation).
template <typename Scalar>
struct PhasedRotation {
    Scalar global_phase;
    Rotation<Scalar> rotation;
};

/// Accepts any 3-vector expression, e.g. Vector3d::UnitZ().
template <typename Derived>
Rotation<typename Derived::Scalar> rotation_from_axis_angle(const Eigen::MatrixBase<Derived> &axis,
                                                            typename Derived::Scalar angle) {
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3)
    using Scalar = typename Derived::Scalar;
    using std::cos;
    using std::sin;
    const Vector3<Scalar> a = axis;
    Scalar n = a.norm();
    if (!(n > Scalar(0))) {
        throw std::invalid_argument("rotation_from_axis_angle: zero-length axis");
    }
    return Rotation<Scalar>(cos(angle / 2), (sin(angle / 2) / n) * a);
}

/// Returns the rotation `second * first` (first is applied first).
template <typename Scalar>
Rotation<Scalar> compose(const Rotation<Scalar> &second, const Rotation<Scalar> &first) {
    using std::sqrt;
    const Scalar c1 = first.c();
    const Scalar c2 = second.c();
    const Vector3<Scalar> &v1 = first.v();
    const Vector3<Scalar> &v2 = second.v();
    Scalar c = c1 * c2 - v1.dot(v2);
    Vector3<Scalar> v = c2 * v1 + c1 * v2 + v2.cross(v1);
    Scalar norm2 = c * c + v.squaredNorm();
    using std::abs;
    if (abs(norm2 - Scalar(1)) > Scalar(1e-14)) {
        Scalar s = Scalar(1) / sqrt(norm2);
        c *= s;
        v *= s;
    }
    return Rotation<Scalar>(c, v);
}

/// r^k, evaluated in closed form as the rotation about r's axis by k times r's angle.
template <typename Scalar>
Rotation<Scalar> power(const Rotation<Scalar> &r, long long k) {
    using std::cos;
    using std::sin;
    if (k < 0) {
        throw std::invalid_argument("power: negative exponent");
    }
    Scalar half = r.half_angle();
    Scalar kh = Scalar(k) * half;
    Scalar vn = r.v().norm();
    if (vn == Scalar(0)) {
        // +-identity: the axis is irrelevant, only the sign survives.
        return Rotation<Scalar>(cos(kh), Vector3<Scalar>::Zero());
    }
    return Rotation<Scalar>(cos(kh), (sin(kh) / vn) * r.v());
}

template <typename Scalar>
Unitary2<Scalar> to_unitary(const Rotation<Scalar> &r) {
    using C = std::complex<Scalar>;
    const Scalar c = r.c();
    const Scalar x = r.v().x();
    const Scalar y = r.v().y();
    const Scalar z = r.v().z();
    Unitary2<Scalar> u;
    u << C(c, -z), C(-y, -x),
         C(y, -x), C(c, z);
    return u;
}

template <typename Scalar>
Scalar unitarity_defect(const Unitary2<Scalar> &u) {
    return (u * u.adjoint() - Unitary2<Scalar>::Identity()).cwiseAbs().maxCoeff();
}

/// Splits U into exp(i*phase) * R with R in SU(2).
///
/// The phase is fixed up to pi by det(U); the representative with c > 0 is
/// chosen, and when c == 0 the one whose first nonzero coordinate of v is
/// positive. The returned phase lies in (-pi, pi].
template <typename Scalar>
PhasedRotation<Scalar> decompose_unitary(const Unitary2<Scalar> &u) {
    using C = std::complex<Scalar>;
    using std::abs;
    if (!(unitarity_defect(u) <= Scalar(1e-10))) {
        throw std::invalid_argument("decompose_unitary: matrix is not unitary");
    }
    const Scalar pi = Scalar(EIGEN_PI);
    Scalar phase = std::arg(u.determinant()) / Scalar(2);
    Unitary2<Scalar> m = std::exp(C(0, -phase)) * u;

    Scalar c = (m(0, 0) + m(1, 1)).real() / Scalar(2);
    Vector3<Scalar> v(-(m(0, 1) + m(1, 0)).imag() / Scalar(2),
                      (m(1, 0) - m(0, 1)).real() / Scalar(2),
                      (m(1, 1) - m(0, 0)).imag() / Scalar(2));

    bool flip = c < Scalar(0);
    if (abs(c) <= Scalar(1e-15)) {
        flip = false;
        for (int i = 0; i < 3; ++i) {
            if (abs(v[i]) > Scalar(1e-15)) {
                flip = v[i] < Scalar(0);
                break;
            }
        }
    }
    if (flip) {
        c = -c;
        v = -v;
        phase += pi;
        if (phase > pi) {
            phase -= 2 * pi;
        }
    }
    return {phase, Rotation<Scalar>(c, v)};
}

using Rotationd = Rotation<double>;
using Vector3d = Vector3<double>;
using Unitary2d = Unitary2<double>;
using PhasedRotationd = PhasedRotation<double>;

}  // namespace fxr

#endif  // FXR_ROTATION_HPP
