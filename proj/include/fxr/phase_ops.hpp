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

// Oracle S_o(alpha), diffusion S_r(beta) and their products on the invariant
// plane span{|R>, |T>}, with |R> = (1, 0) the uniform unmarked state and
// |T> = (0, 1) the uniform marked state. On the Bloch sphere |R> is the north
// pole and the initial state sits at (sin(theta), 0, cos(theta)).
//
// Every operator is available twice: as a 2x2 matrix built from its
// definition, and as a Rotation built from closed-form half-angle formulas.

#ifndef FXR_PHASE_OPS_HPP
#define FXR_PHASE_OPS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fxr/rotation.hpp"

namespace fxr {

/// Marked fraction lambda = M/N in (0, 1) and the derived angle theta with
/// sqrt(lambda) = sin(theta/2).
template <typename Scalar>
class BasicSearchSpec {
   public:
    static BasicSearchSpec from_fraction(Scalar lambda) {
        if (!(lambda > Scalar(0) && lambda < Scalar(1))) {
            throw std::invalid_argument("marked fraction must lie strictly inside (0, 1)");
        }
        return BasicSearchSpec(lambda);
    }

    static BasicSearchSpec from_counts(std::uint64_t n, std::uint64_t marked) {
        if (marked == 0 || marked >= n) {
            throw std::invalid_argument("need 1 <= marked < N");
        }
        return BasicSearchSpec(Scalar(marked) / Scalar(n));
    }

    Scalar lambda() const {
        return lambda_;
    }
    Scalar theta() const {
        using std::asin;
        return Scalar(2) * asin(sqrt_lambda());
    }
    Scalar sqrt_lambda() const {
        using std::sqrt;
        return sqrt(lambda_);
    }
    Scalar sqrt_complement() const {
        using std::sqrt;
        return sqrt(Scalar(1) - lambda_);
    }
    /// cos(theta) = 1 - 2 lambda.
    Scalar cos_theta() const {
        return Scalar(1) - Scalar(2) * lambda_;
    }
    /// sin(theta) = 2 sqrt(lambda (1 - lambda)).
    Scalar sin_theta() const {
        using std::sqrt;
        return Scalar(2) * sqrt(lambda_ * (Scalar(1) - lambda_));
    }

    Vector3<Scalar> initial_bloch() const {
        return Vector3<Scalar>(sin_theta(), Scalar(0), cos_theta());
    }

    Eigen::Matrix<std::complex<Scalar>, 2, 1> initial_state() const {
        return Eigen::Matrix<std::complex<Scalar>, 2, 1>(sqrt_complement(), sqrt_lambda());
    }

   private:
    explicit BasicSearchSpec(Scalar lambda) : lambda_(lambda) {
    }

    Scalar lambda_;
};

using SearchSpec = BasicSearchSpec<double>;

/// diag(1, e^{i alpha}).
template <typename Scalar>
Unitary2<Scalar> oracle_matrix(Scalar alpha) {
    Unitary2<Scalar> m = Unitary2<Scalar>::Identity();
    m(1, 1) = std::polar(Scalar(1), alpha);
    return m;
}

/// I - (1 - e^{-i beta}) |psi0><psi0| written out entrywise.
template <typename Scalar>
Unitary2<Scalar> diffusion_matrix(Scalar beta, const BasicSearchSpec<Scalar> &spec) {
    using C = std::complex<Scalar>;
    using std::sqrt;
    const C w = C(1) - std::polar(Scalar(1), -beta);
    const Scalar lam = spec.lambda();
    const Scalar off = sqrt(lam * (Scalar(1) - lam));
    Unitary2<Scalar> m;
    m << C(1) - w * (Scalar(1) - lam), -w * off,
         -w * off, C(1) - w * lam;
    return m;
}

/// S_o(alpha) = e^{i alpha/2} R_z(alpha).
template <typename Scalar>
PhasedRotation<Scalar> oracle_rotation(Scalar alpha) {
    using std::cos;
    using std::sin;
    return {alpha / Scalar(2), Rotation<Scalar>(cos(alpha / 2), Vector3<Scalar>(0, 0, sin(alpha / 2)))};
}

/// S_r(beta) = e^{-i beta/2} R_{psi0}(beta), axis (sin theta, 0, cos theta).
template <typename Scalar>
PhasedRotation<Scalar> diffusion_rotation(Scalar beta, const BasicSearchSpec<Scalar> &spec) {
    using std::cos;
    using std::sin;
    const Scalar s = sin(beta / 2);
    return {-beta / Scalar(2), Rotation<Scalar>(cos(beta / 2), s * spec.initial_bloch())};
}

/// Rotation part of G(alpha, beta) = S_r(beta) S_o(alpha).
template <typename Scalar>
Rotation<Scalar> g_rotation(Scalar alpha, Scalar beta, const BasicSearchSpec<Scalar> &spec) {
    using std::cos;
    using std::sin;
    const Scalar ca = cos(alpha / 2), sa = sin(alpha / 2);
    const Scalar cb = cos(beta / 2), sb = sin(beta / 2);
    const Scalar ct = spec.cos_theta(), st = spec.sin_theta();
    return Rotation<Scalar>(cb * ca - sb * sa * ct,
                            Vector3<Scalar>(sb * ca * st, -sb * sa * st, cb * sa + sb * ca * ct));
}

/// Rotation part of F = G(alpha, beta2) G(alpha, beta1), closed form.
template <typename Scalar>
Rotation<Scalar> fxr_alpha_rotation(Scalar alpha, Scalar beta1, Scalar beta2,
                                    const BasicSearchSpec<Scalar> &spec) {
    using std::cos;
    using std::sin;
    const Scalar lam = spec.lambda();
    const Scalar q = Scalar(1) - Scalar(2) * lam;
    const Scalar st = spec.sin_theta();
    const Scalar s1 = sin(beta1 / 2), c1 = cos(beta1 / 2);
    const Scalar s2 = sin(beta2 / 2), c2 = cos(beta2 / 2);
    const Scalar sa = sin(alpha), ca = cos(alpha);
    const Scalar sh2 = sin(alpha / 2) * sin(alpha / 2);
    const Scalar half_sum = (beta1 + beta2) / 2;

    const Scalar c = cos(alpha + half_sum) +
                     Scalar(2) * lam * (sa * sin(half_sum) - Scalar(4) * sh2 * s1 * s2) +
                     Scalar(8) * lam * lam * sh2 * s1 * s2;
    const Scalar x = st * (s1 * c2 + ca * c1 * s2 - q * sa * s1 * s2);
    const Scalar y = st * (-sa * c1 * s2 + Scalar(2) * q * sh2 * s1 * s2);
    const Scalar z = sa * c1 * c2 + q * ca * sin(half_sum) - q * q * sa * s1 * s2;
    return Rotation<Scalar>(c, Vector3<Scalar>(x, y, z));
}

/// Rotation part of F = G(alpha2, beta) G(alpha1, beta), closed form.
template <typename Scalar>
Rotation<Scalar> fxr_beta_rotation(Scalar alpha1, Scalar alpha2, Scalar beta,
                                   const BasicSearchSpec<Scalar> &spec) {
    using std::cos;
    using std::sin;
    const Scalar lam = spec.lambda();
    const Scalar q = Scalar(1) - Scalar(2) * lam;
    const Scalar st = spec.sin_theta();
    const Scalar s1 = sin(alpha1 / 2), c1 = cos(alpha1 / 2);
    const Scalar s2 = sin(alpha2 / 2), c2 = cos(alpha2 / 2);
    const Scalar sb = sin(beta), cb = cos(beta);
    const Scalar shb2 = sin(beta / 2) * sin(beta / 2);
    const Scalar half_sum = (alpha1 + alpha2) / 2;

    const Scalar c = cos(half_sum + beta) +
                     Scalar(2) * lam * (sin(half_sum) * sb - Scalar(4) * s1 * s2 * shb2) +
                     Scalar(8) * lam * lam * s1 * s2 * shb2;
    const Scalar x = st * (c1 * c2 * sb - Scalar(2) * q * c1 * s2 * shb2);
    const Scalar y = st * (-s1 * c2 * sb + Scalar(2) * q * s1 * s2 * shb2);
    const Scalar z = s1 * c2 * cb + c1 * s2 + q * cos(half_sum) * sb -
                     Scalar(2) * q * q * c1 * s2 * shb2;
    return Rotation<Scalar>(c, Vector3<Scalar>(x, y, z));
}

/// sqrt(1-lambda) v_z + sqrt(lambda) v_x; zero iff the axis is equidistant
/// from |T> and |psi0> (the fixed-axis condition).
template <typename Scalar>
Scalar axis_constraint(const Rotation<Scalar> &r, const BasicSearchSpec<Scalar> &spec) {
    return spec.sqrt_complement() * r.v().z() + spec.sqrt_lambda() * r.v().x();
}

}  // namespace fxr

#endif  // FXR_PHASE_OPS_HPP
