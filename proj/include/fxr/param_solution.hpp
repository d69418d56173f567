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

#ifndef FXR_PARAM_SOLUTION_HPP
#define FXR_PARAM_SOLUTION_HPP

#include <string_view>
#include <utility>

namespace fxr {

enum class Mode {
    kAlphaFixed,  ///< oracle phase fixed, diffusion phases (beta1, beta2) free
    kBetaFixed,   ///< diffusion phase fixed, oracle phases (alpha1, alpha2) free
};

std::string_view mode_name(Mode mode);

/// A solved fixed-axis-rotation schedule.
///
/// In alpha-fixed mode `free_pair` is (beta1, beta2) and the composite step is
/// G(alpha, beta2) G(alpha, beta1); in beta-fixed mode it is (alpha1, alpha2)
/// and the step is G(alpha2, beta) G(alpha1, beta). The step is applied k times.
struct ParamSolution {
    Mode mode = Mode::kAlphaFixed;
    double fixed_angle = 0;
    std::pair<double, double> free_pair{0, 0};
    int k = 1;
    double rotation_angle_phi = 0;
    double residual_real = 0;
    double residual_imag = 0;
    double certified_success_prob = 0;
};

}  // namespace fxr

#endif  // FXR_PARAM_SOLUTION_HPP
