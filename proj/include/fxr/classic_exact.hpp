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

// Earlier exact-search constructions used as baselines and as independent
// checks of the simulator.

#ifndef FXR_CLASSIC_EXACT_HPP
#define FXR_CLASSIC_EXACT_HPP

#include <map>
#include <string>
#include <string_view>

#include "fxr/phase_ops.hpp"
#include "fxr/simulator.hpp"

namespace fxr {

enum class ClassicMethod { kBigSmallStep, kConjugateRotation, kThreeDRotation };

std::string_view method_name(ClassicMethod method);
/// Accepts "bss", "conj", "3d" and the long names returned by method_name.
ClassicMethod parse_method(std::string_view text);

struct ClassicSchedule {
    ClassicMethod method;
    Schedule schedule;
    double k_opt;
    int k_used;
    /// Named phase parameters, e.g. {"alpha3": ...} or {"alpha1", "beta1"}.
    std::map<std::string, double> params;
};

/// pi / (2 theta) - 1/2, the fractional optimal Grover iteration count.
double optimal_iterations(const SearchSpec &spec);

/// k = ceil(k_opt); k rounds of G(a, -a) with sin(pi/(4k+2)) = sin(a/2) sqrt(lambda).
ClassicSchedule three_d_rotation_params(const SearchSpec &spec);

/// k = ceil(k_opt); oracle prefix S_o(u) followed by k rounds of
/// (oracle beta2, diffusion -alpha2). Throws InfeasibleScheduleError if the
/// defining arcsine has no real solution.
ClassicSchedule conjugate_rotation_params(const SearchSpec &spec);

/// k = floor(k_opt) plain Grover rounds followed by one tuned step
/// (oracle beta1, diffusion -alpha1). Throws SolverFailure if no start
/// converges.
ClassicSchedule big_small_step_params(const SearchSpec &spec);

ClassicSchedule classic_params(ClassicMethod method, const SearchSpec &spec);

/// Residual |E(alpha1, beta1)| of the big-small-step equation in the form
/// multiplied through by sin(alpha1/2) sin((2k+1) theta/2).
double big_small_step_residual(double alpha1, double beta1, int k, const SearchSpec &spec);

}  // namespace fxr

#endif  // FXR_CLASSIC_EXACT_HPP
