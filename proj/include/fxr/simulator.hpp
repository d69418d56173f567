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

// Exact simulation of phase-oracle / phase-diffusion schedules, either on the
// two-dimensional invariant plane or on the full N-element index register.

#ifndef FXR_SIMULATOR_HPP
#define FXR_SIMULATOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fxr/param_solution.hpp"
#include "fxr/phase_ops.hpp"

namespace fxr {

/// Success threshold used for every certification in this project.
inline constexpr double kCertifiedThreshold = 1.0 - 1e-8;

/// Largest index register run_full accepts.
inline constexpr std::size_t kMaxFullDimension = std::size_t{1} << 22;

struct Step {
    enum class Kind { kOracle, kDiffusion };
    Kind kind;
    double angle;

    static Step oracle(double alpha) {
        return {Kind::kOracle, alpha};
    }
    static Step diffusion(double beta) {
        return {Kind::kDiffusion, beta};
    }
};

/// Ordered operator applications, first element applied first.
class Schedule {
   public:
    Schedule() = default;
    explicit Schedule(std::vector<Step> steps);

    Schedule &oracle(double alpha);
    Schedule &diffusion(double beta);
    /// Appends G(alpha, beta) = S_r(beta) S_o(alpha).
    Schedule &grover(double alpha, double beta);
    Schedule &repeat(const Schedule &block, int times);

    const std::vector<Step> &steps() const {
        return steps_;
    }
    std::size_t size() const {
        return steps_.size();
    }
    bool empty() const {
        return steps_.empty();
    }
    std::size_t oracle_count() const;

   private:
    std::vector<Step> steps_;
};

/// The k-fold repetition of the composite fixed-axis step described by `solution`.
Schedule fxr_schedule(const ParamSolution &solution);

/// Amplitudes on (|R>, |T>).
struct State2 {
    std::complex<double> amp_r;
    std::complex<double> amp_t;

    double success() const {
        return std::norm(amp_t);
    }
    double norm() const {
        return std::norm(amp_r) + std::norm(amp_t);
    }
};

State2 run_2d(const Schedule &schedule, const SearchSpec &spec);

class StateVector {
   public:
    StateVector(Eigen::VectorXcd amplitudes, std::vector<std::size_t> marked);

    const Eigen::VectorXcd &amplitudes() const {
        return amplitudes_;
    }
    const std::vector<std::size_t> &marked() const {
        return marked_;
    }
    std::size_t dimension() const {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    double norm() const {
        return amplitudes_.norm();
    }
    /// Total probability on the marked indices.
    double marked_mass() const;
    /// max |a_i - a_j| over marked i, j.
    double marked_spread() const;

   private:
    Eigen::VectorXcd amplitudes_;
    std::vector<std::size_t> marked_;
};

/// Runs `schedule` on the uniform superposition over n indices. The oracle
/// multiplies marked amplitudes by e^{i alpha}; the diffusion applies
/// I - (1 - e^{-i beta}) |psi0><psi0| as a rank-1 update.
StateVector run_full(std::size_t n, std::vector<std::size_t> marked, const Schedule &schedule);

/// |<T| F^k |psi0>|^2 for a solved fixed-axis schedule.
double success_probability(const ParamSolution &solution, const SearchSpec &spec);

}  // namespace fxr

#endif  // FXR_SIMULATOR_HPP
