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
#include "fxr/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "fxr/errors.hpp"

namespace fxr {

Schedule::Schedule(std::vector<Step> steps) : steps_(std::move(steps)) {
}

Schedule &Schedule::oracle(double alpha) {
    steps_.push_back(Step::oracle(alpha));
    return *this;
}

Schedule &Schedule::diffusion(double beta) {
    steps_.push_back(Step::diffusion(beta));
    return *this;
}

Schedule &Schedule::grover(double alpha, double beta) {
    return oracle(alpha).diffusion(beta);
}

Schedule &Schedule::repeat(const Schedule &block, int times) {
    for (int i = 0; i < times; ++i) {
        steps_.insert(steps_.end(), block.steps_.begin(), block.steps_.end());
    }
    return *this;
}

std::size_t Schedule::oracle_count() const {
    return static_cast<std::size_t>(std::count_if(steps_.begin(), steps_.end(), [](const Step &s) {
        return s.kind == Step::Kind::kOracle;
    }));
}

Schedule fxr_schedule(const ParamSolution &solution) {
    Schedule block;
    if (solution.mode == Mode::kAlphaFixed) {
        block.grover(solution.fixed_angle, solution.free_pair.first);
        block.grover(solution.fixed_angle, solution.free_pair.second);
    } else {
        block.grover(solution.free_pair.first, solution.fixed_angle);
        block.grover(solution.free_pair.second, solution.fixed_angle);
    }
    Schedule out;
    out.repeat(block, solution.k);
    return out;
}

State2 run_2d(const Schedule &schedule, const SearchSpec &spec) {
    Eigen::Vector2cd state = spec.initial_state();
    for (const Step &step : schedule.steps()) {
        if (step.kind == Step::Kind::kOracle) {
            state = oracle_matrix(step.angle) * state;
        } else {
            state = diffusion_matrix(step.angle, spec) * state;
        }
    }
    return {state(0), state(1)};
}

StateVector::StateVector(Eigen::VectorXcd amplitudes, std::vector<std::size_t> marked)
    : amplitudes_(std::move(amplitudes)), marked_(std::move(marked)) {
}

double StateVector::marked_mass() const {
    double total = 0;
    for (std::size_t i : marked_) {
        total += std::norm(amplitudes_[static_cast<Eigen::Index>(i)]);
    }
    return total;
}

double StateVector::marked_spread() const {
    if (marked_.empty()) {
        return 0;
    }
    std::complex<double> ref = amplitudes_[static_cast<Eigen::Index>(marked_.front())];
    double spread = 0;
    for (std::size_t i : marked_) {
        spread = std::max(spread, std::abs(amplitudes_[static_cast<Eigen::Index>(i)] - ref));
    }
    return spread;
}

StateVector run_full(std::size_t n, std::vector<std::size_t> marked, const Schedule &schedule) {
    if (n > kMaxFullDimension) {
        throw ResourceLimitError("run_full: dimension exceeds 2^22");
    }
    if (n < 2) {
        throw std::invalid_argument("run_full: need at least two elements");
    }
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    if (marked.empty() || marked.size() >= n) {
        throw std::invalid_argument("run_full: need 1 <= |marked| < N");
    }
    if (marked.back() >= n) {
        throw std::invalid_argument("run_full: marked index out of range");
    }

    const auto dim = static_cast<Eigen::Index>(n);
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(dim, amp0);

    for (const Step &step : schedule.steps()) {
        if (step.kind == Step::Kind::kOracle) {
            const std::complex<double> phase = std::polar(1.0, step.angle);
            for (std::size_t i : marked) {
                psi[static_cast<Eigen::Index>(i)] *= phase;
            }
        } else {
            // <psi0|psi> psi0 with psi0 uniform: subtract a multiple of the mean.
            const std::complex<double> overlap = psi.sum() * amp0;
            const std::complex<double> w = 1.0 - std::polar(1.0, -step.angle);
            psi.array() -= w * overlap * amp0;
        }
    }
    return StateVector(std::move(psi), std::move(marked));
}

double success_probability(const ParamSolution &solution, const SearchSpec &spec) {
    return run_2d(fxr_schedule(solution), spec).success();
}

}  // namespace fxr
