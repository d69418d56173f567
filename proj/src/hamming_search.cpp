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

#include "fxr/hamming_search.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fxr/errors.hpp"
#include "fxr/fxr_solver.hpp"
#include "fxr/simulator.hpp"

namespace fxr {
namespace {

constexpr double kPi = std::numbers::pi;

void check_alphabet(int alphabet) {
    if (alphabet < 2) {
        throw std::invalid_argument("alphabet size must be at least 2");
    }
    if (alphabet < 5) {
        throw NotImplementedError("alphabet sizes 2, 3 and 4 need a different oracle and are not implemented");
    }
}

void apply_oracle(Eigen::VectorXcd &state, const HammingInstance &instance) {
    for (std::size_t i = 0; i < instance.dimension(); ++i) {
        const auto digits = instance.digits_of(i);
        if (oracle_phase(digits, instance.secret(), instance.alphabet()) < 0) {
            state[static_cast<Eigen::Index>(i)] = -state[static_cast<Eigen::Index>(i)];
        }
    }
}

// Applies the one-qudit operator to every position of the register.
void apply_per_position(Eigen::VectorXcd &state, const Eigen::MatrixXcd &op, int alphabet, int length) {
    const auto k = static_cast<std::size_t>(alphabet);
    const std::size_t dim = static_cast<std::size_t>(state.size());
    Eigen::VectorXcd fiber(alphabet);
    std::size_t stride = dim;
    for (int p = 0; p < length; ++p) {
        stride /= k;
        const std::size_t block = stride * k;
        for (std::size_t base = 0; base < dim; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t a = 0; a < k; ++a) {
                    fiber[static_cast<Eigen::Index>(a)] = state[static_cast<Eigen::Index>(base + off + a * stride)];
                }
                fiber = op * fiber;
                for (std::size_t a = 0; a < k; ++a) {
                    state[static_cast<Eigen::Index>(base + off + a * stride)] = fiber[static_cast<Eigen::Index>(a)];
                }
            }
        }
    }
}

}  // namespace

HammingInstance::HammingInstance(int alphabet, std::vector<int> secret)
    : alphabet_(alphabet), secret_(std::move(secret)), dimension_(1) {
    check_alphabet(alphabet_);
    if (secret_.empty()) {
        throw std::invalid_argument("secret must have at least one position");
    }
    for (int d : secret_) {
        if (d < 0 || d >= alphabet_) {
            throw std::invalid_argument("secret digit outside the alphabet");
        }
        if (dimension_ > kMaxHammingDimension / static_cast<std::size_t>(alphabet_)) {
            std::ostringstream msg;
            msg << "register size " << alphabet_ << "^" << secret_.size() << " exceeds the cap of "
                << kMaxHammingDimension;
            throw ResourceLimitError(msg.str());
        }
        dimension_ *= static_cast<std::size_t>(alphabet_);
    }
}

std::size_t HammingInstance::index_of(const std::vector<int> &digits) const {
    if (digits.size() != secret_.size()) {
        throw std::invalid_argument("string length mismatch");
    }
    std::size_t index = 0;
    for (int d : digits) {
        if (d < 0 || d >= alphabet_) {
            throw std::invalid_argument("digit outside the alphabet");
        }
        index = index * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(d);
    }
    return index;
}

std::vector<int> HammingInstance::digits_of(std::size_t index) const {
    std::vector<int> digits(secret_.size());
    for (std::size_t p = digits.size(); p-- > 0;) {
        digits[p] = static_cast<int>(index % static_cast<std::size_t>(alphabet_));
        index /= static_cast<std::size_t>(alphabet_);
    }
    return digits;
}

std::vector<int> random_secret(int alphabet, int length, std::uint64_t seed) {
    if (alphabet < 1 || length < 1) {
        throw std::invalid_argument("alphabet and length must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, alphabet - 1);
    std::vector<int> out(static_cast<std::size_t>(length));
    for (int &d : out) {
        d = digit(rng);
    }
    return out;
}

std::vector<int> parse_digits(const std::string &text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("malformed digit list: " + text);
        }
        if (used != item.size()) {
            throw std::invalid_argument("malformed digit list: " + text);
        }
        out.push_back(value);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty digit list");
    }
    return out;
}

std::string format_digits(const std::vector<int> &digits) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(digits[i]);
    }
    return out;
}

int hamming_distance(const std::vector<int> &x, const std::vector<int> &y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("string length mismatch");
    }
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d += x[i] != y[i];
    }
    return d;
}

int oracle_phase(const std::vector<int> &x, const std::vector<int> &secret, int alphabet) {
    for (const auto *s : {&x, &secret}) {
        for (int d : *s) {
            if (d < 0 || d >= alphabet) {
                throw std::invalid_argument("digit outside the alphabet");
            }
        }
    }
    return hamming_distance(x, secret) % 2 == 0 ? 1 : -1;
}

Eigen::MatrixXcd qft_qudit(int k) {
    if (k < 2) {
        throw std::invalid_argument("qft_qudit needs k >= 2");
    }
    Eigen::MatrixXcd q(k, k);
    const double norm = 1 / std::sqrt(static_cast<double>(k));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            q(a, b) = std::polar(norm, 2 * kPi * ((a * b) % k) / k);
        }
    }
    return q;
}

Eigen::MatrixXcd position_diffusion(int k, double beta) {
    const Eigen::MatrixXcd q = qft_qudit(k);
    Eigen::VectorXcd diag = Eigen::VectorXcd::Ones(k);
    diag[0] = std::polar(1.0, -beta);
    return q * diag.asDiagonal() * q.adjoint();
}

HammingPlan hamming_plan(int alphabet) {
    check_alphabet(alphabet);
    const SearchSpec spec = SearchSpec::from_fraction(1.0 / alphabet);
    const int k_iter = static_cast<int>(std::ceil(k_lower(kPi, spec))) + 1;
    HammingPlan plan{solve_free_pair(kPi, spec, Mode::kAlphaFixed, k_iter), k_iter, 0, 0};
    plan.phase_oracle_calls = static_cast<int>(fxr_schedule(plan.solution).oracle_count());
    plan.general_phase_calls = 2 * plan.phase_oracle_calls;
    return plan;
}

Eigen::VectorXcd hamming_final_state(const HammingInstance &instance, const HammingPlan &plan) {
    const auto dim = static_cast<Eigen::Index>(instance.dimension());
    Eigen::VectorXcd state = Eigen::VectorXcd::Constant(dim, 1 / std::sqrt(static_cast<double>(dim)));
    const Schedule schedule = fxr_schedule(plan.solution);
    for (const Step &step : schedule.steps()) {
        if (step.kind == Step::Kind::kOracle) {
            if (step.angle != kPi) {
                throw std::invalid_argument("the distance-parity oracle realizes phase pi only");
            }
            apply_oracle(state, instance);
        } else {
            apply_per_position(state, position_diffusion(instance.alphabet(), step.angle), instance.alphabet(),
                               instance.length());
        }
    }
    return state;
}

HammingResult identify_secret(const HammingInstance &instance) {
    HammingPlan plan = hamming_plan(instance.alphabet());
    const Eigen::VectorXcd state = hamming_final_state(instance, plan);
    Eigen::Index best = 0;
    state.cwiseAbs2().maxCoeff(&best);
    HammingResult out;
    out.recovered = instance.digits_of(static_cast<std::size_t>(best));
    out.oracle_queries = plan.phase_oracle_calls;
    out.general_phase_queries = plan.general_phase_calls;
    out.secret_mass = std::norm(state[static_cast<Eigen::Index>(instance.index_of(instance.secret()))]);
    out.plan = std::move(plan);
    return out;
}

}  // namespace fxr
