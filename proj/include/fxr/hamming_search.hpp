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

// Exact recovery of a secret string s over the alphabet {0, ..., k-1} from a
// Hamming-distance parity oracle. Each oracle call multiplies |x> by
// (-1)^{dist(x, s)}, which factorizes into a per-position phase flip on the
// digit s_i. With per-position phase diffusion the register stays a product
// of n identical single-qudit searches with one marked digit in k, so a
// fixed-axis schedule at lambda = 1/k and oracle phase pi finds every digit
// with certainty at the same time.

#ifndef FXR_HAMMING_SEARCH_HPP
#define FXR_HAMMING_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fxr/param_solution.hpp"

namespace fxr {

/// Largest register (k^n) the search simulates.
inline constexpr std::size_t kMaxHammingDimension = std::size_t{1} << 20;

class HammingInstance {
   public:
    /// Throws NotImplementedError for alphabets 2..4, ResourceLimitError when
    /// k^n exceeds the cap, invalid_argument for other malformed input.
    HammingInstance(int alphabet, std::vector<int> secret);

    int alphabet() const {
        return alphabet_;
    }
    int length() const {
        return static_cast<int>(secret_.size());
    }
    const std::vector<int> &secret() const {
        return secret_;
    }
    std::size_t dimension() const {
        return dimension_;
    }
    /// Register index of a string; position 0 is the most significant digit.
    std::size_t index_of(const std::vector<int> &digits) const;
    std::vector<int> digits_of(std::size_t index) const;

   private:
    int alphabet_;
    std::vector<int> secret_;
    std::size_t dimension_;
};

/// Uniformly random secret from a seeded generator.
std::vector<int> random_secret(int alphabet, int length, std::uint64_t seed);

/// "3,1" <-> {3, 1}.
std::vector<int> parse_digits(const std::string &text);
std::string format_digits(const std::vector<int> &digits);

int hamming_distance(const std::vector<int> &x, const std::vector<int> &y);

/// (-1)^{dist(x, s)}. Throws invalid_argument on length or alphabet mismatch.
int oracle_phase(const std::vector<int> &x, const std::vector<int> &secret, int alphabet);

/// Entry (a, b) = exp(2 pi i a b / k) / sqrt(k).
Eigen::MatrixXcd qft_qudit(int k);

/// QFT diag(e^{-i beta}, 1, ..., 1) QFT^dagger on one position.
Eigen::MatrixXcd position_diffusion(int k, double beta);

struct HammingPlan {
    ParamSolution solution;  ///< alpha-fixed at pi, lambda = 1/k
    int k_iter;
    int phase_oracle_calls;    ///< 2 k_iter
    int general_phase_calls;   ///< cost if every oracle call realized a general phase (2x)
};

/// Solves the fixed-axis schedule for alphabet size k with k_iter = ceil(k_lower) + 1.
HammingPlan hamming_plan(int alphabet);

/// Register state after the full schedule, before measurement.
Eigen::VectorXcd hamming_final_state(const HammingInstance &instance, const HammingPlan &plan);

struct HammingResult {
    std::vector<int> recovered;
    int oracle_queries;
    int general_phase_queries;
    double secret_mass;
    HammingPlan plan;
};

/// Runs the schedule and measures by taking the most probable string.
HammingResult identify_secret(const HammingInstance &instance);

}  // namespace fxr

#endif  // FXR_HAMMING_SEARCH_HPP
