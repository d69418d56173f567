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

#ifndef FXR_ERRORS_HPP
#define FXR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fxr {

/// The fixed angle makes 4*asin(sqrt(lambda)*sin(angle/2)) a multiple of pi,
/// so no finite iteration count is guaranteed to work.
class DegenerateAngleError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class IterationCountTooSmall : public std::domain_error {
   public:
    IterationCountTooSmall(const std::string &what, double k_lower) : std::domain_error(what), k_lower_(k_lower) {
    }
    double k_lower() const {
        return k_lower_;
    }

   private:
    double k_lower_;
};

/// A parameter equation has no solution at the requested iteration count.
class InfeasibleScheduleError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Numerical search failed where a solution was expected to exist.
class SolverFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ResourceLimitError : public std::length_error {
   public:
    using std::length_error::length_error;
};

class NotImplementedError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace fxr

#endif  // FXR_ERRORS_HPP
