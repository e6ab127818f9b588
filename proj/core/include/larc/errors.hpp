// Copyright 2026 The LARC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace larc {

// Short scientific rendering of a double for error messages.
inline std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Input violates a documented precondition or type invariant.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class EigenFailure : public Error {
public:
    using Error::Error;
};

// Principal logarithm undefined: an eigenvalue sits on the -1 branch cut.
class BranchCut : public Error {
public:
    using Error::Error;
};

// Search with an explicit budget ran out. Carries the best value seen.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, double best_value, double best_error)
        : Error(what), best_value_(best_value), best_error_(best_error) {}

    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_value_;
    double best_error_;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

// Newton iterate pinned at j_k = 0 while still away from the target.
class BoundaryHit : public Error {
public:
    using Error::Error;
};

class ChartFailure : public Error {
public:
    using Error::Error;
};

class MembershipRejected : public Error {
public:
    MembershipRejected(const std::string& what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Oracle declines generators that are not single Pauli strings.
class MixedSupport : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace larc
