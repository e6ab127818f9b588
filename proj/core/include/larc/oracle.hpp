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

// Exact Pauli-string arithmetic used as an independent check on the numerical
// Lie closure. Only integer phase bookkeeping; no floating point.

#pragma once

#include "larc/matrix.hpp"
#include "larc/matrix_io.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace larc::oracle {

// phase_power k encodes the scalar i^k, so {+1, +i, -1, -i} = {0, 1, 2, 3}.
class PauliString {
public:
    // Letters over {I, X, Y, Z}; qubit 0 is the leftmost tensor factor.
    explicit PauliString(std::string letters, int phase_power = 0);

    // Accepts an optional sign prefix: "+XZ", "-XZ", "iXZ", "-iXZ".
    static PauliString parse(std::string_view text);

    std::size_t qubits() const noexcept { return letters_.size(); }
    const std::string& letters() const noexcept { return letters_; }
    int phase_power() const noexcept { return phase_; }

    std::string to_string() const;
    ComplexMatrix to_matrix() const;

    bool commutes_with(const PauliString& other) const;

    friend PauliString operator*(const PauliString& a, const PauliString& b);
    friend bool operator==(const PauliString& a, const PauliString& b) = default;

private:
    std::string letters_;
    int phase_;
};

// [P, Q] = PQ - QP. Returns nullopt when P and Q commute; otherwise R with
// [P, Q] = 2 R (R = PQ, phase included).
std::optional<PauliString> pauli_bracket(const PauliString& p, const PauliString& q);

struct PauliSpan {
    std::set<std::string> strings;  // phase-stripped, lexicographic order
    std::size_t dimension = 0;
};

// Closure of the generator strings under pauli_bracket. Each generator is
// given as its string support; a support with more than one string throws
// MixedSupport, since the string span then over-approximates the real span.
PauliSpan pauli_closure_dimension(const std::vector<std::vector<PauliString>>& generators);

// {"qubits": q, "generators": [["XZ"], ...]} -> {"dimension": d, "strings": [...]}.
io::Json run_oracle_json(const io::Json& input);

}  // namespace larc::oracle
