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

#include "larc/oracle.hpp"

#include "larc/errors.hpp"

#include <algorithm>
#include <deque>

namespace larc::oracle {

namespace {

int letter_index(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
        default: throw InvalidArgument(std::string("PauliString: invalid letter '") + c + "'");
    }
}

constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

// sigma_a sigma_b = i^{phase} sigma_c for a, b in {X, Y, Z}, a != b.
struct SiteProduct {
    char letter;
    int phase;
};

SiteProduct site_product(char a, char b) {
    const int ia = letter_index(a);
    const int ib = letter_index(b);
    if (ia == 0) return {b, 0};
    if (ib == 0) return {a, 0};
    if (ia == ib) return {'I', 0};
    const int ic = 6 - ia - ib;
    // Cyclic order X -> Y -> Z gives +i, anti-cyclic gives -i.
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {kLetters[ic], cyclic ? 1 : 3};
}

}  // namespace

PauliString::PauliString(std::string letters, int phase_power)
    : letters_(std::move(letters)), phase_(((phase_power % 4) + 4) % 4) {
    if (letters_.empty()) throw InvalidArgument("PauliString: empty");
    for (char c : letters_) letter_index(c);
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase += 1;
        text.remove_prefix(1);
    }
    return PauliString(std::string(text), phase);
}

std::string PauliString::to_string() const {
    static const char* const prefixes[] = {"+", "+i", "-", "-i"};
    return prefixes[phase_] + letters_;
}

ComplexMatrix PauliString::to_matrix() const {
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    for (char c : letters_) {
        ComplexMatrix s(2, 2);
        switch (c) {
            case 'I': s << 1, 0, 0, 1; break;
            case 'X': s << 0, 1, 1, 0; break;
            case 'Y': s << 0, Complex(0, -1), Complex(0, 1), 0; break;
            default: s << 1, 0, 0, -1; break;
        }
        ComplexMatrix k(m.rows() * 2, m.cols() * 2);
        for (Index r = 0; r < m.rows(); ++r) {
            for (Index col = 0; col < m.cols(); ++col) {
                k.block(2 * r, 2 * col, 2, 2) = m(r, col) * s;
            }
        }
        m = std::move(k);
    }
    static const Complex units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return units[phase_] * m;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (qubits() != other.qubits()) throw DimensionMismatch("PauliString: qubit count mismatch");
    int anti = 0;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        const char a = letters_[k];
        const char b = other.letters_[k];
        if (a != 'I' && b != 'I' && a != b) ++anti;
    }
    return anti % 2 == 0;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
    if (a.qubits() != b.qubits()) throw DimensionMismatch("PauliString: qubit count mismatch");
    std::string letters(a.qubits(), 'I');
    int phase = a.phase_ + b.phase_;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        const auto p = site_product(a.letters_[k], b.letters_[k]);
        letters[k] = p.letter;
        phase += p.phase;
    }
    return PauliString(std::move(letters), phase);
}

std::optional<PauliString> pauli_bracket(const PauliString& p, const PauliString& q) {
    if (p.commutes_with(q)) return std::nullopt;
    return p * q;
}

PauliSpan pauli_closure_dimension(const std::vector<std::vector<PauliString>>& generators) {
    PauliSpan span;
    if (generators.empty()) return span;
    std::size_t q = 0;
    std::vector<std::string> order;
    std::deque<std::string> work;
    for (const auto& support : generators) {
        if (support.size() != 1) {
            throw MixedSupport("pauli_closure_dimension: generator is a sum of " +
                               std::to_string(support.size()) + " strings");
        }
        const auto& s = support.front();
        if (q == 0) q = s.qubits();
        if (s.qubits() != q) throw DimensionMismatch("pauli_closure_dimension: qubit count mismatch");
        if (span.strings.insert(s.letters()).second) {
            order.push_back(s.letters());
            work.push_back(s.letters());
        }
    }
    while (!work.empty()) {
        const PauliString p(work.front());
        work.pop_front();
        // Snapshot: strings discovered now are bracketed when dequeued.
        const std::vector<std::string> current = order;
        for (const auto& other : current) {
            const auto r = pauli_bracket(p, PauliString(other));
            if (!r) continue;
            if (span.strings.insert(r->letters()).second) {
                order.push_back(r->letters());
                work.push_back(r->letters());
            }
        }
    }
    span.dimension = span.strings.size();
    return span;
}

io::Json run_oracle_json(const io::Json& input) {
    if (!input.is_object() || !input.contains("qubits") || !input["qubits"].is_number_integer()) {
        throw ParseError("oracle: missing integer field \"qubits\"");
    }
    const auto q = input["qubits"].get<long long>();
    if (q < 1 || q > 32) throw ParseError("oracle: \"qubits\" out of range");
    if (!input.contains("generators") || !input["generators"].is_array()) {
        throw ParseError("oracle: missing array field \"generators\"");
    }
    std::vector<std::vector<PauliString>> gens;
    for (const auto& g : input["generators"]) {
        if (!g.is_array()) throw ParseError("oracle: each generator must be an array of strings");
        std::vector<PauliString> support;
        for (const auto& s : g) {
            if (!s.is_string()) throw ParseError("oracle: Pauli strings must be JSON strings");
            PauliString p = [&] {
                try {
                    return PauliString::parse(s.get<std::string>());
                } catch (const InvalidArgument& e) {
                    throw ParseError(std::string("oracle: ") + e.what());
                }
            }();
            if (static_cast<long long>(p.qubits()) != q) {
                throw ParseError("oracle: string \"" + s.get<std::string>() + "\" has wrong length");
            }
            support.push_back(std::move(p));
        }
        gens.push_back(std::move(support));
    }
    const auto span = pauli_closure_dimension(gens);
    io::Json out = io::Json::object();
    out["dimension"] = span.dimension;
    out["strings"] = io::Json(std::vector<std::string>(span.strings.begin(), span.strings.end()));
    return out;
}

}  // namespace larc::oracle
