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

// JSON encoding of matrices and deterministic report serialization.
//
// Matrix object: {"n": int, "entries": [[[re, im], ...], ...]} row-major.
// Numbers are written with 17 significant digits so values round-trip.

#pragma once

#include "larc/matrix.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace larc::io {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);

// Throws ParseError on non-square, ragged, or non-finite data.
ComplexMatrix matrix_from_json(const Json& j);

// Serializes with floating-point numbers printed as %.17g. Object keys keep
// insertion order, so the output is a pure function of the value.
std::string dump(const Json& j, int indent = 2);

Json parse(const std::string& text, const std::string& origin = "<string>");
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace larc::io
