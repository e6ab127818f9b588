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

#include "larc/matrix_io.hpp"

#include "larc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace larc::io {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

void dump_into(std::string& out, const Json& j, int indent, int depth) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(key).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(out, value, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
                return e.is_primitive() || (e.is_array() && e.size() <= 2 &&
                                            std::all_of(e.begin(), e.end(),
                                                        [](const Json& x) { return x.is_primitive(); }));
            });
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += flat ? ", " : ",";
                first = false;
                if (!flat) newline(depth + 1);
                dump_into(out, value, flat ? -1 : indent, depth + 1);
            }
            if (!flat) newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

double finite_number(const Json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(what) + ": non-finite number");
    return v;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    Json out = Json::object();
    out["n"] = m.rows();
    out["entries"] = std::move(rows);
    return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix: expected an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("matrix: missing integer field \"n\"");
    }
    const auto n = j["n"].get<long long>();
    if (n < 1 || n > kMaxDimension) throw ParseError("matrix: \"n\" out of range");
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("matrix: missing array field \"entries\"");
    }
    const auto& rows = j["entries"];
    if (static_cast<long long>(rows.size()) != n) {
        throw ParseError("matrix: expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows.size()));
    }
    ComplexMatrix m(n, n);
    for (Index r = 0; r < n; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<long long>(row.size()) != n) {
            throw ParseError("matrix: row " + std::to_string(r) + " is not of length " +
                             std::to_string(n));
        }
        for (Index c = 0; c < n; ++c) {
            const auto& e = row[static_cast<std::size_t>(c)];
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("matrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") must be [re, im]");
            }
            m(r, c) = Complex(finite_number(e[0], "matrix entry"), finite_number(e[1], "matrix entry"));
        }
    }
    return m;
}

std::string dump(const Json& j, int indent) {
    std::string out;
    dump_into(out, j, indent, 0);
    return out;
}

Json parse(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    return matrix_from_json(read_json_file(path));
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
    write_text_file(path, dump(matrix_to_json(m)));
}

}  // namespace larc::io
