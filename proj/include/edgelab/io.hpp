// Copyright 2026 The edgelab Authors
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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "edgelab/linalg.hpp"

namespace edgelab {

using Json = nlohmann::ordered_json;

/// On-disk form of a BipartiteOperator:
///   {"m": 3, "n": 3, "re": [[...], ...], "im": [[...], ...]}
/// with (m*n) x (m*n) row-major real and imaginary parts. Flat arrays of
/// length (m*n)^2 are accepted on read.
Json matrix_to_json(const BipartiteOperator& s);
BipartiteOperator matrix_from_json(const Json& j);

BipartiteOperator read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BipartiteOperator& s);

Json vector_to_json(const Vector& v);

/// %.17g
std::string format_double(double v);

/// Serializes with every floating point number printed to 17 significant
/// digits. Objects are indented; arrays of scalars stay on one line.
std::string dump_json(const Json& j);

}  // namespace edgelab
