// Copyright 2026 The pivotforge Authors
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

#ifndef PIVOTFORGE__IO_HPP_
#define PIVOTFORGE__IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pivotforge/box_program.hpp"
#include "pivotforge/engine.hpp"
#include "pivotforge/multipoly.hpp"
#include "pivotforge/structure.hpp"

namespace pivotforge
{

/// Insertion-ordered JSON, so output is byte-stable.
using Json = nlohmann::ordered_json;

/// [{"exponents": [...], "coefficient": "p/q"}, ...] in graded-lex order.
Json polynomial_to_json(const MultiPoly & p);
/// Inverse of polynomial_to_json. Throws Error(kParseError) on bad input.
MultiPoly polynomial_from_json(const Json & j, std::size_t n_vars);

/// Vertex id of a point if it is a vertex of `program`, otherwise null.
Json vertex_id_or_null(const BoxProgram & program, const Point & x);
Json point_to_json(const Point & x);

Json trajectory_to_json(const BoxProgram & program, const Trajectory & t, std::string_view rule);

inline constexpr std::string_view kSummaryCsvHeader = "n,rule,iterations,final_vertex_id,final_value";
/// One CSV row; final_vertex_id is empty when the run did not end at a vertex.
std::string summary_csv_row(std::size_t n, std::string_view rule, const BoxProgram & program, const Trajectory & t);

/// {"<vertex id>": [outgoing coordinates], ...} in increasing id order.
Json orientation_to_json(const Orientation & o);
Json gray_path_to_json(const GrayPath & path);

}  // namespace pivotforge

#endif  // PIVOTFORGE__IO_HPP_
