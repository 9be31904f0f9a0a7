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

#include "pivotforge/io.hpp"

#include <stdexcept>

#include "pivotforge/error.hpp"

namespace pivotforge
{

Json polynomial_to_json(const MultiPoly & p)
{
  Json out = Json::array();
  for (const auto & [exps, coef] : p.terms()) {
    Json e = Json::array();
    for (auto v : exps) {
      e.push_back(static_cast<int>(v));
    }
    out.push_back(Json{{"exponents", e}, {"coefficient", coef.to_string()}});
  }
  return out;
}

MultiPoly polynomial_from_json(const Json & j, std::size_t n_vars)
{
  if (!j.is_array()) {
    throw Error(ErrorCode::kParseError, "polynomial JSON must be an array of terms");
  }
  MultiPoly p(n_vars);
  for (const auto & term : j) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coefficient") ||
        !term["exponents"].is_array() || !term["coefficient"].is_string()) {
      throw Error(ErrorCode::kParseError, "each term needs 'exponents' (array) and 'coefficient' (string)");
    }
    if (term["exponents"].size() != n_vars) {
      throw Error(ErrorCode::kParseError, "exponent vector has the wrong length");
    }
    Exponents e;
    for (const auto & v : term["exponents"]) {
      if (!v.is_number_unsigned() || v.get<unsigned>() > 255) {
        throw Error(ErrorCode::kParseError, "exponents must be integers in [0, 255]");
      }
      e.push_back(static_cast<std::uint8_t>(v.get<unsigned>()));
    }
    try {
      p.add_term(e, Rational::parse(term["coefficient"].get<std::string>()));
    } catch (const std::invalid_argument & ex) {
      throw Error(ErrorCode::kParseError, ex.what());
    }
  }
  return p;
}

Json vertex_id_or_null(const BoxProgram & program, const Point & x)
{
  if (!program.is_vertex(x)) {
    return nullptr;
  }
  return program.vertex_id(x);
}

Json point_to_json(const Point & x)
{
  Json out = Json::array();
  for (const auto & v : x) {
    out.push_back(v.to_string());
  }
  return out;
}

namespace
{

Json rows_to_json(const ActiveIndexSet & rows) { return Json(rows.rows()); }

template <typename T>
Json optional_json(const std::optional<T> & v)
{
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json trajectory_to_json(const BoxProgram & program, const Trajectory & t, std::string_view rule)
{
  Json records = Json::array();
  for (const auto & rec : t.records) {
    Json r;
    r["index"] = rec.index;
    r["vertex_id"] = vertex_id_or_null(program, rec.x_after);
    r["x"] = point_to_json(rec.x_after);
    r["active"] = rows_to_json(rec.active_after);
    r["direction"] = rec.direction ? Json{{"coord", rec.direction->coord}, {"sign", rec.direction->sign}} : Json(nullptr);
    r["removed_row"] = optional_json(rec.removed_row);
    r["mu"] = rec.step ? Json(rec.step->to_string()) : Json(nullptr);
    r["added_row"] = optional_json(rec.added_row);
    r["value"] = rec.value_after.to_string();
    if (rec.stop_reason) {
      r["stop_reason"] = std::string(to_string(*rec.stop_reason));
    }
    records.push_back(std::move(r));
  }
  Json out;
  out["n"] = program.n();
  out["rule"] = std::string(rule);
  out["start"] = Json{
    {"vertex_id", vertex_id_or_null(program, t.start)},
    {"x", point_to_json(t.start)},
    {"active", rows_to_json(program.eq_set(t.start))},
    {"value", t.start_value.to_string()}};
  out["records"] = std::move(records);
  out["iterations"] = t.iterations();
  out["outcome"] = std::string(to_string(t.outcome));
  if (t.error) {
    out["error"] = std::string(to_string(*t.error));
  }
  return out;
}

std::string summary_csv_row(std::size_t n, std::string_view rule, const BoxProgram & program, const Trajectory & t)
{
  const Json id = vertex_id_or_null(program, t.final_point());
  return std::to_string(n) + "," + std::string(rule) + "," + std::to_string(t.iterations()) + "," +
         (id.is_null() ? std::string() : std::to_string(id.get<VertexId>())) + "," + t.final_value().to_string();
}

Json orientation_to_json(const Orientation & o)
{
  Json out = Json::object();
  for (VertexId v = 0; v < o.vertex_count(); ++v) {
    out[std::to_string(v)] = o.outgoing(v);
  }
  return out;
}

Json gray_path_to_json(const GrayPath & path) { return Json(path.vertices); }

}  // namespace pivotforge
