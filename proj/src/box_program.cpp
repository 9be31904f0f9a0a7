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

#include "pivotforge/box_program.hpp"

#include <algorithm>
#include <string>

#include "pivotforge/error.hpp"

namespace pivotforge
{

Vector AxisDirection::to_vector(std::size_t n) const
{
  Vector v(n);
  v.at(static_cast<std::size_t>(coord - 1)) = scale * Rational(sign);
  return v;
}

ActiveIndexSet::ActiveIndexSet(std::initializer_list<int> rows) : ActiveIndexSet(std::vector<int>(rows)) {}

ActiveIndexSet::ActiveIndexSet(std::vector<int> rows) : rows_(std::move(rows))
{
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

bool ActiveIndexSet::contains(int row) const { return std::binary_search(rows_.begin(), rows_.end(), row); }

void ActiveIndexSet::insert(int row)
{
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
  if (it == rows_.end() || *it != row) {
    rows_.insert(it, row);
  }
}

void ActiveIndexSet::erase(int row)
{
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
  if (it != rows_.end() && *it == row) {
    rows_.erase(it);
  }
}

BoxProgram::BoxProgram(std::size_t n) : lower_(n, Rational(0)), upper_(n, Rational(1)) {}

BoxProgram::BoxProgram(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper))
{
  if (lower_.size() != upper_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "box bounds have different lengths");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw Error(ErrorCode::kInvalidArgument, "degenerate box in coordinate " + std::to_string(i + 1));
    }
  }
}

void BoxProgram::check_length(std::span<const Rational> x) const
{
  if (x.size() != n()) {
    throw Error(ErrorCode::kDimensionMismatch, "point has " + std::to_string(x.size()) + " coordinates, box has " + std::to_string(n()));
  }
}

bool BoxProgram::is_feasible(std::span<const Rational> x) const
{
  check_length(x);
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i] < lower_[i] || x[i] > upper_[i]) {
      return false;
    }
  }
  return true;
}

bool BoxProgram::is_vertex(std::span<const Rational> x) const
{
  check_length(x);
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i] != lower_[i] && x[i] != upper_[i]) {
      return false;
    }
  }
  return true;
}

int BoxProgram::row_of(int coord, bool upper_side) const
{
  return upper_side ? coord : coord + static_cast<int>(n());
}

int BoxProgram::coord_of_row(int row) const
{
  const int nn = static_cast<int>(n());
  return row <= nn ? row : row - nn;
}

int BoxProgram::row_dot_sign(int row, const AxisDirection & d) const
{
  if (coord_of_row(row) != d.coord) {
    return 0;
  }
  const int orientation = row <= static_cast<int>(n()) ? 1 : -1;
  return orientation * d.sign * d.scale.sign();
}

Rational BoxProgram::row_dot(int row, const AxisDirection & d) const
{
  if (coord_of_row(row) != d.coord) {
    return Rational(0);
  }
  const int orientation = row <= static_cast<int>(n()) ? 1 : -1;
  return d.scale * Rational(orientation * d.sign);
}

ActiveIndexSet BoxProgram::eq_set(std::span<const Rational> x) const
{
  if (!is_feasible(x)) {
    throw Error(ErrorCode::kInfeasiblePoint, "point violates a bound");
  }
  std::vector<int> rows;
  for (std::size_t i = 0; i < n(); ++i) {
    const int coord = static_cast<int>(i + 1);
    if (x[i] == upper_[i]) {
      rows.push_back(row_of(coord, true));
    }
    if (x[i] == lower_[i]) {
      rows.push_back(row_of(coord, false));
    }
  }
  return ActiveIndexSet(std::move(rows));
}

Point BoxProgram::vertex_from_bits(std::span<const int> bits) const
{
  if (bits.size() != n()) {
    throw Error(ErrorCode::kDimensionMismatch, "bit vector length does not match the box");
  }
  Point x(n());
  for (std::size_t i = 0; i < n(); ++i) {
    x[i] = bits[i] != 0 ? upper_[i] : lower_[i];
  }
  return x;
}

Point BoxProgram::vertex_from_id(VertexId id) const
{
  Point x(n());
  for (std::size_t i = 0; i < n(); ++i) {
    x[i] = ((id >> i) & 1U) != 0 ? upper_[i] : lower_[i];
  }
  return x;
}

VertexId BoxProgram::vertex_id(std::span<const Rational> x) const
{
  check_length(x);
  VertexId id = 0;
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i] == upper_[i]) {
      id |= VertexId{1} << i;
    } else if (x[i] != lower_[i]) {
      throw Error(ErrorCode::kNotAVertex, "coordinate " + std::to_string(i + 1) + " is not at a bound");
    }
  }
  return id;
}

std::vector<AxisDirection> BoxProgram::edge_directions(std::span<const Rational> x) const
{
  const VertexId id = vertex_id(x);
  std::vector<AxisDirection> out;
  out.reserve(n());
  for (std::size_t i = 0; i < n(); ++i) {
    const bool at_upper = ((id >> i) & 1U) != 0;
    out.push_back(AxisDirection{static_cast<int>(i + 1), at_upper ? -1 : 1, upper_[i] - lower_[i]});
  }
  return out;
}

bool BoxProgram::is_feasible_direction(std::span<const Rational> x, const AxisDirection & d) const
{
  check_length(x);
  const std::size_t i = static_cast<std::size_t>(d.coord - 1);
  const int s = d.sign * d.scale.sign();
  if (s > 0) {
    return x[i] != upper_[i];
  }
  if (s < 0) {
    return x[i] != lower_[i];
  }
  return true;
}

Rational BoxProgram::step_to_boundary(std::span<const Rational> x, const AxisDirection & d) const
{
  if (!is_feasible(x) || !is_feasible_direction(x, d) || d.scale.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "step_to_boundary needs a feasible point and direction");
  }
  const std::size_t i = static_cast<std::size_t>(d.coord - 1);
  const Rational room = d.sign > 0 ? upper_[i] - x[i] : x[i] - lower_[i];
  return room / d.scale;
}

Point add_scaled(std::span<const Rational> x, const Rational & mu, const AxisDirection & d)
{
  Point out(x.begin(), x.end());
  auto & c = out.at(static_cast<std::size_t>(d.coord - 1));
  c += mu * d.scale * Rational(d.sign);
  return out;
}

}  // namespace pivotforge
