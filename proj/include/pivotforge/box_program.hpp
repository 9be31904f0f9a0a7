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

#ifndef PIVOTFORGE__BOX_PROGRAM_HPP_
#define PIVOTFORGE__BOX_PROGRAM_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "pivotforge/rational.hpp"

namespace pivotforge
{

using Vector = std::vector<Rational>;
using Point = Vector;

/// Little-endian vertex id: bit i-1 of the id is coordinate i.
using VertexId = std::uint64_t;

/// Signed axis direction sign·scale·e^coord. `coord` is 1-based.
struct AxisDirection
{
  int coord = 1;
  int sign = 1;
  Rational scale = Rational(1);

  Vector to_vector(std::size_t n) const;
  friend bool operator==(const AxisDirection &, const AxisDirection &) = default;
};

/// Sorted set of constraint row indices in [1, 2n].
class ActiveIndexSet
{
public:
  ActiveIndexSet() = default;
  ActiveIndexSet(std::initializer_list<int> rows);
  explicit ActiveIndexSet(std::vector<int> rows);

  bool contains(int row) const;
  void insert(int row);
  void erase(int row);
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<int> & rows() const { return rows_; }
  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  friend bool operator==(const ActiveIndexSet &, const ActiveIndexSet &) = default;

private:
  std::vector<int> rows_;
};

/// The box {x : lower <= x <= upper} written as 2n inequality rows: row i is
/// x_i <= upper_i and row i+n is -x_i <= -lower_i, for i in [1, n].
class BoxProgram
{
public:
  /// The unit cube [0,1]^n.
  explicit BoxProgram(std::size_t n);
  BoxProgram(Vector lower, Vector upper);

  std::size_t n() const { return lower_.size(); }
  int row_count() const { return static_cast<int>(2 * n()); }
  /// 1-based coordinate accessors.
  const Rational & lower(int coord) const { return lower_.at(static_cast<std::size_t>(coord - 1)); }
  const Rational & upper(int coord) const { return upper_.at(static_cast<std::size_t>(coord - 1)); }

  bool is_feasible(std::span<const Rational> x) const;
  bool is_vertex(std::span<const Rational> x) const;

  /// Row index (1-based) of the constraint touching coordinate `coord`:
  /// the upper-bound row when `upper_side`, otherwise the lower-bound row.
  int row_of(int coord, bool upper_side) const;
  /// Coordinate (1-based) constrained by a row.
  int coord_of_row(int row) const;
  /// A_row · d for an axis direction.
  Rational row_dot(int row, const AxisDirection & d) const;
  int row_dot_sign(int row, const AxisDirection & d) const;

  /// Throws Error(kInfeasiblePoint).
  ActiveIndexSet eq_set(std::span<const Rational> x) const;

  Point vertex_from_bits(std::span<const int> bits) const;
  Point vertex_from_id(VertexId id) const;
  /// Throws Error(kNotAVertex).
  VertexId vertex_id(std::span<const Rational> x) const;

  /// The n edge directions at a vertex, scaled to reach the neighbour in one
  /// unit step. Throws Error(kNotAVertex).
  std::vector<AxisDirection> edge_directions(std::span<const Rational> x) const;

  /// True iff A_i·d <= 0 for every row tight at x.
  bool is_feasible_direction(std::span<const Rational> x, const AxisDirection & d) const;

  /// Largest μ with x + μd feasible. Requires d feasible at x.
  Rational step_to_boundary(std::span<const Rational> x, const AxisDirection & d) const;

  Point origin() const { return lower_; }

private:
  void check_length(std::span<const Rational> x) const;

  Vector lower_;
  Vector upper_;
};

Point add_scaled(std::span<const Rational> x, const Rational & mu, const AxisDirection & d);

}  // namespace pivotforge

#endif  // PIVOTFORGE__BOX_PROGRAM_HPP_
