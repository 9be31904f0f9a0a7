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

#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pivotforge/engine.hpp"
#include "pivotforge/error.hpp"
#include "pivotforge/objectives.hpp"
#include "pivotforge/structure.hpp"

using pivotforge::BoxProgram;
using pivotforge::EdgeDirection;
using pivotforge::Error;
using pivotforge::ErrorCode;
using pivotforge::Face;
using pivotforge::LinearObjective;
using pivotforge::LowerBoundPolynomial;
using pivotforge::Orientation;
using pivotforge::Point;
using pivotforge::Rational;
using pivotforge::VertexId;

namespace
{

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

VertexId top(std::size_t n) { return VertexId{1} << (n - 1); }

std::vector<Rational> f_values(std::size_t n)
{
  std::vector<Rational> out;
  const BoxProgram cube(n);
  for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
    out.push_back(pivotforge::f_value(n, cube.vertex_from_id(v)));
  }
  return out;
}

// Independent face scan: faces as base-3 digit strings, sinks found by direct
// value comparison across each free coordinate.
std::size_t reference_sink_count(const std::vector<Rational> & values, std::size_t n, const std::vector<int> & digits)
{
  std::size_t sinks = 0;
  for (VertexId v = 0; v < values.size(); ++v) {
    bool inside = true;
    for (std::size_t k = 0; k < n; ++k) {
      const int bit = static_cast<int>((v >> k) & 1U);
      if (digits[k] != 2 && digits[k] != bit) {
        inside = false;
      }
    }
    if (!inside) {
      continue;
    }
    bool sink = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (digits[k] == 2 && values[v ^ (VertexId{1} << k)] > values[v]) {
        sink = false;
      }
    }
    sinks += sink ? 1 : 0;
  }
  return sinks;
}

}  // namespace

TEST_CASE("pp and s_parity examples")
{
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(pivotforge::pp(n, Point(n, r(1)), 1) == r(1));
  }
  CHECK(pivotforge::pp(3, Point{r(1), r(0), r(0)}, 2) == r(1));
  CHECK(pivotforge::pp(3, Point{r(1), r(0), r(0)}, 3) == r(0));
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(pivotforge::s_parity(3, Point(3, r(0)), k) == 0);
  }
  CHECK(pivotforge::s_parity(3, Point{r(0), r(1), r(1)}, 1) == 0);
  CHECK(pivotforge::s_parity(3, Point{r(0), r(0), r(1)}, 2) == 1);
  CHECK_THROWS_AS(pivotforge::s_parity(2, Point{r(1, 2), r(0)}, 1), Error);
}

TEST_CASE("improving_dimension examples")
{
  CHECK(pivotforge::improving_dimension(3, Point(3, r(0))) == 1U);
  CHECK(pivotforge::improving_dimension(3, Point{r(1), r(0), r(0)}) == 2U);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(!pivotforge::improving_dimension(n, pivotforge::unit_vertex(n, top(n))));
  }
}

TEST_CASE("hamiltonian_path examples")
{
  CHECK(pivotforge::hamiltonian_path(1).vertices == std::vector<VertexId>{0, 1});
  CHECK(pivotforge::hamiltonian_path(2).vertices == std::vector<VertexId>{0, 1, 3, 2});
  // 000, 100, 110, 010, 011, 111, 101, 001 with coordinate 1 as the low bit.
  CHECK(pivotforge::hamiltonian_path(3).vertices == std::vector<VertexId>{0, 1, 3, 2, 6, 7, 5, 4});
}

TEST_CASE("induce_orientation examples")
{
  const auto f2 = pivotforge::induce_orientation(LowerBoundPolynomial(2), 2);
  // Values 0,1,3,2 at ids 0,1,2,3: every edge points toward the higher rank.
  CHECK(f2.outgoing(0) == std::vector<int>{1, 2});
  CHECK(f2.outgoing(1) == std::vector<int>{2});
  CHECK(f2.outgoing(3) == std::vector<int>{1});
  CHECK(f2.outgoing(2).empty());
  CHECK(pivotforge::face_sinks(f2, Face::whole(2)) == std::vector<VertexId>{2});

  const auto lin = pivotforge::induce_orientation(LinearObjective({r(1), r(2)}), 2);
  CHECK(pivotforge::face_sinks(lin, Face::whole(2)) == std::vector<VertexId>{3});

  CHECK_THROWS_AS(pivotforge::induce_orientation(LinearObjective({r(0), r(0)}), 2), Error);
  CHECK_THROWS_AS(pivotforge::induce_orientation(LinearObjective({r(1)}), 2), Error);
}

TEST_CASE("cyclic 2-cube orientation")
{
  // 00 -> 10 -> 11 -> 01 -> 00
  const Orientation cyc(2, {0b01, 0b10, 0b10, 0b01});
  const auto uso = pivotforge::is_uso(cyc);
  CHECK(!uso.ok);
  REQUIRE(uso.witness);
  CHECK(*uso.witness == Face::whole(2));
  CHECK(!pivotforge::is_decomposable(cyc).ok);
  CHECK_THROWS_AS(Orientation(2, {0b01, 0b01, 0b00, 0b00}), Error);
}

TEST_CASE("combed_dimension examples")
{
  const auto f3 = pivotforge::induce_orientation(LowerBoundPolynomial(3), 3);
  CHECK(pivotforge::combed_dimension(f3, Face::whole(3)) == std::vector<int>{3});

  const auto lin = pivotforge::induce_orientation(LinearObjective({r(1), r(1, 2)}), 2);
  CHECK(pivotforge::combed_dimension(lin, Face::whole(2)) == std::vector<int>{1, 2});
}

TEST_CASE("face helpers")
{
  const Face f{3, 0b010, 0b100};
  CHECK(f.pattern() == "0*1");
  CHECK(f.dimension() == 1);
  CHECK(f.support() == std::vector<int>{2});
  CHECK(f.contains(0b110));
  CHECK(!f.contains(0b111));
  std::size_t count = 0;
  std::set<std::string> patterns;
  pivotforge::for_each_face(4, [&](const Face & face) {
    ++count;
    patterns.insert(face.pattern());
  });
  CHECK(count == 81);
  CHECK(patterns.size() == 81);
}

TEST_CASE("sink finder examples")
{
  const BoxProgram cube3(3);
  const auto r3 = pivotforge::sink_find_decomposable(
    [&](VertexId v) { return pivotforge::f_value(3, cube3.vertex_from_id(v)); }, 3);
  CHECK(r3.vertex == 4);
  CHECK(r3.query_count <= 6);

  const auto r1 = pivotforge::sink_find_decomposable([](VertexId v) { return v == 0 ? r(0) : r(5); }, 1);
  CHECK(r1.vertex == 1);
  CHECK(r1.query_count == 2);

  const BoxProgram cube10(10);
  const auto r10 = pivotforge::sink_find_decomposable(
    [&](VertexId v) { return pivotforge::f_value(10, cube10.vertex_from_id(v)); }, 10);
  CHECK(r10.vertex == top(10));
  CHECK(r10.query_count <= 20);
}

TEST_CASE("property: improving dimension is unique and both conditions agree")
{
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto values = f_values(n);
    for (VertexId v = 0; v < values.size(); ++v) {
      const Point x = pivotforge::unit_vertex(n, v);
      const auto a = pivotforge::improving_dimensions_by_gradient(n, x);
      const auto b = pivotforge::improving_dimensions_by_predicates(n, x);
      CHECK(a == b);
      // Brute force: the neighbour whose value is exactly one higher.
      std::vector<std::size_t> up;
      for (std::size_t k = 1; k <= n; ++k) {
        if (values[v ^ (VertexId{1} << (k - 1))] == values[v] + r(1)) {
          up.push_back(k);
        }
      }
      CHECK(a == up);
      CHECK(a.size() == (v == top(n) ? 0U : 1U));
    }
  }
}

TEST_CASE("property: path ranks, Gray code and reflection")
{
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto path = pivotforge::hamiltonian_path(n).vertices;
    const auto values = f_values(n);
    REQUIRE(path.size() == (std::size_t{1} << n));
    for (std::size_t i = 0; i < path.size(); ++i) {
      CHECK(values[path[i]] == r(static_cast<std::int64_t>(i)));
    }
    CHECK(path == pivotforge::reflected_gray_code(n));
    const auto next = pivotforge::hamiltonian_path(n + 1).vertices;
    const std::size_t half = path.size();
    for (std::size_t i = 0; i < half; ++i) {
      CHECK(next[i] == path[i]);
      CHECK(next[half + i] == (path[half - 1 - i] | (VertexId{1} << n)));
    }

    pivotforge::LowestIndexRule rule;
    const BoxProgram cube(n);
    const auto traj = pivotforge::active_set_run(cube, LowerBoundPolynomial(n), cube.origin(), rule);
    std::vector<VertexId> visited;
    for (const auto & p : traj.points()) {
      visited.push_back(cube.vertex_id(p));
    }
    CHECK(visited == path);
  }
}

TEST_CASE("property: F_n orientation is a decomposable USO combed at max(I)")
{
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto values = f_values(n);
    const auto o = pivotforge::induce_orientation(values, n);
    CHECK(pivotforge::is_uso(o).ok);
    CHECK(pivotforge::is_decomposable(o).ok);
    pivotforge::for_each_face(n, [&](const Face & face) {
      if (face.dimension() > 0) {
        const auto combed = pivotforge::combed_dimension(o, face);
        CHECK(std::find(combed.begin(), combed.end(), face.support().back()) != combed.end());
      }
    });
  }
}

TEST_CASE("property: face scan matches a base-3 recount on random value tables")
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
      values.push_back(r(static_cast<std::int64_t>(i)));
    }
    std::shuffle(values.begin(), values.end(), rng);
    const auto o = pivotforge::induce_orientation(values, n);

    bool all_one = true;
    std::size_t faces = 1;
    for (std::size_t k = 0; k < n; ++k) {
      faces *= 3;
    }
    for (std::size_t code = 0; code < faces; ++code) {
      std::vector<int> digits;
      std::size_t c = code;
      Face face{n, 0, 0};
      for (std::size_t k = 0; k < n; ++k) {
        digits.push_back(static_cast<int>(c % 3));
        c /= 3;
        if (digits.back() == 2) {
          face.free_mask |= std::uint32_t{1} << k;
        } else if (digits.back() == 1) {
          face.fixed_bits |= VertexId{1} << k;
        }
      }
      const std::size_t expected = reference_sink_count(values, n, digits);
      CHECK(pivotforge::face_sinks(o, face).size() == expected);
      all_one = all_one && expected == 1;
    }
    CHECK(pivotforge::is_uso(o).ok == all_one);
  }
}

TEST_CASE("property: linear objectives with distinct values are USOs")
{
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    pivotforge::Vector c;
    for (std::size_t i = 0; i < n; ++i) {
      // Distinct powers of two keep every vertex value distinct.
      c.push_back(r((rng() & 1U) != 0 ? 1 : -1) * pivotforge::pow2(static_cast<int>(i)));
    }
    const auto o = pivotforge::induce_orientation(LinearObjective(c), n);
    CHECK(pivotforge::is_uso(o).ok);
  }
}

TEST_CASE("property: sink finder matches brute force")
{
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto values = f_values(n);
    const auto res = pivotforge::sink_find_decomposable([&](VertexId v) { return values[v]; }, n);
    const auto argmax = static_cast<VertexId>(std::max_element(values.begin(), values.end()) - values.begin());
    CHECK(res.vertex == argmax);
    CHECK(res.query_count <= 2 * n);
  }
}
