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

#include <memory>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pivotforge/box_program.hpp"
#include "pivotforge/engine.hpp"
#include "pivotforge/error.hpp"
#include "pivotforge/objectives.hpp"

using pivotforge::ActiveIndexSet;
using pivotforge::AxisDirection;
using pivotforge::BoxProgram;
using pivotforge::Candidate;
using pivotforge::EngineState;
using pivotforge::LinearObjective;
using pivotforge::LowerBoundPolynomial;
using pivotforge::LowestIndexRule;
using pivotforge::Outcome;
using pivotforge::Point;
using pivotforge::Rational;
using pivotforge::StopReason;
using pivotforge::Trajectory;
using pivotforge::VertexId;

namespace
{

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

std::vector<VertexId> vertex_ids(const BoxProgram & box, const Trajectory & t)
{
  std::vector<VertexId> out;
  for (const auto & p : t.points()) {
    out.push_back(box.vertex_id(p));
  }
  return out;
}

Trajectory run_f(std::size_t n, pivotforge::PivotRule & rule)
{
  const BoxProgram cube(n);
  return pivotforge::active_set_run(cube, LowerBoundPolynomial(n), cube.origin(), rule);
}

std::vector<Candidate> candidates_at(const BoxProgram & box, const pivotforge::ObjectiveOracle & f, const Point & x)
{
  return pivotforge::improving_candidates(box, f, EngineState{x, box.eq_set(x), 0});
}

}  // namespace

TEST_CASE("improving_candidates examples")
{
  const BoxProgram square(2);
  const auto f2 = candidates_at(square, LowerBoundPolynomial(2), square.origin());
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].direction == AxisDirection{1, 1, r(1)});
  CHECK(f2[0].overlap == 1);

  for (std::size_t n = 1; n <= 6; ++n) {
    const BoxProgram cube(n);
    CHECK(candidates_at(cube, LowerBoundPolynomial(n), cube.vertex_from_id(VertexId{1} << (n - 1))).empty());
  }

  const auto lin = candidates_at(square, LinearObjective({r(1), r(1)}), square.origin());
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].direction.coord == 1);
  CHECK(lin[1].direction.coord == 2);
}

TEST_CASE("pivot rule choices")
{
  const std::vector<Candidate> cands{{AxisDirection{1, 1, r(1)}, 1, r(1)}, {AxisDirection{3, 1, r(1)}, 1, r(5)}};
  const std::vector<int> rows{2, 5, 7};
  pivotforge::LowestIndexRule lo;
  pivotforge::HighestIndexRule hi;
  pivotforge::SteepestRule st;
  CHECK(cands[lo.choose_direction(cands)].direction.coord == 1);
  CHECK(cands[hi.choose_direction(cands)].direction.coord == 3);
  CHECK(cands[st.choose_direction(cands)].direction.coord == 3);
  CHECK(lo.choose_removal(rows) == 2);
  CHECK(hi.choose_addition(rows) == 7);

  const std::vector<Candidate> tied{{AxisDirection{2, -1, r(1)}, 1, r(4)}, {AxisDirection{1, 1, r(1)}, 1, r(4)}};
  CHECK(tied[st.choose_direction(tied)].direction.coord == 1);

  pivotforge::SeededRandomRule a(42);
  pivotforge::SeededRandomRule b(42);
  for (int i = 0; i < 20; ++i) {
    CHECK(a.choose_removal(rows) == b.choose_removal(rows));
  }
  CHECK(pivotforge::make_rule("steepest")->name() == "steepest");
  CHECK_THROWS_AS(pivotforge::make_rule("bland"), pivotforge::Error);
}

TEST_CASE("active_set_run on F_2 visits the Gray order")
{
  for (auto & rule : pivotforge::builtin_rules(3)) {
    const BoxProgram square(2);
    const Trajectory t = run_f(2, *rule);
    CHECK(t.outcome == Outcome::kCriticalPoint);
    CHECK(t.iterations() == 3);
    CHECK(vertex_ids(square, t) == std::vector<VertexId>{0, 1, 3, 2});
    CHECK(t.records.back().stop_reason == StopReason::kCriticalPoint);
  }
}

TEST_CASE("active_set_run on F_10 takes 1023 iterations")
{
  LowestIndexRule rule;
  const Trajectory t = run_f(10, rule);
  CHECK(t.iterations() == 1023);
  CHECK(BoxProgram(10).vertex_id(t.final_point()) == (VertexId{1} << 9));
  CHECK(t.final_value() == r(1023));
}

TEST_CASE("padding keeps the iteration count")
{
  const BoxProgram box(16);
  const auto f = pivotforge::pad(std::make_shared<LowerBoundPolynomial>(4), 16);
  LowestIndexRule rule;
  const Trajectory t = pivotforge::active_set_run(box, *f, box.origin(), rule);
  CHECK(t.iterations() == 15);
  CHECK(t.final_value() == r(15));
}

TEST_CASE("max_iter and non-representable stops")
{
  LowestIndexRule rule;
  const BoxProgram cube(3);
  const Trajectory t = pivotforge::active_set_run(cube, LowerBoundPolynomial(3), cube.origin(), rule, 2);
  CHECK(t.outcome == Outcome::kError);
  CHECK(t.error == pivotforge::ErrorCode::kMaxIterExceeded);
  CHECK(t.iterations() == 2);
  CHECK(t.records.back().stop_reason == StopReason::kMaxIterExceeded);

  // f = x - (2/3) x^3 has slope 1 - 2x^2, which vanishes at the irrational 1/sqrt(2).
  pivotforge::MultiPoly p = pivotforge::MultiPoly::variable(1, 1);
  p.add_term({3}, r(-2, 3));
  const BoxProgram line(1);
  const Trajectory u = pivotforge::active_set_run(line, pivotforge::PolynomialObjective(p), line.origin(), rule);
  CHECK(u.outcome == Outcome::kError);
  CHECK(u.error == pivotforge::ErrorCode::kNotRepresentable);
  CHECK(u.records.back().stop_reason == StopReason::kNotRepresentable);
}

TEST_CASE("interior stop and restart")
{
  // f = x - x^2 peaks at 1/2; the engine stops there without adding a row.
  pivotforge::MultiPoly p = pivotforge::MultiPoly::variable(1, 1);
  p.add_term({2}, r(-1));
  const BoxProgram line(1);
  LowestIndexRule rule;
  const Trajectory t = pivotforge::active_set_run(line, pivotforge::PolynomialObjective(p), line.origin(), rule);
  CHECK(t.outcome == Outcome::kCriticalPoint);
  REQUIRE(t.iterations() == 1);
  CHECK(t.final_point() == Point{r(1, 2)});
  CHECK(t.records[0].removed_row == 2);
  CHECK(!t.records[0].added_row);
  CHECK(t.records[0].active_after.empty());
}

TEST_CASE("simplex_run examples")
{
  const BoxProgram square(2);
  LowestIndexRule lo;
  const Trajectory a = pivotforge::simplex_run(square, LinearObjective({r(1), r(0)}), square.origin(), lo);
  CHECK(vertex_ids(square, a) == std::vector<VertexId>{0, 1});

  pivotforge::SteepestRule st;
  const Trajectory b = pivotforge::simplex_run(square, LinearObjective({r(2), r(1)}), square.origin(), st);
  CHECK(vertex_ids(square, b) == std::vector<VertexId>{0, 1, 3});

  const Trajectory c = pivotforge::simplex_run(square, LinearObjective({r(-1), r(-3)}), square.origin(), lo);
  CHECK(c.iterations() == 0);
  CHECK_THROWS_AS(
    pivotforge::simplex_run(square, LinearObjective({r(1), r(1)}), Point{r(1, 2), r(0)}, lo), pivotforge::Error);
}

TEST_CASE("equivalence_check examples")
{
  const BoxProgram cube(3);
  const auto eq = pivotforge::equivalence_check(cube, LinearObjective({r(3), r(1), r(2)}), cube.origin(), LowestIndexRule());
  CHECK(eq.equivalent);
  CHECK(eq.active_set_points.size() == 4);

  const auto zero = pivotforge::equivalence_check(cube, LinearObjective(Point(3, r(0))), cube.origin(), LowestIndexRule());
  CHECK(zero.equivalent);
  CHECK(zero.active_set_points.size() == 1);
}

TEST_CASE("property: random linear objectives give equivalent runs under every rule")
{
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    pivotforge::Vector c;
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(r(num(rng), den(rng)));
    }
    const BoxProgram cube(n);
    const VertexId start = rng() % (VertexId{1} << n);
    for (const auto & rule : pivotforge::builtin_rules(static_cast<std::uint64_t>(trial))) {
      const auto eq = pivotforge::equivalence_check(cube, LinearObjective(c), cube.vertex_from_id(start), *rule);
      CHECK(eq.equivalent);
    }
  }
}

TEST_CASE("property: every rule produces the same F_n trajectory with singleton candidates")
{
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<std::vector<VertexId>> paths;
    for (auto & rule : pivotforge::builtin_rules(n)) {
      const BoxProgram cube(n);
      const Trajectory t = run_f(n, *rule);
      CHECK(t.iterations() == (std::size_t{1} << n) - 1);
      Rational last = t.start_value;
      for (const auto & rec : t.records) {
        CHECK(rec.candidate_count == 1);
        CHECK(rec.value_after > last);
        last = rec.value_after;
        CHECK(rec.active_after == cube.eq_set(rec.x_after));
        CHECK(rec.x_after == pivotforge::add_scaled(rec.x_before, *rec.step, *rec.direction));
      }
      paths.push_back(vertex_ids(cube, t));
    }
    for (const auto & p : paths) {
      CHECK(p == paths.front());
    }
    CHECK(std::set<VertexId>(paths.front().begin(), paths.front().end()).size() == (std::size_t{1} << n));
  }
}

TEST_CASE("property: no improving axis direction iff no improving direction on a grid")
{
  // Brute force: all directions with entries in {-2..2}, feasible at x.
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const BoxProgram cube(n);
    Point x;
    for (std::size_t i = 0; i < n; ++i) {
      const int pick = static_cast<int>(rng() % 3);
      x.push_back(pick == 0 ? r(0) : pick == 1 ? r(1) : r(1, 2));
    }
    pivotforge::Vector c;
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(r(static_cast<int>(rng() % 5) - 2));
    }
    const LinearObjective f(c);
    const bool axis = !candidates_at(cube, f, x).empty();

    bool any = false;
    std::vector<int> d(n, -2);
    for (;;) {
      bool feasible = true;
      Rational slope(0);
      for (std::size_t i = 0; i < n; ++i) {
        if ((x[i] == r(0) && d[i] < 0) || (x[i] == r(1) && d[i] > 0)) {
          feasible = false;
        }
        slope += c[i] * r(d[i]);
      }
      any = any || (feasible && slope > r(0));
      std::size_t i = 0;
      while (i < n && d[i] == 2) {
        d[i++] = -2;
      }
      if (i == n) {
        break;
      }
      ++d[i];
    }
    CHECK(axis == any);
  }
}
