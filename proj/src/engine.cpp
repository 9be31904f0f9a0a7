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

#include "pivotforge/engine.hpp"

#include <algorithm>
#include <limits>

#include "pivotforge/unipoly.hpp"

namespace pivotforge
{

// ---------------------------------------------------------------------------
// Pivot rules

std::size_t LowestIndexRule::choose_direction(std::span<const Candidate> candidates)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].direction.coord < candidates[best].direction.coord) {
      best = i;
    }
  }
  return best;
}

int LowestIndexRule::choose_removal(std::span<const int> rows) { return *std::min_element(rows.begin(), rows.end()); }

int LowestIndexRule::choose_addition(std::span<const int> rows) { return *std::min_element(rows.begin(), rows.end()); }

std::size_t HighestIndexRule::choose_direction(std::span<const Candidate> candidates)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].direction.coord > candidates[best].direction.coord) {
      best = i;
    }
  }
  return best;
}

int HighestIndexRule::choose_removal(std::span<const int> rows) { return *std::max_element(rows.begin(), rows.end()); }

int HighestIndexRule::choose_addition(std::span<const int> rows) { return *std::max_element(rows.begin(), rows.end()); }

std::size_t SteepestRule::choose_direction(std::span<const Candidate> candidates)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const auto cmp = abs(candidates[i].slope) <=> abs(candidates[best].slope);
    if (cmp > 0 || (cmp == 0 && candidates[i].direction.coord < candidates[best].direction.coord)) {
      best = i;
    }
  }
  return best;
}

int SteepestRule::choose_removal(std::span<const int> rows) { return *std::min_element(rows.begin(), rows.end()); }

int SteepestRule::choose_addition(std::span<const int> rows) { return *std::min_element(rows.begin(), rows.end()); }

std::size_t SeededRandomRule::pick(std::size_t count)
{
  // Forced choices leave the stream untouched, so runs that differ only in
  // how many forced choices they make stay in step.
  if (count == 1) {
    return 0;
  }
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
}

std::size_t SeededRandomRule::choose_direction(std::span<const Candidate> candidates) { return pick(candidates.size()); }

int SeededRandomRule::choose_removal(std::span<const int> rows) { return rows[pick(rows.size())]; }

int SeededRandomRule::choose_addition(std::span<const int> rows) { return rows[pick(rows.size())]; }

const std::vector<std::string> & builtin_rule_names()
{
  static const std::vector<std::string> names{"lowest-index", "highest-index", "steepest", "seeded-random"};
  return names;
}

std::unique_ptr<PivotRule> make_rule(std::string_view name, std::uint64_t seed)
{
  if (name == "lowest-index") {
    return std::make_unique<LowestIndexRule>();
  }
  if (name == "highest-index") {
    return std::make_unique<HighestIndexRule>();
  }
  if (name == "steepest") {
    return std::make_unique<SteepestRule>();
  }
  if (name == "seeded-random") {
    return std::make_unique<SeededRandomRule>(seed);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown pivot rule '" + std::string(name) + "'");
}

std::vector<std::unique_ptr<PivotRule>> builtin_rules(std::uint64_t seed)
{
  std::vector<std::unique_ptr<PivotRule>> rules;
  for (const auto & name : builtin_rule_names()) {
    rules.push_back(make_rule(name, seed));
  }
  return rules;
}

std::string_view to_string(StopReason reason)
{
  switch (reason) {
    case StopReason::kCriticalPoint:
      return "CRITICAL_POINT";
    case StopReason::kMaxIterExceeded:
      return "MAX_ITER_EXCEEDED";
    case StopReason::kNotRepresentable:
      return "NOT_REPRESENTABLE";
  }
  return "UNKNOWN";
}

std::string_view to_string(Outcome outcome)
{
  return outcome == Outcome::kCriticalPoint ? "CRITICAL_POINT" : "ERROR";
}

std::vector<Point> Trajectory::points() const
{
  std::vector<Point> out{start};
  for (const auto & rec : records) {
    if (rec.step) {
      out.push_back(rec.x_after);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace
{

std::size_t checked_choice(std::size_t index, std::size_t count)
{
  if (index >= count) {
    throw Error(ErrorCode::kInvalidArgument, "pivot rule chose outside the candidate list");
  }
  return index;
}

int checked_row(int row, std::span<const int> rows)
{
  if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
    throw Error(ErrorCode::kInvalidArgument, "pivot rule chose a row outside the option set");
  }
  return row;
}

void finish(Trajectory & traj, StopReason reason, std::optional<ErrorCode> error, std::string message = {})
{
  if (!traj.records.empty()) {
    traj.records.back().stop_reason = reason;
  }
  traj.outcome = error ? Outcome::kError : Outcome::kCriticalPoint;
  traj.error = error;
  traj.error_message = std::move(message);
}

std::vector<int> set_difference(const ActiveIndexSet & a, const ActiveIndexSet & b)
{
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Candidate> improving_candidates(
  const BoxProgram & program, const ObjectiveOracle & objective, const EngineState & state)
{
  const Vector grad = objective.gradient(state.x);
  std::vector<Candidate> all;
  int best_overlap = -1;
  for (std::size_t i = 0; i < program.n(); ++i) {
    for (int sign : {1, -1}) {
      AxisDirection d{static_cast<int>(i + 1), sign, Rational(1)};
      Rational slope = sign > 0 ? grad[i] : -grad[i];
      if (slope.sign() <= 0 || !program.is_feasible_direction(state.x, d)) {
        continue;
      }
      int overlap = 0;
      for (int row : state.active) {
        overlap += program.row_dot_sign(row, d) == 0 ? 1 : 0;
      }
      best_overlap = std::max(best_overlap, overlap);
      all.push_back(Candidate{d, overlap, std::move(slope)});
    }
  }
  std::vector<Candidate> out;
  for (auto & c : all) {
    if (c.overlap == best_overlap) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::size_t default_max_iter(std::size_t n)
{
  if (n + 1 >= std::numeric_limits<std::size_t>::digits) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::size_t{1} << (n + 1);
}

Trajectory active_set_run(
  const BoxProgram & program, const ObjectiveOracle & objective, const Point & start, PivotRule & rule,
  std::optional<std::size_t> max_iter)
{
  if (objective.n() != program.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "objective and program dimensions differ");
  }
  const std::size_t limit = max_iter.value_or(default_max_iter(program.n()));

  EngineState state{start, program.eq_set(start), 0};
  Trajectory traj;
  traj.start = start;
  traj.start_value = objective.value(start);

  for (;;) {
    const std::vector<Candidate> candidates = improving_candidates(program, objective, state);
    if (candidates.empty()) {
      finish(traj, StopReason::kCriticalPoint, std::nullopt);
      return traj;
    }
    if (state.iteration >= limit) {
      finish(traj, StopReason::kMaxIterExceeded, ErrorCode::kMaxIterExceeded, "iteration limit reached");
      return traj;
    }

    IterationRecord rec;
    rec.index = state.iteration;
    rec.x_before = state.x;
    rec.active_before = state.active;
    rec.candidate_count = candidates.size();
    const AxisDirection d = candidates[checked_choice(rule.choose_direction(candidates), candidates.size())].direction;
    rec.direction = d;

    std::vector<int> blocking;
    for (int row : state.active) {
      if (program.row_dot_sign(row, d) < 0) {
        blocking.push_back(row);
      }
    }
    if (!blocking.empty()) {
      const int removed = checked_row(rule.choose_removal(blocking), blocking);
      state.active.erase(removed);
      rec.removed_row = removed;
    }

    const bool respects_active = std::all_of(
      state.active.begin(), state.active.end(), [&](int row) { return program.row_dot_sign(row, d) == 0; });
    if (respects_active) {
      const Rational boundary = program.step_to_boundary(state.x, d);
      const UniPoly restriction = objective.edge_restriction(state.x, d);
      std::optional<Rational> objective_stop;
      try {
        objective_stop = first_nonpositive(restriction, boundary);
      } catch (const Error & e) {
        if (e.code() != ErrorCode::kNotRepresentable) {
          throw;
        }
        rec.x_after = state.x;
        rec.active_after = state.active;
        rec.value_after = objective.value(state.x);
        traj.records.push_back(std::move(rec));
        finish(traj, StopReason::kNotRepresentable, ErrorCode::kNotRepresentable, e.what());
        return traj;
      }
      // Ties go to the boundary; both give the same point.
      const Rational mu = objective_stop && *objective_stop < boundary ? *objective_stop : boundary;
      state.x = add_scaled(state.x, mu, d);
      rec.step = mu;
      if (restriction(mu).sign() > 0) {
        const std::vector<int> entering = set_difference(program.eq_set(state.x), state.active);
        if (!entering.empty()) {
          const int added = checked_row(rule.choose_addition(entering), entering);
          state.active.insert(added);
          rec.added_row = added;
        }
      }
    }

    rec.x_after = state.x;
    rec.active_after = state.active;
    rec.value_after = objective.value(state.x);
    traj.records.push_back(std::move(rec));
    ++state.iteration;
  }
}

Trajectory simplex_run(
  const BoxProgram & program, const LinearObjective & objective, const Point & start, PivotRule & rule,
  std::optional<std::size_t> max_iter)
{
  if (objective.n() != program.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "objective and program dimensions differ");
  }
  if (!program.is_vertex(start)) {
    throw Error(ErrorCode::kNotAVertex, "simplex needs a vertex to start from");
  }
  const std::size_t limit = max_iter.value_or(default_max_iter(program.n()));
  const Vector & c = objective.c();
  const int n = static_cast<int>(program.n());

  Point x = start;
  ActiveIndexSet basis = program.eq_set(x);
  Trajectory traj;
  traj.start = start;
  traj.start_value = objective.value(start);

  for (std::size_t iteration = 0;; ++iteration) {
    // Improving edge directions: every axis move out of a vertex is an edge.
    std::vector<Candidate> improving;
    for (int k = 1; k <= n; ++k) {
      const bool at_upper = x[static_cast<std::size_t>(k - 1)] == program.upper(k);
      const AxisDirection d{k, at_upper ? -1 : 1, Rational(1)};
      Rational slope = at_upper ? -c[static_cast<std::size_t>(k - 1)] : c[static_cast<std::size_t>(k - 1)];
      if (slope.sign() <= 0) {
        continue;
      }
      int tight = 0;
      for (int row : basis) {
        tight += program.row_dot_sign(row, d) == 0 ? 1 : 0;
      }
      if (tight != n - 1) {
        throw Error(ErrorCode::kInvalidArgument, "basis does not determine a non-degenerate vertex");
      }
      improving.push_back(Candidate{d, tight, std::move(slope)});
    }
    if (improving.empty()) {
      finish(traj, StopReason::kCriticalPoint, std::nullopt);
      return traj;
    }
    if (iteration >= limit) {
      finish(traj, StopReason::kMaxIterExceeded, ErrorCode::kMaxIterExceeded, "iteration limit reached");
      return traj;
    }

    IterationRecord rec;
    rec.index = iteration;
    rec.x_before = x;
    rec.active_before = basis;
    rec.candidate_count = improving.size();
    const AxisDirection d = improving[checked_choice(rule.choose_direction(improving), improving.size())].direction;
    rec.direction = d;

    const auto leaving = std::find_if(basis.begin(), basis.end(), [&](int row) { return program.row_dot_sign(row, d) < 0; });
    rec.removed_row = *leaving;
    basis.erase(*leaving);

    const Rational mu = program.step_to_boundary(x, d);
    x = add_scaled(x, mu, d);
    rec.step = mu;

    const std::vector<int> entering = set_difference(program.eq_set(x), basis);
    if (entering.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "degenerate pivot: entering row is not unique");
    }
    basis.insert(entering.front());
    rec.added_row = entering.front();

    rec.x_after = x;
    rec.active_after = basis;
    rec.value_after = objective.value(x);
    traj.records.push_back(std::move(rec));
  }
}

EquivalenceResult equivalence_check(
  const BoxProgram & program, const LinearObjective & objective, const Point & start, const PivotRule & rule)
{
  auto active_rule = rule.clone();
  auto simplex_rule = rule.clone();
  EquivalenceResult result;
  result.active_set_points = active_set_run(program, objective, start, *active_rule).points();
  result.simplex_points = simplex_run(program, objective, start, *simplex_rule).points();
  const std::size_t common = std::min(result.active_set_points.size(), result.simplex_points.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (result.active_set_points[i] != result.simplex_points[i]) {
      result.first_divergence = i;
      break;
    }
  }
  if (!result.first_divergence && result.active_set_points.size() != result.simplex_points.size()) {
    result.first_divergence = common;
  }
  result.equivalent = !result.first_divergence;
  return result;
}

}  // namespace pivotforge
