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

#ifndef PIVOTFORGE__ENGINE_HPP_
#define PIVOTFORGE__ENGINE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pivotforge/box_program.hpp"
#include "pivotforge/error.hpp"
#include "pivotforge/objectives.hpp"

namespace pivotforge
{

/// A feasible improving signed axis direction together with the number of
/// active rows it keeps tight and its directional derivative ∇f(x)ᵀd.
struct Candidate
{
  AxisDirection direction;
  int overlap = 0;
  Rational slope;
};

/// Tie-breaking policy. Every choice is made from a nonempty option list.
class PivotRule
{
public:
  virtual ~PivotRule() = default;

  virtual std::string name() const = 0;
  /// Returns an index into `candidates`.
  virtual std::size_t choose_direction(std::span<const Candidate> candidates) = 0;
  /// Returns one of the row indices in `rows`.
  virtual int choose_removal(std::span<const int> rows) = 0;
  virtual int choose_addition(std::span<const int> rows) = 0;
  /// Fresh copy in the rule's initial state.
  virtual std::unique_ptr<PivotRule> clone() const = 0;
};

class LowestIndexRule final : public PivotRule
{
public:
  std::string name() const override { return "lowest-index"; }
  std::size_t choose_direction(std::span<const Candidate> candidates) override;
  int choose_removal(std::span<const int> rows) override;
  int choose_addition(std::span<const int> rows) override;
  std::unique_ptr<PivotRule> clone() const override { return std::make_unique<LowestIndexRule>(); }
};

class HighestIndexRule final : public PivotRule
{
public:
  std::string name() const override { return "highest-index"; }
  std::size_t choose_direction(std::span<const Candidate> candidates) override;
  int choose_removal(std::span<const int> rows) override;
  int choose_addition(std::span<const int> rows) override;
  std::unique_ptr<PivotRule> clone() const override { return std::make_unique<HighestIndexRule>(); }
};

/// Largest |∇f(x)ᵀd|; ties go to the lowest coordinate. Rows: lowest index.
class SteepestRule final : public PivotRule
{
public:
  std::string name() const override { return "steepest"; }
  std::size_t choose_direction(std::span<const Candidate> candidates) override;
  int choose_removal(std::span<const int> rows) override;
  int choose_addition(std::span<const int> rows) override;
  std::unique_ptr<PivotRule> clone() const override { return std::make_unique<SteepestRule>(); }
};

/// Uniform choices from a seeded Mersenne Twister.
class SeededRandomRule final : public PivotRule
{
public:
  explicit SeededRandomRule(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override { return "seeded-random"; }
  std::size_t choose_direction(std::span<const Candidate> candidates) override;
  int choose_removal(std::span<const int> rows) override;
  int choose_addition(std::span<const int> rows) override;
  std::unique_ptr<PivotRule> clone() const override { return std::make_unique<SeededRandomRule>(seed_); }

private:
  std::size_t pick(std::size_t count);

  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

/// Names accepted by make_rule, in a fixed order.
const std::vector<std::string> & builtin_rule_names();
/// Throws Error(kInvalidArgument) on an unknown name.
std::unique_ptr<PivotRule> make_rule(std::string_view name, std::uint64_t seed = 0);
std::vector<std::unique_ptr<PivotRule>> builtin_rules(std::uint64_t seed = 0);

struct EngineState
{
  Point x;
  ActiveIndexSet active;
  std::size_t iteration = 0;
};

enum class StopReason { kCriticalPoint, kMaxIterExceeded, kNotRepresentable };
enum class Outcome { kCriticalPoint, kError };

std::string_view to_string(StopReason reason);
std::string_view to_string(Outcome outcome);

/// One pass of the main loop.
struct IterationRecord
{
  std::size_t index = 0;
  Point x_before;
  ActiveIndexSet active_before;
  std::size_t candidate_count = 0;
  std::optional<AxisDirection> direction;
  std::optional<int> removed_row;
  std::optional<Rational> step;
  Point x_after;
  std::optional<int> added_row;
  ActiveIndexSet active_after;
  Rational value_after;
  std::optional<StopReason> stop_reason;
};

struct Trajectory
{
  Point start;
  Rational start_value;
  std::vector<IterationRecord> records;
  Outcome outcome = Outcome::kCriticalPoint;
  std::optional<ErrorCode> error;
  std::string error_message;

  std::size_t iterations() const { return records.size(); }
  const Point & final_point() const { return records.empty() ? start : records.back().x_after; }
  const Rational & final_value() const { return records.empty() ? start_value : records.back().value_after; }
  /// Start followed by every point reached by a move.
  std::vector<Point> points() const;
};

/// Feasible improving signed unit axis directions at state.x, restricted to
/// those keeping the most active rows tight. Ordered by coordinate.
std::vector<Candidate> improving_candidates(
  const BoxProgram & program, const ObjectiveOracle & objective, const EngineState & state);

/// 2^{n+1}, saturated for large n.
std::size_t default_max_iter(std::size_t n);

/// The active-set method started from `start` with A = Eq(start).
Trajectory active_set_run(
  const BoxProgram & program, const ObjectiveOracle & objective, const Point & start, PivotRule & rule,
  std::optional<std::size_t> max_iter = std::nullopt);

/// Vertex-to-vertex simplex walk. Throws Error(kNotAVertex) for a non-vertex start.
Trajectory simplex_run(
  const BoxProgram & program, const LinearObjective & objective, const Point & start, PivotRule & rule,
  std::optional<std::size_t> max_iter = std::nullopt);

struct EquivalenceResult
{
  bool equivalent = false;
  /// Position in the point sequences where the runs first differ.
  std::optional<std::size_t> first_divergence;
  std::vector<Point> active_set_points;
  std::vector<Point> simplex_points;
};

/// Runs both methods with fresh clones of `rule` and compares their point
/// sequences.
EquivalenceResult equivalence_check(
  const BoxProgram & program, const LinearObjective & objective, const Point & start, const PivotRule & rule);

}  // namespace pivotforge

#endif  // PIVOTFORGE__ENGINE_HPP_
