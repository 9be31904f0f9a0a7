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

#include "pivotforge/verify.hpp"

#include <algorithm>
#include <set>

#include "pivotforge/engine.hpp"
#include "pivotforge/objectives.hpp"
#include "pivotforge/structure.hpp"

namespace pivotforge
{
namespace
{

VertexId top_vertex(std::size_t n) { return VertexId{1} << (n - 1); }

Rational dual_partial_f(std::span<const Rational> x, std::size_t k)
{
  return dual_partial([](std::span<const DualNumber> xs) { return lower_bound_value(xs); }, x, k);
}

CheckReport fail(std::string summary, Json witness)
{
  return CheckReport{false, std::move(summary), std::move(witness)};
}

CheckReport pass(std::string summary) { return CheckReport{true, std::move(summary), nullptr}; }

std::vector<Rational> vertex_values(std::size_t n)
{
  const BoxProgram cube(n);
  std::vector<Rational> out;
  out.reserve(std::size_t{1} << n);
  for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
    out.push_back(f_value(n, cube.vertex_from_id(v)));
  }
  return out;
}

Json dims_json(const std::vector<std::size_t> & dims) { return Json(dims); }

}  // namespace

CheckReport verify_uniqueness(std::size_t n)
{
  const BoxProgram cube(n);
  for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
    const Point x = cube.vertex_from_id(v);
    const auto by_gradient = improving_dimensions_by_gradient(n, x);
    const auto by_predicates = improving_dimensions_by_predicates(n, x);
    const std::size_t expected = v == top_vertex(n) ? 0 : 1;
    if (by_gradient != by_predicates || by_gradient.size() != expected) {
      return fail(
        "vertex " + std::to_string(v) + " violates uniqueness",
        Json{{"vertex_id", v}, {"by_gradient", dims_json(by_gradient)}, {"by_predicates", dims_json(by_predicates)}});
    }
  }
  return pass(std::to_string(std::size_t{1} << n) + " vertices, one improving dimension each except e^n");
}

CheckReport verify_gradient(std::size_t n)
{
  const BoxProgram cube(n);
  for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
    const Point x = cube.vertex_from_id(v);
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational closed = partial_closed_form(n, k, x);
      const Rational dual = dual_partial_f(x, k);
      if (closed != dual) {
        return fail(
          "closed form differs from the dual partial",
          Json{{"vertex_id", v}, {"k", k}, {"closed_form", closed.to_string()}, {"dual", dual.to_string()}});
      }
    }
  }
  return pass(std::to_string(n << n) + " vertex partials agree");
}

CheckReport verify_path(std::size_t n)
{
  const auto path = hamiltonian_path(n).vertices;
  const auto values = vertex_values(n);
  const std::size_t count = std::size_t{1} << n;
  auto mismatch = [](std::string property, std::size_t pos, VertexId expected, VertexId actual) {
    return fail(
      property + " fails at position " + std::to_string(pos),
      Json{{"property", property}, {"position", pos}, {"expected", expected}, {"actual", actual}});
  };
  if (path.size() != count) {
    return fail("path has the wrong length", Json{{"property", "length"}, {"expected", count}, {"actual", path.size()}});
  }
  const auto gray = reflected_gray_code(n);
  for (std::size_t i = 0; i < count; ++i) {
    if (values[path[i]] != Rational(static_cast<std::int64_t>(i))) {
      return fail(
        "value rank fails at position " + std::to_string(i),
        Json{{"property", "rank"}, {"position", i}, {"vertex_id", path[i]}, {"value", values[path[i]].to_string()}});
    }
    if (path[i] != gray[i]) {
      return mismatch("gray-code", i, gray[i], path[i]);
    }
  }
  if (path.back() != top_vertex(n)) {
    return mismatch("endpoint", count - 1, top_vertex(n), path.back());
  }
  if (n >= 2) {
    const auto prev = hamiltonian_path(n - 1).vertices;
    const std::size_t half = prev.size();
    for (std::size_t i = 0; i < half; ++i) {
      if (path[i] != prev[i]) {
        return mismatch("first-half", i, prev[i], path[i]);
      }
      const VertexId mirrored = prev[half - 1 - i] | (VertexId{1} << (n - 1));
      if (path[half + i] != mirrored) {
        return mismatch("reflection", half + i, mirrored, path[half + i]);
      }
    }
  }
  const BoxProgram cube(n);
  LowestIndexRule rule;
  const auto points = active_set_run(cube, LowerBoundPolynomial(n), cube.origin(), rule).points();
  for (std::size_t i = 0; i < std::max(points.size(), path.size()); ++i) {
    const VertexId actual = i < points.size() ? cube.vertex_id(points[i]) : ~VertexId{0};
    const VertexId expected = i < path.size() ? path[i] : ~VertexId{0};
    if (actual != expected) {
      return mismatch("engine-trajectory", i, expected, actual);
    }
  }
  return pass("Hamiltonian path of " + std::to_string(count) + " vertices matches Gray code, ranks and engine");
}

CheckReport verify_constancy(std::size_t n)
{
  const BoxProgram cube(n);
  const LowerBoundPolynomial f(n);
  std::size_t checked = 0;
  for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
    if (v == top_vertex(n)) {
      continue;
    }
    const Point x = cube.vertex_from_id(v);
    const std::size_t k = *improving_dimension(n, x);
    const AxisDirection d{static_cast<int>(k), x[k - 1].is_zero() ? 1 : -1, Rational(1)};
    const Rational base = dual_partial_f(x, k);
    for (int s = 0; s <= 10; ++s) {
      const Rational mu(s, 10);
      const Point y = add_scaled(x, mu, d);
      const Rational at = dual_partial_f(y, k);
      if (at != base) {
        return fail(
          "partial changes along the improving edge",
          Json{{"vertex_id", v}, {"k", k}, {"mu", mu.to_string()}, {"at_vertex", base.to_string()}, {"at_mu", at.to_string()}});
      }
      ++checked;
    }
    const UniPoly g = f.edge_restriction(x, d);
    if (g.degree() > 0) {
      Json coeffs = Json::array();
      for (const auto & c : g.coefficients()) {
        coeffs.push_back(c.to_string());
      }
      return fail("edge restriction is not constant", Json{{"vertex_id", v}, {"k", k}, {"coefficients", coeffs}});
    }
  }
  return pass(std::to_string(checked) + " sampled partials constant; every edge restriction has degree 0");
}

CheckReport verify_equivalence(std::size_t n, std::size_t trials, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 9);
  const BoxProgram cube(n);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Vector c;
    for (;;) {
      c.clear();
      for (std::size_t i = 0; i < n; ++i) {
        c.push_back(Rational(num(rng), den(rng)));
      }
      const LinearObjective f(c);
      std::set<Rational> seen;
      bool distinct = true;
      for (VertexId v = 0; v < (VertexId{1} << n) && distinct; ++v) {
        distinct = seen.insert(f.value(cube.vertex_from_id(v))).second;
      }
      if (distinct) {
        break;
      }
    }
    for (const auto & rule : builtin_rules(seed + trial)) {
      const auto res = equivalence_check(cube, LinearObjective(c), cube.origin(), *rule);
      if (!res.equivalent) {
        Json cj = Json::array();
        for (const auto & ci : c) {
          cj.push_back(ci.to_string());
        }
        return fail(
          "simplex and active-set runs diverge",
          Json{{"trial", trial}, {"c", cj}, {"rule", rule->name()}, {"first_divergence", res.first_divergence ? Json(*res.first_divergence) : Json(nullptr)}});
      }
    }
  }
  return pass(std::to_string(trials) + " objectives x " + std::to_string(builtin_rule_names().size()) + " rules equivalent");
}

CheckReport verify_uso(std::size_t n)
{
  const Orientation o = induce_orientation(vertex_values(n), n);
  const FaceCheck uso = is_uso(o);
  if (!uso.ok) {
    return fail("face without a unique sink", Json{{"property", "uso"}, {"face", uso.witness->pattern()}});
  }
  const FaceCheck dec = is_decomposable(o);
  if (!dec.ok) {
    return fail("face not combed", Json{{"property", "decomposable"}, {"face", dec.witness->pattern()}});
  }
  std::optional<Face> bad;
  std::size_t faces = 0;
  for_each_face(n, [&](const Face & face) {
    ++faces;
    if (bad || face.dimension() == 0) {
      return;
    }
    const auto combed = combed_dimension(o, face);
    if (std::find(combed.begin(), combed.end(), face.support().back()) == combed.end()) {
      bad = face;
    }
  });
  if (bad) {
    return fail("face not combed in its largest free coordinate", Json{{"property", "combed-max"}, {"face", bad->pattern()}});
  }
  return pass(std::to_string(faces) + " faces: unique sinks, decomposable, combed at the largest free coordinate");
}

CheckReport verify_sink(std::size_t n)
{
  const BoxProgram cube(n);
  const auto values = vertex_values(n);
  const SinkResult res = sink_find_decomposable([&](VertexId v) { return f_value(n, cube.vertex_from_id(v)); }, n);
  const auto argmax = static_cast<VertexId>(std::max_element(values.begin(), values.end()) - values.begin());
  if (res.vertex != argmax || res.vertex != top_vertex(n) || res.query_count > 2 * n) {
    return fail(
      "sink finder disagrees with brute force",
      Json{{"found", res.vertex}, {"argmax", argmax}, {"queries", res.query_count}, {"budget", 2 * n}});
  }
  return pass("sink " + std::to_string(res.vertex) + " found with " + std::to_string(res.query_count) + " queries");
}

CnfFormula random_cnf(std::mt19937_64 & rng, std::size_t max_vars, std::size_t max_clauses)
{
  CnfFormula f;
  f.n_vars = 1 + static_cast<std::size_t>(rng() % max_vars);
  const std::size_t m = static_cast<std::size_t>(rng() % (max_clauses + 1));
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % std::min<std::size_t>(3, f.n_vars));
    Clause clause;
    while (clause.size() < len) {
      const int var = 1 + static_cast<int>(rng() % f.n_vars);
      if (std::none_of(clause.begin(), clause.end(), [&](const Literal & l) { return l.variable == var; })) {
        clause.push_back(Literal{var, (rng() & 1U) != 0});
      }
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

std::string check_reduction(const CnfFormula & formula)
{
  const MultiPoly p = reduce(formula);
  if (p.total_degree() > 3) {
    return "degree " + std::to_string(p.total_degree()) + " exceeds 3";
  }
  for (VertexId v = 0; v < (VertexId{1} << formula.n_vars); ++v) {
    Point x(formula.n_vars);
    for (std::size_t i = 0; i < formula.n_vars; ++i) {
      x[i] = Rational(static_cast<std::int64_t>((v >> i) & 1U));
    }
    const Rational value = multi_eval(p, x);
    const Rational expected(-static_cast<std::int64_t>(violated_clauses(formula, v)));
    if (value != expected) {
      return "value " + value.to_string() + " at assignment " + std::to_string(v) + ", expected " + expected.to_string();
    }
  }
  const bool sat = brute_force_sat(formula).satisfiable;
  const Rational max = brute_force_max(p, formula.n_vars).value;
  if ((max == Rational(0)) != sat) {
    return "max " + max.to_string() + " but satisfiable=" + (sat ? "true" : "false");
  }
  return {};
}

CheckReport verify_sat(std::size_t trials, std::uint64_t seed, std::size_t max_vars, std::size_t max_clauses)
{
  std::mt19937_64 rng(seed);
  std::size_t satisfiable = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const CnfFormula f = random_cnf(rng, max_vars, max_clauses);
    const std::string problem = check_reduction(f);
    if (!problem.empty()) {
      return fail("reduction law violated: " + problem, Json{{"trial", trial}, {"dimacs", to_dimacs(f)}, {"detail", problem}});
    }
    satisfiable += brute_force_sat(f).satisfiable ? 1 : 0;
  }
  return pass(
    std::to_string(trials) + " formulas (" + std::to_string(satisfiable) + " satisfiable) obey the reduction laws");
}

}  // namespace pivotforge
