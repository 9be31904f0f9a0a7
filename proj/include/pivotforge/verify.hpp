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

#ifndef PIVOTFORGE__VERIFY_HPP_
#define PIVOTFORGE__VERIFY_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "pivotforge/io.hpp"
#include "pivotforge/sat_gadget.hpp"

namespace pivotforge
{

/// Outcome of one brute-force certification. On failure `witness` names the
/// offending vertex, face or formula.
struct CheckReport
{
  bool ok = true;
  std::string summary;
  Json witness;
};

/// Every vertex other than e^n has exactly one improving dimension; the
/// gradient-sign and pp/S characterisations agree; e^n has none.
CheckReport verify_uniqueness(std::size_t n);

/// Closed-form vertex partials equal dual-number partials for every k.
CheckReport verify_gradient(std::size_t n);

/// The improving walk is a Hamiltonian path ending at e^n, ranks vertices by
/// value, equals the reflected Gray code and the engine trajectory, and its
/// second half mirrors the first.
CheckReport verify_path(std::size_t n);

/// Along the improving edge the k-th partial stays constant (sampled at
/// μ = 0, 1/10, ..., 1) and the edge restriction has degree 0.
CheckReport verify_constancy(std::size_t n);

/// Simplex and active-set runs visit the same vertices for random linear
/// objectives with distinct vertex values, under every built-in rule.
CheckReport verify_equivalence(std::size_t n, std::size_t trials, std::uint64_t seed);

/// The induced orientation is a USO, is decomposable, and every face is
/// combed in its largest free coordinate.
CheckReport verify_uso(std::size_t n);

/// The sink finder returns e^n with at most 2n distinct value queries.
CheckReport verify_sink(std::size_t n);

/// Random CNFs: reduced polynomial has degree <= 3, equals minus the number of
/// violated clauses at every vertex, and has maximum 0 iff satisfiable.
CheckReport verify_sat(std::size_t trials, std::uint64_t seed, std::size_t max_vars, std::size_t max_clauses);

/// Random formula with 1..max_vars variables and 0..max_clauses clauses of
/// one to three distinct variables.
CnfFormula random_cnf(std::mt19937_64 & rng, std::size_t max_vars, std::size_t max_clauses);

/// Checks one formula against the reduction laws; empty result means pass.
std::string check_reduction(const CnfFormula & formula);

}  // namespace pivotforge

#endif  // PIVOTFORGE__VERIFY_HPP_
