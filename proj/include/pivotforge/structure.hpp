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

#ifndef PIVOTFORGE__STRUCTURE_HPP_
#define PIVOTFORGE__STRUCTURE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pivotforge/box_program.hpp"
#include "pivotforge/objectives.hpp"
#include "pivotforge/rational.hpp"

namespace pivotforge
{

/// Vertex of {0,1}^n with the given little-endian id.
Point unit_vertex(std::size_t n, VertexId id);

/// x_{k-1} ∏_{j=1}^{k-2} (1 - x_j) with x_0 := 1.
Rational pp(std::size_t n, std::span<const Rational> x, std::size_t k);

/// Parity of Σ_{j=k+1}^n x_j.
int s_parity(std::size_t n, std::span<const Rational> x, std::size_t k);

/// Dimensions k where moving along e^k out of x improves F_n, judged by the
/// sign of the (dual-number) partial derivative.
std::vector<std::size_t> improving_dimensions_by_gradient(std::size_t n, std::span<const Rational> x);

/// Dimensions k with S(k) ≡ x_k (mod 2) and pp(k) = 1.
std::vector<std::size_t> improving_dimensions_by_predicates(std::size_t n, std::span<const Rational> x);

/// The unique improving dimension at a vertex, or nullopt at e^n. Both
/// characterisations are evaluated; Error(kAmbiguous) if either yields more
/// than one dimension or they disagree.
std::optional<std::size_t> improving_dimension(std::size_t n, std::span<const Rational> x);

struct GrayPath
{
  std::size_t n = 0;
  std::vector<VertexId> vertices;
};

/// Walk from the origin along improving dimensions until e^n.
GrayPath hamiltonian_path(std::size_t n);

/// i XOR (i >> 1) for i = 0 .. 2^n - 1.
std::vector<VertexId> reflected_gray_code(std::size_t n);

enum class EdgeDirection { kForward, kBackward };

/// Orientation of the n-cube's edges. An edge along coordinate k is FORWARD
/// when it points from its endpoint with bit k = 0 to the one with bit k = 1.
class Orientation
{
public:
  Orientation() = default;
  /// `outgoing[v]` has bit k-1 set iff the edge of v along coordinate k
  /// leaves v. Throws Error(kInvalidArgument) if the two endpoints of an edge
  /// disagree.
  Orientation(std::size_t n, std::vector<std::uint32_t> outgoing);

  /// Builds an orientation from a per-edge rule evaluated at the edge's
  /// bit-0 endpoint.
  static Orientation from_edges(std::size_t n, const std::function<EdgeDirection(VertexId, int)> & direction);

  std::size_t n() const { return n_; }
  std::size_t vertex_count() const { return outgoing_.size(); }
  std::uint32_t outgoing_mask(VertexId v) const { return outgoing_.at(v); }
  /// 1-based coordinates of outgoing edges.
  std::vector<int> outgoing(VertexId v) const;
  EdgeDirection edge_direction(VertexId v, int coord) const;

private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> outgoing_;
};

/// Edges point from the lower to the higher value. Throws Error(kTie) when two
/// adjacent vertices share a value.
Orientation induce_orientation(std::span<const Rational> vertex_values, std::size_t n);
Orientation induce_orientation(const ObjectiveOracle & objective, std::size_t n);

/// Face of the n-cube: coordinates in `free_mask` vary, the rest are pinned to
/// the matching bits of `fixed_bits`.
struct Face
{
  std::size_t n = 0;
  std::uint32_t free_mask = 0;
  VertexId fixed_bits = 0;

  int dimension() const;
  bool contains(VertexId v) const;
  /// Pattern string over {0,1,*}, coordinate 1 first.
  std::string pattern() const;
  /// 1-based free coordinates.
  std::vector<int> support() const;

  static Face whole(std::size_t n);
  friend bool operator==(const Face &, const Face &) = default;
};

/// Calls visit(face) for all 3^n faces.
void for_each_face(std::size_t n, const std::function<void(const Face &)> & visit);

/// Vertices of `face` with no outgoing edge inside it.
std::vector<VertexId> face_sinks(const Orientation & o, const Face & face);

struct FaceCheck
{
  bool ok = true;
  std::optional<Face> witness;
};

FaceCheck is_uso(const Orientation & o);

/// Free coordinates i along which every edge of `face` points the same way.
std::vector<int> combed_dimension(const Orientation & o, const Face & face);

FaceCheck is_decomposable(const Orientation & o);

struct SinkResult
{
  VertexId vertex = 0;
  std::size_t query_count = 0;
};

/// Fixes coordinates from n down to 1, each by comparing the two endpoints of
/// one edge of the current subcube. Correct when every subcube is combed in
/// its highest free dimension; values are cached, so each distinct vertex is
/// queried once.
SinkResult sink_find_decomposable(const std::function<Rational(VertexId)> & value_oracle, std::size_t n);

}  // namespace pivotforge

#endif  // PIVOTFORGE__STRUCTURE_HPP_
