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

#include "pivotforge/structure.hpp"

#include <bit>
#include <map>

#include "pivotforge/error.hpp"

namespace pivotforge
{
namespace
{

constexpr std::size_t kMaxCubeDimension = 30;

void check_cube_dimension(std::size_t n)
{
  if (n < 1 || n > kMaxCubeDimension) {
    throw Error(ErrorCode::kTooLarge, "cube dimension must be in [1, " + std::to_string(kMaxCubeDimension) + "]");
  }
}

void check_unit_vertex(std::size_t n, std::span<const Rational> x)
{
  if (x.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "vertex length does not match n");
  }
  for (const auto & v : x) {
    if (!v.is_zero() && v != Rational(1)) {
      throw Error(ErrorCode::kNotAVertex, "expected a point of {0,1}^n");
    }
  }
}

std::string format_dims(const std::vector<std::size_t> & dims)
{
  std::string out = "{";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out += (i ? "," : "") + std::to_string(dims[i]);
  }
  return out + "}";
}

// Calls visit(v) for every vertex of the face; stops early if visit returns false.
template <typename Visit>
bool visit_face_vertices(const Face & face, Visit && visit)
{
  std::uint32_t sub = 0;
  for (;;) {
    if (!visit(face.fixed_bits | sub)) {
      return false;
    }
    if (sub == face.free_mask) {
      return true;
    }
    sub = (sub - face.free_mask) & face.free_mask;
  }
}

}  // namespace

Point unit_vertex(std::size_t n, VertexId id) { return BoxProgram(n).vertex_from_id(id); }

Rational pp(std::size_t n, std::span<const Rational> x, std::size_t k)
{
  if (x.size() != n || k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "pp: index out of range");
  }
  // x_0 := 1
  Rational out = k == 1 ? Rational(1) : x[k - 2];
  for (std::size_t j = 1; j + 2 <= k; ++j) {
    out *= Rational(1) - x[j - 1];
  }
  return out;
}

int s_parity(std::size_t n, std::span<const Rational> x, std::size_t k)
{
  check_unit_vertex(n, x);
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "s_parity: index out of range");
  }
  int parity = 0;
  for (std::size_t j = k + 1; j <= n; ++j) {
    parity ^= x[j - 1].is_zero() ? 0 : 1;
  }
  return parity;
}

std::vector<std::size_t> improving_dimensions_by_gradient(std::size_t n, std::span<const Rational> x)
{
  check_unit_vertex(n, x);
  const Vector grad = LowerBoundPolynomial(n).gradient(x);
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const int g = grad[k - 1].sign();
    const bool at_zero = x[k - 1].is_zero();
    if ((g > 0 && at_zero) || (g < 0 && !at_zero)) {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<std::size_t> improving_dimensions_by_predicates(std::size_t n, std::span<const Rational> x)
{
  check_unit_vertex(n, x);
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const int xk = x[k - 1].is_zero() ? 0 : 1;
    if (s_parity(n, x, k) == xk && pp(n, x, k) == Rational(1)) {
      out.push_back(k);
    }
  }
  return out;
}

std::optional<std::size_t> improving_dimension(std::size_t n, std::span<const Rational> x)
{
  const auto by_gradient = improving_dimensions_by_gradient(n, x);
  const auto by_predicates = improving_dimensions_by_predicates(n, x);
  if (by_gradient != by_predicates) {
    throw Error(
      ErrorCode::kAmbiguous,
      "gradient signs give " + format_dims(by_gradient) + ", pp/S predicates give " + format_dims(by_predicates));
  }
  if (by_gradient.size() > 1) {
    throw Error(ErrorCode::kAmbiguous, "several improving dimensions " + format_dims(by_gradient));
  }
  const bool is_top = BoxProgram(n).vertex_id(x) == (VertexId{1} << (n - 1));
  if (by_gradient.empty()) {
    if (!is_top) {
      throw Error(ErrorCode::kAmbiguous, "no improving dimension at a vertex other than e^n");
    }
    return std::nullopt;
  }
  if (is_top) {
    throw Error(ErrorCode::kAmbiguous, "e^n has an improving dimension");
  }
  return by_gradient.front();
}

GrayPath hamiltonian_path(std::size_t n)
{
  check_cube_dimension(n);
  GrayPath path{n, {}};
  const VertexId count = VertexId{1} << n;
  VertexId v = 0;
  for (;;) {
    path.vertices.push_back(v);
    const auto k = improving_dimension(n, unit_vertex(n, v));
    if (!k) {
      break;
    }
    if (path.vertices.size() >= count) {
      throw Error(ErrorCode::kAmbiguous, "improving walk is longer than the number of vertices");
    }
    v ^= VertexId{1} << (*k - 1);
  }
  return path;
}

std::vector<VertexId> reflected_gray_code(std::size_t n)
{
  check_cube_dimension(n);
  std::vector<VertexId> out(VertexId{1} << n);
  for (VertexId i = 0; i < out.size(); ++i) {
    out[i] = i ^ (i >> 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

Orientation::Orientation(std::size_t n, std::vector<std::uint32_t> outgoing) : n_(n), outgoing_(std::move(outgoing))
{
  check_cube_dimension(n);
  if (outgoing_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidArgument, "orientation needs one mask per vertex");
  }
  for (VertexId v = 0; v < outgoing_.size(); ++v) {
    for (std::size_t k = 0; k < n; ++k) {
      const VertexId u = v ^ (VertexId{1} << k);
      const bool v_out = ((outgoing_[v] >> k) & 1U) != 0;
      const bool u_out = ((outgoing_[u] >> k) & 1U) != 0;
      if (v_out == u_out) {
        throw Error(ErrorCode::kInvalidArgument, "edge endpoints disagree on its direction");
      }
    }
  }
}

Orientation Orientation::from_edges(std::size_t n, const std::function<EdgeDirection(VertexId, int)> & direction)
{
  check_cube_dimension(n);
  std::vector<std::uint32_t> out(std::size_t{1} << n, 0);
  for (VertexId v = 0; v < out.size(); ++v) {
    for (std::size_t k = 0; k < n; ++k) {
      const VertexId bit = VertexId{1} << k;
      if ((v & bit) != 0) {
        continue;
      }
      if (direction(v, static_cast<int>(k + 1)) == EdgeDirection::kForward) {
        out[v] |= static_cast<std::uint32_t>(bit);
      } else {
        out[v | bit] |= static_cast<std::uint32_t>(bit);
      }
    }
  }
  return Orientation(n, std::move(out));
}

std::vector<int> Orientation::outgoing(VertexId v) const
{
  std::vector<int> out;
  for (std::size_t k = 0; k < n_; ++k) {
    if (((outgoing_.at(v) >> k) & 1U) != 0) {
      out.push_back(static_cast<int>(k + 1));
    }
  }
  return out;
}

EdgeDirection Orientation::edge_direction(VertexId v, int coord) const
{
  const VertexId bit = VertexId{1} << (coord - 1);
  const VertexId low = v & ~bit;
  return ((outgoing_.at(low) & bit) != 0) ? EdgeDirection::kForward : EdgeDirection::kBackward;
}

Orientation induce_orientation(std::span<const Rational> vertex_values, std::size_t n)
{
  check_cube_dimension(n);
  if (vertex_values.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kDimensionMismatch, "need one value per vertex");
  }
  std::vector<std::uint32_t> out(vertex_values.size(), 0);
  for (VertexId v = 0; v < out.size(); ++v) {
    for (std::size_t k = 0; k < n; ++k) {
      const VertexId u = v ^ (VertexId{1} << k);
      const auto cmp = vertex_values[v] <=> vertex_values[u];
      if (cmp == 0) {
        throw Error(ErrorCode::kTie, "vertices " + std::to_string(v) + " and " + std::to_string(u) + " share a value");
      }
      if (cmp < 0) {
        out[v] |= std::uint32_t{1} << k;
      }
    }
  }
  return Orientation(n, std::move(out));
}

Orientation induce_orientation(const ObjectiveOracle & objective, std::size_t n)
{
  if (objective.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "objective dimension does not match n");
  }
  check_cube_dimension(n);
  const BoxProgram cube(n);
  std::vector<Rational> values;
  values.reserve(std::size_t{1} << n);
  for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
    values.push_back(objective.value(cube.vertex_from_id(v)));
  }
  return induce_orientation(values, n);
}

// ---------------------------------------------------------------------------

int Face::dimension() const { return std::popcount(free_mask); }

bool Face::contains(VertexId v) const { return (v & ~static_cast<VertexId>(free_mask)) == fixed_bits; }

std::string Face::pattern() const
{
  std::string out;
  for (std::size_t k = 0; k < n; ++k) {
    if (((free_mask >> k) & 1U) != 0) {
      out += '*';
    } else {
      out += ((fixed_bits >> k) & 1U) != 0 ? '1' : '0';
    }
  }
  return out;
}

std::vector<int> Face::support() const
{
  std::vector<int> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (((free_mask >> k) & 1U) != 0) {
      out.push_back(static_cast<int>(k + 1));
    }
  }
  return out;
}

Face Face::whole(std::size_t n) { return Face{n, static_cast<std::uint32_t>((VertexId{1} << n) - 1), 0}; }

namespace
{

// Enumerates faces in (free_mask, fixed_bits) order; stops when visit returns false.
template <typename Visit>
void scan_faces(std::size_t n, Visit && visit)
{
  const std::uint32_t full = static_cast<std::uint32_t>((VertexId{1} << n) - 1);
  for (std::uint32_t free = 0;; ++free) {
    const std::uint32_t pinned = full & ~free;
    std::uint32_t fixed = 0;
    for (;;) {
      if (!visit(Face{n, free, fixed})) {
        return;
      }
      if (fixed == pinned) {
        break;
      }
      fixed = (fixed - pinned) & pinned;
    }
    if (free == full) {
      return;
    }
  }
}

}  // namespace

void for_each_face(std::size_t n, const std::function<void(const Face &)> & visit)
{
  check_cube_dimension(n);
  scan_faces(n, [&](const Face & f) {
    visit(f);
    return true;
  });
}

std::vector<VertexId> face_sinks(const Orientation & o, const Face & face)
{
  std::vector<VertexId> sinks;
  visit_face_vertices(face, [&](VertexId v) {
    if ((o.outgoing_mask(v) & face.free_mask) == 0) {
      sinks.push_back(v);
    }
    return true;
  });
  return sinks;
}

FaceCheck is_uso(const Orientation & o)
{
  FaceCheck result;
  scan_faces(o.n(), [&](const Face & face) {
    int sinks = 0;
    visit_face_vertices(face, [&](VertexId v) {
      sinks += (o.outgoing_mask(v) & face.free_mask) == 0 ? 1 : 0;
      return sinks <= 1;
    });
    if (sinks != 1) {
      result.ok = false;
      result.witness = face;
      return false;
    }
    return true;
  });
  return result;
}

std::vector<int> combed_dimension(const Orientation & o, const Face & face)
{
  std::vector<int> out;
  for (int coord : face.support()) {
    const std::uint32_t bit = std::uint32_t{1} << (coord - 1);
    std::optional<bool> forward;
    const bool uniform = visit_face_vertices(face, [&](VertexId v) {
      if ((v & bit) != 0) {
        return true;
      }
      const bool f = (o.outgoing_mask(v) & bit) != 0;
      if (!forward) {
        forward = f;
      }
      return *forward == f;
    });
    if (uniform) {
      out.push_back(coord);
    }
  }
  return out;
}

FaceCheck is_decomposable(const Orientation & o)
{
  FaceCheck result;
  scan_faces(o.n(), [&](const Face & face) {
    if (face.dimension() == 0) {
      return true;
    }
    if (combed_dimension(o, face).empty()) {
      result.ok = false;
      result.witness = face;
      return false;
    }
    return true;
  });
  return result;
}

SinkResult sink_find_decomposable(const std::function<Rational(VertexId)> & value_oracle, std::size_t n)
{
  check_cube_dimension(n);
  std::map<VertexId, Rational> cache;
  auto query = [&](VertexId v) -> const Rational & {
    auto it = cache.find(v);
    if (it == cache.end()) {
      it = cache.emplace(v, value_oracle(v)).first;
    }
    return it->second;
  };
  VertexId fixed = 0;
  for (std::size_t k = n; k-- > 0;) {
    const VertexId low = fixed;
    const VertexId high = fixed | (VertexId{1} << k);
    if (query(high) > query(low)) {
      fixed = high;
    }
  }
  return SinkResult{fixed, cache.size()};
}

}  // namespace pivotforge
