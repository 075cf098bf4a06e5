#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace catalan {

using VertexId = int;
using DartId = int;

inline constexpr VertexId kNoVertex = -1;

// Rotation-system encoding of a map on the sphere. Each edge is a pair of
// darts (half-edges) exchanged by twin(); next(d) is the dart following d in
// clockwise order around origin(d). The face to the left of a dart d is the
// orbit of face_next(d) = next(twin(d)); every corner (d, next(d)) belongs to
// the face of next(d).
class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  // rotations[v] lists the darts leaving v in clockwise order; twin must be a
  // fixed-point-free involution over 0..D-1 and every dart must appear in
  // exactly one rotation. Throws Errc::malformed_map otherwise.
  CombinatorialMap(std::vector<std::vector<DartId>> rotations, std::vector<DartId> twin);

  // Builds a simple map from clockwise neighbour lists. Dart ids are assigned
  // vertex by vertex in list order.
  static CombinatorialMap from_neighbors(const std::vector<std::vector<VertexId>>& neighbors);

  std::size_t vertex_count() const noexcept { return rotations_.size(); }
  std::size_t dart_count() const noexcept { return twin_.size(); }
  std::size_t edge_count() const noexcept { return twin_.size() / 2; }

  VertexId origin(DartId d) const { return origin_[static_cast<std::size_t>(d)]; }
  VertexId head(DartId d) const { return origin(twin(d)); }
  DartId twin(DartId d) const { return twin_[static_cast<std::size_t>(d)]; }
  DartId next(DartId d) const { return next_[static_cast<std::size_t>(d)]; }
  DartId prev(DartId d) const { return prev_[static_cast<std::size_t>(d)]; }
  DartId face_next(DartId d) const { return next(twin(d)); }

  std::span<const DartId> rotation(VertexId v) const { return rotations_[static_cast<std::size_t>(v)]; }
  std::size_t degree(VertexId v) const { return rotations_[static_cast<std::size_t>(v)].size(); }
  const std::vector<std::vector<DartId>>& rotations() const noexcept { return rotations_; }
  const std::vector<DartId>& twins() const noexcept { return twin_; }

  std::optional<DartId> dart_between(VertexId from, VertexId to) const;

  // face_index()[d] = id of the face to the left of d; faces numbered by
  // smallest dart.
  std::vector<int> face_index(std::size_t* face_count = nullptr) const;
  std::size_t face_count() const;
  // Darts of the face containing d, in face_next order starting at d.
  std::vector<DartId> face_darts(DartId d) const;

  bool is_connected() const;
  bool has_loop_or_multi_edge() const;
  // Euler characteristic V - E + F.
  long euler_characteristic() const;

 private:
  std::vector<std::vector<DartId>> rotations_;
  std::vector<DartId> twin_;
  std::vector<VertexId> origin_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
};

// Rooted triangulation. The root dart r leaves the root vertex v0 and points
// to v1; the root face is the face of next(r), whose third vertex is v2. Seen
// from that face, v0, v1, v2 appear counterclockwise.
class Triangulation {
 public:
  Triangulation() = default;
  // Throws Errc::malformed_map unless the map is a simple, connected, planar
  // map whose faces all have degree 3 and whose root face is a triangle.
  Triangulation(CombinatorialMap map, DartId root);

  const CombinatorialMap& map() const noexcept { return map_; }
  DartId root() const noexcept { return root_; }
  VertexId v0() const noexcept { return outer_[0]; }
  VertexId v1() const noexcept { return outer_[1]; }
  VertexId v2() const noexcept { return outer_[2]; }
  VertexId outer(int i) const { return outer_[static_cast<std::size_t>(i)]; }
  bool is_external(VertexId v) const noexcept { return v == outer_[0] || v == outer_[1] || v == outer_[2]; }
  bool is_external_edge(DartId d) const { return is_external(map_.origin(d)) && is_external(map_.head(d)); }

  // Number of internal vertices.
  std::size_t size() const noexcept { return map_.vertex_count() - 3; }
  std::vector<VertexId> internal_vertices() const;

 private:
  CombinatorialMap map_;
  DartId root_ = 0;
  std::array<VertexId, 3> outer_{};
};

}  // namespace catalan
