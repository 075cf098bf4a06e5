#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "catalan/planar_map.hpp"

namespace catalan {

// Colour and orientation carried by one dart. External darts have colour -1.
struct DartLabel {
  int color = -1;
  bool tail = false;

  bool external() const noexcept { return color < 0; }
  friend bool operator==(const DartLabel&, const DartLabel&) = default;
};

inline constexpr DartLabel kExternalDart{};
inline constexpr DartLabel tail_of(int color) { return DartLabel{color, true}; }
inline constexpr DartLabel head_of(int color) { return DartLabel{color, false}; }

// A triangulation together with a colouring/orientation of its internal
// edges. Construction only checks array sizes; validate_realizer() decides
// whether the colouring is a Schnyder wood.
class Realizer {
 public:
  Realizer() = default;
  Realizer(Triangulation triangulation, std::vector<DartLabel> labels);

  const Triangulation& triangulation() const noexcept { return tri_; }
  const CombinatorialMap& map() const noexcept { return tri_.map(); }
  std::size_t size() const noexcept { return tri_.size(); }
  const DartLabel& label(DartId d) const { return labels_[static_cast<std::size_t>(d)]; }
  const std::vector<DartLabel>& labels() const noexcept { return labels_; }

  // p_i(v): head of the i-tail at v, kNoVertex if v has none.
  VertexId parent(int color, VertexId v) const { return parent_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)]; }
  DartId parent_dart(int color, VertexId v) const {
    return parent_dart_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)];
  }

 private:
  Triangulation tri_;
  std::vector<DartLabel> labels_;
  std::array<std::vector<VertexId>, 3> parent_;
  std::array<std::vector<DartId>, 3> parent_dart_;
};

struct Violation {
  enum class Kind { coloring, tree, schnyder };
  Kind kind;
  VertexId vertex = kNoVertex;
  DartId dart = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Violation::Kind kind) const noexcept;
  std::string summary() const;
};

// Checks the colouring, the tree condition for T0, T1, T2 and the clockwise
// pattern "0-tail, 1-heads, 2-tail, 0-heads, 1-tail, 2-heads" around every
// internal vertex. Map-level invariants are enforced by Triangulation itself.
ValidationReport validate_realizer(const Realizer& realizer);

using Triple = std::tuple<VertexId, VertexId, VertexId>;

// (u, v, w) with p0(u) = v, p2(v) = w, p1(w) = u.
std::vector<Triple> find_cw_triangles(const Realizer& realizer);
// (u, v, w) with p0(u) = v, p1(v) = w, p2(w) = u.
std::vector<Triple> find_ccw_triangles(const Realizer& realizer);

bool is_minimal(const Realizer& realizer);
bool is_maximal(const Realizer& realizer);
// For every internal u, p0(p1(u)) is an ancestor of u in T0 (with p0(v1) = v0).
bool is_minimal_by_ancestors(const Realizer& realizer);
// For every internal u: p0(p1(u)) = p0(u) or p1(p0(u)) = p1(u), reading the
// external edge v0v1 as p0(v1) = v0 and p1(v0) = v1.
bool is_min_and_max(const Realizer& realizer);

// Restriction of the realizer to the triangulation without the internal
// degree-3 vertex v. Vertex ids above v shift down by one.
Realizer remove_degree3(const Realizer& realizer, VertexId v);

// Simple cycles of length 3 and 4 (up to max_length) checked against the
// count "tails incident with C strictly inside C = |C| - 3". Returns one
// message per failing cycle.
std::vector<std::string> cycle_tail_violations(const Realizer& realizer, std::size_t max_length = 4);

}  // namespace catalan
