#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "catalan/catalan_objects.hpp"
#include "catalan/dyck.hpp"
#include "catalan/planar_map.hpp"
#include "catalan/realizer.hpp"

namespace catalan {

// Role of a dart in a (pre)realizer: i-tail, i-head or external.
enum class DartRole { t0, h0, t1, h1, t2, h2, external };

const char* role_name(DartRole role) noexcept;
DartRole role_of(const DartLabel& label) noexcept;
DartLabel label_of(DartRole role) noexcept;

// Vertex numbering shared by every stage of the construction: internal
// vertices u_0..u_{n-1} in preorder of T0, then v0 = n, v1 = n + 1,
// v2 = n + 2.
struct Slot {
  VertexId vertex = kNoVertex;
  DartRole role = DartRole::external;
  int twin = -1;  // slot id; -1 for 1-edge slots before matching
};

// T0-bar with a 1-tail glued in the last corner of every u_i and beta_i
// 1-heads in its first corner (beta_n of them at v1).
struct AnnotatedTour {
  std::size_t n = 0;
  std::vector<VertexId> t0_parent;           // over u_0..u_{n-1}; v0 = n
  std::vector<Slot> slots;
  std::vector<std::vector<int>> rotation;    // clockwise slot ids for u_0..u_{n-1}, v0, v1
  std::vector<int> tokens;                   // 1-edge slots in tour order

  // 'N' for each 1-tail, 'S' for each 1-head, in tour order.
  std::string word() const;
};

AnnotatedTour glue_step(const DyckPath& lower, const DyckPath& upper);

struct Prerealizer {
  std::size_t n = 0;
  std::vector<VertexId> t0_parent;  // v0 = n
  std::vector<VertexId> t1_parent;  // v1 = n + 1
  CombinatorialMap map;             // T0-bar plus T1 on n + 2 vertices
  std::vector<DartRole> roles;      // the edge v0v1 is external
  DartId root = -1;                 // v0 -> v1
};

// Pairs each 1-head with the most recent unmatched 1-tail.
Prerealizer match_parentheses(const AnnotatedTour& tour);

// Tree, corner and order conditions; one message per failure.
std::vector<std::string> validate_prerealizer(const Prerealizer& prerealizer);

enum class CornerType { h1h0, h1t1, t0h0, t0t1, t1t0, h0h0, h0t1, h1h1, t0h1, other };

const char* corner_name(CornerType type) noexcept;

struct FaceTrace {
  bool outer = false;
  std::vector<VertexId> vertices;   // x_1..x_k; x_1 carries the (t1, t0)-corner
  std::vector<CornerType> corners;  // c_1..c_k
  std::size_t t1t0_corners = 0;
};

struct CompletionTrace {
  std::vector<FaceTrace> faces;
};

// Adds v2 and the unique tree T2. Throws Errc::internal when a face does not
// match the corner classification.
Realizer complete_t2(const Prerealizer& prerealizer, CompletionTrace* trace = nullptr);

// Throws Errc::size_mismatch or Errc::not_comparable unless lower <=_S upper.
// With validate set, the output is checked by validate_realizer.
Realizer phi(const DyckPath& lower, const DyckPath& upper, bool validate = false);

// Clockwise tour of T0-bar: v0 first, v1 as the rightmost child of v0.
struct TreeTour {
  std::vector<VertexId> preorder;      // internal vertices in visit order
  std::vector<VertexId> t0_parent;     // per vertex, kNoVertex for v0, v1, v2
  std::vector<int> position;           // per dart, tour index of non-tree darts, -1 on tree darts
  std::vector<int> first_corner_end;   // per vertex, tour index after the 1-heads of its first corner
  PlaneTree tree;                      // T0 rooted at v0
};

TreeTour tree_tour(const Realizer& realizer);

// Throws Errc::invalid_realizer on input that fails validate_realizer.
std::pair<DyckPath, DyckPath> psi(const Realizer& realizer);

// 1-tails met before the first corner of u_i whose head comes later.
int available_tails(const DyckPath& lower, const DyckPath& upper, std::size_t i);
std::vector<int> available_tails(const Realizer& realizer);

// delta does not decrease from parent to child in T0 = omega_inv(lower).
bool minimality_from_paths(const DyckPath& lower, const DyckPath& upper);

// 1-edges whose head precedes their tail in the tour of T0-bar.
std::vector<std::string> tail_before_head_violations(const Realizer& realizer);

}  // namespace catalan
