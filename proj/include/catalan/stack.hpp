#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "catalan/planar_map.hpp"

namespace catalan {

// Ternary tree: a leaf or a node with three ordered subtrees. Immutable.
class TernaryTree {
 public:
  TernaryTree() = default;  // leaf
  static TernaryTree leaf() { return TernaryTree(); }
  static TernaryTree node(TernaryTree first, TernaryTree second, TernaryTree third);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  const TernaryTree& child(std::size_t k) const;
  std::size_t size() const noexcept;

  friend bool operator==(const TernaryTree& a, const TernaryTree& b);

 private:
  struct Node;
  explicit TernaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TernaryTree::Node {
  std::array<TernaryTree, 3> children;
  std::size_t size;
};

std::vector<TernaryTree> all_ternary_trees(std::size_t n);

// True when peeling internal degree-3 vertices (in any order) empties the
// interior of the outer triangle.
bool is_stack(const Triangulation& triangulation);

// Stack triangulation built by inserting a vertex into the inner face
// (v0, v1, v2) for the root and recursing into (x, v1, v2), (v0, x, v2),
// (v0, v1, x) for the three subtrees. Internal vertices are numbered
// 0..n-1 in preorder of the tree; v0, v1, v2 are n, n+1, n+2.
Triangulation ternary_to_stack(const TernaryTree& tree);

// Inverse of ternary_to_stack. Throws Errc::not_stack on other input.
TernaryTree stack_to_ternary(const Triangulation& triangulation);

}  // namespace catalan
