#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "catalan/dyck.hpp"

namespace catalan {

// Ordered (plane) tree. Children are listed left to right, which is the order
// the clockwise tour visits them. Size is the number of edges.
struct PlaneTree {
  std::vector<PlaneTree> children;

  std::size_t size() const noexcept;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

// Binary tree: a leaf, or an ordered pair (left, right). Immutable; subtrees
// are shared between copies.
class BinaryTree {
 public:
  BinaryTree() = default;  // leaf
  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(BinaryTree left, BinaryTree right);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  const BinaryTree& left() const;
  const BinaryTree& right() const;
  // Number of internal nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);

 private:
  struct Node;
  explicit BinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  std::size_t size;
};

// Non-crossing partition of {1..n}. Blocks are kept sorted by their minimum
// and each block is sorted ascending, so equality is structural.
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;
  // Throws Errc::crossing_partition if the blocks cross, and
  // Errc::parse_error if they do not partition {1..n}.
  explicit NoncrossingPartition(std::vector<std::vector<int>> blocks);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  // Index into blocks() of the block holding element x (1-based).
  std::size_t block_of(int x) const;

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::size_t> block_index_;  // element-1 -> block
};

// True when no four elements i<j<k<l have i,k in one block and j,l in another.
bool is_noncrossing(const std::vector<std::vector<int>>& blocks);

// omega: N the first time an edge is followed, S the second time.
// Throws Errc::empty_input for the single-vertex tree.
DyckPath omega(const PlaneTree& tree);
PlaneTree omega_inv(const DyckPath& path);

// sigma(leaf) = empty, sigma((B1, B2)) = sigma(B1) N sigma(B2) S.
DyckPath sigma(const BinaryTree& tree);
BinaryTree sigma_inv(const DyckPath& path);

// theta: a_i = |block of i| when i is the maximum of its block, 0 otherwise.
DyckPath theta(const NoncrossingPartition& partition);
NoncrossingPartition theta_inv(const DyckPath& path);

// Whether blocks `a` and `b` (indices into partition.blocks()) can be merged
// without creating a crossing. Decided directly on the partition.
bool mergeable(const NoncrossingPartition& partition, std::size_t a, std::size_t b);

// The partition obtained by merging two blocks (no crossing check).
NoncrossingPartition merge_blocks(const NoncrossingPartition& partition, std::size_t a, std::size_t b);

// Trees obtained by one right rotation ((B1,B2),B3) -> (B1,(B2,B3)) at any node.
std::vector<BinaryTree> right_rotations(const BinaryTree& tree);

}  // namespace catalan
