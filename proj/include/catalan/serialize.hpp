#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catalan/catalan_objects.hpp"
#include "catalan/lattices.hpp"
#include "catalan/realizer.hpp"
#include "catalan/stack.hpp"

namespace catalan {

// Plane tree: array of children, each a plane tree ("[[],[[]]]").
std::string plane_tree_to_json(const PlaneTree& tree);
PlaneTree plane_tree_from_json(const std::string& text);

// Binary tree: null for a leaf, [left, right] for a node.
std::string binary_tree_to_json(const BinaryTree& tree);
BinaryTree binary_tree_from_json(const std::string& text);

// Non-crossing partition: array of blocks over 1..n.
std::string partition_to_json(const NoncrossingPartition& partition);
NoncrossingPartition partition_from_json(const std::string& text);

// Ternary tree: null for a leaf, [first, second, third] for a node.
std::string ternary_tree_to_json(const TernaryTree& tree);
TernaryTree ternary_tree_from_json(const std::string& text);

// Forms: "word", "tree", "binary", "partition". Non-word outputs are compact JSON.
std::string convert(const std::string& from, const std::string& to, const std::string& input);

std::string paths_to_json(const std::vector<DyckPath>& paths);

// {"n", "t0", "q_word", "p0", "p1", "p2"}; parents are preorder indices of
// internal vertices, or -1, -2, -3 for v0, v1, v2.
std::string realizer_to_json(const Realizer& realizer, int indent = 2);
// Rebuilds the realizer from t0 and q_word and checks the parent arrays.
Realizer realizer_from_json(const std::string& text);

std::string realizer_to_dot(const Realizer& realizer);
std::string hasse_dot(LatticeKind kind, std::size_t n);

}  // namespace catalan
