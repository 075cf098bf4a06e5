#include "catalan/catalan_objects.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "catalan/error.hpp"

namespace catalan {

std::size_t PlaneTree::size() const noexcept {
  std::size_t total = children.size();
  for (const auto& child : children) total += child.size();
  return total;
}

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
  const std::size_t size = 1 + left.size() + right.size();
  return BinaryTree(std::make_shared<const Node>(Node{std::move(left), std::move(right), size}));
}

std::size_t BinaryTree::size() const noexcept { return node_ ? node_->size : 0; }

const BinaryTree& BinaryTree::left() const {
  if (!node_) throw Error(Errc::index_out_of_range, "a leaf has no left subtree");
  return node_->left;
}

const BinaryTree& BinaryTree::right() const {
  if (!node_) throw Error(Errc::index_out_of_range, "a leaf has no right subtree");
  return node_->right;
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->size == b.node_->size && a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

bool is_noncrossing(const std::vector<std::vector<int>>& blocks) {
  int n = 0;
  for (const auto& b : blocks) {
    for (int x : b) n = std::max(n, x);
  }
  std::vector<int> label(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (int x : blocks[k]) label[static_cast<std::size_t>(x)] = static_cast<int>(k);
  }
  // Restricted to two blocks, a crossing is an ABAB pattern: three or more
  // label changes along 1..n.
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      int changes = 0;
      int prev = -1;
      for (int x = 1; x <= n; ++x) {
        const int l = label[static_cast<std::size_t>(x)];
        if (l != static_cast<int>(a) && l != static_cast<int>(b)) continue;
        if (prev != -1 && l != prev) ++changes;
        prev = l;
      }
      if (changes >= 3) return false;
    }
  }
  return true;
}

NoncrossingPartition::NoncrossingPartition(std::vector<std::vector<int>> blocks) {
  std::size_t n = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw Error(Errc::parse_error, "partition has an empty block");
    std::sort(b.begin(), b.end());
    n += b.size();
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) {
        throw Error(Errc::parse_error, "blocks do not partition {1.." + std::to_string(n) + "} (element " +
                                           std::to_string(x) + ")");
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (!is_noncrossing(blocks)) throw Error(Errc::crossing_partition, "partition is crossing");
  n_ = n;
  blocks_ = std::move(blocks);
  block_index_.assign(n, 0);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (int x : blocks_[k]) block_index_[static_cast<std::size_t>(x - 1)] = k;
  }
}

std::size_t NoncrossingPartition::block_of(int x) const {
  if (x < 1 || static_cast<std::size_t>(x) > n_) {
    throw Error(Errc::index_out_of_range, "element " + std::to_string(x) + " outside 1.." + std::to_string(n_));
  }
  return block_index_[static_cast<std::size_t>(x - 1)];
}

namespace {

void tour(const PlaneTree& tree, std::string& word) {
  for (const auto& child : tree.children) {
    word.push_back('N');
    tour(child, word);
    word.push_back('S');
  }
}

void sigma_word(const BinaryTree& tree, std::string& word) {
  if (tree.is_leaf()) return;
  sigma_word(tree.left(), word);
  word.push_back('N');
  sigma_word(tree.right(), word);
  word.push_back('S');
}

// word[begin, end) is a (possibly empty) Dyck word.
BinaryTree sigma_inv_range(const std::string& word, std::size_t begin, std::size_t end) {
  if (begin == end) return BinaryTree::leaf();
  // The final S closes the N of the last return to height zero.
  int height = 0;
  std::size_t split = begin;
  for (std::size_t k = begin; k + 1 < end; ++k) {
    if (height == 0) split = k;
    height += word[k] == 'N' ? 1 : -1;
  }
  return BinaryTree::node(sigma_inv_range(word, begin, split), sigma_inv_range(word, split + 1, end - 1));
}

using Rebuild = std::function<BinaryTree(BinaryTree)>;

// `rebuild` re-embeds a replacement for `tree` into the whole tree.
void rotations(const BinaryTree& tree, std::vector<BinaryTree>& out, const Rebuild& rebuild) {
  if (tree.is_leaf()) return;
  const BinaryTree& l = tree.left();
  if (!l.is_leaf()) {
    out.push_back(rebuild(BinaryTree::node(l.left(), BinaryTree::node(l.right(), tree.right()))));
  }
  rotations(l, out, Rebuild([&](BinaryTree sub) { return rebuild(BinaryTree::node(std::move(sub), tree.right())); }));
  rotations(tree.right(), out, Rebuild([&](BinaryTree sub) { return rebuild(BinaryTree::node(l, std::move(sub))); }));
}

}  // namespace

DyckPath omega(const PlaneTree& tree) {
  if (tree.children.empty()) throw Error(Errc::empty_input, "plane tree has no edge");
  std::string word;
  tour(tree, word);
  return DyckPath::parse(word);
}

PlaneTree omega_inv(const DyckPath& path) {
  PlaneTree root;
  std::vector<PlaneTree*> stack{&root};
  for (int a : path.descents()) {
    stack.back()->children.emplace_back();
    stack.push_back(&stack.back()->children.back());
    for (int k = 0; k < a; ++k) stack.pop_back();
  }
  return root;
}

DyckPath sigma(const BinaryTree& tree) {
  if (tree.is_leaf()) throw Error(Errc::empty_input, "binary tree has no node");
  std::string word;
  sigma_word(tree, word);
  return DyckPath::parse(word);
}

BinaryTree sigma_inv(const DyckPath& path) {
  const std::string word = path.word();
  return sigma_inv_range(word, 0, word.size());
}

DyckPath theta(const NoncrossingPartition& partition) {
  std::vector<int> descents(partition.size(), 0);
  for (const auto& block : partition.blocks()) {
    descents[static_cast<std::size_t>(block.back() - 1)] = static_cast<int>(block.size());
  }
  return DyckPath::from_descents(std::move(descents));
}

NoncrossingPartition theta_inv(const DyckPath& path) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> open;
  for (std::size_t i = 1; i <= path.size(); ++i) {
    open.push_back(static_cast<int>(i));
    const int a = path.descents()[i - 1];
    if (a == 0) continue;
    std::vector<int> block(open.end() - a, open.end());
    open.resize(open.size() - static_cast<std::size_t>(a));
    blocks.push_back(std::move(block));
  }
  return NoncrossingPartition(std::move(blocks));
}

namespace {

std::vector<std::vector<int>> merged_blocks(const NoncrossingPartition& partition, std::size_t a, std::size_t b) {
  const auto& blocks = partition.blocks();
  if (a >= blocks.size() || b >= blocks.size() || a == b) {
    throw Error(Errc::unknown_block, "merge needs two distinct blocks of the partition");
  }
  std::vector<std::vector<int>> merged;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k == b) continue;
    merged.push_back(blocks[k]);
    if (k == a) {
      merged.back().insert(merged.back().end(), blocks[b].begin(), blocks[b].end());
      std::sort(merged.back().begin(), merged.back().end());
    }
  }
  return merged;
}

}  // namespace

NoncrossingPartition merge_blocks(const NoncrossingPartition& partition, std::size_t a, std::size_t b) {
  return NoncrossingPartition(merged_blocks(partition, a, b));
}

bool mergeable(const NoncrossingPartition& partition, std::size_t a, std::size_t b) {
  return is_noncrossing(merged_blocks(partition, a, b));
}

std::vector<BinaryTree> right_rotations(const BinaryTree& tree) {
  std::vector<BinaryTree> out;
  rotations(tree, out, Rebuild([](BinaryTree t) { return t; }));
  return out;
}

}  // namespace catalan
