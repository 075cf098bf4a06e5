#include "catalan/stack.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "catalan/error.hpp"

namespace catalan {

TernaryTree TernaryTree::node(TernaryTree first, TernaryTree second, TernaryTree third) {
  const std::size_t size = 1 + first.size() + second.size() + third.size();
  return TernaryTree(std::make_shared<const Node>(Node{{std::move(first), std::move(second), std::move(third)}, size}));
}

const TernaryTree& TernaryTree::child(std::size_t k) const {
  if (!node_) throw Error(Errc::precondition, "a leaf has no children");
  if (k >= 3) throw Error(Errc::index_out_of_range, "child index " + std::to_string(k) + " out of range");
  return node_->children[k];
}

std::size_t TernaryTree::size() const noexcept { return node_ ? node_->size : 0; }

bool operator==(const TernaryTree& a, const TernaryTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->size == b.node_->size && a.node_->children == b.node_->children;
}

std::vector<TernaryTree> all_ternary_trees(std::size_t n) {
  std::vector<std::vector<TernaryTree>> memo(n + 1);
  memo[0] = {TernaryTree::leaf()};
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; i + j < m; ++j) {
        const std::size_t k = m - 1 - i - j;
        for (const auto& a : memo[i])
          for (const auto& b : memo[j])
            for (const auto& c : memo[k]) memo[m].push_back(TernaryTree::node(a, b, c));
      }
    }
  }
  return memo[n];
}

bool is_stack(const Triangulation& triangulation) {
  const CombinatorialMap& m = triangulation.map();
  std::vector<std::set<VertexId>> adj(m.vertex_count());
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    for (DartId d : m.rotation(static_cast<VertexId>(v))) adj[v].insert(m.head(d));
  }
  std::queue<VertexId> queue;
  std::vector<bool> removed(m.vertex_count(), false);
  for (VertexId v : triangulation.internal_vertices()) {
    if (adj[static_cast<std::size_t>(v)].size() == 3) queue.push(v);
  }
  std::size_t remaining = triangulation.size();
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    const auto vi = static_cast<std::size_t>(v);
    if (removed[vi] || adj[vi].size() != 3) continue;
    removed[vi] = true;
    --remaining;
    for (VertexId w : adj[vi]) {
      auto& aw = adj[static_cast<std::size_t>(w)];
      aw.erase(v);
      if (!triangulation.is_external(w) && aw.size() == 3) queue.push(w);
    }
    adj[vi].clear();
  }
  return remaining == 0;
}

namespace {

void insert_after(std::vector<VertexId>& rotation, VertexId after, VertexId x) {
  const auto it = std::find(rotation.begin(), rotation.end(), after);
  rotation.insert(it + 1, x);
}

void grow(const TernaryTree& tree, VertexId a, VertexId b, VertexId c, VertexId& next_id,
          std::vector<std::vector<VertexId>>& nb) {
  if (tree.is_leaf()) return;
  const VertexId x = next_id++;
  insert_after(nb[static_cast<std::size_t>(a)], c, x);
  insert_after(nb[static_cast<std::size_t>(b)], a, x);
  insert_after(nb[static_cast<std::size_t>(c)], b, x);
  nb[static_cast<std::size_t>(x)] = {a, c, b};
  grow(tree.child(0), x, b, c, next_id, nb);
  grow(tree.child(1), a, x, c, next_id, nb);
  grow(tree.child(2), a, b, x, next_id, nb);
}

}  // namespace

Triangulation ternary_to_stack(const TernaryTree& tree) {
  const auto n = static_cast<VertexId>(tree.size());
  const VertexId v0 = n, v1 = n + 1, v2 = n + 2;
  std::vector<std::vector<VertexId>> nb(static_cast<std::size_t>(n) + 3);
  nb[static_cast<std::size_t>(v0)] = {v1, v2};
  nb[static_cast<std::size_t>(v1)] = {v2, v0};
  nb[static_cast<std::size_t>(v2)] = {v0, v1};
  VertexId next_id = 0;
  grow(tree, v0, v1, v2, next_id, nb);
  CombinatorialMap map = CombinatorialMap::from_neighbors(nb);
  const DartId root = *map.dart_between(v0, v1);
  return Triangulation(std::move(map), root);
}

namespace {

struct StackReader {
  const CombinatorialMap& m;
  std::size_t visited = 0;

  bool adjacent(VertexId a, VertexId b) const { return m.dart_between(a, b).has_value(); }

  TernaryTree read(VertexId a, VertexId b, VertexId c) {
    const DartId ba = *m.dart_between(b, a);
    const DartId bc = *m.dart_between(b, c);
    VertexId apex = kNoVertex;
    int found = 0;
    for (DartId d = m.next(ba); d != bc; d = m.next(d)) {
      if (d == ba) throw Error(Errc::not_stack, "corner walk did not close");
      const VertexId y = m.head(d);
      if (adjacent(y, a) && adjacent(y, c)) {
        apex = y;
        ++found;
      }
    }
    if (m.next(ba) == bc) return TernaryTree::leaf();
    if (found != 1) throw Error(Errc::not_stack, "no unique apex inside a triangle");
    if (++visited > m.vertex_count()) throw Error(Errc::not_stack, "apex recursion does not terminate");
    TernaryTree first = read(apex, b, c);
    TernaryTree second = read(a, apex, c);
    TernaryTree third = read(a, b, apex);
    return TernaryTree::node(std::move(first), std::move(second), std::move(third));
  }
};

}  // namespace

TernaryTree stack_to_ternary(const Triangulation& triangulation) {
  if (!is_stack(triangulation)) throw Error(Errc::not_stack, "the triangulation is not a stack triangulation");
  StackReader reader{triangulation.map()};
  TernaryTree tree = reader.read(triangulation.v0(), triangulation.v1(), triangulation.v2());
  if (tree.size() != triangulation.size()) throw Error(Errc::not_stack, "apex decomposition does not cover every vertex");
  return tree;
}

}  // namespace catalan
