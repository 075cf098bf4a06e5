#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the order tests or bijections under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "catalan/catalan_objects.hpp"
#include "catalan/dyck.hpp"

namespace oracle {

// Frozen interval counts, n = 1..9.
inline const std::vector<std::uint64_t> kStanley{1, 3, 14, 84, 594, 4719, 40898, 379236, 3711916};
inline const std::vector<std::uint64_t> kTamari{1, 3, 13, 68, 399, 2530, 16965, 118668, 857956};
inline const std::vector<std::uint64_t> kKreweras{1, 3, 12, 55, 273, 1428, 7752, 43263, 246675};

inline std::uint64_t catalan(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
  return c[n];
}

// Every balanced non-negative word of length 2n, in lexicographic order.
inline std::vector<std::string> dyck_words(std::size_t n) {
  std::vector<std::string> out;
  const std::size_t len = 2 * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::string w(len, 'N');
    int h = 0;
    bool ok = true;
    for (std::size_t k = 0; k < len && ok; ++k) {
      // Most significant bit first so that N < S sorts lexicographically.
      const bool s = (mask >> (len - 1 - k)) & 1;
      w[k] = s ? 'S' : 'N';
      h += s ? -1 : 1;
      ok = h >= 0;
    }
    if (ok && h == 0) out.push_back(w);
  }
  return out;
}

// Step-level heights h_0..h_{2n}.
inline std::vector<int> heights(const std::string& w) {
  std::vector<int> h{0};
  for (char c : w) h.push_back(h.back() + (c == 'N' ? 1 : -1));
  return h;
}

inline bool below(const std::string& p, const std::string& q) {
  const auto a = heights(p), b = heights(q);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline bool crossing(const std::vector<std::vector<int>>& blocks) {
  std::map<int, int> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) owner[x] = static_cast<int>(b);
  std::vector<int> xs;
  for (const auto& [x, b] : owner) xs.push_back(x);
  const std::size_t m = xs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l)
          if (owner[xs[i]] == owner[xs[k]] && owner[xs[j]] == owner[xs[l]] && owner[xs[i]] != owner[xs[j]]) return true;
  return false;
}

inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  std::function<void(int)> rec = [&](int x) {
    if (x > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(x);
      rec(x + 1);
      cur[b].pop_back();
    }
    cur.push_back({x});
    rec(x + 1);
    cur.pop_back();
  };
  rec(1);
  return out;
}

inline std::vector<std::vector<std::vector<int>>> noncrossing_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& p : set_partitions(n))
    if (!crossing(p)) out.push_back(p);
  return out;
}

inline std::vector<catalan::PlaneTree> plane_trees(std::size_t edges) {
  // A forest of k edges is a first subtree (with m edges below its top edge) then the rest.
  std::vector<std::vector<catalan::PlaneTree>> memo(edges + 1);
  memo[0] = {catalan::PlaneTree{}};
  for (std::size_t e = 1; e <= edges; ++e) {
    for (std::size_t m = 0; m < e; ++m) {
      for (const auto& first : memo[m])
        for (const auto& rest : memo[e - 1 - m]) {
          catalan::PlaneTree t;
          t.children.push_back(first);
          t.children.insert(t.children.end(), rest.children.begin(), rest.children.end());
          memo[e].push_back(t);
        }
    }
  }
  return memo[edges];
}

inline std::vector<catalan::BinaryTree> binary_trees(std::size_t n) {
  std::vector<std::vector<catalan::BinaryTree>> memo(n + 1);
  memo[0] = {catalan::BinaryTree::leaf()};
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& l : memo[k])
        for (const auto& r : memo[m - 1 - k]) memo[m].push_back(catalan::BinaryTree::node(l, r));
  return memo[n];
}

// Every tree reachable from t by one right rotation ((A,B),C) -> (A,(B,C)).
inline std::vector<catalan::BinaryTree> rotate_right(const catalan::BinaryTree& t) {
  using catalan::BinaryTree;
  std::vector<BinaryTree> out;
  if (t.is_leaf()) return out;
  if (!t.left().is_leaf()) {
    out.push_back(BinaryTree::node(t.left().left(), BinaryTree::node(t.left().right(), t.right())));
  }
  for (const auto& l : rotate_right(t.left())) out.push_back(BinaryTree::node(l, t.right()));
  for (const auto& r : rotate_right(t.right())) out.push_back(BinaryTree::node(t.left(), r));
  return out;
}

// Reflexive-transitive closure of a successor relation over `words`.
inline std::set<std::pair<std::string, std::string>> closure(
    const std::vector<std::string>& words, const std::function<std::vector<std::string>(const std::string&)>& succ) {
  std::set<std::pair<std::string, std::string>> rel;
  for (const auto& w : words) {
    std::set<std::string> seen{w};
    std::queue<std::string> q;
    q.push(w);
    while (!q.empty()) {
      const std::string x = q.front();
      q.pop();
      rel.emplace(w, x);
      for (const auto& y : succ(x))
        if (seen.insert(y).second) q.push(y);
    }
  }
  return rel;
}

// Direct reading of the definition: e_i >= e_j and e_i <= e_k (resp. <) for i < k < j.
inline bool under(const std::vector<int>& e, std::size_t i, std::size_t j, bool strict) {
  if (e[i] < e[j]) return false;
  for (std::size_t k = i + 1; k < j; ++k)
    if (strict ? !(e[i] < e[k]) : !(e[i] <= e[k])) return false;
  return true;
}

}  // namespace oracle
