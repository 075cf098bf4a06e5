#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

// A Dyck path P = N S^{a_1} N S^{a_2} ... N S^{a_n}, stored by its descent
// vector (a_1, ..., a_n). The exceedence profile e_0..e_n is built once on
// construction; e_i is the height of the path right after the i-th descent.
class DyckPath {
 public:
  DyckPath() = default;

  // Throws Errc::unbalanced_word / negative_prefix when the descents do not
  // describe a path that stays non-negative and returns to zero.
  static DyckPath from_descents(std::vector<int> descents);

  // Parses a word over {N, S}. Errors name the first offending position.
  static DyckPath parse(std::string_view word);

  // (1, 1, ..., 1): the bottom element of all three lattices.
  static DyckPath bottom(std::size_t n);
  // (0, ..., 0, n): the top element of all three lattices.
  static DyckPath top(std::size_t n);

  std::size_t size() const noexcept { return descents_.size(); }
  bool empty() const noexcept { return descents_.empty(); }

  // 1-based, 1 <= i <= n.
  int descent(std::size_t i) const;
  std::span<const int> descents() const noexcept { return descents_; }

  // 0 <= i <= n.
  int exceedence(std::size_t i) const;
  std::span<const int> exceedences() const noexcept { return exceedence_; }

  std::string word() const;

  // i ⊲_P j (non-strict) or i ⊳_P j (strict): e_i >= e_j and e_i <= e_k
  // (strict: e_i < e_k) for every i < k < j. Reflexive when i == j.
  bool under(std::size_t i, std::size_t j, bool strict = false) const;

  // Positive strictly between its endpoints.
  bool is_prime() const noexcept;

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.descents_ == b.descents_; }
  // Lexicographic on the descent vector, which coincides with the word order N < S.
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.descents_ < b.descents_; }

 private:
  explicit DyckPath(std::vector<int> descents, std::vector<int> exceedence)
      : descents_(std::move(descents)), exceedence_(std::move(exceedence)) {}

  std::vector<int> descents_;
  std::vector<int> exceedence_{0};
};

// delta_i(P, Q) = e_i(Q) - e_i(P).
int delta(const DyckPath& lower, const DyckPath& upper, std::size_t i);
// Delta(P, Q) = sum_{i=1..n} delta_i(P, Q).
long long total_delta(const DyckPath& lower, const DyckPath& upper);
// Full profile delta_0..delta_n.
std::vector<int> delta_profile(const DyckPath& lower, const DyckPath& upper);

// Every Dyck path of size n, in increasing word order.
std::vector<DyckPath> all_dyck_paths(std::size_t n);

// Index of the parent of each non-root vertex u_0..u_{n-1} of the plane tree
// encoded by P, with -1 standing for the root v_0. Vertex u_r sits at depth
// e_r + 1 and hangs from the last vertex at depth e_r preceding it.
std::vector<int> tree_parents(const DyckPath& path);

}  // namespace catalan
