#include "catalan/dyck.hpp"

#include <string>

#include "catalan/error.hpp"

namespace catalan {

namespace {

void require_same_size(const DyckPath& a, const DyckPath& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::size_mismatch, "paths have different sizes (" + std::to_string(a.size()) + " vs " +
                                         std::to_string(b.size()) + ")");
  }
}

void enumerate(std::size_t n, std::vector<int>& prefix, int sum, std::vector<DyckPath>& out) {
  std::size_t i = prefix.size() + 1;
  if (i == n) {
    prefix.push_back(static_cast<int>(n) - sum);
    out.push_back(DyckPath::from_descents(prefix));
    prefix.pop_back();
    return;
  }
  for (int a = 0; sum + a <= static_cast<int>(i); ++a) {
    prefix.push_back(a);
    enumerate(n, prefix, sum + a, out);
    prefix.pop_back();
  }
}

}  // namespace

DyckPath DyckPath::from_descents(std::vector<int> descents) {
  std::vector<int> e(descents.size() + 1, 0);
  int height = 0;
  for (std::size_t i = 0; i < descents.size(); ++i) {
    if (descents[i] < 0) {
      throw Error(Errc::negative_prefix, "descent " + std::to_string(i + 1) + " is negative");
    }
    height += 1 - descents[i];
    if (height < 0) {
      throw Error(Errc::negative_prefix, "path goes below zero at descent " + std::to_string(i + 1));
    }
    e[i + 1] = height;
  }
  if (height != 0) {
    throw Error(Errc::unbalanced_word, "path ends at height " + std::to_string(height));
  }
  return DyckPath(std::move(descents), std::move(e));
}

DyckPath DyckPath::parse(std::string_view word) {
  if (word.empty()) throw Error(Errc::empty_input, "empty Dyck word", 0);
  std::vector<int> descents;
  int height = 0;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    char c = word[pos];
    if (c == 'N') {
      descents.push_back(0);
      ++height;
    } else if (c == 'S') {
      if (height == 0) {
        throw Error(Errc::negative_prefix, "prefix goes below zero at position " + std::to_string(pos), pos);
      }
      --height;
      ++descents.back();
    } else {
      throw Error(Errc::illegal_character,
                  "illegal character '" + std::string(1, c) + "' at position " + std::to_string(pos), pos);
    }
  }
  if (height != 0) {
    throw Error(Errc::unbalanced_word,
                "word is unbalanced: " + std::to_string(height) + " unmatched N at end (position " +
                    std::to_string(word.size()) + ")",
                word.size());
  }
  return from_descents(std::move(descents));
}

DyckPath DyckPath::bottom(std::size_t n) { return from_descents(std::vector<int>(n, 1)); }

DyckPath DyckPath::top(std::size_t n) {
  std::vector<int> d(n, 0);
  if (n > 0) d.back() = static_cast<int>(n);
  return from_descents(std::move(d));
}

int DyckPath::descent(std::size_t i) const {
  if (i < 1 || i > size()) {
    throw Error(Errc::index_out_of_range, "descent index " + std::to_string(i) + " outside 1.." + std::to_string(size()));
  }
  return descents_[i - 1];
}

int DyckPath::exceedence(std::size_t i) const {
  if (i > size()) {
    throw Error(Errc::index_out_of_range, "exceedence index " + std::to_string(i) + " outside 0.." + std::to_string(size()));
  }
  return exceedence_[i];
}

std::string DyckPath::word() const {
  std::string w;
  w.reserve(2 * size());
  for (int a : descents_) {
    w.push_back('N');
    w.append(static_cast<std::size_t>(a), 'S');
  }
  return w;
}

bool DyckPath::under(std::size_t i, std::size_t j, bool strict) const {
  if (i > j || j > size()) {
    throw Error(Errc::index_out_of_range, "relation needs 0 <= i <= j <= n, got i=" + std::to_string(i) +
                                              ", j=" + std::to_string(j));
  }
  const int ei = exceedence_[i];
  if (ei < exceedence_[j]) return false;
  for (std::size_t k = i + 1; k < j; ++k) {
    if (strict ? !(ei < exceedence_[k]) : !(ei <= exceedence_[k])) return false;
  }
  return true;
}

bool DyckPath::is_prime() const noexcept {
  for (std::size_t i = 1; i < size(); ++i) {
    if (exceedence_[i] == 0) return false;
  }
  return !empty();
}

int delta(const DyckPath& lower, const DyckPath& upper, std::size_t i) {
  require_same_size(lower, upper);
  return upper.exceedence(i) - lower.exceedence(i);
}

long long total_delta(const DyckPath& lower, const DyckPath& upper) {
  require_same_size(lower, upper);
  long long sum = 0;
  for (std::size_t i = 1; i <= lower.size(); ++i) sum += upper.exceedences()[i] - lower.exceedences()[i];
  return sum;
}

std::vector<int> delta_profile(const DyckPath& lower, const DyckPath& upper) {
  require_same_size(lower, upper);
  std::vector<int> d(lower.size() + 1);
  for (std::size_t i = 0; i <= lower.size(); ++i) d[i] = upper.exceedences()[i] - lower.exceedences()[i];
  return d;
}

std::vector<DyckPath> all_dyck_paths(std::size_t n) {
  std::vector<DyckPath> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  enumerate(n, prefix, 0, out);
  return out;
}

std::vector<int> tree_parents(const DyckPath& path) {
  const std::size_t n = path.size();
  std::vector<int> parent(n, -1);
  // last_at_depth[d] = most recent vertex at depth d (depth 0 is the root).
  std::vector<int> last_at_depth(n + 2, -1);
  for (std::size_t r = 0; r < n; ++r) {
    const int depth = path.exceedences()[r] + 1;
    parent[r] = last_at_depth[depth - 1];
    last_at_depth[depth] = static_cast<int>(r);
  }
  return parent;
}

}  // namespace catalan
