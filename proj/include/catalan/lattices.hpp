#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "catalan/dyck.hpp"

namespace catalan {

enum class LatticeKind { stanley, tamari, kreweras };

const char* lattice_name(LatticeKind kind) noexcept;
std::optional<LatticeKind> parse_lattice(std::string_view name) noexcept;

struct Interval {
  LatticeKind lattice;
  DyckPath lower;
  DyckPath upper;
};

// P stays below Q: e_i(P) <= e_i(Q) for all i.
bool leq_stanley(const DyckPath& lower, const DyckPath& upper);
// P <=_S Q and delta is weakly increasing from parent to child along every
// edge u_i -> u_j of the plane tree omega^{-1}(P). O(n).
bool leq_tamari(const DyckPath& lower, const DyckPath& upper);
// theta^{-1}(P) refines theta^{-1}(Q). O(n).
bool leq_kreweras(const DyckPath& lower, const DyckPath& upper);

bool leq(LatticeKind kind, const DyckPath& lower, const DyckPath& upper);

// Upper covers of P, sorted by word.
std::vector<DyckPath> covers_stanley(const DyckPath& path);
std::vector<DyckPath> covers_tamari(const DyckPath& path);
std::vector<DyckPath> covers_kreweras(const DyckPath& path);
std::vector<DyckPath> covers(LatticeKind kind, const DyckPath& path);

inline constexpr std::size_t kDefaultIntervalLimit = 9;

// Streams the comparable pairs (P, Q) of one lattice in lexicographic order
// of (P, Q). The lower paths are split into `shard_count` contiguous runs of
// the word order; shard `shard_index` only visits its own run.
class IntervalStream {
 public:
  IntervalStream(LatticeKind kind, std::size_t n, std::size_t shard_index = 0, std::size_t shard_count = 1,
                 std::size_t limit = kDefaultIntervalLimit);

  // Returns false when exhausted.
  bool next(Interval& out);

  std::size_t size() const noexcept { return n_; }

 private:
  LatticeKind kind_;
  std::size_t n_;
  std::vector<DyckPath> paths_;
  std::size_t lower_ = 0;
  std::size_t lower_end_ = 0;
  std::size_t upper_ = 0;
};

std::vector<Interval> intervals(LatticeKind kind, std::size_t n, std::size_t limit = kDefaultIntervalLimit);
std::uint64_t count_intervals(LatticeKind kind, std::size_t n, std::size_t limit = kDefaultIntervalLimit);

}  // namespace catalan
