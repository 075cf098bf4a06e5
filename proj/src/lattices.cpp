#include "catalan/lattices.hpp"

#include <algorithm>
#include <string>

#include "catalan/catalan_objects.hpp"
#include "catalan/error.hpp"

namespace catalan {

namespace {

void require_same_size(const DyckPath& a, const DyckPath& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::size_mismatch, "paths have different sizes (" + std::to_string(a.size()) + " vs " +
                                         std::to_string(b.size()) + ")");
  }
}

std::vector<DyckPath> sorted_unique(std::vector<DyckPath> paths) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return paths;
}

}  // namespace

const char* lattice_name(LatticeKind kind) noexcept {
  switch (kind) {
    case LatticeKind::stanley: return "stanley";
    case LatticeKind::tamari: return "tamari";
    case LatticeKind::kreweras: return "kreweras";
  }
  return "unknown";
}

std::optional<LatticeKind> parse_lattice(std::string_view name) noexcept {
  if (name == "stanley") return LatticeKind::stanley;
  if (name == "tamari") return LatticeKind::tamari;
  if (name == "kreweras") return LatticeKind::kreweras;
  return std::nullopt;
}

bool leq_stanley(const DyckPath& lower, const DyckPath& upper) {
  require_same_size(lower, upper);
  const auto e = lower.exceedences();
  const auto f = upper.exceedences();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > f[i]) return false;
  }
  return true;
}

bool leq_tamari(const DyckPath& lower, const DyckPath& upper) {
  if (!leq_stanley(lower, upper)) return false;
  const auto e = lower.exceedences();
  const auto f = upper.exceedences();
  // Walk the tree of P by depth: ancestors[d] is the current vertex at depth d.
  std::vector<std::size_t> ancestors(lower.size() + 2, 0);
  for (std::size_t r = 0; r < lower.size(); ++r) {
    const auto depth = static_cast<std::size_t>(e[r]) + 1;
    ancestors[depth] = r;
    if (depth >= 2) {
      const std::size_t parent = ancestors[depth - 1];
      if (f[parent] - e[parent] > f[r] - e[r]) return false;
    }
  }
  return true;
}

bool leq_kreweras(const DyckPath& lower, const DyckPath& upper) {
  require_same_size(lower, upper);
  const NoncrossingPartition fine = theta_inv(lower);
  const NoncrossingPartition coarse = theta_inv(upper);
  for (const auto& block : fine.blocks()) {
    const std::size_t target = coarse.block_of(block.front());
    for (int x : block) {
      if (coarse.block_of(x) != target) return false;
    }
  }
  return true;
}

bool leq(LatticeKind kind, const DyckPath& lower, const DyckPath& upper) {
  switch (kind) {
    case LatticeKind::stanley: return leq_stanley(lower, upper);
    case LatticeKind::tamari: return leq_tamari(lower, upper);
    case LatticeKind::kreweras: return leq_kreweras(lower, upper);
  }
  throw Error(Errc::internal, "unknown lattice kind");
}

std::vector<DyckPath> covers_stanley(const DyckPath& path) {
  std::vector<DyckPath> out;
  const auto a = path.descents();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::vector<int> b(a.begin(), a.end());
    --b[i];
    ++b[i + 1];
    out.push_back(DyckPath::from_descents(std::move(b)));
  }
  return sorted_unique(std::move(out));
}

std::vector<DyckPath> covers_tamari(const DyckPath& path) {
  std::vector<DyckPath> out;
  const auto a = path.descents();
  const std::size_t n = a.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (a[i - 1] == 0) continue;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (!path.under(i, j, true)) continue;
      std::vector<int> b(a.begin(), a.end());
      --b[i - 1];
      ++b[j - 1];
      out.push_back(DyckPath::from_descents(std::move(b)));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<DyckPath> covers_kreweras(const DyckPath& path) {
  std::vector<DyckPath> out;
  const auto a = path.descents();
  const std::size_t n = a.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (a[i - 1] == 0) continue;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (!path.under(i, j, false)) continue;
      std::vector<int> b(a.begin(), a.end());
      b[j - 1] += b[i - 1];
      b[i - 1] = 0;
      out.push_back(DyckPath::from_descents(std::move(b)));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<DyckPath> covers(LatticeKind kind, const DyckPath& path) {
  switch (kind) {
    case LatticeKind::stanley: return covers_stanley(path);
    case LatticeKind::tamari: return covers_tamari(path);
    case LatticeKind::kreweras: return covers_kreweras(path);
  }
  throw Error(Errc::internal, "unknown lattice kind");
}

IntervalStream::IntervalStream(LatticeKind kind, std::size_t n, std::size_t shard_index, std::size_t shard_count,
                               std::size_t limit)
    : kind_(kind), n_(n) {
  if (n == 0) throw Error(Errc::index_out_of_range, "interval enumeration needs n >= 1");
  if (n > limit) {
    throw Error(Errc::limit_exceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit));
  }
  if (shard_count == 0 || shard_index >= shard_count) {
    throw Error(Errc::index_out_of_range, "shard " + std::to_string(shard_index) + " of " + std::to_string(shard_count));
  }
  paths_ = all_dyck_paths(n);
  const std::size_t total = paths_.size();
  lower_ = total * shard_index / shard_count;
  lower_end_ = total * (shard_index + 1) / shard_count;
}

bool IntervalStream::next(Interval& out) {
  while (lower_ < lower_end_) {
    while (upper_ < paths_.size()) {
      const DyckPath& q = paths_[upper_++];
      if (leq(kind_, paths_[lower_], q)) {
        out = Interval{kind_, paths_[lower_], q};
        return true;
      }
    }
    ++lower_;
    upper_ = 0;
  }
  return false;
}

std::vector<Interval> intervals(LatticeKind kind, std::size_t n, std::size_t limit) {
  std::vector<Interval> out;
  IntervalStream stream(kind, n, 0, 1, limit);
  Interval iv;
  while (stream.next(iv)) out.push_back(iv);
  return out;
}

std::uint64_t count_intervals(LatticeKind kind, std::size_t n, std::size_t limit) {
  std::uint64_t count = 0;
  IntervalStream stream(kind, n, 0, 1, limit);
  Interval iv;
  while (stream.next(iv)) ++count;
  return count;
}

}  // namespace catalan
