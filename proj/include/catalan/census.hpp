#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catalan/dyck.hpp"
#include "catalan/formulas.hpp"

namespace catalan {

inline constexpr std::size_t kFullCensusCap = 7;
inline constexpr std::size_t kCountsCensusCap = 9;
inline constexpr int kCensusSchema = 1;

struct CensusOptions {
  std::size_t n = 1;
  std::size_t shards = 1;
  bool counts_only = false;
  // 0 selects the default cap (kFullCensusCap or kCountsCensusCap), which the
  // environment variable CATALAN_CENSUS_CAP overrides.
  std::size_t cap = 0;
};

struct Witness {
  DyckPath lower;
  DyckPath upper;
  std::string reason;
};

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Per-shard tallies; merge() is associative and commutative.
struct CensusTally {
  std::array<std::uint64_t, 3> intervals{0, 0, 0};  // stanley, tamari, kreweras
  std::uint64_t realizers = 0;
  std::uint64_t minimal = 0;
  std::uint64_t maximal = 0;
  std::uint64_t min_and_max = 0;
  std::uint64_t stack_realizers = 0;
  std::set<std::string> colored_codes;
  std::set<std::string> triangulation_codes;
  std::set<std::string> minimal_triangulation_codes;
  std::set<std::string> stack_codes;
  std::map<std::string, std::uint64_t> failures;  // category -> failing intervals
  std::optional<Witness> witness;                  // smallest failing interval

  void merge(const CensusTally& other);
  void fail(const DyckPath& lower, const DyckPath& upper, const std::string& category, const std::string& reason);
};

struct CensusReport {
  std::size_t n = 0;
  std::size_t shards = 1;
  bool counts_only = false;
  std::array<std::uint64_t, 3> enumerated{0, 0, 0};
  std::array<BigInt, 3> formula;
  std::uint64_t realizers = 0;
  std::uint64_t minimal = 0;
  std::uint64_t maximal = 0;
  std::uint64_t min_and_max = 0;
  std::uint64_t stack_realizers = 0;
  std::uint64_t distinct_colored = 0;
  std::uint64_t distinct_triangulations = 0;
  std::uint64_t distinct_minimal_triangulations = 0;
  std::uint64_t distinct_stack = 0;
  std::map<std::string, std::uint64_t> failures;
  std::optional<Witness> witness;
  std::vector<IdentityCheck> checks;
  bool passed = false;

  std::string to_json(int indent = 2) const;
};

std::size_t census_cap(bool counts_only);

CensusTally census_shard(std::size_t n, std::size_t shard_index, std::size_t shard_count, bool counts_only);
CensusReport finish_census(std::size_t n, std::size_t shards, bool counts_only, const CensusTally& tally);

// Throws Errc::limit_exceeded above the cap and Errc::index_out_of_range for
// n = 0 or shards = 0.
CensusReport run_census(const CensusOptions& options);

}  // namespace catalan
