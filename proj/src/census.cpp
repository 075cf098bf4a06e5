#include "catalan/census.hpp"

#include <cstdlib>
#include <future>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "catalan/bijection.hpp"
#include "catalan/canonical.hpp"
#include "catalan/error.hpp"
#include "catalan/lattices.hpp"
#include "catalan/realizer.hpp"
#include "catalan/stack.hpp"

namespace catalan {

void CensusTally::merge(const CensusTally& other) {
  for (std::size_t k = 0; k < 3; ++k) intervals[k] += other.intervals[k];
  realizers += other.realizers;
  minimal += other.minimal;
  maximal += other.maximal;
  min_and_max += other.min_and_max;
  stack_realizers += other.stack_realizers;
  colored_codes.insert(other.colored_codes.begin(), other.colored_codes.end());
  triangulation_codes.insert(other.triangulation_codes.begin(), other.triangulation_codes.end());
  minimal_triangulation_codes.insert(other.minimal_triangulation_codes.begin(), other.minimal_triangulation_codes.end());
  stack_codes.insert(other.stack_codes.begin(), other.stack_codes.end());
  for (const auto& [k, v] : other.failures) failures[k] += v;
  if (other.witness) {
    if (!witness || std::tie(other.witness->lower, other.witness->upper) < std::tie(witness->lower, witness->upper)) {
      witness = other.witness;
    }
  }
}

void CensusTally::fail(const DyckPath& lower, const DyckPath& upper, const std::string& category, const std::string& reason) {
  ++failures[category];
  if (!witness || std::tie(lower, upper) < std::tie(witness->lower, witness->upper)) {
    witness = Witness{lower, upper, category + ": " + reason};
  }
}

std::size_t census_cap(bool counts_only) {
  if (const char* env = std::getenv("CATALAN_CENSUS_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return counts_only ? kCountsCensusCap : kFullCensusCap;
}

namespace {

void examine(const DyckPath& p, const DyckPath& q, bool tamari, bool kreweras, CensusTally& t) {
  Realizer r;
  try {
    r = phi(p, q, true);
  } catch (const Error& e) {
    t.fail(p, q, "phi", e.what());
    return;
  }
  ++t.realizers;
  try {
    const auto [pp, qq] = psi(r);
    if (!(pp == p && qq == q)) t.fail(p, q, "psi_roundtrip", "psi returned " + pp.word() + " " + qq.word());
  } catch (const Error& e) {
    t.fail(p, q, "psi_roundtrip", e.what());
  }
  const bool minimal = is_minimal(r);
  const bool maximal = is_maximal(r);
  const bool both = is_min_and_max(r);
  const bool stack = is_stack(r.triangulation());
  t.minimal += minimal;
  t.maximal += maximal;
  t.min_and_max += both;
  if (minimal != tamari) t.fail(p, q, "minimal_vs_tamari", "is_minimal disagrees with leq_tamari");
  if (minimal != is_minimal_by_ancestors(r)) t.fail(p, q, "minimal_by_ancestors", "ancestor test disagrees with the cw scan");
  if (minimal != minimality_from_paths(p, q)) t.fail(p, q, "minimal_from_paths", "delta test disagrees with the cw scan");
  if (both != (minimal && maximal)) t.fail(p, q, "min_and_max", "local test disagrees with the triangle scans");
  if (both != kreweras) t.fail(p, q, "min_and_max_vs_kreweras", "is_min_and_max disagrees with leq_kreweras");
  if (both != stack) t.fail(p, q, "min_and_max_vs_stack", "is_min_and_max disagrees with is_stack");
  if (!tail_before_head_violations(r).empty()) t.fail(p, q, "tail_before_head", "a 1-head precedes its tail");
  if (available_tails(r) != [&] {
        auto d = delta_profile(p, q);
        d.pop_back();
        return d;
      }()) {
    t.fail(p, q, "available_tails", "available tails differ from delta");
  }
  t.colored_codes.insert(canonical_code(r));
  const std::string code = canonical_code(r.triangulation());
  t.triangulation_codes.insert(code);
  if (minimal) t.minimal_triangulation_codes.insert(code);
  if (stack) {
    ++t.stack_realizers;
    t.stack_codes.insert(code);
  }
}

}  // namespace

CensusTally census_shard(std::size_t n, std::size_t shard_index, std::size_t shard_count, bool counts_only) {
  CensusTally t;
  IntervalStream stream(LatticeKind::stanley, n, shard_index, shard_count, n);
  Interval iv;
  while (stream.next(iv)) {
    ++t.intervals[0];
    const bool tamari = leq_tamari(iv.lower, iv.upper);
    const bool kreweras = leq_kreweras(iv.lower, iv.upper);
    t.intervals[1] += tamari;
    t.intervals[2] += kreweras;
    if (kreweras && !tamari) t.fail(iv.lower, iv.upper, "hierarchy", "Kreweras pair outside Tamari");
    if (!counts_only) examine(iv.lower, iv.upper, tamari, kreweras, t);
  }
  return t;
}

CensusReport finish_census(std::size_t n, std::size_t shards, bool counts_only, const CensusTally& t) {
  CensusReport r;
  r.n = n;
  r.shards = shards;
  r.counts_only = counts_only;
  r.enumerated = t.intervals;
  r.formula = {formula_stanley(n), formula_tamari(n), formula_kreweras(n)};
  r.realizers = t.realizers;
  r.minimal = t.minimal;
  r.maximal = t.maximal;
  r.min_and_max = t.min_and_max;
  r.stack_realizers = t.stack_realizers;
  r.distinct_colored = t.colored_codes.size();
  r.distinct_triangulations = t.triangulation_codes.size();
  r.distinct_minimal_triangulations = t.minimal_triangulation_codes.size();
  r.distinct_stack = t.stack_codes.size();
  r.failures = t.failures;
  r.witness = t.witness;

  auto check = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back(IdentityCheck{std::move(name), ok, std::move(detail)});
  };
  auto eq = [](std::uint64_t a, const BigInt& b) { return BigInt(a) == b; };
  auto str = [](const auto& v) {
    std::ostringstream o;
    o << v;
    return o.str();
  };
  const char* names[3] = {"stanley_count", "tamari_count", "kreweras_count"};
  for (std::size_t k = 0; k < 3; ++k) {
    check(names[k], eq(r.enumerated[k], r.formula[k]), str(r.enumerated[k]) + " enumerated, " + str(r.formula[k]) + " by formula");
  }
  check("order_hierarchy", !t.failures.count("hierarchy"), "every Kreweras pair is a Tamari pair");
  if (!counts_only) {
    std::uint64_t per_interval = 0;
    for (const auto& [k, v] : t.failures) per_interval += k == "hierarchy" ? 0 : v;
    check("phi_psi_bijection", r.realizers == r.enumerated[0] && !t.failures.count("phi") && !t.failures.count("psi_roundtrip"),
          str(r.realizers) + " valid realizers, psi(phi) identity");
    check("phi_injective", r.distinct_colored == r.realizers, str(r.distinct_colored) + " distinct coloured codes");
    check("minimal_equals_tamari", r.minimal == r.enumerated[1] && !t.failures.count("minimal_vs_tamari"),
          str(r.minimal) + " minimal realizers");
    check("min_and_max_equals_kreweras", r.min_and_max == r.enumerated[2] && !t.failures.count("min_and_max_vs_kreweras"),
          str(r.min_and_max) + " minimal and maximal realizers");
    check("distinct_triangulations", eq(r.distinct_triangulations, r.formula[1]) && r.distinct_minimal_triangulations == r.minimal,
          str(r.distinct_triangulations) + " distinct triangulations");
    check("distinct_stack_triangulations", eq(r.distinct_stack, r.formula[2]) && r.stack_realizers == r.distinct_stack,
          str(r.distinct_stack) + " distinct stack triangulations");
    check("structural_properties", per_interval == 0, str(per_interval) + " per-interval violations");
  }
  r.passed = true;
  for (const auto& c : r.checks) r.passed = r.passed && c.passed;
  return r;
}

CensusReport run_census(const CensusOptions& options) {
  if (options.n == 0) throw Error(Errc::index_out_of_range, "census needs n >= 1");
  if (options.shards == 0) throw Error(Errc::index_out_of_range, "census needs at least one shard");
  const std::size_t cap = options.cap ? options.cap : census_cap(options.counts_only);
  if (options.n > cap) {
    throw Error(Errc::limit_exceeded, "n = " + std::to_string(options.n) + " exceeds the census cap " + std::to_string(cap));
  }
  CensusTally total;
  if (options.shards == 1) {
    total = census_shard(options.n, 0, 1, options.counts_only);
  } else {
    std::vector<std::future<CensusTally>> parts;
    for (std::size_t s = 0; s < options.shards; ++s) {
      parts.push_back(std::async(std::launch::async, census_shard, options.n, s, options.shards, options.counts_only));
    }
    for (auto& f : parts) total.merge(f.get());
  }
  return finish_census(options.n, options.shards, options.counts_only, total);
}

std::string CensusReport::to_json(int indent) const {
  using nlohmann::ordered_json;
  auto big = [](const BigInt& v) { return v.str(); };
  ordered_json j;
  j["schema"] = kCensusSchema;
  j["n"] = n;
  j["shards"] = shards;
  j["counts_only"] = counts_only;
  const char* lattices[3] = {"stanley", "tamari", "kreweras"};
  for (std::size_t k = 0; k < 3; ++k) {
    j["intervals"][lattices[k]] = {{"enumerated", enumerated[k]}, {"formula", big(formula[k])}};
  }
  if (!counts_only) {
    j["realizers"] = {{"all", realizers}, {"minimal", minimal}, {"maximal", maximal}, {"min_and_max", min_and_max},
                      {"stack", stack_realizers}};
    j["distinct"] = {{"colored_realizers", distinct_colored},
                     {"triangulations", distinct_triangulations},
                     {"minimal_triangulations", distinct_minimal_triangulations},
                     {"stack_triangulations", distinct_stack}};
  }
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["failures"] = ordered_json::object();
  for (const auto& [k, v] : failures) j["failures"][k] = v;
  if (witness) {
    j["witness"] = {{"lower", witness->lower.word()}, {"upper", witness->upper.word()}, {"reason", witness->reason}};
  } else {
    j["witness"] = nullptr;
  }
  j["passed"] = passed;
  return j.dump(indent);
}

}  // namespace catalan
