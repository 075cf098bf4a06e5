#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalan/bijection.hpp"
#include "catalan/canonical.hpp"
#include "catalan/catalan_objects.hpp"
#include "catalan/census.hpp"
#include "catalan/formulas.hpp"
#include "catalan/lattices.hpp"
#include "catalan/realizer.hpp"
#include "catalan/stack.hpp"
#include "oracles.hpp"

using namespace catalan;

namespace {

// Collects the first few mismatches of one criterion.
struct Ledger {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.push_back("");
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& what) {
    std::ostringstream s;
    s << what << ": " << a << " != " << b;
    expect(a == b, s.str());
  }
};

std::string tag(const Interval& iv) { return iv.lower.word() + " <= " + iv.upper.word(); }

void interval_counts(Ledger& l) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (LatticeKind k : {LatticeKind::stanley, LatticeKind::tamari, LatticeKind::kreweras}) {
      const std::string name = std::string(lattice_name(k)) + " n=" + std::to_string(n);
      const std::uint64_t counted = count_intervals(k, n);
      l.equal(BigInt(counted), formula(k, n), name);
      const auto& frozen = k == LatticeKind::stanley  ? oracle::kStanley
                           : k == LatticeKind::tamari ? oracle::kTamari
                                                      : oracle::kKreweras;
      l.equal(counted, frozen[n - 1], name + " (frozen)");
    }
  const auto start = std::chrono::steady_clock::now();
  const CensusReport report = run_census({.n = 7, .shards = 1});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  l.expect(report.passed, "census n=7 reports failures");
  l.expect(secs < 60.0, "single-threaded census n=7 took " + std::to_string(secs) + "s");
}

void bijection(Ledger& l) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> codes;
    std::size_t count = 0;
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const Realizer r = phi(iv.lower, iv.upper);
      l.expect(validate_realizer(r).ok(), "invalid realizer for " + tag(iv));
      const auto [p, q] = psi(r);
      l.expect(p == iv.lower && q == iv.upper, "psi(phi) differs for " + tag(iv));
      codes.insert(canonical_code(r));
      ++count;
    }
    l.equal(codes.size(), count, "distinct realizers n=" + std::to_string(n));
  }
}

void minimal_is_tamari(Ledger& l) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t minimal = 0;
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const bool m = is_minimal(phi(iv.lower, iv.upper));
      l.expect(m == leq_tamari(iv.lower, iv.upper), "minimality differs from tamari for " + tag(iv));
      minimal += m;
    }
    l.equal(minimal, oracle::kTamari[n - 1], "minimal realizers n=" + std::to_string(n));
  }
}

void kreweras_is_stack(Ledger& l) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t both = 0;
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const Realizer r = phi(iv.lower, iv.upper);
      const bool k = leq_kreweras(iv.lower, iv.upper);
      const bool mm = is_minimal(r) && is_maximal(r);
      l.expect(mm == k, "min and max differs from kreweras for " + tag(iv));
      l.expect(is_min_and_max(r) == k, "parent test differs from kreweras for " + tag(iv));
      l.expect(is_stack(r.triangulation()) == k, "stack test differs from kreweras for " + tag(iv));
      both += mm;
    }
    l.equal(both, oracle::kKreweras[n - 1], "min and max realizers n=" + std::to_string(n));
  }
}

void distinct_triangulations(Ledger& l) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> codes;
    for (const auto& iv : intervals(LatticeKind::tamari, n)) codes.insert(canonical_code(phi(iv.lower, iv.upper).triangulation()));
    l.equal(codes.size(), oracle::kTamari[n - 1], "triangulations n=" + std::to_string(n));
    std::set<std::string> all;
    for (const auto& iv : intervals(LatticeKind::stanley, n)) all.insert(canonical_code(phi(iv.lower, iv.upper).triangulation()));
    l.equal(all.size(), codes.size(), "triangulations reached from all intervals n=" + std::to_string(n));
  }
}

void stack_triangulations(Ledger& l) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> from_kreweras;
    for (const auto& iv : intervals(LatticeKind::kreweras, n))
      from_kreweras.insert(canonical_code(phi(iv.lower, iv.upper).triangulation()));
    std::set<std::string> from_trees;
    const auto trees = all_ternary_trees(n);
    for (const auto& t : trees) {
      const Triangulation tri = ternary_to_stack(t);
      l.expect(is_stack(tri), "ternary image is not a stack triangulation");
      if (n <= 4) l.expect(stack_to_ternary(tri) == t, "ternary round trip fails n=" + std::to_string(n));
      from_trees.insert(canonical_code(tri));
    }
    const std::string sn = " n=" + std::to_string(n);
    l.equal(trees.size(), oracle::kKreweras[n - 1], "ternary trees" + sn);
    l.equal(from_trees.size(), oracle::kKreweras[n - 1], "stack triangulations" + sn);
    l.expect(from_trees == from_kreweras, "stack triangulations differ from kreweras images" + sn);
  }
}

void properties(Ledger& l) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ws = oracle::dyck_words(n);
    auto succ = [](LatticeKind k) {
      return [k](const std::string& w) {
        std::vector<std::string> out;
        for (const auto& q : covers(k, DyckPath::parse(w))) out.push_back(q.word());
        return out;
      };
    };
    const auto sc = oracle::closure(ws, succ(LatticeKind::stanley));
    const auto tc = oracle::closure(ws, succ(LatticeKind::tamari));
    const auto kc = oracle::closure(ws, succ(LatticeKind::kreweras));
    for (const auto& a : ws)
      for (const auto& b : ws) {
        const DyckPath p = DyckPath::parse(a), q = DyckPath::parse(b);
        const bool s = leq_stanley(p, q), t = leq_tamari(p, q), k = leq_kreweras(p, q);
        l.expect(!k || t, "kreweras not inside tamari: " + a + " " + b);
        l.expect(!t || s, "tamari not inside stanley: " + a + " " + b);
        l.expect(s == oracle::below(a, b), "stanley differs from height oracle: " + a + " " + b);
        l.expect(s == sc.count({a, b}) && t == tc.count({a, b}) && k == kc.count({a, b}),
                 "order differs from cover closure: " + a + " " + b);
      }
  }
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const Realizer r = phi(iv.lower, iv.upper);
      const bool t = leq_tamari(iv.lower, iv.upper);
      l.expect(tail_before_head_violations(r).empty(), "1-tail after its head for " + tag(iv));
      if (n <= 5) l.expect(cycle_tail_violations(r).empty(), "cycle tail count for " + tag(iv));
      l.expect(is_minimal_by_ancestors(r) == is_minimal(r), "ancestor test differs for " + tag(iv));
      l.expect(minimality_from_paths(iv.lower, iv.upper) == t, "path minimality differs for " + tag(iv));
      l.expect(find_ccw_triangles(r).empty() == is_maximal(r), "ccw triangles vs maximality for " + tag(iv));
      l.expect(find_cw_triangles(r).empty() == t, "cw triangles vs tamari for " + tag(iv));
      const auto tails = available_tails(r);
      for (std::size_t i = 0; i < n; ++i)
        l.expect(tails[i] == delta(iv.lower, iv.upper, i), "available tails differ from delta for " + tag(iv));
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Ledger&)>>> criteria{
      {"interval counts match closed forms for n = 1..7", interval_counts},
      {"psi inverts phi, realizers valid and distinct for n <= 6", bijection},
      {"minimal realizers are exactly tamari intervals for n <= 6", minimal_is_tamari},
      {"minimal and maximal realizers, stack images and kreweras intervals coincide for n <= 6", kreweras_is_stack},
      {"distinct triangulations from tamari intervals equal tamari counts for n <= 5", distinct_triangulations},
      {"stack triangulations, ternary trees and kreweras counts agree for n <= 5", stack_triangulations},
      {"order hierarchy, closure oracles and realizer structure properties", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Ledger l;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(l);
    } catch (const std::exception& e) {
      l.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = l.failures.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", index, name, l.checks, secs);
    for (const auto& f : l.failures)
      if (!f.empty()) std::printf("       %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", index - failed, criteria.size());
  return failed ? 1 : 0;
}
