#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalan/dyck.hpp"
#include "catalan/error.hpp"
#include "oracles.hpp"

using catalan::DyckPath;
using catalan::Errc;

namespace {

Errc code_of(std::string_view word) {
  try {
    DyckPath::parse(word);
  } catch (const catalan::Error& e) {
    return e.code();
  }
  FAIL("no error for " << word);
  return Errc::internal;
}

std::size_t position_of(std::string_view word) {
  try {
    DyckPath::parse(word);
  } catch (const catalan::Error& e) {
    REQUIRE(e.position().has_value());
    return *e.position();
  }
  FAIL("no error for " << word);
  return 0;
}

const DyckPath kExample = DyckPath::from_descents({1, 0, 1, 2, 0, 0, 3});

}  // namespace

TEST_CASE("parse into descent vectors") {
  CHECK(DyckPath::parse("NS").descents().size() == 1);
  CHECK(DyckPath::parse("NS").descent(1) == 1);
  const DyckPath p = DyckPath::parse("NSNNSNSSNNNSSS");
  CHECK(std::vector<int>(p.descents().begin(), p.descents().end()) == std::vector<int>{1, 0, 1, 2, 0, 0, 3});
  CHECK(p == kExample);
  CHECK(p.word() == "NSNNSNSSNNNSSS");
}

TEST_CASE("parse errors are distinct and positioned") {
  CHECK(code_of("NSSN") == Errc::negative_prefix);
  CHECK(position_of("NSSN") == 2);
  CHECK(code_of("NXS") == Errc::illegal_character);
  CHECK(position_of("NXS") == 1);
  CHECK(code_of("NNS") == Errc::unbalanced_word);
  CHECK(code_of("") == Errc::empty_input);
  CHECK(code_of("ns") == Errc::illegal_character);
  CHECK_THROWS_AS(DyckPath::from_descents({0, 2, 0}), catalan::Error);
  CHECK_THROWS_AS(DyckPath::from_descents({2, 0}), catalan::Error);
  CHECK_THROWS_AS(DyckPath::from_descents({1, -1, 2}), catalan::Error);
}

TEST_CASE("exceedence") {
  CHECK(kExample.exceedence(2) == 1);
  CHECK(kExample.exceedence(6) == 2);
  CHECK(kExample.exceedence(0) == 0);
  CHECK(kExample.exceedence(7) == 0);
  CHECK_THROWS_AS(kExample.exceedence(8), catalan::Error);
  CHECK_THROWS_AS(kExample.descent(0), catalan::Error);
}

TEST_CASE("delta and Delta") {
  const DyckPath p = DyckPath::parse("NSNS"), q = DyckPath::parse("NNSS");
  CHECK(catalan::delta_profile(p, q) == std::vector<int>{0, 1, 0});
  CHECK(catalan::delta(p, q, 1) == 1);
  CHECK(catalan::total_delta(p, q) == 1);
  CHECK(catalan::total_delta(p, p) == 0);
  CHECK(catalan::total_delta(DyckPath::parse("NSNSNS"), DyckPath::parse("NNNSSS")) == 3);
  for (const auto& w : oracle::dyck_words(4)) {
    const DyckPath x = DyckPath::parse(w);
    for (std::size_t i = 0; i <= 4; ++i) CHECK(catalan::delta(x, x, i) == 0);
  }
  CHECK_THROWS_AS(catalan::delta(p, DyckPath::parse("NS"), 0), catalan::Error);
  CHECK_THROWS_AS(catalan::total_delta(p, DyckPath::parse("NS")), catalan::Error);
}

TEST_CASE("relations under") {
  CHECK(kExample.under(0, 4));
  CHECK(kExample.under(1, 4, true));
  CHECK(kExample.under(3, 3));
  CHECK_THROWS_AS(kExample.under(4, 3), catalan::Error);
  CHECK_THROWS_AS(kExample.under(0, 8), catalan::Error);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::dyck_words(n)) {
      const DyckPath p = DyckPath::parse(w);
      const std::vector<int> e(p.exceedences().begin(), p.exceedences().end());
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
          CHECK(p.under(i, j) == oracle::under(e, i, j, false));
          CHECK(p.under(i, j, true) == oracle::under(e, i, j, true));
          if (p.under(i, j, true)) CHECK(p.under(i, j));
        }
    }
  }
}

TEST_CASE("prime paths") {
  CHECK(DyckPath::parse("NS").is_prime());
  CHECK_FALSE(DyckPath::parse("NSNS").is_prime());
  CHECK(DyckPath::parse("NNSNSS").is_prime());
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& w : oracle::dyck_words(n)) {
      const auto h = oracle::heights(w);
      const bool prime = std::count(h.begin(), h.end(), 0) == 2;
      CHECK(DyckPath::parse(w).is_prime() == prime);
    }
  }
}

TEST_CASE("exhaustive round trip, counts and exceedence identities") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto words = oracle::dyck_words(n);
    const auto paths = catalan::all_dyck_paths(n);
    REQUIRE(paths.size() == oracle::catalan(n));
    REQUIRE(words.size() == paths.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
      CHECK(paths[k].word() == words[k]);
      const DyckPath p = DyckPath::parse(words[k]);
      CHECK(p == paths[k]);
      CHECK(DyckPath::from_descents({p.descents().begin(), p.descents().end()}) == p);
      for (std::size_t i = 1; i <= n; ++i) {
        CHECK(p.exceedence(i) >= 0);
        CHECK(p.exceedence(i) - p.exceedence(i - 1) == 1 - p.descent(i));
      }
      if (k) CHECK(paths[k - 1] < paths[k]);
    }
  }
  CHECK(catalan::all_dyck_paths(5).size() == 42);
}

TEST_CASE("bottom, top and tree parents") {
  CHECK(DyckPath::bottom(3).word() == "NSNSNS");
  CHECK(DyckPath::top(3).word() == "NNNSSS");
  const std::vector<int> parents = catalan::tree_parents(kExample);
  std::vector<int> depth;
  for (std::size_t r = 0; r < parents.size(); ++r) {
    depth.push_back(parents[r] < 0 ? 1 : depth[static_cast<std::size_t>(parents[r])] + 1);
  }
  CHECK(depth == std::vector<int>{1, 1, 2, 2, 1, 2, 3});
  CHECK(parents == std::vector<int>{-1, -1, 1, 1, -1, 4, 5});
}
