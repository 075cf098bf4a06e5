#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "catalan/bijection.hpp"
#include "catalan/canonical.hpp"
#include "catalan/error.hpp"
#include "catalan/lattices.hpp"
#include "oracles.hpp"

using namespace catalan;

namespace {

DyckPath W(const char* w) { return DyckPath::parse(w); }

std::string glue_word(const DyckPath& p, const DyckPath& q) {
  std::string w;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    w.append(static_cast<std::size_t>(p.descent(i)), 'N');
    w.append(static_cast<std::size_t>(q.descent(i)), 'S');
  }
  return w;
}

VertexId v1_of(std::size_t n) { return static_cast<VertexId>(n + 1); }

}  // namespace

TEST_CASE("glue step") {
  CHECK(glue_step(W("NS"), W("NS")).word() == "NS");
  CHECK(glue_step(W("NSNS"), W("NNSS")).word() == "NNSS");
  CHECK_THROWS_AS(glue_step(W("NNSS"), W("NSNS")), Error);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const AnnotatedTour tour = glue_step(iv.lower, iv.upper);
      CHECK(tour.word() == glue_word(iv.lower, iv.upper));
      CHECK(DyckPath::parse(tour.word()).size() == n);
    }
}

TEST_CASE("leaves carry their heads before their tail") {
  const AnnotatedTour tour = glue_step(W("NSNS"), W("NNSS"));
  CHECK(tour.rotation[1].size() == 2);  // u_1 is a leaf without heads: t0, t1
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const AnnotatedTour t = glue_step(iv.lower, iv.upper);
      for (std::size_t u = 0; u < n; ++u) {
        const auto& rot = t.rotation[u];
        REQUIRE(!rot.empty());
        CHECK(t.slots[static_cast<std::size_t>(rot.front())].role == DartRole::t0);
        CHECK(t.slots[static_cast<std::size_t>(rot.back())].role == DartRole::t1);
        bool seen_h0 = false;
        for (std::size_t k = 1; k + 1 < rot.size(); ++k) {
          const DartRole r = t.slots[static_cast<std::size_t>(rot[k])].role;
          if (r == DartRole::h0) seen_h0 = true;
          if (r == DartRole::h1) CHECK_FALSE(seen_h0);
        }
      }
    }
}

TEST_CASE("parenthesis matching") {
  const Prerealizer one = match_parentheses(glue_step(W("NS"), W("NS")));
  CHECK(one.t1_parent == std::vector<VertexId>{v1_of(1)});
  const AnnotatedTour nest = glue_step(W("NSNS"), W("NNSS"));
  const Prerealizer nested = match_parentheses(nest);
  CHECK(nested.map.twin(nest.tokens[1]) == nest.tokens[2]);
  CHECK(nested.map.twin(nest.tokens[0]) == nest.tokens[3]);
  const AnnotatedTour seq = glue_step(W("NSNS"), W("NSNS"));
  CHECK(seq.word() == "NSNS");
  const Prerealizer sequential = match_parentheses(seq);
  CHECK(sequential.map.twin(seq.tokens[0]) == seq.tokens[1]);
  CHECK(sequential.map.twin(seq.tokens[2]) == seq.tokens[3]);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      CHECK(validate_prerealizer(match_parentheses(glue_step(iv.lower, iv.upper))).empty());
    }
}

TEST_CASE("T2 completion face census") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      CompletionTrace trace;
      const Realizer r = complete_t2(match_parentheses(glue_step(iv.lower, iv.upper)), &trace);
      std::size_t outer = 0;
      for (const auto& f : trace.faces) {
        if (f.outer) {
          ++outer;
          continue;
        }
        CHECK(f.t1t0_corners == 1);
        CHECK(f.corners.front() == CornerType::t1t0);
      }
      CHECK(outer == 1);
      CHECK(validate_realizer(r).ok());
    }
  const Realizer k4 = complete_t2(match_parentheses(glue_step(W("NS"), W("NS"))));
  CHECK(k4.parent(2, 0) == 3);
}

TEST_CASE("phi examples") {
  const Realizer k4 = phi(W("NS"), W("NS"), true);
  CHECK(k4.size() == 1);
  CHECK(k4.parent(0, 0) == 1);
  CHECK(k4.parent(1, 0) == 2);
  CHECK(k4.parent(2, 0) == 3);
  const Realizer a = phi(W("NSNS"), W("NNSS"), true);
  CHECK(a.parent(1, 0) == v1_of(2));
  CHECK(a.parent(1, 1) == v1_of(2));
  const Realizer b = phi(W("NSNS"), W("NSNS"), true);
  CHECK(b.parent(1, 0) == 1);
  CHECK(b.parent(1, 1) == v1_of(2));
  try {
    phi(W("NNSS"), W("NSNS"));
    FAIL("incomparable pair accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_comparable);
  }
  try {
    phi(W("NS"), W("NSNS"));
    FAIL("size mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size_mismatch);
  }
}

TEST_CASE("psi inverts phi and phi is injective") {
  const auto [p1, q1] = psi(phi(W("NS"), W("NS")));
  CHECK(p1.word() == "NS");
  CHECK(q1.word() == "NS");
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> codes;
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const Realizer r = phi(iv.lower, iv.upper, true);
      const auto [p, q] = psi(r);
      CHECK(p == iv.lower);
      CHECK(q == iv.upper);
      CHECK(leq_stanley(p, q));
      CHECK(canonical_code(phi(p, q)) == canonical_code(r));
      codes.insert(canonical_code(r));
    }
    CHECK(codes.size() == oracle::kStanley[n - 1]);
  }
}

TEST_CASE("psi rejects invalid realizers") {
  const Realizer r = phi(W("NSNS"), W("NNSS"));
  std::vector<DartLabel> labels = r.labels();
  for (auto& l : labels)
    if (l.color == 1) l.color = 2;
    else if (l.color == 2) l.color = 1;
  try {
    psi(Realizer(r.triangulation(), labels));
    FAIL("invalid realizer accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_realizer);
  }
}

TEST_CASE("minimal realizers are the Tamari intervals, min-and-max the Kreweras ones") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t minimal = 0, both = 0;
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const Realizer r = phi(iv.lower, iv.upper);
      const bool t = leq_tamari(iv.lower, iv.upper);
      const bool k = leq_kreweras(iv.lower, iv.upper);
      CHECK(is_minimal(r) == t);
      CHECK(minimality_from_paths(iv.lower, iv.upper) == t);
      CHECK(is_min_and_max(r) == k);
      minimal += is_minimal(r);
      both += is_min_and_max(r);
    }
    CHECK(minimal == oracle::kTamari[n - 1]);
    CHECK(both == oracle::kKreweras[n - 1]);
  }
}

TEST_CASE("available tails") {
  for (const auto& p : all_dyck_paths(4))
    for (std::size_t i = 0; i < 4; ++i) CHECK(available_tails(p, p, i) == 0);
  CHECK(available_tails(W("NSNS"), W("NNSS"), 1) == 1);
  CHECK_THROWS_AS(available_tails(W("NSNS"), W("NNSS"), 2), Error);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& iv : intervals(LatticeKind::stanley, n)) {
      const auto tails = available_tails(phi(iv.lower, iv.upper));
      for (std::size_t i = 0; i < n; ++i) CHECK(tails[i] == delta(iv.lower, iv.upper, i));
    }
}

TEST_CASE("minimality from paths") {
  for (const auto& p : all_dyck_paths(5)) CHECK(minimality_from_paths(p, p));
  std::size_t count = 0, stanley_only = 0;
  for (const auto& iv : intervals(LatticeKind::stanley, 3)) {
    const bool m = minimality_from_paths(iv.lower, iv.upper);
    count += m;
    if (!leq_tamari(iv.lower, iv.upper)) {
      ++stanley_only;
      CHECK_FALSE(m);
    }
  }
  CHECK(count == 13);
  CHECK(stanley_only == 1);
  CHECK_THROWS_AS(minimality_from_paths(W("NNSS"), W("NSNS")), Error);
}

TEST_CASE("1-tails precede their heads around T0") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& iv : intervals(LatticeKind::stanley, n)) CHECK(tail_before_head_violations(phi(iv.lower, iv.upper)).empty());
}

TEST_CASE("tree tour") {
  const Realizer r = phi(W("NNSNSS"), W("NNNSSS"));
  const TreeTour tour = tree_tour(r);
  CHECK(tour.preorder == std::vector<VertexId>{0, 1, 2});
  CHECK(omega(tour.tree).word() == "NNSNSS");
  CHECK(tour.t0_parent[1] == 0);
  CHECK(tour.t0_parent[2] == 0);
  CHECK(tour.t0_parent[0] == 3);
}
