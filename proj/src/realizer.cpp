#include "catalan/realizer.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "catalan/error.hpp"

namespace catalan {

namespace {

std::string vname(const Triangulation& tri, VertexId v) {
  if (v == tri.v0()) return "v0";
  if (v == tri.v1()) return "v1";
  if (v == tri.v2()) return "v2";
  return "vertex " + std::to_string(v);
}

// p0 and p1 extended across the external edge v0v1.
VertexId p0_ext(const Realizer& r, VertexId v) {
  const Triangulation& tri = r.triangulation();
  if (v == tri.v1()) return tri.v0();
  if (tri.is_external(v)) return kNoVertex;
  return r.parent(0, v);
}

VertexId p1_ext(const Realizer& r, VertexId v) {
  const Triangulation& tri = r.triangulation();
  if (v == tri.v0()) return tri.v1();
  if (tri.is_external(v)) return kNoVertex;
  return r.parent(1, v);
}

}  // namespace

Realizer::Realizer(Triangulation triangulation, std::vector<DartLabel> labels)
    : tri_(std::move(triangulation)), labels_(std::move(labels)) {
  const CombinatorialMap& m = tri_.map();
  if (labels_.size() != m.dart_count()) {
    throw Error(Errc::invalid_realizer, "expected " + std::to_string(m.dart_count()) + " dart labels, got " +
                                            std::to_string(labels_.size()));
  }
  for (int c = 0; c < 3; ++c) {
    parent_[static_cast<std::size_t>(c)].assign(m.vertex_count(), kNoVertex);
    parent_dart_[static_cast<std::size_t>(c)].assign(m.vertex_count(), -1);
  }
  for (std::size_t d = 0; d < labels_.size(); ++d) {
    const DartLabel& l = labels_[d];
    if (!l.tail || l.color < 0 || l.color > 2) continue;
    const auto v = static_cast<std::size_t>(m.origin(static_cast<DartId>(d)));
    auto& slot = parent_dart_[static_cast<std::size_t>(l.color)][v];
    if (slot != -1) continue;
    slot = static_cast<DartId>(d);
    parent_[static_cast<std::size_t>(l.color)][v] = m.head(static_cast<DartId>(d));
  }
}

bool ValidationReport::has(Violation::Kind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream out;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) out << "; ";
    out << violations[k].message;
  }
  return out.str();
}

ValidationReport validate_realizer(const Realizer& realizer) {
  ValidationReport report;
  const Triangulation& tri = realizer.triangulation();
  const CombinatorialMap& m = tri.map();
  auto add = [&](Violation::Kind kind, VertexId v, DartId d, std::string msg) {
    report.violations.push_back(Violation{kind, v, d, std::move(msg)});
  };

  for (std::size_t di = 0; di < m.dart_count(); ++di) {
    const auto d = static_cast<DartId>(di);
    const DartId t = m.twin(d);
    if (t < d) continue;
    const DartLabel& a = realizer.label(d);
    const DartLabel& b = realizer.label(t);
    const std::string edge = vname(tri, m.origin(d)) + "-" + vname(tri, m.head(d));
    if (tri.is_external_edge(d)) {
      if (!a.external() || !b.external()) add(Violation::Kind::coloring, m.origin(d), d, "external edge " + edge + " is coloured");
      continue;
    }
    if (a.color < 0 || a.color > 2 || a.color != b.color) {
      add(Violation::Kind::coloring, m.origin(d), d, "internal edge " + edge + " has no consistent colour");
    } else if (a.tail == b.tail) {
      add(Violation::Kind::coloring, m.origin(d), d, "internal edge " + edge + " is not oriented");
    }
  }

  for (std::size_t vi = 0; vi < m.vertex_count(); ++vi) {
    const auto v = static_cast<VertexId>(vi);
    if (tri.is_external(v)) {
      const int own = v == tri.v0() ? 0 : v == tri.v1() ? 1 : 2;
      for (DartId d : m.rotation(v)) {
        const DartLabel& l = realizer.label(d);
        if (l.external()) continue;
        if (l.tail || l.color != own) {
          add(Violation::Kind::tree, v, d, vname(tri, v) + " carries a dart that is not a " + std::to_string(own) + "-head");
        }
      }
      continue;
    }
    std::array<int, 3> tails{0, 0, 0};
    for (DartId d : m.rotation(v)) {
      const DartLabel& l = realizer.label(d);
      if (l.tail && l.color >= 0 && l.color <= 2) ++tails[static_cast<std::size_t>(l.color)];
    }
    for (int c = 0; c < 3; ++c) {
      if (tails[static_cast<std::size_t>(c)] != 1) {
        add(Violation::Kind::tree, v, -1, vname(tri, v) + " has " + std::to_string(tails[static_cast<std::size_t>(c)]) + " " +
                                              std::to_string(c) + "-tails");
      }
    }
  }

  const std::size_t limit = m.vertex_count() + 1;
  for (int c = 0; c < 3; ++c) {
    const VertexId root = tri.outer(c);
    for (VertexId v : tri.internal_vertices()) {
      VertexId x = v;
      std::size_t steps = 0;
      while (x != root && x != kNoVertex && !tri.is_external(x) && steps < limit) {
        x = realizer.parent(c, x);
        ++steps;
      }
      if (x != root) {
        add(Violation::Kind::tree, v, -1,
            "the " + std::to_string(c) + "-path from " + vname(tri, v) + " does not reach v" + std::to_string(c));
      }
    }
  }

  for (VertexId v : tri.internal_vertices()) {
    const auto rot = m.rotation(v);
    const auto start = std::find_if(rot.begin(), rot.end(), [&](DartId d) {
      const DartLabel& l = realizer.label(d);
      return l.tail && l.color == 0;
    });
    if (start == rot.end()) continue;  // reported above
    std::vector<DartLabel> seq;
    const auto offset = static_cast<std::size_t>(start - rot.begin());
    for (std::size_t k = 0; k < rot.size(); ++k) seq.push_back(realizer.label(rot[(offset + k) % rot.size()]));
    std::size_t pos = 1;
    auto skip_heads = [&](int color) {
      while (pos < seq.size() && !seq[pos].tail && seq[pos].color == color) ++pos;
    };
    auto expect_tail = [&](int color) {
      if (pos < seq.size() && seq[pos].tail && seq[pos].color == color) {
        ++pos;
        return true;
      }
      return false;
    };
    skip_heads(1);
    bool ok = expect_tail(2);
    if (ok) {
      skip_heads(0);
      ok = expect_tail(1);
    }
    if (ok) {
      skip_heads(2);
      ok = pos == seq.size();
    }
    if (!ok) {
      add(Violation::Kind::schnyder, v, -1,
          "clockwise pattern around " + vname(tri, v) + " is not 0-tail, 1-heads, 2-tail, 0-heads, 1-tail, 2-heads");
    }
  }
  return report;
}

std::vector<Triple> find_cw_triangles(const Realizer& realizer) {
  const Triangulation& tri = realizer.triangulation();
  std::vector<Triple> out;
  for (VertexId u : tri.internal_vertices()) {
    const VertexId v = realizer.parent(0, u);
    if (v == kNoVertex || tri.is_external(v)) continue;
    const VertexId w = realizer.parent(2, v);
    if (w == kNoVertex || tri.is_external(w)) continue;
    if (realizer.parent(1, w) == u) out.emplace_back(u, v, w);
  }
  return out;
}

std::vector<Triple> find_ccw_triangles(const Realizer& realizer) {
  const Triangulation& tri = realizer.triangulation();
  std::vector<Triple> out;
  for (VertexId u : tri.internal_vertices()) {
    const VertexId v = realizer.parent(0, u);
    if (v == kNoVertex || tri.is_external(v)) continue;
    const VertexId w = realizer.parent(1, v);
    if (w == kNoVertex || tri.is_external(w)) continue;
    if (realizer.parent(2, w) == u) out.emplace_back(u, v, w);
  }
  return out;
}

bool is_minimal(const Realizer& realizer) { return find_cw_triangles(realizer).empty(); }

bool is_maximal(const Realizer& realizer) { return find_ccw_triangles(realizer).empty(); }

bool is_minimal_by_ancestors(const Realizer& realizer) {
  const Triangulation& tri = realizer.triangulation();
  const std::size_t limit = tri.map().vertex_count() + 1;
  for (VertexId u : tri.internal_vertices()) {
    const VertexId target = p0_ext(realizer, realizer.parent(1, u));
    if (target == kNoVertex) return false;
    VertexId x = u;
    std::size_t steps = 0;
    while (x != target && x != kNoVertex && x != tri.v0() && steps++ < limit) x = realizer.parent(0, x);
    if (x != target) return false;
  }
  return true;
}

bool is_min_and_max(const Realizer& realizer) {
  const Triangulation& tri = realizer.triangulation();
  for (VertexId u : tri.internal_vertices()) {
    const VertexId a = p0_ext(realizer, realizer.parent(1, u));
    const VertexId b = p1_ext(realizer, realizer.parent(0, u));
    const bool first = a != kNoVertex && a == realizer.parent(0, u);
    const bool second = b != kNoVertex && b == realizer.parent(1, u);
    if (!first && !second) return false;
  }
  return true;
}

Realizer remove_degree3(const Realizer& realizer, VertexId v) {
  const Triangulation& tri = realizer.triangulation();
  const CombinatorialMap& m = tri.map();
  if (v < 0 || static_cast<std::size_t>(v) >= m.vertex_count() || tri.is_external(v)) {
    throw Error(Errc::precondition, "vertex " + std::to_string(v) + " is not internal");
  }
  if (m.degree(v) != 3) {
    throw Error(Errc::precondition, "vertex " + std::to_string(v) + " has degree " + std::to_string(m.degree(v)));
  }
  std::vector<DartId> dart_map(m.dart_count(), -1);
  DartId next_id = 0;
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    const auto dd = static_cast<DartId>(d);
    if (m.origin(dd) == v || m.head(dd) == v) continue;
    dart_map[d] = next_id++;
  }
  std::vector<std::vector<DartId>> rotations;
  for (std::size_t w = 0; w < m.vertex_count(); ++w) {
    if (static_cast<VertexId>(w) == v) continue;
    rotations.emplace_back();
    for (DartId d : m.rotation(static_cast<VertexId>(w))) {
      if (dart_map[static_cast<std::size_t>(d)] >= 0) rotations.back().push_back(dart_map[static_cast<std::size_t>(d)]);
    }
  }
  std::vector<DartId> twin(static_cast<std::size_t>(next_id));
  std::vector<DartLabel> labels(static_cast<std::size_t>(next_id));
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    const DartId nd = dart_map[d];
    if (nd < 0) continue;
    twin[static_cast<std::size_t>(nd)] = dart_map[static_cast<std::size_t>(m.twin(static_cast<DartId>(d)))];
    labels[static_cast<std::size_t>(nd)] = realizer.labels()[d];
  }
  Triangulation reduced(CombinatorialMap(std::move(rotations), std::move(twin)), dart_map[static_cast<std::size_t>(tri.root())]);
  return Realizer(std::move(reduced), std::move(labels));
}

std::vector<std::string> cycle_tail_violations(const Realizer& realizer, std::size_t max_length) {
  const Triangulation& tri = realizer.triangulation();
  const CombinatorialMap& m = tri.map();
  const std::size_t V = m.vertex_count();
  std::vector<std::vector<DartId>> dart_to(V, std::vector<DartId>(V, -1));
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    const auto dd = static_cast<DartId>(d);
    dart_to[static_cast<std::size_t>(m.origin(dd))][static_cast<std::size_t>(m.head(dd))] = dd;
  }
  std::size_t faces = 0;
  const std::vector<int> face = m.face_index(&faces);
  const int root_face = face[static_cast<std::size_t>(m.next(tri.root()))];

  std::vector<std::string> out;
  auto check = [&](const std::vector<VertexId>& cycle) {
    const std::size_t c = cycle.size();
    std::vector<bool> on_cycle(m.dart_count(), false);
    for (std::size_t k = 0; k < c; ++k) {
      const DartId d = dart_to[static_cast<std::size_t>(cycle[k])][static_cast<std::size_t>(cycle[(k + 1) % c])];
      on_cycle[static_cast<std::size_t>(d)] = true;
      on_cycle[static_cast<std::size_t>(m.twin(d))] = true;
    }
    std::vector<bool> outside(faces, false);
    std::queue<int> queue;
    outside[static_cast<std::size_t>(root_face)] = true;
    queue.push(root_face);
    // Face adjacency through non-cycle edges.
    std::vector<std::vector<DartId>> face_darts(faces);
    for (std::size_t d = 0; d < m.dart_count(); ++d) face_darts[static_cast<std::size_t>(face[d])].push_back(static_cast<DartId>(d));
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop();
      for (DartId d : face_darts[static_cast<std::size_t>(f)]) {
        if (on_cycle[static_cast<std::size_t>(d)]) continue;
        const int g = face[static_cast<std::size_t>(m.twin(d))];
        if (!outside[static_cast<std::size_t>(g)]) {
          outside[static_cast<std::size_t>(g)] = true;
          queue.push(g);
        }
      }
    }
    std::size_t inside_tails = 0;
    for (VertexId x : cycle) {
      for (DartId d : m.rotation(x)) {
        if (on_cycle[static_cast<std::size_t>(d)]) continue;
        if (outside[static_cast<std::size_t>(face[static_cast<std::size_t>(d)])]) continue;
        const DartLabel& l = realizer.label(d);
        if (!l.external() && l.tail) ++inside_tails;
      }
    }
    if (inside_tails + 3 != c) {
      std::ostringstream msg;
      msg << "cycle";
      for (VertexId x : cycle) msg << ' ' << vname(tri, x);
      msg << " has " << inside_tails << " inner tails, expected " << c - 3;
      out.push_back(msg.str());
    }
  };

  auto adjacent = [&](VertexId a, VertexId b) { return dart_to[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 0; };
  const auto n = static_cast<VertexId>(V);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!adjacent(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (adjacent(b, c) && adjacent(c, a)) check({a, b, c});
      }
    }
  }
  if (max_length >= 4) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!adjacent(a, b)) continue;
        for (VertexId c = a + 1; c < n; ++c) {
          if (c == b || !adjacent(b, c)) continue;
          for (VertexId d = b + 1; d < n; ++d) {
            if (d == c || !adjacent(c, d) || !adjacent(d, a)) continue;
            check({a, b, c, d});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace catalan
