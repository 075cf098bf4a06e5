#include "catalan/bijection.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "catalan/error.hpp"
#include "catalan/lattices.hpp"

namespace catalan {

const char* role_name(DartRole role) noexcept {
  switch (role) {
    case DartRole::t0: return "t0";
    case DartRole::h0: return "h0";
    case DartRole::t1: return "t1";
    case DartRole::h1: return "h1";
    case DartRole::t2: return "t2";
    case DartRole::h2: return "h2";
    case DartRole::external: return "external";
  }
  return "?";
}

DartRole role_of(const DartLabel& label) noexcept {
  switch (label.color) {
    case 0: return label.tail ? DartRole::t0 : DartRole::h0;
    case 1: return label.tail ? DartRole::t1 : DartRole::h1;
    case 2: return label.tail ? DartRole::t2 : DartRole::h2;
    default: return DartRole::external;
  }
}

DartLabel label_of(DartRole role) noexcept {
  switch (role) {
    case DartRole::t0: return tail_of(0);
    case DartRole::h0: return head_of(0);
    case DartRole::t1: return tail_of(1);
    case DartRole::h1: return head_of(1);
    case DartRole::t2: return tail_of(2);
    case DartRole::h2: return head_of(2);
    case DartRole::external: return kExternalDart;
  }
  return kExternalDart;
}

const char* corner_name(CornerType type) noexcept {
  switch (type) {
    case CornerType::h1h0: return "(h1,h0)";
    case CornerType::h1t1: return "(h1,t1)";
    case CornerType::t0h0: return "(t0,h0)";
    case CornerType::t0t1: return "(t0,t1)";
    case CornerType::t1t0: return "(t1,t0)";
    case CornerType::h0h0: return "(h0,h0)";
    case CornerType::h0t1: return "(h0,t1)";
    case CornerType::h1h1: return "(h1,h1)";
    case CornerType::t0h1: return "(t0,h1)";
    case CornerType::other: return "(other)";
  }
  return "?";
}

std::string AnnotatedTour::word() const {
  std::string w;
  w.reserve(tokens.size());
  for (int s : tokens) w.push_back(slots[static_cast<std::size_t>(s)].role == DartRole::t1 ? 'N' : 'S');
  return w;
}

namespace {

void require_comparable(const DyckPath& lower, const DyckPath& upper) {
  if (lower.size() != upper.size()) {
    throw Error(Errc::size_mismatch, "paths of sizes " + std::to_string(lower.size()) + " and " + std::to_string(upper.size()));
  }
  if (lower.empty()) throw Error(Errc::empty_input, "paths must have size at least 1");
  for (std::size_t i = 1; i <= lower.size(); ++i) {
    if (lower.exceedence(i) > upper.exceedence(i)) {
      throw Error(Errc::not_comparable, "the lower path rises above the upper path after descent " + std::to_string(i), i);
    }
  }
}

}  // namespace

AnnotatedTour glue_step(const DyckPath& lower, const DyckPath& upper) {
  require_comparable(lower, upper);
  const std::size_t n = lower.size();
  const auto v0 = static_cast<VertexId>(n);
  const auto v1 = v0 + 1;

  AnnotatedTour tour;
  tour.n = n;
  tour.rotation.assign(n + 2, {});
  const std::vector<int> parents = tree_parents(lower);
  tour.t0_parent.assign(parents.begin(), parents.end());
  std::vector<std::vector<VertexId>> children(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (tour.t0_parent[i] < 0) tour.t0_parent[i] = v0;
    children[static_cast<std::size_t>(tour.t0_parent[i])].push_back(static_cast<VertexId>(i));
  }

  auto new_slot = [&](VertexId v, DartRole role) {
    tour.slots.push_back(Slot{v, role, -1});
    return static_cast<int>(tour.slots.size() - 1);
  };
  auto glue_heads = [&](VertexId v, int count) {
    for (int k = 0; k < count; ++k) {
      const int s = new_slot(v, DartRole::h1);
      tour.rotation[static_cast<std::size_t>(v)].push_back(s);
      tour.tokens.push_back(s);
    }
  };

  std::function<void(VertexId, int)> walk = [&](VertexId u, int parent_slot) {
    auto& rot = tour.rotation[static_cast<std::size_t>(u)];
    const int up = new_slot(u, DartRole::t0);
    tour.slots[static_cast<std::size_t>(up)].twin = parent_slot;
    tour.slots[static_cast<std::size_t>(parent_slot)].twin = up;
    rot.push_back(up);
    glue_heads(u, u == 0 ? 0 : upper.descent(static_cast<std::size_t>(u)));
    for (VertexId c : children[static_cast<std::size_t>(u)]) {
      const int down = new_slot(u, DartRole::h0);
      tour.rotation[static_cast<std::size_t>(u)].push_back(down);
      walk(c, down);
    }
    const int tail = new_slot(u, DartRole::t1);
    tour.rotation[static_cast<std::size_t>(u)].push_back(tail);
    tour.tokens.push_back(tail);
  };

  for (VertexId c : children[n]) {
    const int down = new_slot(v0, DartRole::h0);
    tour.rotation[n].push_back(down);
    walk(c, down);
  }
  const int ext0 = new_slot(v0, DartRole::external);
  const int ext1 = new_slot(v1, DartRole::external);
  tour.slots[static_cast<std::size_t>(ext0)].twin = ext1;
  tour.slots[static_cast<std::size_t>(ext1)].twin = ext0;
  tour.rotation[n].push_back(ext0);
  tour.rotation[n + 1].push_back(ext1);
  glue_heads(v1, upper.descent(n));
  return tour;
}

Prerealizer match_parentheses(const AnnotatedTour& tour) {
  const std::size_t n = tour.n;
  std::vector<Slot> slots = tour.slots;
  Prerealizer pr;
  pr.n = n;
  pr.t0_parent = tour.t0_parent;
  pr.t1_parent.assign(n, kNoVertex);
  std::vector<int> open;
  for (int s : tour.tokens) {
    auto& slot = slots[static_cast<std::size_t>(s)];
    if (slot.role == DartRole::t1) {
      open.push_back(s);
      continue;
    }
    if (open.empty()) throw Error(Errc::internal, "tour word closes an edge with no open tail");
    const int t = open.back();
    open.pop_back();
    slot.twin = t;
    slots[static_cast<std::size_t>(t)].twin = s;
    pr.t1_parent[static_cast<std::size_t>(slots[static_cast<std::size_t>(t)].vertex)] = slot.vertex;
  }
  if (!open.empty()) throw Error(Errc::internal, "tour word leaves tails unmatched");

  std::vector<DartId> twin(slots.size());
  pr.roles.resize(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    twin[s] = slots[s].twin;
    pr.roles[s] = slots[s].role;
    if (slots[s].role == DartRole::external && slots[s].vertex == static_cast<VertexId>(n)) pr.root = static_cast<DartId>(s);
  }
  pr.map = CombinatorialMap(tour.rotation, std::move(twin));
  return pr;
}

namespace {

struct TourState {
  const CombinatorialMap& m;
  const std::vector<DartRole>& roles;
  TreeTour out;
  int counter = 0;

  void visit(VertexId u, DartId up, PlaneTree& node) {
    const auto ui = static_cast<std::size_t>(u);
    if (out.first_corner_end[ui] != -1) throw Error(Errc::invalid_realizer, "T0 is not a tree");
    const std::size_t deg = m.degree(u);
    DartId d = m.next(up);
    bool leading = true;
    for (std::size_t k = 1; k < deg; ++k, d = m.next(d)) {
      const DartRole r = roles[static_cast<std::size_t>(d)];
      if (leading && r != DartRole::h1) {
        out.first_corner_end[ui] = counter;
        leading = false;
      }
      if (r == DartRole::h0) {
        const VertexId c = m.head(d);
        if (roles[static_cast<std::size_t>(m.twin(d))] != DartRole::t0) throw Error(Errc::invalid_realizer, "0-edge is not oriented");
        out.t0_parent[static_cast<std::size_t>(c)] = u;
        out.preorder.push_back(c);
        node.children.emplace_back();
        visit(c, m.twin(d), node.children.back());
      } else if (r != DartRole::external) {
        out.position[static_cast<std::size_t>(d)] = counter++;
      }
    }
    if (leading) out.first_corner_end[ui] = counter;
  }
};

TreeTour tour_impl(const CombinatorialMap& m, const std::vector<DartRole>& roles, DartId root) {
  TourState st{m, roles, {}, 0};
  st.out.t0_parent.assign(m.vertex_count(), kNoVertex);
  st.out.position.assign(m.dart_count(), -1);
  st.out.first_corner_end.assign(m.vertex_count(), -1);
  const VertexId v0 = m.origin(root);
  const VertexId v1 = m.head(root);
  DartId start = root;
  while (roles[static_cast<std::size_t>(m.next(start))] == DartRole::external && m.next(start) != root) start = m.next(start);
  DartId d = m.next(start);
  for (std::size_t k = 0; k < m.degree(v0); ++k, d = m.next(d)) {
    const DartRole r = roles[static_cast<std::size_t>(d)];
    if (d == root) {
      st.visit(v1, m.twin(root), st.out.tree);
      // v1 is a leaf of T0-bar outside T0 proper.
    } else if (r == DartRole::h0) {
      const VertexId c = m.head(d);
      st.out.t0_parent[static_cast<std::size_t>(c)] = v0;
      st.out.preorder.push_back(c);
      st.out.tree.children.emplace_back();
      st.visit(c, m.twin(d), st.out.tree.children.back());
    } else if (r != DartRole::external) {
      st.out.position[static_cast<std::size_t>(d)] = st.counter++;
    }
  }
  return std::move(st.out);
}

std::vector<DartRole> roles_of(const Realizer& r) {
  std::vector<DartRole> roles(r.labels().size());
  for (std::size_t d = 0; d < roles.size(); ++d) roles[d] = role_of(r.labels()[d]);
  return roles;
}

}  // namespace

std::vector<std::string> validate_prerealizer(const Prerealizer& pr) {
  std::vector<std::string> problems;
  const CombinatorialMap& m = pr.map;
  const std::size_t n = pr.n;
  const auto v1 = static_cast<VertexId>(n + 1);
  for (std::size_t u = 0; u < n; ++u) {
    VertexId x = static_cast<VertexId>(u);
    std::size_t steps = 0;
    while (x != v1 && x >= 0 && static_cast<std::size_t>(x) < n && steps++ <= n) x = pr.t1_parent[static_cast<std::size_t>(x)];
    if (x != v1) problems.push_back("the 1-path from vertex " + std::to_string(u) + " does not reach v1");
  }
  for (std::size_t u = 0; u < n; ++u) {
    const auto rot = m.rotation(static_cast<VertexId>(u));
    const auto it = std::find_if(rot.begin(), rot.end(), [&](DartId d) { return pr.roles[static_cast<std::size_t>(d)] == DartRole::t0; });
    bool ok = it != rot.end();
    if (ok) {
      const auto off = static_cast<std::size_t>(it - rot.begin());
      std::size_t k = 1;
      auto role = [&](std::size_t j) { return pr.roles[static_cast<std::size_t>(rot[(off + j) % rot.size()])]; };
      while (k < rot.size() && role(k) == DartRole::h1) ++k;
      while (k < rot.size() && role(k) == DartRole::h0) ++k;
      ok = k + 1 == rot.size() && role(k) == DartRole::t1;
    }
    if (!ok) problems.push_back("corner condition fails at vertex " + std::to_string(u));
  }
  const TreeTour tour = tour_impl(m, pr.roles, pr.root);
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    if (pr.roles[d] != DartRole::t1) continue;
    const int head = tour.position[static_cast<std::size_t>(m.twin(static_cast<DartId>(d)))];
    if (tour.position[d] > head) {
      problems.push_back("the 1-tail at vertex " + std::to_string(m.origin(static_cast<DartId>(d))) + " follows its head");
    }
  }
  return problems;
}

namespace {

CornerType classify(DartRole a, DartRole b) {
  using R = DartRole;
  if (a == R::h1 && b == R::h0) return CornerType::h1h0;
  if (a == R::h1 && b == R::t1) return CornerType::h1t1;
  if (a == R::t0 && b == R::h0) return CornerType::t0h0;
  if (a == R::t0 && b == R::t1) return CornerType::t0t1;
  if (a == R::t1 && b == R::t0) return CornerType::t1t0;
  if (a == R::h0 && b == R::h0) return CornerType::h0h0;
  if (a == R::h0 && b == R::t1) return CornerType::h0t1;
  if (a == R::h1 && b == R::h1) return CornerType::h1h1;
  if (a == R::t0 && b == R::h1) return CornerType::t0h1;
  return CornerType::other;
}

bool is_tail_corner(CornerType c) {
  return c == CornerType::h1h0 || c == CornerType::h1t1 || c == CornerType::t0h0 || c == CornerType::t0t1;
}

}  // namespace

Realizer complete_t2(const Prerealizer& pr, CompletionTrace* trace) {
  const CombinatorialMap& m = pr.map;
  const std::size_t n = pr.n;
  const auto v0 = static_cast<VertexId>(n);
  const auto v2 = static_cast<VertexId>(n + 2);
  const DartId root = pr.root;

  std::vector<DartRole> cls = pr.roles;
  cls[static_cast<std::size_t>(root)] = DartRole::h0;
  cls[static_cast<std::size_t>(m.twin(root))] = DartRole::h1;
  auto corner = [&](DartId d) { return classify(cls[static_cast<std::size_t>(m.prev(d))], cls[static_cast<std::size_t>(d)]); };

  std::vector<DartId> twin(m.twins());
  std::vector<DartRole> roles(pr.roles);
  std::vector<VertexId> origin(m.dart_count());
  for (std::size_t d = 0; d < m.dart_count(); ++d) origin[d] = m.origin(static_cast<DartId>(d));
  std::vector<std::vector<DartId>> before(m.dart_count());
  std::vector<DartId> v2_rotation;
  auto add_edge = [&](VertexId a, DartRole ra, VertexId b, DartRole rb) {
    const auto da = static_cast<DartId>(twin.size());
    twin.push_back(da + 1);
    twin.push_back(da);
    roles.push_back(ra);
    roles.push_back(rb);
    origin.push_back(a);
    origin.push_back(b);
    return std::pair<DartId, DartId>{da, da + 1};
  };
  auto fail = [](const std::string& msg) { throw Error(Errc::internal, "T2 completion: " + msg); };

  std::size_t face_count = 0;
  const std::vector<int> face = m.face_index(&face_count);
  const int outer = face[static_cast<std::size_t>(m.twin(root))];
  if (face[static_cast<std::size_t>(m.next(root))] != outer) fail("root corner is not on the outer face");
  std::vector<bool> seen(face_count, false);

  CompletionTrace local;
  for (std::size_t di = 0; di < m.dart_count(); ++di) {
    const auto f = static_cast<std::size_t>(face[di]);
    if (seen[f]) continue;
    seen[f] = true;
    const bool is_outer = static_cast<int>(f) == outer;
    std::vector<DartId> darts = m.face_darts(is_outer ? m.next(root) : static_cast<DartId>(di));
    FaceTrace ft;
    ft.outer = is_outer;
    if (!is_outer) {
      std::size_t anchor = darts.size();
      for (std::size_t k = 0; k < darts.size(); ++k) {
        if (corner(darts[k]) == CornerType::t1t0) {
          ++ft.t1t0_corners;
          anchor = k;
        }
      }
      if (ft.t1t0_corners != 1) fail("a face has " + std::to_string(ft.t1t0_corners) + " (t1,t0)-corners");
      std::rotate(darts.begin(), darts.begin() + static_cast<std::ptrdiff_t>(anchor), darts.end());
    }
    const std::size_t k = darts.size();
    for (DartId d : darts) {
      ft.vertices.push_back(m.origin(d));
      ft.corners.push_back(corner(d));
    }
    if (k < 3) fail("a face has degree " + std::to_string(k));
    if (is_outer) {
      if (ft.corners.front() != CornerType::h0h0 || ft.vertices.front() != v0) fail("outer face does not start at v0");
      if (darts.back() != m.twin(root) || ft.corners.back() != CornerType::h1h1) fail("outer face does not end at v1");
      for (std::size_t j = 1; j + 1 < k; ++j) {
        if (!is_tail_corner(ft.corners[j])) fail(std::string("outer corner of type ") + corner_name(ft.corners[j]));
      }
      for (std::size_t j = k; j-- > 0;) {
        const bool ext = j == 0 || j + 1 == k;
        const auto [a, b] = add_edge(ft.vertices[j], ext ? DartRole::external : DartRole::t2, v2, ext ? DartRole::external : DartRole::h2);
        before[static_cast<std::size_t>(darts[j])].push_back(a);
        v2_rotation.push_back(b);
      }
    } else {
      if (ft.corners[1] != CornerType::h0h0 && ft.corners[1] != CornerType::h0t1) fail(std::string("second corner of type ") + corner_name(ft.corners[1]));
      if (ft.corners[k - 1] != CornerType::h1h1 && ft.corners[k - 1] != CornerType::t0h1) {
        fail(std::string("last corner of type ") + corner_name(ft.corners[k - 1]));
      }
      for (std::size_t j = 2; j + 1 < k; ++j) {
        if (!is_tail_corner(ft.corners[j])) fail(std::string("middle corner of type ") + corner_name(ft.corners[j]));
      }
      for (std::size_t j = k - 1; j-- > 2;) {
        const auto [a, b] = add_edge(ft.vertices[0], DartRole::h2, ft.vertices[j], DartRole::t2);
        before[static_cast<std::size_t>(darts[0])].push_back(a);
        before[static_cast<std::size_t>(darts[j])].push_back(b);
      }
    }
    local.faces.push_back(std::move(ft));
  }

  std::vector<std::vector<DartId>> rotations(n + 3);
  for (std::size_t v = 0; v < n + 2; ++v) {
    for (DartId d : m.rotation(static_cast<VertexId>(v))) {
      const auto& ins = before[static_cast<std::size_t>(d)];
      rotations[v].insert(rotations[v].end(), ins.begin(), ins.end());
      rotations[v].push_back(d);
    }
  }
  rotations[n + 2] = std::move(v2_rotation);
  std::vector<DartLabel> labels(roles.size());
  for (std::size_t d = 0; d < roles.size(); ++d) labels[d] = label_of(roles[d]);
  Triangulation tri(CombinatorialMap(std::move(rotations), std::move(twin)), root);
  if (tri.v2() != v2) fail("v2 is not the third vertex of the root face");
  if (trace) *trace = std::move(local);
  return Realizer(std::move(tri), std::move(labels));
}

Realizer phi(const DyckPath& lower, const DyckPath& upper, bool validate) {
  const AnnotatedTour tour = glue_step(lower, upper);
  const Prerealizer pr = match_parentheses(tour);
  if (validate) {
    const auto problems = validate_prerealizer(pr);
    if (!problems.empty()) throw Error(Errc::internal, "prerealizer: " + problems.front());
  }
  Realizer r = complete_t2(pr);
  if (validate) {
    const ValidationReport report = validate_realizer(r);
    if (!report.ok()) throw Error(Errc::internal, "realizer: " + report.summary());
  }
  return r;
}

TreeTour tree_tour(const Realizer& realizer) {
  return tour_impl(realizer.map(), roles_of(realizer), realizer.triangulation().root());
}

std::pair<DyckPath, DyckPath> psi(const Realizer& realizer) {
  const ValidationReport report = validate_realizer(realizer);
  if (!report.ok()) throw Error(Errc::invalid_realizer, report.summary());
  const Triangulation& tri = realizer.triangulation();
  if (tri.size() == 0) throw Error(Errc::empty_input, "realizer has no internal vertex");
  const TreeTour tour = tree_tour(realizer);
  const CombinatorialMap& m = realizer.map();
  auto heads = [&](VertexId v) {
    int count = 0;
    for (DartId d : m.rotation(v)) count += realizer.label(d) == head_of(1) ? 1 : 0;
    return count;
  };
  const std::size_t n = tri.size();
  if (tour.preorder.size() != n) throw Error(Errc::invalid_realizer, "T0 does not span the internal vertices");
  if (heads(tour.preorder[0]) != 0) throw Error(Errc::invalid_realizer, "the first vertex of T0 carries 1-heads");
  std::vector<int> beta;
  for (std::size_t i = 1; i < n; ++i) beta.push_back(heads(tour.preorder[i]));
  beta.push_back(heads(tri.v1()));
  return {omega(tour.tree), DyckPath::from_descents(std::move(beta))};
}

std::vector<int> available_tails(const Realizer& realizer) {
  const TreeTour tour = tree_tour(realizer);
  const CombinatorialMap& m = realizer.map();
  std::vector<int> out;
  for (VertexId u : tour.preorder) {
    const int mark = tour.first_corner_end[static_cast<std::size_t>(u)];
    int count = 0;
    for (std::size_t d = 0; d < m.dart_count(); ++d) {
      if (realizer.labels()[d] != tail_of(1)) continue;
      const int head = tour.position[static_cast<std::size_t>(m.twin(static_cast<DartId>(d)))];
      if (tour.position[d] < mark && head >= mark) ++count;
    }
    out.push_back(count);
  }
  return out;
}

int available_tails(const DyckPath& lower, const DyckPath& upper, std::size_t i) {
  require_comparable(lower, upper);
  if (i >= lower.size()) throw Error(Errc::index_out_of_range, "vertex index " + std::to_string(i) + " out of range", i);
  return available_tails(phi(lower, upper))[i];
}

bool minimality_from_paths(const DyckPath& lower, const DyckPath& upper) {
  require_comparable(lower, upper);
  const std::vector<int> parent = tree_parents(lower);
  const std::vector<int> d = delta_profile(lower, upper);
  for (std::size_t j = 0; j < parent.size(); ++j) {
    if (parent[j] >= 0 && d[static_cast<std::size_t>(parent[j])] > d[j]) return false;
  }
  return true;
}

std::vector<std::string> tail_before_head_violations(const Realizer& realizer) {
  const TreeTour tour = tree_tour(realizer);
  const CombinatorialMap& m = realizer.map();
  std::vector<std::string> out;
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    if (realizer.labels()[d] != tail_of(1)) continue;
    const auto dd = static_cast<DartId>(d);
    if (tour.position[d] > tour.position[static_cast<std::size_t>(m.twin(dd))]) {
      out.push_back("1-edge " + std::to_string(m.origin(dd)) + "->" + std::to_string(m.head(dd)) + " meets its head first");
    }
  }
  return out;
}

}  // namespace catalan
