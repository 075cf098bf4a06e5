#include "catalan/serialize.hpp"

#include <array>
#include <sstream>

#include <json.hpp>

#include "catalan/bijection.hpp"
#include "catalan/error.hpp"

namespace catalan {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

json tree_json(const PlaneTree& t) {
  json a = json::array();
  for (const auto& c : t.children) a.push_back(tree_json(c));
  return a;
}

PlaneTree tree_from(const json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "a plane tree is an array of subtrees");
  PlaneTree t;
  for (const auto& c : j) t.children.push_back(tree_from(c));
  return t;
}

json binary_json(const BinaryTree& t) {
  if (t.is_leaf()) return nullptr;
  return json::array({binary_json(t.left()), binary_json(t.right())});
}

BinaryTree binary_from(const json& j) {
  if (j.is_null()) return BinaryTree::leaf();
  if (!j.is_array() || j.size() != 2) throw Error(Errc::parse_error, "a binary node is [left, right]");
  return BinaryTree::node(binary_from(j[0]), binary_from(j[1]));
}

json ternary_json(const TernaryTree& t) {
  if (t.is_leaf()) return nullptr;
  return json::array({ternary_json(t.child(0)), ternary_json(t.child(1)), ternary_json(t.child(2))});
}

TernaryTree ternary_from(const json& j) {
  if (j.is_null()) return TernaryTree::leaf();
  if (!j.is_array() || j.size() != 3) throw Error(Errc::parse_error, "a ternary node is [first, second, third]");
  return TernaryTree::node(ternary_from(j[0]), ternary_from(j[1]), ternary_from(j[2]));
}

struct ParentArrays {
  std::array<std::vector<int>, 3> p;
};

ParentArrays parent_arrays(const Realizer& r, const std::vector<VertexId>& preorder) {
  const Triangulation& tri = r.triangulation();
  std::vector<int> index(tri.map().vertex_count(), 0);
  for (std::size_t k = 0; k < preorder.size(); ++k) index[static_cast<std::size_t>(preorder[k])] = static_cast<int>(k);
  index[static_cast<std::size_t>(tri.v0())] = -1;
  index[static_cast<std::size_t>(tri.v1())] = -2;
  index[static_cast<std::size_t>(tri.v2())] = -3;
  ParentArrays out;
  for (int c = 0; c < 3; ++c) {
    for (VertexId u : preorder) out.p[static_cast<std::size_t>(c)].push_back(index[static_cast<std::size_t>(r.parent(c, u))]);
  }
  return out;
}

}  // namespace

std::string plane_tree_to_json(const PlaneTree& tree) { return tree_json(tree).dump(); }
PlaneTree plane_tree_from_json(const std::string& text) { return tree_from(parse_json(text)); }
std::string binary_tree_to_json(const BinaryTree& tree) { return binary_json(tree).dump(); }
BinaryTree binary_tree_from_json(const std::string& text) { return binary_from(parse_json(text)); }

std::string partition_to_json(const NoncrossingPartition& partition) { return json(partition.blocks()).dump(); }

NoncrossingPartition partition_from_json(const std::string& text) {
  const json j = parse_json(text);
  try {
    return NoncrossingPartition(j.get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("a partition is an array of integer arrays: ") + e.what());
  }
}

std::string ternary_tree_to_json(const TernaryTree& tree) { return ternary_json(tree).dump(); }
TernaryTree ternary_tree_from_json(const std::string& text) { return ternary_from(parse_json(text)); }

std::string convert(const std::string& from, const std::string& to, const std::string& input) {
  DyckPath path;
  if (from == "word") {
    path = DyckPath::parse(input);
  } else if (from == "tree") {
    path = omega(plane_tree_from_json(input));
  } else if (from == "binary") {
    path = sigma(binary_tree_from_json(input));
  } else if (from == "partition") {
    path = theta(partition_from_json(input));
  } else {
    throw Error(Errc::parse_error, "unknown form '" + from + "'");
  }
  if (to == "word") return path.word();
  if (to == "tree") return plane_tree_to_json(omega_inv(path));
  if (to == "binary") return binary_tree_to_json(sigma_inv(path));
  if (to == "partition") return partition_to_json(theta_inv(path));
  throw Error(Errc::parse_error, "unknown form '" + to + "'");
}

std::string paths_to_json(const std::vector<DyckPath>& paths) {
  json a = json::array();
  for (const auto& p : paths) a.push_back(p.word());
  return a.dump();
}

std::string realizer_to_json(const Realizer& realizer, int indent) {
  const auto [p, q] = psi(realizer);
  const TreeTour tour = tree_tour(realizer);
  const ParentArrays arrays = parent_arrays(realizer, tour.preorder);
  ordered_json j;
  j["n"] = realizer.size();
  j["t0"] = tree_json(tour.tree);
  j["q_word"] = q.word();
  j["p0"] = arrays.p[0];
  j["p1"] = arrays.p[1];
  j["p2"] = arrays.p[2];
  return j.dump(indent);
}

Realizer realizer_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(Errc::parse_error, "a realizer is a JSON object");
  for (const char* key : {"n", "t0", "q_word", "p0", "p1", "p2"}) {
    if (!j.contains(key)) throw Error(Errc::parse_error, std::string("missing key '") + key + "'");
  }
  const PlaneTree tree = tree_from(j["t0"]);
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != tree.size()) {
    throw Error(Errc::size_mismatch, "n does not match the size of t0");
  }
  if (!j["q_word"].is_string()) throw Error(Errc::parse_error, "q_word must be a string");
  const DyckPath p = omega(tree);
  const DyckPath q = DyckPath::parse(j["q_word"].get<std::string>());
  Realizer r = phi(p, q);
  const ParentArrays arrays = parent_arrays(r, tree_tour(r).preorder);
  const char* keys[3] = {"p0", "p1", "p2"};
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<int> given;
    try {
      given = j[keys[c]].get<std::vector<int>>();
    } catch (const json::exception&) {
      throw Error(Errc::parse_error, std::string(keys[c]) + " must be an array of integers");
    }
    if (given != arrays.p[c]) {
      throw Error(Errc::invalid_realizer, std::string(keys[c]) + " does not match the realizer encoded by t0 and q_word");
    }
  }
  return r;
}

std::string realizer_to_dot(const Realizer& realizer) {
  const Triangulation& tri = realizer.triangulation();
  const CombinatorialMap& m = realizer.map();
  auto name = [&](VertexId v) {
    if (v == tri.v0()) return std::string("v0");
    if (v == tri.v1()) return std::string("v1");
    if (v == tri.v2()) return std::string("v2");
    return "u" + std::to_string(v);
  };
  static constexpr const char* colors[3] = {"red", "blue", "darkgreen"};
  std::ostringstream out;
  out << "digraph realizer {\n  node [shape=circle];\n";
  for (int i = 0; i < 3; ++i) out << "  " << name(tri.outer(i)) << " [shape=doublecircle];\n";
  for (VertexId v : tri.internal_vertices()) out << "  " << name(v) << ";\n";
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    const auto dd = static_cast<DartId>(d);
    const DartLabel& l = realizer.label(dd);
    if (l.external()) {
      if (dd < m.twin(dd)) out << "  " << name(m.origin(dd)) << " -> " << name(m.head(dd)) << " [dir=none, style=dashed];\n";
      continue;
    }
    if (!l.tail) continue;
    out << "  " << name(m.origin(dd)) << " -> " << name(m.head(dd)) << " [color=" << colors[l.color] << ", label=\"" << l.color
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(LatticeKind kind, std::size_t n) {
  if (n == 0) throw Error(Errc::index_out_of_range, "Hasse diagrams need n >= 1");
  if (n > kDefaultIntervalLimit) {
    throw Error(Errc::limit_exceeded, "n = " + std::to_string(n) + " exceeds the limit " + std::to_string(kDefaultIntervalLimit));
  }
  std::ostringstream out;
  out << "digraph hasse_" << lattice_name(kind) << "_" << n << " {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n";
  const auto paths = all_dyck_paths(n);
  for (const auto& p : paths) out << "  \"" << p.word() << "\";\n";
  for (const auto& p : paths) {
    for (const auto& q : covers(kind, p)) out << "  \"" << p.word() << "\" -> \"" << q.word() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace catalan
