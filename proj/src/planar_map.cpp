#include "catalan/planar_map.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "catalan/error.hpp"

namespace catalan {

CombinatorialMap::CombinatorialMap(std::vector<std::vector<DartId>> rotations, std::vector<DartId> twin)
    : rotations_(std::move(rotations)), twin_(std::move(twin)) {
  const std::size_t darts = twin_.size();
  if (darts % 2 != 0) throw Error(Errc::malformed_map, "odd number of darts");
  origin_.assign(darts, kNoVertex);
  next_.assign(darts, -1);
  prev_.assign(darts, -1);
  for (std::size_t d = 0; d < darts; ++d) {
    const DartId t = twin_[d];
    if (t < 0 || static_cast<std::size_t>(t) >= darts || t == static_cast<DartId>(d) ||
        twin_[static_cast<std::size_t>(t)] != static_cast<DartId>(d)) {
      throw Error(Errc::malformed_map, "twin is not a fixed-point-free involution at dart " + std::to_string(d));
    }
  }
  for (std::size_t v = 0; v < rotations_.size(); ++v) {
    const auto& rot = rotations_[v];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const DartId d = rot[k];
      if (d < 0 || static_cast<std::size_t>(d) >= darts || origin_[static_cast<std::size_t>(d)] != kNoVertex) {
        throw Error(Errc::malformed_map, "dart " + std::to_string(d) + " listed twice or out of range");
      }
      origin_[static_cast<std::size_t>(d)] = static_cast<VertexId>(v);
      next_[static_cast<std::size_t>(d)] = rot[(k + 1) % rot.size()];
      prev_[static_cast<std::size_t>(d)] = rot[(k + rot.size() - 1) % rot.size()];
    }
  }
  for (std::size_t d = 0; d < darts; ++d) {
    if (origin_[d] == kNoVertex) throw Error(Errc::malformed_map, "dart " + std::to_string(d) + " has no origin");
  }
}

CombinatorialMap CombinatorialMap::from_neighbors(const std::vector<std::vector<VertexId>>& neighbors) {
  std::vector<std::vector<DartId>> rotations(neighbors.size());
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (std::size_t v = 0; v < neighbors.size(); ++v) {
    for (VertexId w : neighbors[v]) {
      rotations[v].push_back(static_cast<DartId>(ends.size()));
      ends.emplace_back(static_cast<VertexId>(v), w);
    }
  }
  std::vector<DartId> twin(ends.size(), -1);
  std::vector<std::pair<std::pair<VertexId, VertexId>, DartId>> sorted;
  for (std::size_t d = 0; d < ends.size(); ++d) sorted.push_back({ends[d], static_cast<DartId>(d)});
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t d = 0; d < ends.size(); ++d) {
    const auto key = std::make_pair(ends[d].second, ends[d].first);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), std::make_pair(key, DartId{-1}));
    if (it == sorted.end() || it->first != key) {
      throw Error(Errc::malformed_map, "neighbour lists are not symmetric at vertex " + std::to_string(ends[d].first));
    }
    if (std::next(it) != sorted.end() && std::next(it)->first == key) {
      throw Error(Errc::malformed_map, "multiple edge between " + std::to_string(key.first) + " and " +
                                           std::to_string(key.second));
    }
    twin[d] = it->second;
  }
  return CombinatorialMap(std::move(rotations), std::move(twin));
}

std::optional<DartId> CombinatorialMap::dart_between(VertexId from, VertexId to) const {
  for (DartId d : rotation(from)) {
    if (head(d) == to) return d;
  }
  return std::nullopt;
}

std::vector<int> CombinatorialMap::face_index(std::size_t* face_count) const {
  std::vector<int> face(dart_count(), -1);
  int count = 0;
  for (std::size_t start = 0; start < dart_count(); ++start) {
    if (face[start] != -1) continue;
    DartId d = static_cast<DartId>(start);
    do {
      face[static_cast<std::size_t>(d)] = count;
      d = face_next(d);
    } while (d != static_cast<DartId>(start));
    ++count;
  }
  if (face_count) *face_count = static_cast<std::size_t>(count);
  return face;
}

std::size_t CombinatorialMap::face_count() const {
  std::size_t count = 0;
  face_index(&count);
  return count;
}

std::vector<DartId> CombinatorialMap::face_darts(DartId d) const {
  std::vector<DartId> out;
  DartId x = d;
  do {
    out.push_back(x);
    x = face_next(x);
  } while (x != d);
  return out;
}

bool CombinatorialMap::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<bool> seen(vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : rotation(v)) {
      const VertexId w = head(d);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count();
}

bool CombinatorialMap::has_loop_or_multi_edge() const {
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    std::set<VertexId> seen;
    for (DartId d : rotation(static_cast<VertexId>(v))) {
      const VertexId w = head(d);
      if (w == static_cast<VertexId>(v) || !seen.insert(w).second) return true;
    }
  }
  return false;
}

long CombinatorialMap::euler_characteristic() const {
  return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) + static_cast<long>(face_count());
}

Triangulation::Triangulation(CombinatorialMap map, DartId root) : map_(std::move(map)), root_(root) {
  if (map_.vertex_count() < 3) throw Error(Errc::malformed_map, "a triangulation needs at least 3 vertices");
  if (root < 0 || static_cast<std::size_t>(root) >= map_.dart_count()) {
    throw Error(Errc::malformed_map, "root dart out of range");
  }
  if (!map_.is_connected()) throw Error(Errc::malformed_map, "map is not connected");
  if (map_.has_loop_or_multi_edge()) throw Error(Errc::malformed_map, "map has a loop or a multiple edge");
  if (map_.euler_characteristic() != 2) throw Error(Errc::malformed_map, "map is not planar (V - E + F != 2)");
  std::size_t faces = 0;
  const auto face = map_.face_index(&faces);
  std::vector<int> degree(faces, 0);
  for (int f : face) ++degree[static_cast<std::size_t>(f)];
  for (std::size_t f = 0; f < faces; ++f) {
    if (degree[f] != 3) throw Error(Errc::malformed_map, "face " + std::to_string(f) + " has degree " + std::to_string(degree[f]));
  }
  outer_ = {map_.origin(root), map_.head(root), map_.head(map_.next(root))};
}

std::vector<VertexId> Triangulation::internal_vertices() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < map_.vertex_count(); ++v) {
    if (!is_external(static_cast<VertexId>(v))) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

}  // namespace catalan
