#include "catalan/canonical.hpp"

#include <queue>
#include <vector>

namespace catalan {

namespace {

void put_varint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

std::vector<DartId> bfs_order(const CombinatorialMap& m, DartId root, std::vector<int>& label) {
  label.assign(m.dart_count(), -1);
  std::vector<DartId> order;
  order.reserve(m.dart_count());
  label[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const DartId d = order[k];
    for (DartId e : {m.twin(d), m.next(d)}) {
      if (label[static_cast<std::size_t>(e)] >= 0) continue;
      label[static_cast<std::size_t>(e)] = static_cast<int>(order.size());
      order.push_back(e);
    }
  }
  return order;
}

std::string map_code(const CombinatorialMap& m, DartId root, const std::vector<DartLabel>* labels) {
  std::vector<int> label;
  const std::vector<DartId> order = bfs_order(m, root, label);
  std::string out;
  put_varint(out, order.size());
  for (DartId d : order) {
    put_varint(out, static_cast<std::uint64_t>(label[static_cast<std::size_t>(m.twin(d))]));
    put_varint(out, static_cast<std::uint64_t>(label[static_cast<std::size_t>(m.next(d))]));
  }
  if (labels) {
    for (DartId d : order) {
      const DartLabel& l = (*labels)[static_cast<std::size_t>(d)];
      out.push_back(static_cast<char>((l.color + 1) * 2 + (l.tail ? 1 : 0)));
    }
  }
  return out;
}

}  // namespace

std::string canonical_code(const Triangulation& triangulation) {
  return map_code(triangulation.map(), triangulation.root(), nullptr);
}

std::string canonical_code(const Realizer& realizer) {
  return map_code(realizer.map(), realizer.triangulation().root(), &realizer.labels());
}

std::string to_hex(const std::string& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace catalan
