#pragma once

#include <string>

#include "catalan/planar_map.hpp"
#include "catalan/realizer.hpp"

namespace catalan {

// Root-preserving isomorphism code. Darts are relabelled in breadth-first
// order from the root dart (neighbours: twin, then next); the code lists the
// dart count followed by (twin, next) of every dart in that order, as LEB128
// varints. Equal codes <=> isomorphic rooted maps.
std::string canonical_code(const Triangulation& triangulation);

// Same traversal, with each dart's colour and orientation appended.
std::string canonical_code(const Realizer& realizer);

std::string to_hex(const std::string& bytes);

}  // namespace catalan
