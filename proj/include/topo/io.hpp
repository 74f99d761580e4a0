#pragma once

#include <string>

#include "topo/arrangement.hpp"

namespace topo {

// Deterministic field order; export -> import -> export is byte-stable.
std::string arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const std::string& text);  // throws std::runtime_error

// Synthesized coordinates for human inspection only: a barycentric layout
// pinned to the outer face, edges drawn as polylines through their chains.
std::string arrangement_to_svg(const Arrangement& a);

}  // namespace topo
