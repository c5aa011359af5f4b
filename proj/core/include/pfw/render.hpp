#pragma once

#include <string>

#include "pfw/congruence.hpp"
#include "pfw/frame.hpp"
#include "pfw/io.hpp"

namespace pfw {

// Hasse diagram in DOT: one node per element, one edge per covering pair,
// drawn bottom to top.
std::string render_dot(FiniteFrame const& l, std::string const& graph_name = "frame");
// The congruence frame of `cf`, nodes labelled by the congruence blocks.
std::string render_dot(CongruenceFrame const& cf, std::string const& graph_name = "congruences");
// Frame and Frith instances; InvalidInput for other kinds.
std::string render_dot(Instance const& inst);

}  // namespace pfw
