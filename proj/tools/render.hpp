#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama::tools {

// ar, resolution, coresolution, epsilon-gamma or ties.
const std::vector<std::string>& render_kinds();

// DOT digraph; std::invalid_argument for an unknown kind.
std::string render_dot(const Algebra& a, std::string_view kind);

}  // namespace nakayama::tools
