#pragma once

#include <cstdint>

namespace dyckpaint {

// Runtime resource limits. Defaults can be overridden via environment
// variables, read once per process:
//   DYCKPAINT_ENUM_CAP    - max number of paths enumerate_paths may produce
//   DYCKPAINT_COLOR_CAP   - max prod |L(v)| for exhaustive colouring enumeration
//   DYCKPAINT_SOLVER_CAP  - max vertices on the graph side of a painting game
struct Caps {
    std::uint64_t enum_paths = 1'000'000;
    std::uint64_t color_product = 1'000'000;
    int solver_vertices = 16;
};

const Caps& caps();

} // namespace dyckpaint
