#pragma once

#include <array>

namespace minkpot {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

// Galilean coordinates (x1, x2, x3, x4); x4 is the time-like one.
using SpacetimePoint = Vec4;

} // namespace minkpot
