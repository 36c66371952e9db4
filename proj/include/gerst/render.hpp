#pragma once

// Text and SVG pictures of planar data. Rows are printed top-down, so the
// first printed row is the largest y.

#include <string>

#include "gerst/io.hpp"

namespace gerst {

enum class RenderFormat { Ascii, Svg };

/// Floor plans (heights at their points, "." elsewhere), compatible floor
/// plans (P grid, then Q grid), height maps, and 2D diagrams ("#" per box).
/// Anything else throws UnsupportedKind.
std::string render(const Instance& instance, RenderFormat format);

RenderFormat parse_render_format(const std::string& name);

}  // namespace gerst
