#pragma once

#include <string>

#include "miquel/scene.hpp"

namespace miquel {

struct RenderOptions {
    double width = 720.0;   // pixel width of the figure
    double padding = 24.0;  // pixel border around the drawing
};

/// Deterministic standalone SVG 1.1 figure for a scene. Construction
/// failures yield a diagnostic figure carrying the error name instead of
/// throwing; parse-level problems still throw before this is called.
std::string render_svg(const Scene& scene, const RenderOptions& opts = {});

}  // namespace miquel
