#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "miquel/centers.hpp"
#include "miquel/miquel_map.hpp"

namespace miquel {

/// A figure description: one triangle, a distinguished vertex, and exactly
/// one payload (cevian parameters, a candidate Miquel point, a line angle
/// in the unit frame at the vertex, or a classic centre).
struct Scene {
    Triangle triangle;
    VertexLabel vertex = VertexLabel::a;
    std::optional<CevianPair> cevians;
    std::optional<Point> point;
    std::optional<double> line_angle;
    std::optional<CenterKind> center;
    Tolerance tolerance;
    std::uint64_t seed = 0;

    explicit Scene(const Triangle& tri) : triangle(tri) {}
};

/// Parses the line-oriented `key = value` scene text. `#` starts a comment;
/// `;` separates statements within a line, so a whole scene can live on one
/// line. Throws ParseError with "line N, field, reason" details.
Scene parse_scene(const std::string& text);

/// Canonical text for a scene, exact enough to round-trip every double.
std::string serialize_scene(const Scene& scene);

/// Like serialize_scene but on a single `;`-separated line.
std::string serialize_scene_line(const Scene& scene);

/// Shortest fixed-precision decimal form, with "-0" normalized to "0".
std::string real_text(double value, int significant);

}  // namespace miquel
