#pragma once

#include <array>
#include <optional>
#include <vector>

#include "miquel/miquel_map.hpp"

namespace miquel {

enum class CenterKind { incenter, orthocenter, circumcenter };

const char* center_kind_name(CenterKind kind);

Point classic_center(const Triangle& tri, CenterKind kind,
                     const Tolerance& tol = {});

/// Resolved configuration whose Miquel point is a classic centre, together
/// with the scale-normalized residuals of the defining metric relations.
/// A passing report has every residual within tolerance.
struct CenterCaseReport {
    CenterKind kind;
    Point center;
    MiquelConfig config;
    std::vector<double> residuals;
    std::optional<Point> meet_on_circumcircle;  // circumcenter case only
};

/// Miquel point at the incenter: both chords B C_A and C B_A have the
/// length of side BC. Cross-checks the direct construction that lays that
/// length off along the sides from C and from B.
CenterCaseReport incenter_case(const Triangle& tri, VertexLabel vertex,
                               const Tolerance& tol = {});

/// The four intersection points of the bisector pairs from B and C
/// (internal/internal, internal/external, external/internal,
/// external/external): the incenter and the three excenters. Throws
/// ParallelBisectors if a pair fails to meet.
std::array<Point, 4> bisector_candidates(const Triangle& tri,
                                         VertexLabel vertex,
                                         const Tolerance& tol = {});

/// Miquel point at the orthocenter: both cevians have the length of side
/// BC; each foot is the reflection of the far vertex about the altitude
/// foot. Throws RightAngleAtVertex when the angle at A is right (the
/// orthocenter then sits on A and the construction collapses).
CenterCaseReport orthocenter_case(const Triangle& tri, VertexLabel vertex,
                                  const Tolerance& tol = {});

/// Miquel point at the circumcenter: both feet lie on the perpendicular
/// bisector of BC together with the circumcenter, and the cevian meet falls
/// on the circumcircle (reported in `meet_on_circumcircle`). Throws
/// BisectorParallelToSide when that bisector is parallel to a defining
/// side line.
CenterCaseReport circumcenter_case(const Triangle& tri, VertexLabel vertex,
                                   const Tolerance& tol = {});

}  // namespace miquel
