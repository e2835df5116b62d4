#pragma once

#include <array>
#include <complex>
#include <utility>
#include <variant>

#include "miquel/miquel_map.hpp"

namespace miquel {

/// Tangent auxiliary circles at the distinguished vertex A:
///   omega_ab: tangent to line AB at A, passing through C
///   omega_ac: tangent to line AC at A, passing through B
/// They meet again at `main_centre`; `axis` is the line through A and that
/// second intersection (the symmedian from A).
struct AuxiliaryData {
    Circle omega_ab;
    Circle omega_ac;
    Point main_centre;
    Line axis;
};

AuxiliaryData auxiliary_data(const Triangle& tri, VertexLabel vertex,
                             const Tolerance& tol = {});

/// Residuals of the centre relations at a vertex: the two auxiliary centres,
/// the second intersection point and the circumcentre are concyclic; the
/// line of auxiliary centres is parallel to the circumcentre-to-point line,
/// and both are perpendicular to the axis. Throws DegenerateOI when the
/// circumcentre coincides with the second intersection point.
struct CentreRelationResiduals {
    double concyclic = 0.0;       // scale-normalized four-point residual
    double parallel_angle = 0.0;  // radians away from parallel
    double perp_angle = 0.0;      // radians away from perpendicular
};

CentreRelationResiduals centre_relation_residuals(const Triangle& tri,
                                                  VertexLabel vertex,
                                                  const Tolerance& tol = {});

/// Second intersection points at all three vertices (second Brocard triangle).
std::array<Point, 3> second_brocard_triangle(const Triangle& tri,
                                             const Tolerance& tol = {});

/// Circle through the second Brocard triangle; also passes through the
/// circumcentre (Brocard circle). Throws NearEquilateralDegeneracy when the
/// three points collapse.
Circle brocard_circle(const Triangle& tri, const Tolerance& tol = {});

/// The two Brocard points: first the common point of the tangent-circle
/// triple {omega_AC, omega_BA, omega_CB}, then the common point of the
/// complementary triple {omega_AB, omega_BC, omega_CA}, where omega_XY is
/// tangent to line XY at X and passes through the remaining vertex.
std::pair<Point, Point> brocard_points(const Triangle& tri,
                                       const Tolerance& tol = {});

/// Symmedian from the distinguished vertex: the line joining A to the
/// intersection of the circumcircle tangents at B and C. When those
/// tangents are parallel (right angle at A), falls back to reflecting the
/// median about the internal bisector, which is the same line.
Line symmedian_line(const Triangle& tri, VertexLabel vertex,
                    const Tolerance& tol = {});

enum class LocusVerdict {
    member,
    excluded_outside_circumdisk,
    excluded_in_one_aux_disk,
    excluded_in_both_aux_disks,
    boundary,
    inadmissible,
};

const char* locus_verdict_name(LocusVerdict v);

/// Analytic membership test for the locus of Miquel points of internal
/// cevian pairs: inside the open circumdisk and outside both auxiliary
/// disks. Entering the disk of omega_ab turns the cevian from C external;
/// entering the disk of omega_ac does the same for the cevian from B, so
/// exclusion is reported per disk count. Points within `margin * diameter`
/// of any defining circle report `boundary`; points that close to line AB
/// or AC report `inadmissible`.
LocusVerdict locus_membership(const Triangle& tri, VertexLabel vertex, Point p,
                              const Tolerance& tol = {}, double margin = 1e-9);

/// Circle through B and C centered at the intersection of the circumcircle
/// tangents at B and C. Throws TangentsParallel when the angle at A is
/// right, in which case the object degenerates to line BC.
Circle omega_tan(const Triangle& tri, VertexLabel vertex,
                 const Tolerance& tol = {});

/// Gaps measuring the equivalence "cevians perpendicular <=> Miquel point
/// on omega_tan". When the angle at A is right within tolerance, omega_tan
/// degenerates and `tan_offset` is the distance to line BC instead.
struct PerpendicularityGaps {
    double angle_gap = 0.0;   // |angle between cevian lines - pi/2|
    double tan_offset = 0.0;  // scale-normalized offset from omega_tan
    bool degenerate_tan = false;
};

PerpendicularityGaps perpendicularity_equivalence(const Triangle& tri,
                                                  VertexLabel vertex,
                                                  const CevianPair& cev,
                                                  const Tolerance& tol = {});

/// Gaps measuring the equivalence "B_A C_A parallel to BC <=> Miquel point
/// on the symmedian from A".
struct FeetSymmedianGaps {
    double feet_angle = 0.0;        // angle between line B_A C_A and line BC
    double symmedian_offset = 0.0;  // scale-normalized distance to symmedian
};

FeetSymmedianGaps feet_parallel_check(const Triangle& tri, VertexLabel vertex,
                                      const CevianPair& cev,
                                      const Tolerance& tol = {});

/// Normalized complex frame at the distinguished vertex: A maps to 0, C to
/// 1, and B to b0 * exp(i beta0) with beta0 in (0, pi) (the plane is
/// mirrored when needed to make the triangle counter-clockwise).
struct UnitFrame {
    Point origin;                 // world image of 0
    std::complex<double> basis;   // world vector of 1, as x + iy
    bool mirrored = false;        // frame reflects the world plane
    double b0 = 0.0;              // |frame(B)|
    double beta0 = 0.0;           // arg(frame(B))

    std::complex<double> to_frame(Point p) const;
    Point to_world(std::complex<double> z) const;
    /// World direction of the frame unit vector exp(i angle).
    Point direction(double angle) const;
};

UnitFrame unit_frame(const Triangle& tri, VertexLabel vertex);

/// Closed-form feet and cevian meet for a Miquel point m * exp(i mu0) in
/// the unit frame of a triangle with B = b0 * exp(i beta0). Throws
/// SingularDenominator naming the vanishing factor.
struct FrameMeet {
    std::complex<double> b_a;
    std::complex<double> c_a;
    std::complex<double> n;
};

FrameMeet unit_frame_meet(double b0, double beta0, double m, double mu0,
                          const Tolerance& tol = {});

/// Image of the line {m * exp(i mu0) : m real} of Miquel points under the
/// map to cevian meets: the line through B + C - A with frame direction
/// exp(i (beta0 - mu0)). Throws LineAlongSide when the input line carries
/// side AB or AC.
Line meet_image_line(const Triangle& tri, VertexLabel vertex, double mu0,
                     const Tolerance& tol = {});

/// Image of a line of cevian meets through A under the map to Miquel
/// points: a circle through A, constructed from three sampled meets. When
/// the input line is the median the image degenerates to the symmedian and
/// a Line is returned. Throws LineAlongSide for lines carrying a side and
/// DegenerateSamples when no three usable samples exist.
using IsogonalImage = std::variant<Circle, Line>;

IsogonalImage isogonal_circle(const Triangle& tri, VertexLabel vertex,
                              double line_angle, const Tolerance& tol = {});

}  // namespace miquel
