#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "miquel/error.hpp"

namespace miquel {

/// Mixed absolute/relative comparison policy. All predicates in the kernel
/// take their thresholds from one of these, scaled by a problem diameter.
struct Tolerance {
    double absolute_eps = 1e-12;
    double relative_eps = 1e-9;

    double effective(double diameter) const {
        return std::max(absolute_eps, relative_eps * std::abs(diameter));
    }
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator-(Point p) { return {-p.x, -p.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
inline Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm2(Point p) { return dot(p, p); }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point p, Point q) { return norm(p - q); }
inline Point midpoint(Point p, Point q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }
/// Counter-clockwise quarter turn.
inline Point perp(Point p) { return {-p.y, p.x}; }
Point normalize(Point p);

/// Directed line through `anchor` with unit direction `dir`.
struct Line {
    Point anchor;
    Point dir;

    static Line through(Point a, Point b);

    Point at(double t) const { return anchor + t * dir; }
    /// Parameter of the orthogonal projection of p.
    double project(Point p) const { return dot(p - anchor, dir); }
    Point foot(Point p) const { return at(project(p)); }
    /// Positive on the left of the directed line.
    double signed_distance(Point p) const { return cross(dir, p - anchor); }
};

struct Circle {
    Point center;
    double radius = 0.0;

    /// Positive outside, negative inside, zero on the circle.
    double signed_offset(Point p) const { return dist(p, center) - radius; }
};

enum class VertexLabel { a, b, c };

const char* vertex_name(VertexLabel v);

/// Validated non-degenerate triangle. Construction enforces
/// |orientation determinant| > effective tolerance * diameter^2.
struct Triangle {
    Point a, b, c;

    Triangle(Point a, Point b, Point c, const Tolerance& tol = {});

    /// Longest side length; the scale used for relative thresholds.
    double diameter() const;
    Point vertex(VertexLabel v) const;
    /// Relabels so that the chosen vertex plays the role of `a`,
    /// preserving cyclic order (b follows a, c follows b).
    Triangle rotated(VertexLabel v) const;
};

/// +1 counter-clockwise, -1 clockwise, 0 when |signed area| is within the
/// effective tolerance of the points' diameter.
int orientation(Point p, Point q, Point r, const Tolerance& tol = {});

/// Throws CollinearInput when orientation(p,q,r) == 0.
Circle circumcircle(Point p, Point q, Point r, const Tolerance& tol = {});

struct ParallelLines {
    bool coincident = false;
};

struct LineIntersection {
    bool parallel = false;
    bool coincident = false;  // meaningful only when parallel
    Point point;              // meaningful only when !parallel
};

LineIntersection intersect_lines(const Line& l1, const Line& l2,
                                 const Tolerance& tol = {});

struct CircleHits {
    std::vector<Point> points;  // 0, 1, or 2 entries, deterministic order
    bool tangent = false;
};

CircleHits intersect_circle_line(const Circle& c, const Line& l,
                                 const Tolerance& tol = {});

/// Throws CoincidentCircles when the circles agree within tolerance.
CircleHits intersect_circles(const Circle& c1, const Circle& c2,
                             const Tolerance& tol = {});

/// Throws PointNotOnCircle unless p lies on c within tolerance.
Line tangent_line_at(const Circle& c, Point p, const Tolerance& tol = {});

/// The unique circle tangent to `tangent` at `touch` and passing through
/// `through`. Throws ThroughPointOnTangent when `through` lies on the
/// tangent line (within tolerance).
Circle tangent_circle_through(const Line& tangent, Point touch, Point through,
                              const Tolerance& tol = {});

/// Inversion with the given center and power. Throws CenterInversion when p
/// coincides with the center within tolerance.
Point invert_point(Point p, Point center, double power,
                   const Tolerance& tol = {});

/// Undirected angle at `vertex` between rays toward p and q, in [0, pi].
/// Throws DegenerateRay when either ray is too short.
double angle_at(Point vertex, Point p, Point q, const Tolerance& tol = {});

Point reflect_point_about_line(Point p, const Line& l);

/// Scale-normalized deviation of four points from a common circle:
/// max over well-conditioned triples of |distance of the remaining point
/// from the triple's circumcircle|, divided by the point set's diameter.
/// Throws AllCollinear when every triple is collinear within tolerance.
double concyclic_residual(Point p1, Point p2, Point p3, Point p4,
                          const Tolerance& tol = {});

/// Undirected angle between two lines, in [0, pi/2].
double line_angle_gap(const Line& l1, const Line& l2);

}  // namespace miquel
